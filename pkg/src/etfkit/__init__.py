"""Real equiangular tight frames and strongly regular graphs: verify,
synthesize, and convert in both directions."""

from .correspondence import (
    ConversionReport,
    EtfShape,
    etf_params_to_srg_params,
    etf_to_srg,
    is_etf_eligible,
    srg_params_to_etf_params,
    srg_to_etf_gram,
    srg_to_etf_gram_minus,
)
from .errors import EtfkitError
from .frames import (
    GramSummary,
    coherence,
    gram,
    naimark_complement_gram,
    sign_normalize,
    switch,
    synthesize_from_gram,
    tightness_defect,
    verify_etf_gram,
    welch_bound,
)
from .generators import (
    BlockDesign,
    fano_plane,
    fixture_6x16,
    paley,
    pairs_design,
    steiner_etf,
)
from .graphs import (
    AdjacencyMatrix,
    SrgParams,
    SrgSpectrum,
    check_parameter_relation,
    complement,
    complement_params,
    deviation,
    spectrum,
    verify_srg,
)
from .linalg import EigenPair, SymMatrix, frobenius_distance, sym_eigen

__version__ = "0.1.0"

__all__ = [
    "AdjacencyMatrix",
    "BlockDesign",
    "ConversionReport",
    "EigenPair",
    "EtfShape",
    "EtfkitError",
    "GramSummary",
    "SrgParams",
    "SrgSpectrum",
    "SymMatrix",
    "check_parameter_relation",
    "coherence",
    "complement",
    "complement_params",
    "deviation",
    "etf_params_to_srg_params",
    "etf_to_srg",
    "fano_plane",
    "fixture_6x16",
    "frobenius_distance",
    "gram",
    "is_etf_eligible",
    "naimark_complement_gram",
    "paley",
    "pairs_design",
    "sign_normalize",
    "spectrum",
    "srg_params_to_etf_params",
    "srg_to_etf_gram",
    "srg_to_etf_gram_minus",
    "steiner_etf",
    "switch",
    "sym_eigen",
    "synthesize_from_gram",
    "tightness_defect",
    "verify_etf_gram",
    "verify_srg",
    "welch_bound",
]
