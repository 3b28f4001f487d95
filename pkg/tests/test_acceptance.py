"""End-to-end acceptance suite: one test per numbered criterion.

Each test prints a single `criterion N PASS/FAIL` line (visible with
`pytest -s tests/test_acceptance.py`). Runtime budgets are asserted with
`time.perf_counter` around the operation under test; a session fixture
warms up the numerics first so library loading is not billed to the
first criterion.
"""

import math
import time
from contextlib import contextmanager

import numpy as np
import pytest

import etfkit as ek
from etfkit.cli import run as cli_run
from etfkit.errors import GramVerificationError, NotRegular
from etfkit.graphs import AdjacencyMatrix, SrgParams
from etfkit.linalg import SymMatrix, sym_eigen

from helpers import brute_srg_params, record_to_dict


@contextmanager
def criterion(number: int, label: str):
    try:
        yield
    except BaseException:
        print(f"criterion {number:2d} FAIL  {label}")
        raise
    print(f"criterion {number:2d} PASS  {label}")


@pytest.fixture(scope="module", autouse=True)
def warm_up():
    phi = ek.fixture_6x16()
    ek.coherence(phi)
    sym_eigen(SymMatrix(np.eye(8)))


@pytest.fixture(scope="module")
def generated_srgs(srg_15_8, srg_27_16):
    graphs = {f"paley({q})": ek.paley(q) for q in (5, 13, 17, 29)}
    graphs["srg(15,8,4,4)"] = srg_15_8
    graphs["srg(27,16,10,8)"] = srg_27_16
    return graphs


def test_criterion_1_fixture_attains_welch_bound():
    with criterion(1, "fixture attains the Welch bound"):
        start = time.perf_counter()
        phi = ek.fixture_6x16()
        coh = ek.coherence(phi)
        defect = ek.tightness_defect(phi)
        elapsed = time.perf_counter() - start
        assert abs(coh - 1.0 / 3.0) <= 1e-12
        assert defect <= 1e-12
        assert elapsed < 0.010, f"took {elapsed * 1e3:.2f} ms"


def test_criterion_2_fixture_to_srg(fixture_phi):
    with criterion(2, "fixture converts to SRG(15,8,4,4)"):
        start = time.perf_counter()
        graph, report = ek.etf_to_srg(fixture_phi)
        elapsed = time.perf_counter() - start
        assert report.params == SrgParams(15, 8, 4, 4)
        assert brute_srg_params(graph.data) == (15, 8, 4, 4)
        closed = ek.etf_params_to_srg_params(ek.EtfShape(6, 16))
        assert (closed.k, closed.lam, closed.mu) == (8, 4, 4)
        assert elapsed < 0.050, f"took {elapsed * 1e3:.2f} ms"


def test_criterion_3_fano_correspondence(capsys):
    with criterion(3, "(7,28) <-> (27,16,10,8) correspondence"):
        start = time.perf_counter()
        phi = ek.steiner_etf(ek.fano_plane())
        _, report = ek.etf_to_srg(phi)
        code = cli_run(["params", "srg", "27", "16"])
        elapsed = time.perf_counter() - start
        record = record_to_dict(capsys.readouterr().out)
        assert report.params == SrgParams(27, 16, 10, 8)
        assert code == 0
        assert (record["m"], record["n"]) == ("7", "28")
        assert 16 * (16 - 10 - 1) == (27 - 16 - 1) * 8
        assert ek.check_parameter_relation(report.params)
        assert elapsed < 0.100, f"took {elapsed * 1e3:.2f} ms"


def test_criterion_4_paley_round_trips():
    with criterion(4, "Paley(q) round trips for q in {5,13,17,29}"):
        start = time.perf_counter()
        for q in (5, 13, 17, 29):
            graph = ek.paley(q)
            params = ek.verify_srg(graph)
            assert 2 * params.mu == params.k
            g, report = ek.srg_to_etf_gram(graph)
            assert report.shape.m == (q + 1) // 2
            assert abs(report.beta - 1.0 / math.sqrt(q)) <= 1e-9
            assert ek.verify_etf_gram(g).m == (q + 1) // 2
            phi = ek.synthesize_from_gram(g)
            back, _ = ek.etf_to_srg(phi)
            assert back == graph
        elapsed = time.perf_counter() - start
        assert elapsed < 1.0, f"took {elapsed:.3f} s"


def test_criterion_5_naimark_suite(fixture_phi, fano_phi):
    with criterion(5, "Naimark complements of the 6x16 and 7x28 frames"):
        for phi, m, n in ((fixture_phi, 6, 16), (fano_phi, 7, 28)):
            g = ek.gram(phi)
            summary = ek.verify_etf_gram(g)
            assert (summary.m, summary.n) == (m, n)
            comp = ek.naimark_complement_gram(g, summary)
            comp_summary = ek.verify_etf_gram(comp)
            assert (comp_summary.m, comp_summary.n) == (n - m, n)
            assert abs(comp_summary.beta - ek.welch_bound(n - m, n)) <= 1e-12
            mixed = (m / n) * g.data + ((n - m) / n) * comp.data
            assert np.max(np.abs(mixed - np.eye(n))) <= 1e-12


def test_criterion_6_spectrum_cross_check(generated_srgs):
    with criterion(6, "closed-form spectra match numeric eigendecompositions"):
        for graph in generated_srgs.values():
            params = ek.verify_srg(graph)
            spec = ek.spectrum(params)
            closed = np.sort(
                np.concatenate(
                    [
                        [float(params.k)],
                        np.full(spec.mult_plus, spec.gamma_plus),
                        np.full(spec.mult_minus, spec.gamma_minus),
                    ]
                )
            )[::-1]
            numeric = sym_eigen(SymMatrix(graph.data.astype(float))).values
            assert np.max(np.abs(closed - numeric)) <= 1e-8
            trace = (
                params.k
                + spec.mult_plus * spec.gamma_plus
                + spec.mult_minus * spec.gamma_minus
            )
            assert abs(trace) <= 1e-9


def test_criterion_7_complement_suite(generated_srgs):
    with criterion(7, "complements commute, negate deviation, keep eligibility"):
        for graph in generated_srgs.values():
            params = ek.verify_srg(graph)
            comp_direct = ek.verify_srg(ek.complement(graph))
            comp_derived = ek.complement_params(params)
            assert comp_direct == comp_derived
            assert ek.deviation(comp_derived) == -ek.deviation(params)
            assert ek.is_etf_eligible(params)
            assert ek.is_etf_eligible(comp_derived)


def test_criterion_8_parameter_bijection():
    with criterion(8, "closed-form parameter maps invert each other"):
        rng = np.random.default_rng(20260810)

        def graph_degree(m: float, n: float) -> float:
            return n / 2.0 - 1.0 + (n / (2.0 * m) - 1.0) * math.sqrt(
                m * (n - 1.0) / (n - m)
            )

        def frame_dimension(v: float, k: float) -> float:
            delta = v - 2.0 * k - 1.0
            return 0.5 * (v + 1.0) * (
                1.0 + delta / math.sqrt(delta * delta + 4.0 * v)
            )

        for _ in range(1000):
            m = float(rng.uniform(0.2, 40.0))
            n = max(m + float(rng.uniform(0.1, 40.0)), 1.0 + float(rng.uniform(0.1, 1.0)))
            k = graph_degree(m, n)
            assert abs(frame_dimension(n - 1.0, k) - m) <= 1e-9
        for _ in range(1000):
            v = float(rng.uniform(0.3, 60.0))
            k = float(rng.uniform(-1.0, v))
            m = frame_dimension(v, k)
            assert abs(graph_degree(m, v + 1.0) - k) <= 1e-9


def test_criterion_9_dimension_pairing(generated_srgs):
    with criterion(9, "plus and minus dimensions sum to v + 1"):
        cases = 0
        for graph in generated_srgs.values():
            params = ek.verify_srg(graph)
            if ek.deviation(params) == 0:
                continue
            _, plus = ek.srg_to_etf_gram(graph)
            _, minus = ek.srg_to_etf_gram_minus(graph)
            assert plus.shape.m + minus.shape.m == params.v + 1
            cases += 1
        assert cases >= 2


def test_criterion_10_negative_controls(fixture_phi):
    with criterion(10, "negative controls are rejected"):
        assert not ek.is_etf_eligible(SrgParams(10, 3, 0, 1))

        path = AdjacencyMatrix(np.array([[0, 1, 0], [1, 0, 1], [0, 1, 0]]))
        with pytest.raises(NotRegular) as info:
            ek.verify_srg(path)
        assert info.value.witness is not None

        g = np.array(ek.gram(fixture_phi).data)
        g[1, 2] += 1e-4
        g[2, 1] += 1e-4
        with pytest.raises(GramVerificationError):
            ek.verify_etf_gram(SymMatrix(g))
