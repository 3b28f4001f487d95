import math

import numpy as np
import pytest

import etfkit as ek
from etfkit.errors import (
    DegenerateDiscriminant,
    NegativeParameter,
    NonIntegralMultiplicity,
    NotRegular,
    NotStronglyRegular,
)
from etfkit.graphs import AdjacencyMatrix, SrgParams
from etfkit.linalg import SymMatrix, sym_eigen

from helpers import brute_srg_params


def cycle_graph(v: int) -> AdjacencyMatrix:
    adj = np.zeros((v, v), dtype=int)
    for i in range(v):
        adj[i, (i + 1) % v] = adj[(i + 1) % v, i] = 1
    return AdjacencyMatrix(adj)


def empty_graph(v: int) -> AdjacencyMatrix:
    return AdjacencyMatrix(np.zeros((v, v), dtype=int))


def complete_graph(v: int) -> AdjacencyMatrix:
    return AdjacencyMatrix(np.ones((v, v), dtype=int) - np.eye(v, dtype=int))


# ----------------------------------------------------------- AdjacencyMatrix


def test_adjacency_rejects_bad_input():
    with pytest.raises(ValueError):
        AdjacencyMatrix(np.array([[0, 2], [2, 0]]))
    with pytest.raises(ValueError):
        AdjacencyMatrix(np.array([[1, 0], [0, 1]]))
    with pytest.raises(ValueError):
        AdjacencyMatrix(np.array([[0, 1], [0, 0]]))


def test_adjacency_equality_is_exact():
    assert cycle_graph(5) == cycle_graph(5)
    assert cycle_graph(5) != empty_graph(5)


# ------------------------------------------------------------------ verify


def test_five_cycle_params():
    params = ek.verify_srg(cycle_graph(5))
    assert params == SrgParams(5, 2, 0, 1)
    assert brute_srg_params(cycle_graph(5).data) == (5, 2, 0, 1)


def test_paley_13_params():
    a = ek.paley(13)
    params = ek.verify_srg(a)
    assert params == SrgParams(13, 6, 2, 3)
    assert brute_srg_params(a.data) == (13, 6, 2, 3)


def test_path_graph_is_not_regular():
    path = AdjacencyMatrix(np.array([[0, 1, 0], [1, 0, 1], [0, 1, 0]]))
    with pytest.raises(NotRegular) as info:
        ek.verify_srg(path)
    assert info.value.witness is not None


def test_six_cycle_is_regular_but_not_srg():
    with pytest.raises(NotStronglyRegular) as info:
        ek.verify_srg(cycle_graph(6))
    i, j = info.value.witness
    assert 0 <= i < j < 6
    # First violation in row-major order over non-adjacent pairs:
    # (0,2) has one common neighbor while (0,3) has none.
    assert (i, j) == (0, 3)


def test_vacuous_classes():
    empty = ek.verify_srg(empty_graph(4))
    assert empty.k == 0 and empty.lam_vacuous and not empty.mu_vacuous
    full = ek.verify_srg(complete_graph(4))
    assert full.k == 3 and full.lam == 2
    assert full.mu_vacuous and not full.lam_vacuous
    single = ek.verify_srg(empty_graph(1))
    assert single.lam_vacuous and single.mu_vacuous


# -------------------------------------------------------- parameter relation


def test_parameter_relation_examples():
    assert ek.check_parameter_relation(SrgParams(27, 16, 10, 8))
    assert ek.check_parameter_relation(SrgParams(5, 2, 0, 1))
    assert not ek.check_parameter_relation(SrgParams(6, 3, 0, 1))


def test_relation_holds_for_verified_graphs(srg_15_8, srg_27_16):
    for graph in (cycle_graph(5), ek.paley(13), ek.paley(17), srg_15_8, srg_27_16):
        params = ek.verify_srg(graph)
        assert not params.lam_vacuous and not params.mu_vacuous
        assert ek.check_parameter_relation(params)


def test_regularity_row_sums(srg_15_8):
    for graph in (cycle_graph(5), ek.paley(13), srg_15_8):
        params = ek.verify_srg(graph)
        assert np.all(graph.data.sum(axis=1) == params.k)


# ---------------------------------------------------------------- spectrum


def test_spectrum_15_8_4_4():
    spec = ek.spectrum(SrgParams(15, 8, 4, 4))
    assert spec.gamma_plus == pytest.approx(2.0, abs=0)
    assert spec.gamma_minus == pytest.approx(-2.0, abs=0)
    assert (spec.mult_plus, spec.mult_minus) == (5, 9)


def test_spectrum_27_16_10_8():
    spec = ek.spectrum(SrgParams(27, 16, 10, 8))
    assert (spec.gamma_plus, spec.gamma_minus) == (4.0, -2.0)
    assert (spec.mult_plus, spec.mult_minus) == (6, 20)
    assert spec.k + spec.mult_plus * 4.0 + spec.mult_minus * -2.0 == 0.0


def test_spectrum_five_cycle():
    spec = ek.spectrum(SrgParams(5, 2, 0, 1))
    golden = (-1.0 + math.sqrt(5.0)) / 2.0
    assert spec.gamma_plus == pytest.approx(golden, abs=1e-15)
    assert spec.gamma_minus == pytest.approx(-(1.0 + math.sqrt(5.0)) / 2.0, abs=1e-15)
    assert (spec.mult_plus, spec.mult_minus) == (2, 2)


def test_spectrum_degenerate_discriminant():
    with pytest.raises(DegenerateDiscriminant):
        ek.spectrum(ek.verify_srg(empty_graph(4)))


def test_spectrum_non_integral_multiplicity():
    with pytest.raises(NonIntegralMultiplicity):
        ek.spectrum(SrgParams(16, 6, 3, 2))


def test_spectrum_matches_numeric_eigenvalues(srg_15_8, srg_27_16):
    for graph in (cycle_graph(5), ek.paley(13), ek.paley(17), srg_15_8, srg_27_16):
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
        reference = np.sort(np.linalg.eigvalsh(graph.data.astype(float)))[::-1]
        assert np.max(np.abs(closed - numeric)) < 1e-8
        assert np.max(np.abs(closed - reference)) < 1e-8
        trace = params.k + spec.mult_plus * spec.gamma_plus + spec.mult_minus * spec.gamma_minus
        assert abs(trace) < 1e-9


# -------------------------------------------------------------- complement


def test_complement_of_empty_is_complete():
    assert ek.complement(empty_graph(5)) == complete_graph(5)


def test_complement_is_involution(srg_15_8):
    for graph in (cycle_graph(5), ek.paley(13), srg_15_8):
        assert ek.complement(ek.complement(graph)) == graph


def test_five_cycle_complement_is_self_parametric():
    comp = ek.complement(cycle_graph(5))
    assert ek.verify_srg(comp) == SrgParams(5, 2, 0, 1)
    assert brute_srg_params(comp.data) == (5, 2, 0, 1)


def test_complement_params_examples():
    assert ek.complement_params(SrgParams(27, 16, 10, 8)) == SrgParams(27, 10, 1, 5)
    assert ek.complement_params(SrgParams(5, 2, 0, 1)) == SrgParams(5, 2, 0, 1)


def test_complement_params_of_empty_graph():
    empty = ek.verify_srg(empty_graph(6))
    comp = ek.complement_params(empty)
    assert (comp.v, comp.k, comp.lam, comp.mu) == (6, 5, 4, 6)
    assert comp.mu_vacuous and not comp.lam_vacuous
    # Flag-aware equality ignores the stored mu under the vacuous flag.
    assert comp == ek.verify_srg(complete_graph(6))


def test_complement_params_negative():
    with pytest.raises(NegativeParameter):
        ek.complement_params(SrgParams(6, 3, 0, 1))


def test_complement_params_matches_verify(srg_15_8, srg_27_16):
    graphs = [cycle_graph(5), ek.paley(13), ek.paley(17), srg_15_8, srg_27_16,
              empty_graph(4), complete_graph(4)]
    for graph in graphs:
        direct = ek.verify_srg(ek.complement(graph))
        derived = ek.complement_params(ek.verify_srg(graph))
        assert direct == derived


# --------------------------------------------------------------- deviation


def test_deviation_values():
    assert ek.deviation(SrgParams(27, 16, 10, 8)) == -6
    assert ek.deviation(SrgParams(13, 6, 2, 3)) == 0
    assert SrgParams(15, 8, 4, 4).deviation == -2


def test_deviation_negates_under_complement():
    for params in (SrgParams(27, 16, 10, 8), SrgParams(15, 8, 4, 4), SrgParams(5, 2, 0, 1)):
        assert ek.deviation(ek.complement_params(params)) == -ek.deviation(params)
