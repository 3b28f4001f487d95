import numpy as np
import pytest

import etfkit as ek


@pytest.fixture(scope="session")
def fixture_phi() -> np.ndarray:
    return ek.fixture_6x16()


@pytest.fixture(scope="session")
def fano_phi() -> np.ndarray:
    return ek.steiner_etf(ek.fano_plane())


@pytest.fixture(scope="session")
def srg_15_8(fixture_phi) -> ek.AdjacencyMatrix:
    graph, _ = ek.etf_to_srg(fixture_phi)
    return graph


@pytest.fixture(scope="session")
def srg_27_16(fano_phi) -> ek.AdjacencyMatrix:
    graph, _ = ek.etf_to_srg(fano_phi)
    return graph
