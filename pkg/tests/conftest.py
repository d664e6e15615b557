import pytest

from antiramsey.hypergraph import Hypergraph


@pytest.fixture
def k63():
    return Hypergraph.complete(6, 3)
