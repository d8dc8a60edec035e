import pytest

from minipaint.errors import CapacityError, InputError
from minipaint.generators import generate
from minipaint.graph import is_cogem_free, is_cograph, is_connected


def test_single_vertex_cograph():
    inst = generate("cograph", 1, 2, 0)
    assert inst.graph.n == 1 and inst.graph.edges() == []


@pytest.mark.parametrize("seed", range(20))
def test_kinds_satisfy_their_class(seed):
    assert is_cograph(generate("cograph", 9, 3, seed).graph)
    assert is_cogem_free(generate("cogem-free", 9, 3, seed).graph)
    g = generate("cogem-free", 8, 3, seed, connected=True, non_cograph=True).graph
    assert is_connected(g) and not is_cograph(g) and is_cogem_free(g)
    assert is_connected(generate("cograph", 8, 3, seed, connected=True).graph)


def test_same_seed_same_instance():
    assert generate("random", 10, 4, 3) == generate("random", 10, 4, 3)
    assert generate("random", 10, 4, 3) != generate("random", 10, 4, 4)


def test_rejection_budget():
    with pytest.raises(CapacityError):
        generate("cogem-free", 30, 2, 0, edge_prob=0.3, budget=5)


def test_bad_arguments():
    with pytest.raises(InputError):
        generate("tree", 4, 2, 0)
    with pytest.raises(InputError):
        generate("cograph", 4, 0, 0)
