import pytest

from charfield.errors import InputError
from charfield.partitions import (
    EpsPartition,
    Partition,
    component_orders,
    eps_partitions,
    eps_stats,
)


def test_partition_normalisation():
    assert Partition([3, 1, 1, 0, 0]) == Partition([3, 1, 1])
    assert Partition([]).total == 0
    with pytest.raises(InputError):
        Partition([1, 2])
    with pytest.raises(InputError):
        Partition([2, -1])


def test_multiplicity():
    mu = Partition([3, 2, 2, 1])
    assert mu.multiplicity(2) == 2
    assert mu.multiplicity(5) == 0
    assert mu.distinct() == (3, 2, 1)


def test_eps_partition_membership():
    EpsPartition(Partition([2, 2]), 1)
    EpsPartition(Partition([3, 1]), 0)
    with pytest.raises(InputError):
        EpsPartition(Partition([3, 2, 2]), 1)  # odd part 3 with odd multiplicity
    with pytest.raises(InputError):
        EpsPartition(Partition([2, 1, 1]), 0)  # even part 2 with odd multiplicity


def test_eps_stats_examples():
    assert eps_stats(EpsPartition(Partition([3, 1, 1, 1]), 0)) == (2, 1)
    assert eps_stats(EpsPartition(Partition([2, 2]), 1)) == (1, 0)
    assert eps_stats(EpsPartition(Partition([1, 1]), 1)) == (0, 0)
    assert eps_stats(EpsPartition(Partition([2]), 1)) == (1, 1)


def test_eps_stats_zero_padding_invariance():
    a = EpsPartition(Partition([3, 1, 1, 1]), 0)
    b = EpsPartition(Partition([3, 1, 1, 1, 0, 0, 0]), 0)
    assert eps_stats(a) == eps_stats(b)


def test_component_orders_examples():
    assert component_orders(EpsPartition(Partition([3, 1, 1, 1]), 0)) == (4, 2, 1)
    assert component_orders(EpsPartition(Partition([2]), 1)) == (2, 1, 1)
    assert component_orders(EpsPartition(Partition([1, 1]), 1)) == (1, 1, 1)


def test_component_orders_divisibility_chain():
    for n in range(1, 21):
        for eps in (0, 1):
            for ep in eps_partitions(n, eps):
                big, mid, small = component_orders(ep)
                assert mid % small == 0
                assert big % mid == 0


def test_eps_partitions_small_counts():
    assert [tuple(ep.partition.parts) for ep in eps_partitions(2, 1)] == [(2,), (1, 1)]
    assert [tuple(ep.partition.parts) for ep in eps_partitions(4, 1)] == [
        (4,), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert [tuple(ep.partition.parts) for ep in eps_partitions(4, 0)] == [
        (3, 1), (2, 2), (1, 1, 1, 1)]
    assert [tuple(ep.partition.parts) for ep in eps_partitions(3, 0)] == [(3,), (1, 1, 1)]
