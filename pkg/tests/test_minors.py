import itertools
import random

import pytest

from aritygap import (
    FiniteFunction,
    MinorMap,
    VariablePartition,
    all_tuples,
    diagonal,
    essential_slots,
    identification_minor,
    partition_minor,
    simple_minor,
    tuple_to_index,
)

XOR2 = FiniteFunction(2, 2, 2, (0, 1, 1, 0))
AND2 = FiniteFunction(2, 2, 2, (0, 0, 0, 1))
XOR3 = FiniteFunction(2, 3, 2, (0, 1, 1, 0, 1, 0, 0, 1))
MAJ3 = FiniteFunction(2, 3, 2, (0, 0, 0, 1, 0, 1, 1, 1))


def salomaa3():
    table = [0] * 27
    table[tuple_to_index(3, (0, 1, 2))] = 1
    return FiniteFunction(3, 3, 3, tuple(table))


# Independent oracle: expand the substitution definition tuple by tuple.
def brute_minor_table(g, sigma, target_arity):
    return tuple(
        g.eval(tuple(t[s - 1] for s in sigma))
        for t in all_tuples(g.k, target_arity)
    )


def test_simple_minor_collapses_xor():
    m = simple_minor(XOR2, MinorMap(2, 1, (1, 1)))
    assert m.n == 1
    assert m.table == (0, 0)


def test_simple_minor_permutation_of_and():
    assert simple_minor(AND2, MinorMap(2, 2, (2, 1))) == AND2


def test_simple_minor_padding_xor():
    sigma = (1, 2)
    expected = brute_minor_table(XOR2, sigma, 3)
    assert expected == (0, 0, 1, 1, 1, 1, 0, 0)
    m = simple_minor(XOR2, MinorMap(2, 3, sigma))
    assert m.table == expected
    assert set(essential_slots(m)) == {1, 2}


def test_simple_minor_arity_mismatch():
    with pytest.raises(ValueError):
        simple_minor(XOR2, MinorMap(3, 3, (1, 2, 3)))


def test_minor_map_validation():
    with pytest.raises(ValueError):
        MinorMap(2, 2, (1,))
    with pytest.raises(ValueError):
        MinorMap(2, 2, (0, 1))
    with pytest.raises(ValueError):
        MinorMap(2, 2, (1, 3))


def test_identification_xor3():
    assert identification_minor(XOR3, 1, 2).table == (0, 1, 0, 1, 0, 1, 0, 1)


def test_identification_salomaa_constant():
    f = salomaa3()
    for i, j in itertools.permutations(range(1, 4), 2):
        assert identification_minor(f, i, j).is_constant()


def test_identification_maj3():
    expected = brute_minor_table(MAJ3, (1, 3, 3), 3)
    assert expected == (0, 1, 0, 1, 0, 1, 0, 1)
    assert identification_minor(MAJ3, 2, 3).table == expected


def test_identification_rejects_bad_slots():
    with pytest.raises(ValueError):
        identification_minor(XOR3, 2, 2)
    with pytest.raises(ValueError):
        identification_minor(XOR3, 0, 1)


def test_identification_equals_simple_minor():
    for i, j in itertools.permutations(range(1, 4), 2):
        sigma = list(range(1, 4))
        sigma[i - 1] = j
        assert identification_minor(XOR3, i, j) == simple_minor(
            XOR3, MinorMap(3, 3, tuple(sigma))
        )


def test_partition_two_blocks():
    delta = VariablePartition(3, ((1, 2), (3,)))
    assert partition_minor(XOR3, delta) == identification_minor(XOR3, 2, 1)


def test_partition_equality_is_identity():
    delta = VariablePartition(3, ((1,), (2,), (3,)))
    assert partition_minor(MAJ3, delta) == MAJ3


def test_partition_all_in_one():
    delta = VariablePartition(3, ((1, 2, 3),))
    assert partition_minor(MAJ3, delta).table == (0, 0, 0, 0, 1, 1, 1, 1)


def test_partition_validation():
    with pytest.raises(ValueError):
        VariablePartition(3, ((1, 2),))
    with pytest.raises(ValueError):
        VariablePartition(3, ((1, 2), (2, 3)))
    with pytest.raises(ValueError):
        VariablePartition(3, ((1, 2), (3, 4)))
    with pytest.raises(ValueError):
        partition_minor(XOR3, VariablePartition(2, ((1,), (2,))))


def test_diagonal_examples():
    assert diagonal(XOR2).table == (0, 0)
    assert diagonal(MAJ3).table == (0, 1)
    assert diagonal(salomaa3()).table == (0, 0, 0)


@pytest.mark.parametrize("seed", range(8))
def test_diagonal_commutes_with_identification(seed):
    rng = random.Random(seed)
    k = rng.randint(2, 3)
    n = rng.randint(2, 4)
    b = rng.randint(2, 3)
    f = FiniteFunction(k, n, b, tuple(rng.randrange(b) for _ in range(k**n)))
    for i, j in itertools.permutations(range(1, n + 1), 2):
        assert diagonal(identification_minor(f, i, j)) == diagonal(f)


@pytest.mark.parametrize("seed", range(8))
def test_minors_never_gain_essential_slots(seed):
    rng = random.Random(100 + seed)
    k = rng.randint(2, 3)
    n = rng.randint(2, 4)
    f = FiniteFunction(k, n, 2, tuple(rng.randrange(2) for _ in range(k**n)))
    for _ in range(5):
        target = rng.randint(1, n + 1)
        sigma = tuple(rng.randint(1, target) for _ in range(n))
        m = simple_minor(f, MinorMap(n, target, sigma))
        assert len(essential_slots(m)) <= len(essential_slots(f))


@pytest.mark.parametrize("k,n", [(2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (3, 4)])
def test_pair_partition_matches_identification(k, n):
    rng = random.Random(k * 10 + n)
    for _ in range(10):
        f = FiniteFunction(k, n, 2, tuple(rng.randrange(2) for _ in range(k**n)))
        for i, j in itertools.combinations(range(1, n + 1), 2):
            blocks = tuple((s,) for s in range(1, n + 1) if s not in (i, j)) + ((i, j),)
            delta = VariablePartition(n, blocks)
            assert partition_minor(f, delta) == identification_minor(f, j, i)
