import itertools
import random

import pytest

from aritygap import (
    FiniteFunction,
    GapUndefinedError,
    MinorMap,
    NoSuchSupportError,
    UnsupportedCodomainError,
    arity_gap,
    constant,
    diagonal,
    essential_slots,
    from_function,
    gen_quasi_m_ary,
    gen_salomaa,
    identification_minor,
    is_semiprojection,
    projection,
    quasi_arity,
    simple_minor,
    tuple_to_index,
    unique_unary_support,
)

XOR2 = FiniteFunction(2, 2, 2, (0, 1, 1, 0))
AND2 = FiniteFunction(2, 2, 2, (0, 0, 0, 1))
MAJ3 = FiniteFunction(2, 3, 2, (0, 0, 0, 1, 0, 1, 1, 1))


def salomaa3():
    table = [0] * 27
    table[tuple_to_index(3, (0, 1, 2))] = 1
    return FiniteFunction(3, 3, 3, tuple(table))


def semiproj3():
    return from_function(3, 3, 3, lambda t: 2 if t == (0, 1, 2) else t[0])


def random_function(rng, k, n, b):
    return FiniteFunction(k, n, b, tuple(rng.randrange(b) for _ in range(k**n)))


def all_functions(k, n, b):
    for table in itertools.product(range(b), repeat=k**n):
        yield FiniteFunction(k, n, b, table)


def test_quasi_arity_examples():
    assert quasi_arity(salomaa3()) == 0
    assert quasi_arity(XOR2) == 0
    assert quasi_arity(MAJ3) == 3
    assert quasi_arity(AND2) == 1
    assert quasi_arity(constant(3, 1, 2, 0)) == 0
    assert quasi_arity(FiniteFunction(3, 1, 3, (0, 2, 1))) == 1


def test_quasi_arity_bounded_by_essential_arity():
    rng = random.Random(3)
    for _ in range(30):
        f = random_function(rng, rng.randint(2, 3), rng.randint(1, 4), 2)
        assert quasi_arity(f) <= len(essential_slots(f))
        if f.n > f.k:
            assert quasi_arity(f) == len(essential_slots(f))


def test_semiprojection_examples():
    assert is_semiprojection(projection(3, 3, 2)) == 2
    assert is_semiprojection(semiproj3()) == 1
    assert is_semiprojection(MAJ3) is None
    assert is_semiprojection(projection(3, 3, 1)) == 1


def test_semiprojection_needs_matching_codomain():
    with pytest.raises(UnsupportedCodomainError):
        is_semiprojection(FiniteFunction(2, 2, 3, (0, 1, 2, 0)))


def test_arity_gap_examples():
    assert arity_gap(XOR2).gap == 2
    assert arity_gap(AND2).gap == 1
    for k in (2, 3, 4):
        assert arity_gap(gen_salomaa(k)).gap == k


def test_arity_gap_report_fields():
    r = arity_gap(XOR2)
    assert (r.ess, r.qa, r.essl, r.gap, r.pair) == (2, 0, 0, 2, (1, 2))
    assert r.support is not None and r.support.is_constant()
    r = arity_gap(AND2)
    assert (r.ess, r.qa, r.essl, r.gap, r.pair) == (2, 1, 1, 1, (1, 2))


def test_arity_gap_normalizes_inessential_slots():
    padded = simple_minor(XOR2, MinorMap(2, 3, (1, 3)))
    r = arity_gap(padded)
    assert r.ess == 2
    assert r.gap == 2
    assert r.essential == (1, 3)
    assert r.pair == (1, 3)


def test_arity_gap_undefined():
    with pytest.raises(GapUndefinedError):
        arity_gap(projection(2, 3, 1))
    with pytest.raises(GapUndefinedError):
        arity_gap(constant(2, 2, 2, 0))


def test_gap_at_least_one():
    rng = random.Random(17)
    for _ in range(40):
        f = random_function(rng, rng.randint(2, 3), rng.randint(2, 3), rng.randint(2, 3))
        if len(essential_slots(f)) >= 2:
            assert arity_gap(f).gap >= 1


def test_unique_unary_support_constant():
    s = unique_unary_support(salomaa3())
    assert not s.ambiguous
    assert s.supports[0].is_constant()
    assert s.supports[0].table[0] == 0
    assert s.supports[0].n == 3


def test_unique_unary_support_semiprojection():
    s = unique_unary_support(semiproj3())
    assert not s.ambiguous
    assert s.slots == (1,)
    assert s.supports[0] == projection(3, 3, 1)


def test_unique_unary_support_binary_ambiguous():
    f = from_function(3, 2, 3, lambda t: t[0] if t[0] == t[1] else (t[0] + t[1]) % 3)
    assert quasi_arity(f) == 1
    s = unique_unary_support(f)
    assert s.ambiguous
    assert s.slots == (1, 2)
    assert s.supports[0] == projection(3, 2, 1)
    assert s.supports[1] == projection(3, 2, 2)


def test_unique_unary_support_rejects_higher_quasi_arity():
    with pytest.raises(NoSuchSupportError):
        unique_unary_support(MAJ3)


def test_supports_agree_on_diagonal():
    for f in (salomaa3(), semiproj3(), XOR2, AND2):
        for s in unique_unary_support(f).supports:
            for t in f.tuples():
                if len(set(t)) < f.n:
                    assert s.eval(t) == f.eval(t)


# Structure results on small exhaustive spaces.


def test_low_quasi_arity_forces_gap():
    # 2 <= n <= k: whenever the quasi-arity m is below n, the gap is n - m.
    for f in all_functions(3, 2, 2):
        if len(essential_slots(f)) != 2:
            continue
        m = quasi_arity(f)
        if m < 2:
            assert arity_gap(f).gap == 2 - m


def test_gap_bound_above_domain_size():
    count = 0
    for f in all_functions(2, 3, 2):
        if len(essential_slots(f)) == 3:
            count += 1
            assert arity_gap(f).gap <= 2
    assert count == 218


def test_minors_constant_iff_quasi_nullary_binary():
    for f in all_functions(2, 2, 2):
        minors_constant = all(
            identification_minor(f, i, j).is_constant()
            for i, j in ((1, 2), (2, 1))
        )
        assert minors_constant == (quasi_arity(f) == 0)


@pytest.mark.parametrize("k,m", [(3, 0), (4, 0), (4, 1)])
def test_quasi_m_witnesses_hit_the_gap(k, m):
    # n <= k leaves repeat-free freedom, so the gap n - m is attained exactly.
    n = k
    for seed in range(5):
        f = gen_quasi_m_ary(k, n, 2, m, seed)
        assert quasi_arity(f) == m
        assert len(essential_slots(f)) == n
        assert arity_gap(f).gap == n - m


def test_binary_minors_equivalent_to_diagonal():
    rng = random.Random(5)
    for _ in range(20):
        f = random_function(rng, 3, 2, 3)
        d = diagonal(f)
        for i, j in ((1, 2), (2, 1)):
            assert diagonal(identification_minor(f, i, j)) == d
