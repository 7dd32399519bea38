"""Brute-force oracles, seeded witness generators, and property-sweep verification.

The oracles recompute gap and quasi-arity from their definitions (maximum
essential arity over all strict substitution minors; minimum essential arity
over all completions of the repeat-set values) so the fast implementations
can be checked against them.  ``verify`` runs a named property over an
exhaustive or sampled function space and reports failures.
"""

from __future__ import annotations

import itertools
import os
import random
import time
from dataclasses import dataclass
from functools import lru_cache
from multiprocessing import Pool
from typing import Callable, Sequence

from .core import (
    FiniteFunction,
    GapUndefinedError,
    OracleInfeasibleError,
    UnsupportedCodomainError,
    all_tuples,
    constant,
    projection,
    tuple_to_index,
)
from .analysis import (
    _essential_ids,
    _repeat_flags,
    is_restriction_totally_symmetric,
)
from .classify import classify_pseudo_boolean, ternary_pattern
from .gap import arity_gap, is_semiprojection, quasi_arity
from .minors import identification_minor
from .oddsupp import (
    _oddsupp_masks,
    is_restriction_determined_by_oddsupp,
    reachable_oddsupp_masks,
)

DEFAULT_BUDGET = 10**7
GENERATOR_ATTEMPTS = 1000


def _resolve_budget(budget: int | None) -> int:
    if budget is not None:
        return budget
    env = os.environ.get("ARITYGAP_BUDGET")
    return int(env) if env else DEFAULT_BUDGET


@lru_cache(maxsize=None)
def _partitions(n: int) -> tuple[tuple[tuple[int, ...], ...], ...]:
    # All partitions of {1..n}, each block sorted, blocks sorted by minimum.
    def grow(elems: list[int]):
        if not elems:
            yield []
            return
        first, rest = elems[0], elems[1:]
        for p in grow(rest):
            for i in range(len(p)):
                yield p[:i] + [[first] + p[i]] + p[i + 1 :]
            yield [[first]] + p

    result = []
    for p in grow(list(range(1, n + 1))):
        result.append(tuple(sorted(tuple(sorted(b)) for b in p)))
    return tuple(sorted(result))


@lru_cache(maxsize=None)
def _partition_mapping(k: int, n: int, blocks: tuple[tuple[int, ...], ...]) -> tuple[int, ...]:
    lead = [0] * n
    for block in blocks:
        for s in block:
            lead[s - 1] = block[0]
    out = []
    for t in all_tuples(k, n):
        out.append(tuple_to_index(k, tuple(t[l - 1] for l in lead)))
    return tuple(out)


def oracle_gap(f: FiniteFunction) -> int:
    """Gap recomputed as ess f minus the maximum essential arity over all
    strict substitution minors.

    Every substitution minor arises, up to slot permutation and inessential
    slots (neither of which changes essential arity), from identifying the
    blocks of some partition of the slot set, so partitions are enumerated
    with duplicate tables skipped; minors with the full essential arity are
    equivalent to f and excluded.
    """
    ess = len(_essential_ids(f.k, f.n, f.table))
    if ess < 2:
        raise GapUndefinedError(f"arity gap needs >= 2 essential slots, got {ess}")
    best = -1
    seen = set()
    for blocks in _partitions(f.n):
        if len(blocks) == f.n:
            continue
        mapping = _partition_mapping(f.k, f.n, blocks)
        table = tuple(map(f.table.__getitem__, mapping))
        if table in seen:
            continue
        seen.add(table)
        e = len(_essential_ids(f.k, f.n, table))
        if best < e < ess:
            best = e
    assert best >= 0
    return ess - best


def _offdiagonal_indices(k: int, n: int) -> tuple[int, ...]:
    flags = _repeat_flags(k, n)
    return tuple(idx for idx in range(k**n) if not flags[idx])


def oracle_quasi_arity(f: FiniteFunction, budget: int | None = None) -> int:
    """Quasi-arity recomputed as the minimum essential arity over every
    completion of f's values on the repeat set."""
    free = _offdiagonal_indices(f.k, f.n)
    if f.b ** len(free) > _resolve_budget(budget):
        raise OracleInfeasibleError(
            f"{f.b}^{len(free)} support completions exceed the budget"
        )
    table = list(f.table)
    best = len(_essential_ids(f.k, f.n, table))
    for values in itertools.product(range(f.b), repeat=len(free)):
        for pos, v in zip(free, values):
            table[pos] = v
        e = len(_essential_ids(f.k, f.n, table))
        if e < best:
            best = e
            if best == 0:
                break
    return best


# ---------------------------------------------------------------------------
# Generators.  All take an integer seed and are deterministic for a fixed one;
# each retries up to GENERATOR_ATTEMPTS times before giving up.


def _random_table(rng: random.Random, size: int, b: int) -> tuple[int, ...]:
    return tuple(rng.randrange(b) for _ in range(size))


def gen_salomaa(k: int) -> FiniteFunction:
    """The k-ary operation that is 1 on (0, 1, ..., k-1) and 0 elsewhere.

    All k slots are essential, while identifying any two of them yields a
    constant, so the gap is the full domain size k.
    """
    if k < 2:
        raise ValueError(f"domain size must be >= 2, got {k}")
    table = [0] * k**k
    table[tuple_to_index(k, tuple(range(k)))] = 1
    return FiniteFunction(k, k, k, tuple(table))


def gen_essentially_m_ary(k: int, n: int, b: int, m: int, seed: int) -> FiniteFunction:
    """A random n-ary function depending on exactly m (random) slots.

    For n > k the repeat set is the whole domain, so this is also the general
    form of a quasi-m-ary function there.
    """
    if not 0 <= m <= n:
        raise ValueError(f"need 0 <= m <= n, got m={m}, n={n}")
    rng = random.Random(seed)
    if m == 0:
        return constant(k, n, b, rng.randrange(b))
    for _ in range(GENERATOR_ATTEMPTS):
        slots = sorted(rng.sample(range(1, n + 1), m))
        core = _random_table(rng, k**m, b)
        if len(_essential_ids(k, m, core)) != m:
            continue
        table = []
        for t in all_tuples(k, n):
            sub = tuple(t[s - 1] for s in slots)
            table.append(core[tuple_to_index(k, sub)])
        return FiniteFunction(k, n, b, tuple(table))
    raise ValueError(f"no essentially {m}-ary table found in {GENERATOR_ATTEMPTS} attempts")


def gen_quasi_m_ary(k: int, n: int, b: int, m: int, seed: int) -> FiniteFunction:
    """A quasi-m-ary function of arity n depending on all of its slots.

    Works by fixing an essentially m-ary function on the repeat set and
    randomizing the remaining (repeat-free) entries until every slot is
    essential.  For m < n this needs repeat-free tuples to exist (n <= k),
    and a binary function can never be quasi-binary; both impossibilities are
    rejected up front.
    """
    if not 0 <= m <= n:
        raise ValueError(f"need 0 <= m <= n, got m={m}, n={n}")
    if m < n and n > k:
        raise ValueError(
            f"arity {n} over a {k}-element domain leaves no repeat-free tuples, "
            f"so quasi-{m}-ary functions there depend on at most {m} slots"
        )
    if n == 2 and m == 2:
        raise ValueError("binary functions have quasi-arity at most 1")
    rng = random.Random(seed)
    free = _offdiagonal_indices(k, n)
    for _ in range(GENERATOR_ATTEMPTS):
        g = gen_essentially_m_ary(k, n, b, m, rng.getrandbits(32))
        if quasi_arity(g) != m:
            continue
        if m == n:
            f = g
        else:
            table = list(g.table)
            for idx in free:
                table[idx] = rng.randrange(b)
            f = FiniteFunction(k, n, b, tuple(table))
        if len(_essential_ids(k, n, f.table)) != n:
            continue
        assert quasi_arity(f) == m
        return f
    raise ValueError(f"no quasi-{m}-ary witness found in {GENERATOR_ATTEMPTS} attempts")


def gen_oddsupp_determined(k: int, n: int, b: int, seed: int) -> FiniteFunction:
    """A function whose restriction to the repeat set factors through oddsupp
    via a nonconstant map, with quasi-arity n; repeat-free entries are random."""
    if n < 4:
        raise ValueError(f"need arity >= 4, got {n}")
    reach = reachable_oddsupp_masks(k, n, restricted=True)
    if len(reach) < 2:
        raise ValueError("fewer than two reachable oddsupp values, no nonconstant map")
    rng = random.Random(seed)
    masks = _oddsupp_masks(k, n)
    flags = _repeat_flags(k, n)
    for _ in range(GENERATOR_ATTEMPTS):
        star = {mask: rng.randrange(b) for mask in reach}
        if len(set(star.values())) < 2:
            continue
        table = [
            star[masks[idx]] if flags[idx] else rng.randrange(b)
            for idx in range(k**n)
        ]
        f = FiniteFunction(k, n, b, tuple(table))
        if quasi_arity(f) == n:
            return f
    raise ValueError(f"no oddsupp-determined witness found in {GENERATOR_ATTEMPTS} attempts")


def gen_ternary_pattern(
    k: int,
    pattern: tuple[int, int, int],
    seed: int,
    b: int | None = None,
    h_table: Sequence[int] | None = None,
) -> FiniteFunction:
    """A ternary function realizing the selector pattern (i1, i2, i3) with a
    nonconstant unary h, all three slots essential.

    With b = k and h the identity, (0,0,0) is a majority operation, (1,1,1) a
    minority operation, a one-hot pattern a semiprojection (needs k >= 3) and
    a two-hot pattern a 2/3-minority operation.  Repeat-free entries are
    random.
    """
    if any(i not in (0, 1) for i in pattern):
        raise ValueError(f"pattern bits must be 0 or 1, got {pattern}")
    rng = random.Random(seed)
    if b is None:
        b = k
    if h_table is None:
        if b == k:
            h_table = tuple(range(k))
        else:
            h_table = tuple(rng.randrange(b) for _ in range(k))
    h_table = tuple(h_table)
    if len(set(h_table)) < 2:
        raise ValueError("h must be nonconstant")
    i1, i2, i3 = pattern
    free = _offdiagonal_indices(k, 3)
    base = [0] * k**3
    for idx, (a1, a2, a3) in enumerate(all_tuples(k, 3)):
        if a2 == a3:
            base[idx] = h_table[a1 if i1 else a2]
        elif a1 == a3:
            base[idx] = h_table[a2 if i2 else a1]
        elif a1 == a2:
            base[idx] = h_table[a3 if i3 else a1]
    for _ in range(GENERATOR_ATTEMPTS):
        table = list(base)
        for idx in free:
            table[idx] = rng.randrange(b)
        f = FiniteFunction(k, 3, b, tuple(table))
        if len(_essential_ids(k, 3, f.table)) == 3:
            return f
    raise ValueError(
        f"no essentially ternary function with pattern {pattern} found "
        f"in {GENERATOR_ATTEMPTS} attempts"
    )


def gen_semiprojection(k: int, n: int, t: int, seed: int) -> FiniteFunction:
    """An n-ary operation equal to the projection on slot t over the repeat
    set, depending on all slots (needs repeat-free tuples, so n <= k)."""
    if not 1 <= t <= n:
        raise ValueError(f"slot {t} not in 1..{n}")
    if n > k:
        raise ValueError(f"arity {n} over a {k}-element domain only admits projections")
    rng = random.Random(seed)
    base = projection(k, n, t)
    free = _offdiagonal_indices(k, n)
    for _ in range(GENERATOR_ATTEMPTS):
        table = list(base.table)
        for idx in free:
            table[idx] = rng.randrange(k)
        f = FiniteFunction(k, n, k, tuple(table))
        if len(_essential_ids(k, n, f.table)) == n:
            return f
    raise ValueError(f"no essentially {n}-ary semiprojection found in {GENERATOR_ATTEMPTS} attempts")


# ---------------------------------------------------------------------------
# Verification sweeps.


@dataclass(frozen=True)
class SweepSpec:
    """What to verify and over which function space.

    `filter` optionally narrows the space to functions matching `gap=G`,
    `qa=M` or `ess=E` before the check runs.
    """

    theorem: str
    k: int
    n: int
    b: int
    mode: str = "exhaustive"  # or "sampled"
    samples: int | None = None
    seed: int | None = None
    filter: str | None = None

    def __post_init__(self):
        if self.mode not in ("exhaustive", "sampled"):
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.mode == "sampled" and (self.samples is None or self.samples < 0):
            raise ValueError("sampled mode needs a sample count")
        if self.filter is not None:
            parse_instance_filter(self.filter)


def parse_instance_filter(text: str) -> Callable[[FiniteFunction], bool]:
    """Predicate for `gap=G`, `qa=M` or `ess=E` filter expressions."""
    key, _, value = text.partition("=")
    if key not in ("gap", "qa", "ess") or not value.lstrip("-").isdigit():
        raise ValueError(f"unknown filter {text!r}, expected gap=G, qa=M or ess=E")
    want = int(value)
    if key == "qa":
        return lambda f: quasi_arity(f) == want
    if key == "ess":
        return lambda f: len(_essential_ids(f.k, f.n, f.table)) == want

    def by_gap(f: FiniteFunction) -> bool:
        try:
            return arity_gap(f).gap == want
        except GapUndefinedError:
            return False

    return by_gap


@dataclass(frozen=True)
class VerificationReport:
    theorem: str
    checked: int
    failures: tuple[FiniteFunction, ...]
    seed: int | None
    elapsed: float


def render_report(report: VerificationReport) -> str:
    from .core import render_line

    seed = report.seed if report.seed is not None else "-"
    lines = [
        f"theorem={report.theorem} checked={report.checked} "
        f"failures={len(report.failures)} seed={seed}"
    ]
    lines.extend(render_line(f) for f in report.failures)
    return "\n".join(lines) + "\n"


def _all_id_minor_tables(f: FiniteFunction) -> list[tuple[int, ...]]:
    return [
        identification_minor(f, i, j).table
        for i in range(1, f.n + 1)
        for j in range(1, f.n + 1)
        if i != j
    ]


def _gap_of(f: FiniteFunction) -> int:
    return arity_gap(f).gap


def _check_minors_constant_iff_quasi_nullary(f: FiniteFunction) -> bool | None:
    if f.n < 2:
        return None
    left = all(len(set(t)) == 1 for t in _all_id_minor_tables(f))
    return left == (quasi_arity(f) == 0)


def _check_minors_unary_iff_quasi_unary(f: FiniteFunction) -> bool | None:
    if f.n != 2 and f.n < 4:
        return None
    left = all(
        len(_essential_ids(f.k, f.n, t)) == 1 for t in _all_id_minor_tables(f)
    )
    return left == (quasi_arity(f) == 1)


def _check_swierczkowski(f: FiniteFunction) -> bool | None:
    if f.n < 4:
        return None
    projections = [projection(f.k, f.n, t).table for t in range(1, f.n + 1)]
    left = all(t in projections for t in _all_id_minor_tables(f))
    return left == (is_semiprojection(f) is not None)


def _check_quasi_arity_oracle(f: FiniteFunction) -> bool | None:
    return quasi_arity(f) == oracle_quasi_arity(f)


def _check_gap_low_quasi_arity(f: FiniteFunction) -> bool | None:
    if len(_essential_ids(f.k, f.n, f.table)) != f.n or not 2 <= f.n <= f.k:
        return None
    m = quasi_arity(f)
    if m >= f.n:
        return None
    return _gap_of(f) == f.n - m


def _check_gap_bound_wide(f: FiniteFunction) -> bool | None:
    if f.n <= f.k or len(_essential_ids(f.k, f.n, f.table)) != f.n:
        return None
    return _gap_of(f) <= 2


def _check_gap_bound_quasi_full(f: FiniteFunction) -> bool | None:
    if f.n <= 3 or len(_essential_ids(f.k, f.n, f.table)) != f.n:
        return None
    if quasi_arity(f) != f.n:
        return None
    return _gap_of(f) <= 2


def _check_gap_iff_quasi_arity(f: FiniteFunction) -> bool | None:
    if f.n < 2 or len(_essential_ids(f.k, f.n, f.table)) != f.n:
        return None
    gap = _gap_of(f)
    m_actual = quasi_arity(f)
    for m in range(0, f.n - 2):
        if (gap == f.n - m) != (m_actual == m):
            return False
    return True


def _check_pseudo_boolean_classifier(f: FiniteFunction) -> bool | None:
    ess = len(_essential_ids(f.k, f.n, f.table))
    if ess < 2:
        return True  # both classifier and oracle reject these inputs
    return classify_pseudo_boolean(f).gap == oracle_gap(f)


def _check_large_range_gap_one(f: FiniteFunction) -> bool | None:
    if f.n <= max(f.k, 3) or len(_essential_ids(f.k, f.n, f.table)) != f.n:
        return None
    if len(set(f.table)) <= 2 ** (f.k - 1):
        return None
    return _gap_of(f) == 1


def _check_symmetry_of_gap_two(f: FiniteFunction) -> bool | None:
    if f.n <= 3 or len(_essential_ids(f.k, f.n, f.table)) != f.n:
        return None
    if quasi_arity(f) != f.n or _gap_of(f) != 2:
        return None
    if not is_restriction_totally_symmetric(f):
        return False
    expect = set(range(1, f.n + 1))
    for i in range(1, f.n + 1):
        for j in range(1, f.n + 1):
            if i == j:
                continue
            minor = identification_minor(f, i, j)
            if set(_essential_ids(f.k, f.n, minor.table)) != expect - {i, j}:
                return False
    return True


def _gap_two_criterion(f: FiniteFunction) -> bool:
    m = quasi_arity(f)
    return m == f.n - 2 or (
        m == f.n and is_restriction_determined_by_oddsupp(f).determined
    )


def _check_gap_two_characterization(f: FiniteFunction) -> bool | None:
    if f.n <= 3 or len(_essential_ids(f.k, f.n, f.table)) != f.n:
        return None
    return (_gap_of(f) == 2) == _gap_two_criterion(f)


def _check_gap_two_general(f: FiniteFunction) -> bool | None:
    if f.n < 2 or f.n == 3 or len(_essential_ids(f.k, f.n, f.table)) != f.n:
        return None
    return (_gap_of(f) == 2) == _gap_two_criterion(f)


def _check_gap_two_ternary(f: FiniteFunction) -> bool | None:
    if f.n != 3 or len(_essential_ids(f.k, f.n, f.table)) != 3:
        return None
    return (_gap_of(f) == 2) == (ternary_pattern(f) is not None)


@dataclass(frozen=True)
class TheoremCheck:
    id: str
    summary: str
    predicate: Callable[[FiniteFunction], bool | None]
    needs_operation: bool = False  # b = k required
    needs_two_element_domain: bool = False  # k = 2 required


THEOREMS: dict[str, TheoremCheck] = {
    t.id: t
    for t in (
        TheoremCheck(
            "T3.5i",
            "identification minors all constant iff quasi-arity 0",
            _check_minors_constant_iff_quasi_nullary,
        ),
        TheoremCheck(
            "T3.5ii",
            "identification minors all essentially unary iff quasi-arity 1 "
            "(arity 2 or at least 4)",
            _check_minors_unary_iff_quasi_unary,
        ),
        TheoremCheck(
            "SWIER",
            "semiprojection iff every identification minor is a projection "
            "(arity at least 4)",
            _check_swierczkowski,
            needs_operation=True,
        ),
        TheoremCheck(
            "L3.4",
            "quasi-arity equals the support-enumeration minimum",
            _check_quasi_arity_oracle,
        ),
        TheoremCheck(
            "P4.2",
            "gap is n - m for quasi-m-ary functions with m < n <= k",
            _check_gap_low_quasi_arity,
        ),
        TheoremCheck(
            "T4.1",
            "gap at most 2 once the arity exceeds the domain size",
            _check_gap_bound_wide,
        ),
        TheoremCheck(
            "T4.3",
            "gap at most 2 for quasi-n-ary functions of arity above 3",
            _check_gap_bound_quasi_full,
        ),
        TheoremCheck(
            "T4.4",
            "gap n - m iff quasi-arity m, for every m <= n - 3",
            _check_gap_iff_quasi_arity,
        ),
        TheoremCheck(
            "T5.1",
            "two-element-domain classifier agrees with the minor-enumeration oracle",
            _check_pseudo_boolean_classifier,
            needs_two_element_domain=True,
        ),
        TheoremCheck(
            "L5.2",
            "range larger than 2^(k-1) forces gap 1 at arity above max(k, 3)",
            _check_large_range_gap_one,
        ),
        TheoremCheck(
            "T6.1",
            "gap-2 quasi-n-ary functions are symmetric on the repeat set with "
            "(n-2)-ary identification minors",
            _check_symmetry_of_gap_two,
        ),
        TheoremCheck(
            "T6.3",
            "gap 2 iff quasi-arity n - 2, or n with oddsupp-determined restriction "
            "(arity above 3)",
            _check_gap_two_characterization,
        ),
        TheoremCheck(
            "T6.4ii",
            "general gap-2 criterion for arity other than 3",
            _check_gap_two_general,
        ),
        TheoremCheck(
            "T6.4iii",
            "ternary gap-2 criterion via the unary selector pattern",
            _check_gap_two_ternary,
        ),
    )
}


def function_by_id(k: int, n: int, b: int, ident: int) -> FiniteFunction:
    """The ident-th function in the canonical enumeration: the table read as a
    big-endian base-b numeral."""
    size = k**n
    table = [0] * size
    for pos in range(size - 1, -1, -1):
        ident, table[pos] = divmod(ident, b)
    if ident:
        raise ValueError("function id out of range")
    return FiniteFunction(k, n, b, tuple(table))


def sampled_function(k: int, n: int, b: int, seed: int | None, index: int) -> FiniteFunction:
    rng = random.Random(f"{seed}:{index}")
    return FiniteFunction(k, n, b, _random_table(rng, k**n, b))


def constructed_witnesses(k: int, n: int, b: int, seed: int | None) -> list[FiniteFunction]:
    """Deterministic battery of constructed functions so that sampled sweeps
    exercise both directions of each equivalence, not just the generic case."""
    out: list[FiniteFunction] = []
    base = random.Random(f"{seed}:battery")

    def attempt(fn, *args):
        try:
            out.append(fn(*args))
        except ValueError:
            pass

    if n == k and b == k:
        out.append(gen_salomaa(k))
    for m in range(0, n + 1):
        attempt(gen_quasi_m_ary, k, n, b, m, base.getrandbits(32))
    for m in range(0, min(n, 3)):
        attempt(gen_essentially_m_ary, k, n, b, m, base.getrandbits(32))
    attempt(gen_oddsupp_determined, k, n, b, base.getrandbits(32))
    if n == 3:
        for pattern in itertools.product((0, 1), repeat=3):
            attempt(gen_ternary_pattern, k, pattern, base.getrandbits(32), b)
    if b == k and n <= k:
        attempt(gen_semiprojection, k, n, 1, base.getrandbits(32))
    return out


_WORKER_STATE: dict = {}


def _sweep_init(theorem, k, n, b, mode, seed, instance_filter):
    _WORKER_STATE.update(
        theorem=theorem, k=k, n=n, b=b, mode=mode, seed=seed, filter=instance_filter
    )


def _sweep_range(bounds: tuple[int, int]) -> tuple[int, list[tuple[int, ...]]]:
    s = _WORKER_STATE
    check = THEOREMS[s["theorem"]]
    keep = parse_instance_filter(s["filter"]) if s["filter"] else None
    checked = 0
    failures = []
    for i in range(*bounds):
        if s["mode"] == "exhaustive":
            f = function_by_id(s["k"], s["n"], s["b"], i)
        else:
            f = sampled_function(s["k"], s["n"], s["b"], s["seed"], i)
        if keep is not None and not keep(f):
            continue
        verdict = check.predicate(f)
        if verdict is None:
            continue
        checked += 1
        if not verdict:
            failures.append(f.table)
    return checked, failures


def verify(spec: SweepSpec, budget: int | None = None, jobs: int = 1) -> VerificationReport:
    """Run one named check over the requested function space.

    checked counts the functions the property's hypotheses applied to;
    failures are reported sorted by table and must reproduce when replayed.
    """
    if spec.theorem not in THEOREMS:
        raise ValueError(f"unknown theorem id {spec.theorem!r}")
    check = THEOREMS[spec.theorem]
    if check.needs_operation and spec.b != spec.k:
        raise UnsupportedCodomainError(f"{spec.theorem} needs b = k")
    if check.needs_two_element_domain and spec.k != 2:
        raise UnsupportedDomainError(f"{spec.theorem} is about two-element domains")
    start = time.perf_counter()
    if spec.mode == "exhaustive":
        total = spec.b ** (spec.k**spec.n)
        if total > _resolve_budget(budget):
            raise OracleInfeasibleError(
                f"{total} tables exceed the budget; use sampling"
            )
        extras: list[FiniteFunction] = []
    else:
        total = spec.samples
        extras = constructed_witnesses(spec.k, spec.n, spec.b, spec.seed)

    checked = 0
    failure_tables: list[tuple[int, ...]] = []
    init_args = (spec.theorem, spec.k, spec.n, spec.b, spec.mode, spec.seed, spec.filter)
    _sweep_init(*init_args)
    if jobs > 1 and total > 0:
        chunk = max(1, total // (jobs * 4))
        bounds = [(lo, min(lo + chunk, total)) for lo in range(0, total, chunk)]
        with Pool(jobs, initializer=_sweep_init, initargs=init_args) as pool:
            for part_checked, part_failures in pool.map(_sweep_range, bounds):
                checked += part_checked
                failure_tables.extend(part_failures)
    else:
        checked, failure_tables = _sweep_range((0, total))

    keep = parse_instance_filter(spec.filter) if spec.filter else None
    for f in extras:
        if keep is not None and not keep(f):
            continue
        verdict = check.predicate(f)
        if verdict is None:
            continue
        checked += 1
        if not verdict:
            failure_tables.append(f.table)

    failures = tuple(
        FiniteFunction(spec.k, spec.n, spec.b, t) for t in sorted(set(failure_tables))
    )
    return VerificationReport(
        theorem=spec.theorem,
        checked=checked,
        failures=failures,
        seed=spec.seed if spec.mode == "sampled" else None,
        elapsed=time.perf_counter() - start,
    )
