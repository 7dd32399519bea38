"""Quasi-arity, semiprojections, essentially at most unary supports, and the arity gap."""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    FiniteFunction,
    GapUndefinedError,
    NoSuchSupportError,
    UnsupportedCodomainError,
    all_tuples,
)
from .analysis import (
    _essential_ids,
    _essential_ids_on_repeat,
    _repeat_flags,
    restrict_to_essential,
)
from .minors import diagonal, identification_minor


def quasi_arity(f: FiniteFunction) -> int:
    """Minimum essential arity over all total functions agreeing with f on the
    repeat set.

    Computed directly: for n = 1 it is the essential arity, for n = 2 it is 0
    or 1 according to whether the diagonal a -> f(a, a) is constant, and for
    n >= 3 it is the number of slots essential within the repeat set.
    """
    if f.n == 1:
        return len(_essential_ids(f.k, f.n, f.table))
    if f.n == 2:
        return 0 if diagonal(f).is_constant() else 1
    return len(_essential_ids_on_repeat(f.k, f.n, f.table))


def is_semiprojection(f: FiniteFunction) -> int | None:
    """The least slot t with f(a) = a_t on every tuple containing a repeat, if any.

    Requires the codomain to be identified with the domain (b = k).
    """
    if f.b != f.k:
        raise UnsupportedCodomainError(
            f"semiprojection test needs b = k, got b={f.b}, k={f.k}"
        )
    flags = _repeat_flags(f.k, f.n)
    candidates = set(range(1, f.n + 1))
    for idx, t in enumerate(all_tuples(f.k, f.n)):
        if not flags[idx]:
            continue
        v = f.table[idx]
        candidates = {s for s in candidates if t[s - 1] == v}
        if not candidates:
            return None
    return min(candidates)


@dataclass(frozen=True)
class UnarySupport:
    """Essentially at most unary supports of a quasi-nullary or quasi-unary function.

    `ambiguous` is set in the binary quasi-unary case, where exactly two
    essentially unary supports exist; otherwise the support is unique.
    """

    supports: tuple[FiniteFunction, ...]
    slots: tuple[int, ...]
    ambiguous: bool


def _compose_on_slot(d: FiniteFunction, n: int, t: int) -> FiniteFunction:
    """The n-ary function x -> d(x_t) for unary d."""
    return FiniteFunction(d.k, n, d.b, tuple(d.table[tt[t - 1]] for tt in all_tuples(d.k, n)))


def unique_unary_support(f: FiniteFunction) -> UnarySupport:
    qa = quasi_arity(f)
    if qa >= 2:
        raise NoSuchSupportError(f"quasi-arity is {qa}, no essentially unary support")
    if f.n == 1:
        return UnarySupport((f,), (1,) if qa == 1 else (), False)
    if qa == 0:
        # f is constant on the repeat set; (0,...,0) is in it.
        c = f.table[0]
        return UnarySupport(
            (FiniteFunction(f.k, f.n, f.b, (c,) * f.size),), (), False
        )
    d = diagonal(f)
    if f.n == 2:
        return UnarySupport(
            (_compose_on_slot(d, 2, 1), _compose_on_slot(d, 2, 2)), (1, 2), True
        )
    ids = _essential_ids_on_repeat(f.k, f.n, f.table)
    t = ids[0]
    return UnarySupport((_compose_on_slot(d, f.n, t),), (t,), False)


@dataclass(frozen=True)
class GapReport:
    """Essential arity, quasi-arity, gap data and the pair achieving it.

    `qa`, `essl` and `support` describe the function restricted to its
    essential slots; `pair` and `essential` are in the original slot
    numbering.
    """

    ess: int
    qa: int
    essl: int
    gap: int
    pair: tuple[int, int]
    essential: tuple[int, ...]
    support: FiniteFunction | None


def arity_gap(f: FiniteFunction) -> GapReport:
    """Minimum drop in essential arity over identifications of two essential slots.

    The function is first replaced by the equivalent one on its essential
    slots, then every unordered pair of slots is identified; the reported
    pair is the lexicographically least one achieving the minimum drop,
    mapped back to the original numbering.
    """
    g, slots = restrict_to_essential(f)
    ess = len(slots)
    if ess < 2:
        raise GapUndefinedError(f"arity gap needs >= 2 essential slots, got {ess}")
    best = -1
    best_pair = (1, 2)
    for i in range(1, ess + 1):
        for j in range(i + 1, ess + 1):
            minor = identification_minor(g, i, j)
            e = len(_essential_ids(g.k, g.n, minor.table))
            if e > best:
                best = e
                best_pair = (i, j)
    qa = quasi_arity(g)
    support = unique_unary_support(g).supports[0] if qa <= 1 else None
    return GapReport(
        ess=ess,
        qa=qa,
        essl=best,
        gap=ess - best,
        pair=(slots[best_pair[0] - 1], slots[best_pair[1] - 1]),
        essential=slots,
        support=support,
    )
