"""Simple variable substitutions: sigma-minors, identification and partition minors."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .core import FiniteFunction, all_tuples, tuple_to_index


@dataclass(frozen=True)
class MinorMap:
    """A substitution sigma: {1..m} -> {1..n} feeding target slot sigma(i) to source slot i."""

    m: int
    n: int
    sigma: tuple[int, ...]

    def __post_init__(self):
        if self.m < 1 or self.n < 1:
            raise ValueError("arities must be >= 1")
        if not isinstance(self.sigma, tuple):
            object.__setattr__(self, "sigma", tuple(self.sigma))
        if len(self.sigma) != self.m:
            raise ValueError(f"sigma must have {self.m} entries, got {len(self.sigma)}")
        for s in self.sigma:
            if not 1 <= s <= self.n:
                raise ValueError(f"sigma entry {s} not in 1..{self.n}")


@dataclass(frozen=True)
class VariablePartition:
    """A partition of the slot set {1..n} into disjoint nonempty blocks."""

    n: int
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        canon = tuple(sorted(tuple(sorted(block)) for block in self.blocks))
        object.__setattr__(self, "blocks", canon)
        seen: set[int] = set()
        for block in canon:
            if not block:
                raise ValueError("empty block")
            for s in block:
                if not 1 <= s <= self.n:
                    raise ValueError(f"slot {s} not in 1..{self.n}")
                if s in seen:
                    raise ValueError(f"slot {s} appears in two blocks")
                seen.add(s)
        if len(seen) != self.n:
            raise ValueError("blocks do not cover all slots")


@lru_cache(maxsize=None)
def _sigma_mapping(k: int, m: int, n: int, sigma: tuple[int, ...]) -> tuple[int, ...]:
    # target index -> source index under t |-> (t_sigma(1), ..., t_sigma(m))
    out = []
    for t in all_tuples(k, n):
        out.append(tuple_to_index(k, tuple(t[s - 1] for s in sigma)))
    return tuple(out)


def simple_minor(g: FiniteFunction, sigma: MinorMap) -> FiniteFunction:
    """The minor of g under sigma: result(t) = g(t_sigma(1), ..., t_sigma(m))."""
    if sigma.m != g.n:
        raise ValueError(f"sigma has source arity {sigma.m}, function has arity {g.n}")
    mapping = _sigma_mapping(g.k, sigma.m, sigma.n, sigma.sigma)
    return FiniteFunction(g.k, sigma.n, g.b, tuple(map(g.table.__getitem__, mapping)))


@lru_cache(maxsize=None)
def _identification_sigma(n: int, i: int, j: int) -> tuple[int, ...]:
    sigma = list(range(1, n + 1))
    sigma[i - 1] = j
    return tuple(sigma)


def identification_minor(f: FiniteFunction, i: int, j: int) -> FiniteFunction:
    """Feed slot i from slot j; arity is preserved and slot i becomes inessential."""
    if not (1 <= i <= f.n and 1 <= j <= f.n):
        raise ValueError(f"slots ({i}, {j}) not in 1..{f.n}")
    if i == j:
        raise ValueError("identification needs two distinct slots")
    return simple_minor(f, MinorMap(f.n, f.n, _identification_sigma(f.n, i, j)))


def partition_minor(f: FiniteFunction, delta: VariablePartition) -> FiniteFunction:
    """Identify the slots of each block, routing every block to its minimum slot."""
    if delta.n != f.n:
        raise ValueError(f"partition is over {delta.n} slots, function has arity {f.n}")
    sigma = [0] * f.n
    for block in delta.blocks:
        lead = block[0]
        for s in block:
            sigma[s - 1] = lead
    return simple_minor(f, MinorMap(f.n, f.n, tuple(sigma)))


def diagonal(f: FiniteFunction) -> FiniteFunction:
    """The unary function a -> f(a, ..., a)."""
    step = (f.k**f.n - 1) // (f.k - 1)  # index of (a,...,a) is a * step
    return FiniteFunction(f.k, 1, f.b, tuple(f.table[a * step] for a in range(f.k)))
