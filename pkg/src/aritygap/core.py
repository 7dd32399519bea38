"""Dense-table representation of finite functions f: {0..k-1}^n -> {0..b-1}.

A function is stored as its complete value table, indexed by the big-endian
mixed-radix encoding of argument tuples: (a1, ..., an) maps to index
a1*k^(n-1) + a2*k^(n-2) + ... + an, so the first argument is the most
significant digit.  ``itertools.product(range(k), repeat=n)`` yields tuples
in exactly this index order.  Argument slots are numbered 1..n throughout
the public API.

Text interchange format (UTF-8), used by every CLI command:

    line 1:  k n b            (decimal, space separated)
    rest:    k^n codomain values in index order, whitespace separated,
             optionally spread over several lines

Lines starting with ``#`` are ignored.  A compact single-line variant with
``;`` standing in for the newline after the header is also accepted by
``parse`` (it is the form used for failure records in verification
reports).  ``render`` always emits the two-line form.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterator, Sequence

# Guard against absurd table sizes before allocating anything.
MAX_TABLE_ENTRIES = 10**8


class ArityGapError(Exception):
    """Base class for domain-level errors (as opposed to bad arguments)."""


class GapUndefinedError(ArityGapError):
    """The arity gap is only defined for functions with >= 2 essential slots."""


class UnsupportedCodomainError(ArityGapError):
    """Operation requires the codomain to be identified with the domain (b = k)."""


class UnsupportedDomainError(ArityGapError):
    """Operation is restricted to two-element domains (and codomains)."""


class UnsupportedArityError(ArityGapError):
    """Operation excludes this arity."""


class NoSuchSupportError(ArityGapError):
    """No essentially at most unary support exists."""


class OracleInfeasibleError(ArityGapError):
    """Brute-force enumeration would exceed the configured budget."""


class FunctionFormatError(ValueError):
    """Malformed function text; carries the offending line and column."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.message = message
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", col {column}"
            where += ": "
        super().__init__(where + message)


@lru_cache(maxsize=None)
def strides(k: int, n: int) -> tuple[int, ...]:
    """Index weight of each slot: slot i contributes a_i * k^(n-i)."""
    return tuple(k ** (n - i) for i in range(1, n + 1))


def tuple_to_index(k: int, t: Sequence[int]) -> int:
    idx = 0
    for a in t:
        idx = idx * k + a
    return idx


def index_to_tuple(k: int, n: int, idx: int) -> tuple[int, ...]:
    out = [0] * n
    for pos in range(n - 1, -1, -1):
        idx, out[pos] = divmod(idx, k)
    return tuple(out)


def all_tuples(k: int, n: int) -> Iterator[tuple[int, ...]]:
    """All of {0..k-1}^n in table-index order."""
    return itertools.product(range(k), repeat=n)


@dataclass(frozen=True)
class FiniteFunction:
    """A total function {0..k-1}^n -> {0..b-1} as a dense table.

    Instances are immutable and safe to share between threads.  The codomain
    carries no structure beyond equality of its elements.
    """

    k: int
    n: int
    b: int
    table: tuple[int, ...]

    def __post_init__(self):
        if self.k < 2:
            raise ValueError(f"domain size k must be >= 2, got {self.k}")
        if self.n < 1:
            raise ValueError(f"arity n must be >= 1, got {self.n}")
        if self.b < 2:
            raise ValueError(f"codomain size b must be >= 2, got {self.b}")
        size = self.k**self.n
        if size > MAX_TABLE_ENTRIES:
            raise ValueError(
                f"table would need {size} entries, over the {MAX_TABLE_ENTRIES} limit"
            )
        if not isinstance(self.table, tuple):
            object.__setattr__(self, "table", tuple(self.table))
        if len(self.table) != size:
            raise ValueError(f"expected {size} table entries, got {len(self.table)}")
        for pos, v in enumerate(self.table):
            if not isinstance(v, int) or not 0 <= v < self.b:
                raise ValueError(f"table entry {v!r} at index {pos} not in 0..{self.b - 1}")

    @property
    def size(self) -> int:
        return self.k**self.n

    def eval(self, t: Sequence[int]) -> int:
        if len(t) != self.n:
            raise ValueError(f"expected {self.n} arguments, got {len(t)}")
        for pos, a in enumerate(t):
            if not 0 <= a < self.k:
                raise ValueError(f"argument {a!r} at slot {pos + 1} not in 0..{self.k - 1}")
        return self.table[tuple_to_index(self.k, t)]

    def __call__(self, *args: int) -> int:
        return self.eval(args)

    def tuples(self) -> Iterator[tuple[int, ...]]:
        return all_tuples(self.k, self.n)

    def is_constant(self) -> bool:
        first = self.table[0]
        return all(v == first for v in self.table)


def constant(k: int, n: int, b: int, value: int) -> FiniteFunction:
    return FiniteFunction(k, n, b, (value,) * (k**n))


def projection(k: int, n: int, t: int) -> FiniteFunction:
    """The operation (a1, ..., an) -> a_t, with codomain identified with the domain."""
    if not 1 <= t <= n:
        raise ValueError(f"projection slot {t} not in 1..{n}")
    return FiniteFunction(k, n, k, tuple(tt[t - 1] for tt in all_tuples(k, n)))


def from_function(k: int, n: int, b: int, fn: Callable[[tuple[int, ...]], int]) -> FiniteFunction:
    return FiniteFunction(k, n, b, tuple(fn(t) for t in all_tuples(k, n)))


_TOKEN = re.compile(r"\S+")


def _tokens(text: str) -> Iterator[tuple[str, int, int]]:
    # ';' acts as a line separator so the compact one-line form parses too.
    for lineno, raw in enumerate(text.split("\n"), start=1):
        for part in raw.split(";"):
            if part.lstrip().startswith("#"):
                break
            for m in _TOKEN.finditer(part):
                yield m.group(), lineno, m.start() + 1


def _int_token(tok: tuple[str, int, int], what: str) -> int:
    text, line, col = tok
    try:
        return int(text)
    except ValueError:
        raise FunctionFormatError(f"{what}: {text!r} is not an integer", line, col) from None


def parse_stream(text: str) -> list[FiniteFunction]:
    """Parse a concatenation of zero or more functions in the text format."""
    stream = _tokens(text)
    out = []
    while True:
        header = list(itertools.islice(stream, 3))
        if not header:
            return out
        if len(header) < 3:
            tok = header[-1]
            raise FunctionFormatError("incomplete header, expected 'k n b'", tok[1], tok[2])
        k = _int_token(header[0], "domain size")
        n = _int_token(header[1], "arity")
        b = _int_token(header[2], "codomain size")
        if k < 2 or n < 1 or b < 2:
            raise FunctionFormatError(
                f"invalid header 'k n b' = '{k} {n} {b}' (need k >= 2, n >= 1, b >= 2)",
                header[0][1],
                header[0][2],
            )
        size = k**n
        if size > MAX_TABLE_ENTRIES:
            raise FunctionFormatError(
                f"table would need {size} entries, over the {MAX_TABLE_ENTRIES} limit",
                header[0][1],
                header[0][2],
            )
        values = []
        last = header[2]
        for tok in itertools.islice(stream, size):
            v = _int_token(tok, "table value")
            if not 0 <= v < b:
                raise FunctionFormatError(f"value {v} not in 0..{b - 1}", tok[1], tok[2])
            values.append(v)
            last = tok
        if len(values) != size:
            raise FunctionFormatError(
                f"expected {size} values, got {len(values)}", last[1], last[2]
            )
        out.append(FiniteFunction(k, n, b, tuple(values)))


def parse(text: str) -> FiniteFunction:
    """Parse exactly one function."""
    fns = parse_stream(text)
    if len(fns) != 1:
        raise FunctionFormatError(f"expected exactly one function, found {len(fns)}")
    return fns[0]


def render(f: FiniteFunction) -> str:
    return f"{f.k} {f.n} {f.b}\n" + " ".join(str(v) for v in f.table) + "\n"


def render_line(f: FiniteFunction) -> str:
    """Compact one-line form, used for failure records in reports."""
    return f"{f.k} {f.n} {f.b};" + " ".join(str(v) for v in f.table)
