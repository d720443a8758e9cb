"""Latin squares and orthogonal arrays over finite fields.

An OA(t, n, k) here is a k^t x n integer matrix over symbols 0..k-1 in which
every t columns, restricted to the rows, hit every t-tuple exactly once.
Constructions are deterministic: rows are emitted in (a, b) lexicographic
order, so the q constant rows of oa_square(q) (multiplier a = 0) come first.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product

from .errors import StrengthExceedsColumns
from .fields import field_create


@dataclass(frozen=True)
class LatinSquare:
    order: int
    grid: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class OrthogonalArray:
    strength: int
    columns: int
    alphabet: int
    rows: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class OaReport:
    """Outcome of a strength check; on failure the first violation in
    (column set, symbol tuple) lexicographic order is reported."""

    ok: bool
    strength: int
    columns: tuple[int, ...] | None = None
    symbols: tuple[int, ...] | None = None
    count: int | None = None


def mols_complete(q: int) -> list[LatinSquare]:
    """The complete family of q-1 mutually orthogonal Latin squares
    L_a(i, j) = a*i + j over GF(q), for a = 1..q-1."""
    f = field_create(q)
    return [
        LatinSquare(q, tuple(tuple(f.add(f.mul(a, i), j) for j in range(q)) for i in range(q)))
        for a in range(1, q)
    ]


def oa_square(q: int) -> OrthogonalArray:
    """OA(2, q, q): row (a, b) holds a*x_i + b at column i for x_i = i in GF(q)."""
    f = field_create(q)
    rows = tuple(
        tuple(f.add(f.mul(a, x), b) for x in range(q))
        for a in range(q) for b in range(q)
    )
    return OrthogonalArray(2, q, q, rows)


def oa_extended(q: int) -> OrthogonalArray:
    """OA(2, q+1, q): oa_square(q) rows with the multiplier a appended as an
    extra last column."""
    f = field_create(q)
    rows = tuple(
        tuple(f.add(f.mul(a, x), b) for x in range(q)) + (a,)
        for a in range(q) for b in range(q)
    )
    return OrthogonalArray(2, q + 1, q, rows)


def oa_sum(t: int, k: int) -> OrthogonalArray:
    """OA(t-1, t, k) over Z_k: all (t-1)-tuples in lexicographic order, each
    with -(sum of the tuple) mod k appended."""
    if t < 2:
        raise ValueError("t must be >= 2")
    if k < 2:
        raise ValueError("k must be >= 2")
    rows = tuple(
        tup + ((-sum(tup)) % k,) for tup in product(range(k), repeat=t - 1)
    )
    return OrthogonalArray(t - 1, t, k, rows)


def verify_oa(array: OrthogonalArray, t: int) -> OaReport:
    """Exhaustively check strength t: every t columns must carry every t-tuple
    over 0..alphabet-1 exactly once."""
    if t < 1:
        raise ValueError("strength must be >= 1")
    if t > array.columns:
        raise StrengthExceedsColumns(
            f"strength {t} exceeds {array.columns} columns"
        )
    k = array.alphabet
    for cols in combinations(range(array.columns), t):
        counts: dict[tuple[int, ...], int] = {}
        in_range = True
        for row in array.rows:
            key = tuple(row[c] for c in cols)
            counts[key] = counts.get(key, 0) + 1
            in_range = in_range and all(0 <= s < k for s in key)
        if in_range and len(counts) == k**t and all(v == 1 for v in counts.values()):
            continue
        for symbols in product(range(k), repeat=t):
            count = counts.get(symbols, 0)
            if count != 1:
                return OaReport(False, t, cols, symbols, count)
        # reachable only via symbols outside 0..k-1
        bad = min(key for key in counts if any(s >= k or s < 0 for s in key))
        return OaReport(False, t, cols, bad, counts[bad])
    return OaReport(True, t)
