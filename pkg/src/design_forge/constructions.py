"""Constructions of mixed Steiner systems and group divisible designs.

Conventions shared by every construction here:

* coordinates and symbols are 0-based (sources that state blocks with 1-based
  positions over symbols 1..k are shifted at the boundary; design meta
  records the shift);
* a product point (x, j) of X x Z_{k-1} flattens to x*(k-1) + j;
* outputs are deterministic: fixed row orders, fixed class orders, stable
  tie-breaks.  Re-running any construction reproduces the same object.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations

from .core import (
    Codeword,
    GddType,
    LargeSet,
    MixedAlphabet,
    MixedDesign,
    Resolution,
)
from .errors import (
    ConstructionFailed,
    CopyCountMismatch,
    CoverInvariantViolated,
    Infeasible,
    LargeSetInvalid,
    NotResolvable,
    ROutOfRange,
    TypeMismatch,
)
from .fields import field_create
from .oa import oa_extended, oa_square
from .verify import (
    verify_gdd,
    verify_large_set,
    verify_mixed_steiner,
    verify_resolution,
    verify_steiner,
)


# --------------------------------------------------------------------------
# weight-1 systems: one fresh symbol from each of the k largest alphabets
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class Ms1Feasibility:
    feasible: bool
    difference: int
    residue: int


def ms1_feasible(sizes, k: int) -> Ms1Feasibility:
    """Necessary arithmetic for MS(1, k, Q): with q_1 <= ... <= q_n,
    sum_{i<n}(q_i - 1) - (q_n - 1)(k - 1) must be nonnegative and divisible
    by k.  Input order does not matter; it is sorted ascending here."""
    if k < 2:
        raise ValueError("k must be >= 2")
    q = sorted(sizes)
    if len(q) < 1 or any(s < 2 for s in q):
        raise ValueError(f"alphabet sizes must all be >= 2, got {tuple(sizes)}")
    difference = sum(s - 1 for s in q[:-1]) - (q[-1] - 1) * (k - 1)
    return Ms1Feasibility(difference >= 0 and difference % k == 0, difference, difference % k)


def ms1_construct(sizes, k: int) -> MixedDesign:
    """Greedy MS(1, k, Q): repeatedly emit a block holding one fresh nonzero
    symbol from each of the k currently largest alphabets (ties broken by
    (current size, coordinate index), taking the largest), then decrement.

    The output is always re-verified; a greedy output that misses the
    distance bound 2(k-1)+1 raises ConstructionFailed rather than being
    returned.  That genuinely happens for alphabets with two or more
    non-binary coordinates, where the bound can be unreachable (any two
    blocks may share at most one coordinate, yet every coordinate with
    q_i - 1 >= 2 unused symbols must recur across blocks)."""
    feas = ms1_feasible(sizes, k)
    if not feas.feasible:
        why = f"difference {feas.difference}"
        if feas.difference >= 0:
            why += f", residue {feas.residue}"
        raise Infeasible(f"infeasible: {why} (alphabet {tuple(sorted(sizes))}, k={k})")
    q = sorted(sizes)
    n = len(q)
    remaining = [s - 1 for s in q]
    blocks: list[Codeword] = []
    while any(remaining):
        order = sorted(range(n), key=lambda i: (remaining[i], i))
        chosen = [i for i in order if remaining[i] > 0][-k:]
        if len(chosen) < k:
            raise ConstructionFailed(
                f"greedy stalled with {len(chosen)} nonempty alphabets, need {k}"
            )
        support = []
        for i in sorted(chosen):
            support.append((i, q[i] - remaining[i]))
            remaining[i] -= 1
        blocks.append(Codeword(tuple(support)))
    design = MixedDesign(
        MixedAlphabet(tuple(q)),
        1,
        k,
        tuple(blocks),
        meta=f"ms1 k={k} greedy over sorted sizes",
    )
    report = verify_mixed_steiner(design)
    if not report.ok:
        raise ConstructionFailed(
            f"greedy output failed verification: {report.counterexample.detail}",
            report=report,
        )
    return design


# --------------------------------------------------------------------------
# strength-2 systems from an OA(2, k, k)
# --------------------------------------------------------------------------

def construct_from_oa(k: int, r: int) -> MixedDesign:
    """GDD(2, k, rk + k(k-r)) of type 1^{rk} k^{k-r} over
    Z_2^{rk} x Z_{k+1}^{k-r}, from OA(2, k, k); an MS(2, k, .) when r = k-1.

    Blocks: r disjoint binary k-blocks {ik..ik+k-1}, plus one block per OA
    row (j_0..j_{k-1}): binary point i*k + j_i for i < r, then symbol j_i + 1
    at non-binary coordinate rk + (i - r) for i >= r."""
    if not 1 <= r <= k - 1:
        raise ROutOfRange(f"need 1 <= r <= k-1, got r={r} k={k}")
    array = oa_square(k)
    alphabet = MixedAlphabet((2,) * (r * k) + (k + 1,) * (k - r))
    blocks = [
        Codeword(tuple((i * k + c, 1) for c in range(k))) for i in range(r)
    ]
    for row in array.rows:
        support = [(i * k + row[i], 1) for i in range(r)]
        support += [(r * k + (i - r), row[i] + 1) for i in range(r, k)]
        blocks.append(Codeword(tuple(support)))
    return MixedDesign(
        alphabet,
        2,
        k,
        tuple(blocks),
        meta=f"oa-gdd k={k} r={r}; 0-based (source blocks are 1-based over 1..k)",
    )


# --------------------------------------------------------------------------
# partitioned covers and their combination into mixed systems
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class PartitionedCover:
    """Blocks over points 0..n-1 split into a root set R (blocks of size k)
    and r parallel classes (blocks of size k-1) such that every t-subset of
    points lies in exactly one block of R or of some class, each class covers
    every (t-1)-subset exactly once, and classes are pairwise disjoint."""

    n: int
    t: int
    k: int
    r_blocks: tuple[tuple[int, ...], ...]
    classes: tuple[tuple[tuple[int, ...], ...], ...]


def validate_cover(cover: PartitionedCover) -> None:
    """Check every PartitionedCover invariant; raise CoverInvariantViolated
    with the first violation found."""
    pts = range(cover.n)
    for b in cover.r_blocks:
        if len(set(b)) != cover.k or any(p not in pts for p in b):
            raise CoverInvariantViolated(f"root block {b} is not a {cover.k}-subset")
    seen_class_blocks: set = set()
    for ci, cls in enumerate(cover.classes):
        for b in cls:
            if len(set(b)) != cover.k - 1 or any(p not in pts for p in b):
                raise CoverInvariantViolated(
                    f"class {ci} block {b} is not a {cover.k - 1}-subset"
                )
            key = frozenset(b)
            if key in seen_class_blocks:
                raise CoverInvariantViolated(f"block {b} appears in two classes")
            seen_class_blocks.add(key)
        sub: Counter = Counter()
        for b in cls:
            for s in combinations(sorted(b), cover.t - 1):
                sub[s] += 1
        for s in combinations(pts, cover.t - 1):
            if sub[s] != 1:
                raise CoverInvariantViolated(
                    f"class {ci} covers {s} {sub[s]} times, want exactly once"
                )
    cov: Counter = Counter()
    for b in cover.r_blocks:
        for s in combinations(sorted(b), cover.t):
            cov[s] += 1
    for cls in cover.classes:
        for b in cls:
            for s in combinations(sorted(b), cover.t):
                cov[s] += 1
    for s in combinations(pts, cover.t):
        if cov[s] != 1:
            raise CoverInvariantViolated(
                f"{cover.t}-subset {s} covered {cov[s]} times, want exactly once"
            )


def base_system(k: int) -> PartitionedCover:
    """Cover on Z_k x Z_{k-1} (flattened): R holds the k-1 cross-sections
    {(0,j)..(k-1,j)}; class 0 holds the k columns {i} x Z_{k-1}; classes
    1..k-1 come from the non-constant rows of OA(2, k, k) grouped by
    multiplier, each row contributing its cells with symbol k-1 omitted."""
    if k < 3:
        raise ValueError("k must be >= 3")
    array = oa_square(k)  # raises NotPrimePower for bad k
    w = k - 1

    def flat(i: int, j: int) -> int:
        return i * w + j

    column_class = tuple(tuple(flat(i, j) for j in range(w)) for i in range(k))
    r_blocks = tuple(tuple(flat(i, j) for i in range(k)) for j in range(w))
    classes = [column_class]
    for a in range(1, k):
        cls = []
        for b in range(k):
            row = array.rows[a * k + b]
            cls.append(tuple(sorted(flat(i, row[i]) for i in range(k) if row[i] != w)))
        classes.append(tuple(cls))
    return PartitionedCover(k * w, 2, k, r_blocks, tuple(classes))


def combine_partition(cover: PartitionedCover) -> MixedDesign:
    """MS(t, k, Z_2^n x Z_{r+1}) from a cover with r classes: R blocks kept
    binary; every block of class i (1-based) gets symbol i appended at the
    new last coordinate.  Cover invariants are re-checked first."""
    validate_cover(cover)
    r = len(cover.classes)
    alphabet = MixedAlphabet((2,) * cover.n + (r + 1,))
    blocks = [Codeword(tuple((p, 1) for p in sorted(b))) for b in cover.r_blocks]
    for ci, cls in enumerate(cover.classes, start=1):
        for b in cls:
            blocks.append(
                Codeword(tuple((p, 1) for p in sorted(b)) + ((cover.n, ci),))
            )
    return MixedDesign(
        alphabet,
        cover.t,
        cover.k,
        tuple(blocks),
        meta=f"combined cover n={cover.n} r={r}",
    )


# --------------------------------------------------------------------------
# resolvable designs and the product/replacement construction
# --------------------------------------------------------------------------

def resolvable_affine(q: int) -> tuple[MixedDesign, Resolution]:
    """The affine plane of order q as a resolvable S(2, q, q^2): lines
    y = m*x + c over GF(q) grouped by slope m, then the vertical class.
    Point (x, y) flattens to x*q + y."""
    f = field_create(q)
    blocks: list[Codeword] = []
    classes = []
    for m in range(q):
        cls = []
        for c in range(q):
            cls.append(len(blocks))
            pts = sorted(x * q + f.add(f.mul(m, x), c) for x in range(q))
            blocks.append(Codeword(tuple((p, 1) for p in pts)))
        classes.append(tuple(cls))
    cls = []
    for c in range(q):
        cls.append(len(blocks))
        blocks.append(Codeword(tuple((c * q + y, 1) for y in range(q))))
    classes.append(tuple(cls))
    design = MixedDesign(
        MixedAlphabet((2,) * (q * q)),
        2,
        q,
        tuple(blocks),
        meta=f"affine plane order {q}",
    )
    return design, Resolution(tuple(classes))


@dataclass(frozen=True)
class ReplacePlan:
    """Which parallel classes of the resolvable design get the orthogonal-
    array replacement system instead of the base system (True = replace)."""

    flags: tuple[bool, ...]

    @classmethod
    def first(cls, num_classes: int, i: int) -> "ReplacePlan":
        if not 0 <= i <= num_classes:
            raise ValueError(f"need 0 <= i <= {num_classes}, got {i}")
        return cls(tuple(j < i for j in range(num_classes)))

    @property
    def replace_count(self) -> int:
        return sum(self.flags)


def expand_design(
    design: MixedDesign, resolution: Resolution, plan: ReplacePlan
) -> PartitionedCover:
    """Blow up a resolvable S(2, k, n) T to a cover on Z_n x Z_{k-1}.

    Every block X of T carries a sub-design on X x Z_{k-1}: the base system
    of X contributes its k-1 cross-section blocks to R and its k-1 derived
    parallel classes (merged across each class of T), while a replaced X
    contributes the (k-1)^2 transversal blocks of an OA(2, k, k-1) to R.
    The n column blocks {x} x Z_{k-1} form one shared class, so the result
    has r = n - (k-1)*i classes when i classes of T are replaced."""
    k = design.k
    n = design.alphabet.n
    rep = verify_steiner(design, 2, k, n)
    if not rep.ok:
        raise NotResolvable(f"input fails the S(2,{k},{n}) check: {rep.counterexample.detail}")
    rep = verify_resolution(design, resolution)
    if not rep.ok:
        raise NotResolvable(f"input resolution fails: {rep.counterexample.detail}")
    if len(resolution.classes) != (n - 1) // (k - 1):
        raise NotResolvable(
            f"{len(resolution.classes)} classes, expected {(n - 1) // (k - 1)}"
        )
    if len(plan.flags) != len(resolution.classes):
        raise ValueError(
            f"plan covers {len(plan.flags)} classes, design has {len(resolution.classes)}"
        )
    field_create(k)  # k must be a prime power for the base system
    w = k - 1

    def flat(x: int, j: int) -> int:
        return x * w + j

    base = base_system(k) if not all(plan.flags) else None
    replacement = oa_extended(w) if any(plan.flags) else None

    r_blocks: list[tuple[int, ...]] = []
    classes: list[tuple[tuple[int, ...], ...]] = [
        tuple(tuple(flat(x, j) for j in range(w)) for x in range(n))
    ]
    for flag, cls in zip(plan.flags, resolution.classes):
        derived: list[list[tuple[int, ...]]] = [[] for _ in range(w)]
        for bi in cls:
            x_pts = [c for c, _ in design.blocks[bi].support]
            if flag:
                for row in replacement.rows:
                    r_blocks.append(
                        tuple(sorted(flat(x_pts[i], row[i]) for i in range(k)))
                    )
            else:
                for b in base.r_blocks:
                    r_blocks.append(tuple(sorted(flat(x_pts[p // w], p % w) for p in b)))
                for a in range(1, k):
                    for b in base.classes[a]:
                        derived[a - 1].append(
                            tuple(sorted(flat(x_pts[p // w], p % w) for p in b))
                        )
        if not flag:
            classes.extend(tuple(sub) for sub in derived)
    return PartitionedCover(n * w, 2, k, tuple(r_blocks), tuple(classes))


def construct_hybrid_ms(
    design: MixedDesign, resolution: Resolution, plan: ReplacePlan | int
) -> MixedDesign:
    """MS(2, k, Z_2^{(k-1)n} x Z_{n+1-(k-1)i}) from a resolvable S(2, k, n)
    with i of its parallel classes replaced; i = (n-1)/(k-1) replaces all of
    them and yields a Steiner system S(2, k, (k-1)n + 1)."""
    if isinstance(plan, int):
        plan = ReplacePlan.first(len(resolution.classes), plan)
    cover = expand_design(design, resolution, plan)
    out = combine_partition(cover)
    return MixedDesign(
        out.alphabet,
        out.t,
        out.k,
        out.blocks,
        meta=f"hybrid k={design.k} n={design.alphabet.n} replaced={plan.replace_count}",
    )


# --------------------------------------------------------------------------
# large sets <-> group divisible designs with one hole group
# --------------------------------------------------------------------------

def largeset_to_gdd(ls: LargeSet) -> MixedDesign:
    """Fold an LH(n, g, t+1, t) into a GDD(t+1, t+2, ng + h) of type
    g^n h^1, h = g(n - t): blocks of copy j (1-based) get symbol j at a new
    hole coordinate appended after the n group coordinates."""
    if ls.k != ls.t + 1:
        raise TypeMismatch(f"need block size t+1, got k={ls.k} t={ls.t}")
    if ls.lam != 1:
        raise TypeMismatch(f"transform needs multiplicity 1, got {ls.lam}")
    sizes = set(ls.alphabet.sizes)
    if len(sizes) != 1:
        raise TypeMismatch(f"groups must be uniform, got sizes {ls.alphabet.sizes}")
    n = ls.alphabet.n
    g = ls.alphabet.sizes[0] - 1
    h = g * (n - ls.t)
    if len(ls.copies) != h:
        raise CopyCountMismatch(f"{len(ls.copies)} copies, want g(n-t) = {h}")
    rep = verify_large_set(ls)
    if not rep.ok:
        raise LargeSetInvalid(
            f"input fails the large-set check: {rep.counterexample.detail}", report=rep
        )
    alphabet = MixedAlphabet(ls.alphabet.sizes + (h + 1,))
    blocks = [
        Codeword(b.support + ((n, j),))
        for j, copy in enumerate(ls.copies, start=1)
        for b in copy
    ]
    return MixedDesign(
        alphabet,
        ls.t + 1,
        ls.k + 1,
        tuple(blocks),
        meta=f"large set folded at hole coordinate {n}",
    )


def gdd_to_largeset(design: MixedDesign, hole_coordinate: int | None = None) -> LargeSet:
    """Slice a GDD(t+1, t+2, ng + h) of type g^n h^1 back into the large set
    LH(n, g, t+1, t): copy j collects the blocks holding symbol j at the hole
    coordinate (default: the last one), with the hole removed and coordinates
    re-indexed.  The result is re-verified."""
    if design.k != design.t + 1:
        raise TypeMismatch(f"need block size t+1, got k={design.k} t={design.t}")
    hole = design.alphabet.n - 1 if hole_coordinate is None else hole_coordinate
    if not 0 <= hole < design.alphabet.n:
        raise TypeMismatch(f"hole coordinate {hole} out of range")
    group_sizes = [s for c, s in enumerate(design.alphabet.sizes) if c != hole]
    if len(set(group_sizes)) != 1:
        raise TypeMismatch(
            f"non-hole groups must be uniform, got sizes {tuple(group_sizes)}"
        )
    t = design.t - 1
    n = design.alphabet.n - 1
    g = group_sizes[0] - 1
    h = design.alphabet.sizes[hole] - 1
    if h != g * (n - t):
        raise TypeMismatch(f"hole has {h} points, want g(n-t) = {g * (n - t)}")
    copies: list[list[Codeword]] = [[] for _ in range(h)]
    for b in design.blocks:
        j = b.symbol(hole)
        if j == 0:
            raise TypeMismatch(f"block {b.support} does not meet the hole coordinate {hole}")
        support = tuple(
            (c if c < hole else c - 1, s) for c, s in b.support if c != hole
        )
        copies[j - 1].append(Codeword(support))
    ls = LargeSet(
        MixedAlphabet(tuple(group_sizes)), t, design.k - 1,
        tuple(tuple(c) for c in copies),
    )
    rep = verify_large_set(ls)
    if not rep.ok:
        raise LargeSetInvalid(
            f"sliced copies fail the large-set check: {rep.counterexample.detail}",
            report=rep,
        )
    return ls


# --------------------------------------------------------------------------
# parameter catalog of GDDs obtainable from known large sets
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class CatalogRecord:
    """One GDD(t, t+1, n*g + m) of type g^n m^1 derivable from a known large
    set, with an existence flag: 'exists', 'possible-exception' (open cases
    of the source family), or 'not-exists' (the iff condition fails)."""

    t: int
    k: int
    group_size: int
    group_count: int
    hole_size: int
    existence: str
    source: str

    @property
    def gdd_type(self) -> GddType:
        return GddType(((self.group_size, self.group_count), (self.hole_size, 1)))

    @property
    def points(self) -> int:
        return self.group_size * self.group_count + self.hole_size

    def describe(self) -> str:
        return (
            f"GDD({self.t},{self.k},{self.points}) type {self.gdd_type} "
            f"[{self.existence}] from {self.source}"
        )


_LS456_EXCEPTIONS = {3, 5, 7, 9, 11, 13}


def gdd_catalog(g_values=range(2, 14), h_values=range(1, 5), ell_values=range(1, 4)):
    """Parameter records of GDDs of type g^n (g(n-t))^1 derived from the
    known large-set families LH(n, g, t+1, t).  Ranges feed the families that
    scale with a group size g, a factor h, or an exponent ell."""
    records: list[CatalogRecord] = []
    for g in g_values:
        if g < 2:
            raise ValueError("g must be >= 2")
        records.append(CatalogRecord(4, 5, g, 10, 7 * g, "exists", f"LH(10,{g},4,3)"))
        flag = "possible-exception" if g in _LS456_EXCEPTIONS else "exists"
        records.append(CatalogRecord(5, 6, g, 11, 7 * g, flag, f"LH(11,{g},5,4)"))
        records.append(CatalogRecord(6, 7, g, 12, 7 * g, flag, f"LH(12,{g},6,5)"))
        records.append(
            CatalogRecord(
                4, 5, g, 7, 4 * g,
                "exists" if g % 2 == 0 else "not-exists",
                f"LH(7,{g},4,3) iff g even",
            )
        )
        records.append(
            CatalogRecord(
                4, 5, g, 6, 3 * g,
                "exists" if g % 3 == 0 else "not-exists",
                f"LH(6,{g},4,3) iff 3 | g",
            )
        )
    records.append(CatalogRecord(4, 5, 720, 14, 11 * 720, "exists", "LH(14,720,4,3)"))
    for h in h_values:
        if h < 1:
            raise ValueError("h must be >= 1")
        records.append(CatalogRecord(4, 5, 4 * h, 5, 8 * h, "exists", f"LH(5,{4 * h},4,3)"))
        records.append(
            CatalogRecord(4, 5, 9 * h, 20, 17 * 9 * h, "exists", f"LH(20,{9 * h},4,3)")
        )
        for ell in ell_values:
            if ell < 1:
                raise ValueError("ell must be >= 1")
            n = 5 * 2**ell
            records.append(
                CatalogRecord(
                    4, 5, 9 * h, n, (n - 3) * 9 * h, "exists", f"LH({n},{9 * h},4,3)"
                )
            )
    return records
