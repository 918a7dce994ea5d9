"""Independent ground truth for everything the fast paths compute.

The centerpiece is naive centralizer enumeration: walk every candidate
matrix and keep the ones that commute. Candidates are handled as packed
integer codes over the context's element enumeration, with ring
operations done through index tables, so exhaustive sweeps stay cheap
without changing what is being checked.

Enumeration budgets are explicit; exceeding one raises BudgetError
naming the required budget rather than silently truncating. Work is
partitioned into contiguous index blocks whose merge is order
independent.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

import numpy as np

from .matrices import Mat2, MatN, reduce_mat
from .quotient import (
    PrincipalIdeal,
    QuotientContext,
    Residue,
    annihilator,
    make_context,
)
from .ufd import IntElem, gcd

DEFAULT_BUDGET = 500_000_000
_BLOCK = 1 << 21


class BudgetError(RuntimeError):
    """An enumeration would exceed its budget; nothing was computed."""

    def __init__(self, what: str, required: int, budget: int):
        super().__init__(
            f"{what} needs a budget of {required}, limit is {budget}; "
            f"raise the budget to proceed"
        )
        self.required = required
        self.budget = budget


# ---------------------------------------------------------------------------
# packed 2x2 matrix sets


def encode_mat2(ctx: QuotientContext, m: Mat2) -> int:
    n = ctx.cardinality
    idx = ctx.element_index
    return ((idx[m.e.rep] * n + idx[m.f.rep]) * n + idx[m.g.rep]) * n + idx[m.h.rep]


def decode_mat2(ctx: QuotientContext, code: int) -> Mat2:
    n = ctx.cardinality
    code, hh = divmod(code, n)
    code, gg = divmod(code, n)
    ee, ff = divmod(code, n)
    return Mat2(
        ctx.residue_at(ee), ctx.residue_at(ff), ctx.residue_at(gg), ctx.residue_at(hh)
    )


def _split_codes(codes: np.ndarray, n: int):
    d = codes % n
    rest = codes // n
    c = rest % n
    rest //= n
    b = rest % n
    a = rest // n
    return a, b, c, d


def _pack(a, b, c, d, n: int):
    return ((a * n + b) * n + c) * n + d


class MatrixSet:
    """A sorted, deduplicated set of 2x2 matrices over one context."""

    __slots__ = ("ctx", "codes")

    def __init__(self, ctx: QuotientContext, codes: np.ndarray, *, presorted=False):
        self.ctx = ctx
        if presorted:
            self.codes = codes
        else:
            self.codes = np.unique(np.asarray(codes, dtype=np.int64))

    @classmethod
    def from_matrices(cls, ctx: QuotientContext, mats) -> "MatrixSet":
        return cls(ctx, np.fromiter(
            (encode_mat2(ctx, m) for m in mats), dtype=np.int64
        ))

    @property
    def count(self) -> int:
        return int(self.codes.size)

    def __len__(self):
        return self.count

    def __contains__(self, m: Mat2) -> bool:
        code = encode_mat2(self.ctx, m)
        i = np.searchsorted(self.codes, code)
        return i < self.codes.size and self.codes[i] == code

    def matrices(self) -> Iterator[Mat2]:
        for code in self.codes:
            yield decode_mat2(self.ctx, int(code))

    def issubset(self, other: "MatrixSet") -> bool:
        if self.ctx != other.ctx:
            raise TypeError("matrix sets over different rings")
        if self.codes.size == 0:
            return True
        pos = np.searchsorted(other.codes, self.codes)
        ok = pos < other.codes.size
        if not ok.all():
            return False
        return bool((other.codes[pos] == self.codes).all())

    def __eq__(self, other):
        return (
            isinstance(other, MatrixSet)
            and self.ctx == other.ctx
            and np.array_equal(self.codes, other.codes)
        )

    def difference(self, other: "MatrixSet") -> np.ndarray:
        return np.setdiff1d(self.codes, other.codes, assume_unique=True)

    def transpose_set(self) -> "MatrixSet":
        n = self.ctx.cardinality
        a, b, c, d = _split_codes(self.codes, n)
        return MatrixSet(self.ctx, _pack(a, c, b, d, n))

    def __repr__(self):
        return f"MatrixSet({self.count} matrices over {self.ctx.spec()})"


# ---------------------------------------------------------------------------
# naive centralizer enumeration


def brute_force_cen(
    ctx: QuotientContext, bhat: Mat2, cap: int = DEFAULT_BUDGET
) -> MatrixSet:
    """All matrices commuting with bhat, by checking every candidate."""
    n = ctx.cardinality
    total = n**4
    if total > cap:
        raise BudgetError(f"centralizer enumeration over {ctx.spec()}", total, cap)
    t = ctx.op_tables
    idx = ctx.element_index
    e, f = idx[bhat.e.rep], idx[bhat.f.rep]
    g, h = idx[bhat.g.rep], idx[bhat.h.rep]
    add, mul = t.add, t.mul
    kept = []
    for start in range(0, total, _BLOCK):
        codes = np.arange(start, min(start + _BLOCK, total), dtype=np.int64)
        a, b, c, d = _split_codes(codes, n)
        mask = (
            (add[mul[a, e], mul[b, g]] == add[mul[a, e], mul[c, f]])
            & (add[mul[a, f], mul[b, h]] == add[mul[b, e], mul[d, f]])
            & (add[mul[c, e], mul[d, g]] == add[mul[a, g], mul[c, h]])
            & (add[mul[c, f], mul[d, h]] == add[mul[b, g], mul[d, h]])
        )
        kept.append(codes[mask])
    return MatrixSet(ctx, np.concatenate(kept), presorted=True)


# ---------------------------------------------------------------------------
# sums of a matrix set with an ideal box


def _ideal_member_indices(ideal: PrincipalIdeal) -> np.ndarray:
    ctx = ideal.ctx
    return np.array(
        sorted(ctx.index_of(r) for r in ideal.members()), dtype=np.int64
    )


def _box_codes(ctx: QuotientContext, ideals) -> np.ndarray:
    """Packed codes of every matrix whose entries run over the four ideals."""
    n = ctx.cardinality
    (i11, i12), (i21, i22) = ideals
    m11 = _ideal_member_indices(i11)
    m12 = _ideal_member_indices(i12)
    m21 = _ideal_member_indices(i21)
    m22 = _ideal_member_indices(i22)
    part = (m11[:, None] * n + m12[None, :]).ravel()
    part = (part[:, None] * n + m21[None, :]).ravel()
    return (part[:, None] * n + m22[None, :]).ravel()


def ideal_box_set(
    ctx: QuotientContext, ideals, budget: int = DEFAULT_BUDGET
) -> MatrixSet:
    """The set of matrices whose entries run over the four ideals."""
    (i11, i12), (i21, i22) = ideals
    size = i11.cardinality * i12.cardinality * i21.cardinality * i22.cardinality
    if size > budget:
        raise BudgetError("ideal box materialization", size, budget)
    return MatrixSet(ctx, _box_codes(ctx, ideals))


def sumset(s1: MatrixSet, ideals, budget: int = DEFAULT_BUDGET) -> MatrixSet:
    """{A + C : A in s1, C in the ideal box}, materialized and deduplicated."""
    ctx = s1.ctx
    n = ctx.cardinality
    (i11, i12), (i21, i22) = ideals
    box_size = i11.cardinality * i12.cardinality * i21.cardinality * i22.cardinality
    pairs = s1.count * box_size
    if pairs > budget:
        raise BudgetError("sumset materialization", pairs, budget)
    box = _box_codes(ctx, ideals)
    a2, b2, c2, d2 = _split_codes(box, n)
    a1, b1, c1, d1 = _split_codes(s1.codes, n)
    add = ctx.op_tables.add
    chunk = max(1, _BLOCK // max(1, box.size))
    uniques = []
    for start in range(0, s1.count, chunk):
        sl = slice(start, start + chunk)
        sa = add[a1[sl][:, None], a2[None, :]]
        sb = add[b1[sl][:, None], b2[None, :]]
        sc = add[c1[sl][:, None], c2[None, :]]
        sd = add[d1[sl][:, None], d2[None, :]]
        uniques.append(np.unique(_pack(sa, sb, sc, sd, n).ravel()))
    return MatrixSet(ctx, np.concatenate(uniques) if uniques else np.empty(0, np.int64))


def _coset_key_table(ideal: PrincipalIdeal) -> np.ndarray:
    """Maps each element index to an id of its coset modulo the ideal."""
    ctx = ideal.ctx
    n = ctx.cardinality
    if ideal.is_whole_ring():
        return np.zeros(n, dtype=np.int64)
    sub = make_context(ideal.stride)
    keys: dict = {}
    table = np.empty(n, dtype=np.int64)
    for i, e in enumerate(ctx.elements):
        key = sub.reduce_elem(e)
        table[i] = keys.setdefault(key, len(keys))
    return table


def sumset_count(s1: MatrixSet, ideals) -> int:
    """|s1 + ideal box| without materializing the sums.

    The box is a product of ideal cosets, so distinct coset signatures of
    s1 elements give disjoint translates of the box; the count is the
    number of signatures times the box size (box sizes measured by
    enumerating the ideals, not by any formula).
    """
    ctx = s1.ctx
    n = ctx.cardinality
    (i11, i12), (i21, i22) = ideals
    t11 = _coset_key_table(i11)
    t12 = _coset_key_table(i12)
    t21 = _coset_key_table(i21)
    t22 = _coset_key_table(i22)
    a, b, c, d = _split_codes(s1.codes, n)
    sig = _pack(t11[a], t12[b], t21[c], t22[d], n)
    boxes = int(np.unique(sig).size)
    box_size = 1
    for ideal in (i11, i12, i21, i22):
        box_size *= len(ideal.members())
    return boxes * box_size


# ---------------------------------------------------------------------------
# integer lattices: Hermite form, kernels, commutant bases


def hnf_rows(rows: Sequence[Sequence[int]]) -> list[list[int]]:
    """Canonical row Hermite form of the lattice spanned by the rows.

    Pivots are positive, entries above a pivot are reduced into
    [0, pivot), zero rows are dropped.
    """
    mat = [list(map(int, r)) for r in rows]
    if not mat:
        return []
    reduced, rank = _echelon(mat, len(mat[0]))
    out = reduced[:rank]
    # reduce above each pivot, walking pivots left to right so earlier
    # columns stay reduced
    for r in range(rank):
        c = next(j for j, v in enumerate(out[r]) if v != 0)
        for i in range(r):
            q = out[i][c] // out[r][c]
            if q:
                out[i] = [x - q * y for x, y in zip(out[i], out[r])]
    return out


def _echelon(mat: list[list[int]], pivot_width: int) -> tuple[list[list[int]], int]:
    """Forward Euclidean elimination using only the first pivot_width
    columns for pivots; returns (matrix, rank)."""
    m = len(mat)
    r = 0
    for c in range(pivot_width):
        while True:
            nz = [i for i in range(r, m) if mat[i][c] != 0]
            if not nz:
                break
            i0 = min(nz, key=lambda i: abs(mat[i][c]))
            mat[r], mat[i0] = mat[i0], mat[r]
            finished = True
            for i in range(r + 1, m):
                if mat[i][c] != 0:
                    q = mat[i][c] // mat[r][c]
                    mat[i] = [x - q * y for x, y in zip(mat[i], mat[r])]
                    if mat[i][c] != 0:
                        finished = False
            if finished:
                break
        if r < m and mat[r][c] != 0:
            if mat[r][c] < 0:
                mat[r] = [-x for x in mat[r]]
            r += 1
            if r == m:
                break
    return mat, r


def integer_kernel(columns_map: Sequence[Sequence[int]]) -> list[list[int]]:
    """Basis of {x : M x = 0} over Z, M given as a list of rows.

    Uses the classic trick: eliminate [M^T | I] on the left block; rows
    whose left block vanishes carry a kernel basis on the right.
    """
    rows = len(columns_map)
    cols = len(columns_map[0]) if rows else 0
    aug = []
    for j in range(cols):
        aug.append([columns_map[i][j] for i in range(rows)] + [
            1 if t == j else 0 for t in range(cols)
        ])
    reduced, rank = _echelon(aug, rows)
    kernel = [row[rows:] for row in reduced[rank:]]
    return hnf_rows(kernel) if kernel else []


@dataclass(frozen=True)
class IntKernelBasis:
    """Basis of the lattice of integer matrices commuting with B."""

    n: int
    basis: tuple[MatN, ...]

    @property
    def rank(self) -> int:
        return len(self.basis)

    def vectors(self) -> list[list[int]]:
        return [
            [x.value for row in m.rows for x in row] for m in self.basis
        ]


def int_commutant_basis(b: MatN) -> IntKernelBasis:
    """Hermite-form basis of {X : BX = XB} over the integers.

    The commutator map is linear on the n^2 matrix entries; its integer
    kernel is computed exactly.
    """
    if isinstance(b, Mat2):
        b = MatN([[b.e, b.f], [b.g, b.h]])
    n = b.n
    if n > 4:
        raise ValueError("commutant bases are supported for n <= 4")
    bb = [[x.value for x in row] for row in b.rows]
    size = n * n
    mat = [[0] * size for _ in range(size)]
    for u in range(n):
        for v in range(n):
            col = u * n + v
            for i in range(n):
                for j in range(n):
                    val = 0
                    if j == v:
                        val += bb[i][u]
                    if i == u:
                        val -= bb[v][j]
                    mat[i * n + j][col] = val
    kernel = integer_kernel(mat)
    mats = tuple(
        MatN([[IntElem(vec[i * n + j]) for j in range(n)] for i in range(n)])
        for vec in kernel
    )
    return IntKernelBasis(n, mats)


def in_lattice(basis_vectors: Sequence[Sequence[int]], vec: Sequence[int]) -> bool:
    """Membership of an integer vector in the lattice spanned by the rows."""
    rows = hnf_rows(basis_vectors)
    v = list(map(int, vec))
    for row in rows:
        c = next(j for j, x in enumerate(row) if x != 0)
        if v[c] % row[c] != 0:
            return False
        q = v[c] // row[c]
        if q:
            v = [x - q * y for x, y in zip(v, row)]
    return all(x == 0 for x in v)


# ---------------------------------------------------------------------------
# n x n inclusion check


def _pack_digits(digits: list[np.ndarray], radix: int) -> np.ndarray:
    out = digits[0].astype(np.int64)
    for d in digits[1:]:
        out = out * radix + d
    return out


def _split_flat(codes: np.ndarray, radix: int, places: int) -> list[np.ndarray]:
    out = []
    rest = codes
    for _ in range(places):
        out.append(rest % radix)
        rest = rest // radix
    out.reverse()
    return out


def _additive_closure(
    ctx: QuotientContext, generators: list[list[int]], places: int
) -> np.ndarray:
    """Packed codes of the additive span of the given digit vectors."""
    add = ctx.op_tables.add
    n = ctx.cardinality
    span = np.zeros(1, dtype=np.int64)
    for gen in generators:
        while True:
            digits = _split_flat(span, n, places)
            shifted = [add[dig, g] for dig, g in zip(digits, gen)]
            merged = np.unique(
                np.concatenate([span, _pack_digits(shifted, n)])
            )
            if merged.size == span.size:
                break
            span = merged
    return span


@dataclass(frozen=True)
class Prop14Report:
    inclusion_holds: bool
    strict: bool
    witness: Optional[MatN]
    lhs_size: int
    rhs_size: int


def annihilator_grid(ctx: QuotientContext, b: MatN) -> list[list[PrincipalIdeal]]:
    """The n x n grid of annihilator-intersection ideals attached to B.

    Entry (i, j) annihilates the off-diagonal row j and column i entries
    of B together with the diagonal difference b_ii - b_jj.
    """
    n = b.n
    grid = []
    for i in range(n):
        row = []
        for j in range(n):
            elems = [b.rows[j][t] for t in range(n) if t != j]
            elems += [b.rows[t][i] for t in range(n) if t != i]
            elems.append(b.rows[i][i] - b.rows[j][j])
            row.append(annihilator(ctx.reduce(gcd(*elems))))
        grid.append(row)
    return grid


def prop14_check(
    b: MatN, ctx: QuotientContext, budget: int = DEFAULT_BUDGET
) -> Prop14Report:
    """Check that the reduced integer commutant plus the annihilator grid
    sits inside the centralizer of the reduced matrix, and report
    whether the inclusion is strict."""
    if isinstance(b, Mat2):
        b = MatN([[b.e, b.f], [b.g, b.h]])
    n = b.n
    places = n * n
    size = ctx.cardinality
    total = size**places
    if total > budget:
        raise BudgetError(f"{n}x{n} enumeration over {ctx.spec()}", total, budget)

    idx = ctx.element_index

    # left side: additive span of the reduced commutant basis and of the
    # ideal-grid generators
    gens: list[list[int]] = []
    for mat in int_commutant_basis(b).basis:
        red = reduce_mat(ctx, mat)
        gens.append([idx[red.rows[i][j].rep] for i in range(n) for j in range(n)])
    grid = annihilator_grid(ctx, b)
    zero = idx[ctx.zero.rep]
    for i in range(n):
        for j in range(n):
            ideal = grid[i][j]
            if ideal.is_zero_ideal():
                continue
            for beta in ctx.additive_generators:
                vec = [zero] * places
                vec[i * n + j] = idx[(ideal.generator * beta).rep]
                gens.append(vec)
    lhs = _additive_closure(ctx, gens, places)

    # right side: every matrix commuting with the reduction of b
    bidx = [[idx[ctx.reduce_elem(x)] for x in row] for row in b.rows]
    add, mul = ctx.op_tables.add, ctx.op_tables.mul
    kept = []
    for start in range(0, total, _BLOCK):
        codes = np.arange(start, min(start + _BLOCK, total), dtype=np.int64)
        digits = _split_flat(codes, size, places)
        x = [digits[i * n : (i + 1) * n] for i in range(n)]
        ok = np.ones(codes.size, dtype=bool)
        for i in range(n):
            for j in range(n):
                xb = mul[x[i][0], bidx[0][j]]
                bx = mul[x[0][j], bidx[i][0]]
                for t in range(1, n):
                    xb = add[xb, mul[x[i][t], bidx[t][j]]]
                    bx = add[bx, mul[x[t][j], bidx[i][t]]]
                ok &= xb == bx
        kept.append(codes[ok])
    rhs = np.concatenate(kept)

    missing = np.setdiff1d(lhs, rhs, assume_unique=True)
    inclusion = missing.size == 0
    extra = np.setdiff1d(rhs, lhs, assume_unique=True)
    witness = None
    if inclusion and extra.size:
        digits = _split_flat(extra[:1], size, places)
        witness = MatN(
            [
                [ctx.residue_at(int(digits[i * n + j][0])) for j in range(n)]
                for i in range(n)
            ]
        )
    return Prop14Report(
        inclusion_holds=bool(inclusion),
        strict=bool(inclusion and extra.size),
        witness=witness,
        lhs_size=int(lhs.size),
        rhs_size=int(rhs.size),
    )


def transpose_check(ctx: QuotientContext, bhat: Mat2, cap: int = DEFAULT_BUDGET) -> bool:
    """Centralizer of the transpose == transpose of the centralizer."""
    lhs = brute_force_cen(ctx, bhat.transpose(), cap)
    rhs = brute_force_cen(ctx, bhat, cap).transpose_set()
    return lhs == rhs
