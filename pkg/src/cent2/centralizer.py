"""Structural description of 2x2 centralizers over R and over R/<k>.

Over the base ring, the centralizer of a nonscalar B = [[e,f],[g,h]] is
spanned by the identity together with C = (1/m)[[e-h, f],[g, 0]] where
m = gcd(e-h, f, g); the divisions are exact. Over the quotient, the full
centralizer is the sum of the reduced base-ring span and a matrix of
annihilator-intersection ideals. Both pieces are produced here; the
enumeration oracle checks them from the other side.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import counting
from .matrices import Mat2, identity2, is_scalar, reduce_mat
from .oracle import BudgetError, DEFAULT_BUDGET, MatrixSet, _pack
from .quotient import (
    QuotientContext,
    Residue,
    ann_intersection,
    inverse,
    make_context,
)
from .ufd import IntElem, UfdElement, exact_div, gcd


@dataclass(frozen=True)
class BaseCentralizer:
    """Generators of the centralizer in M_2(R): either the whole matrix
    ring (scalar B) or the two-parameter span {v*E + w*C}."""

    full_ring: bool
    m: Optional[UfdElement] = None
    e_gen: Optional[Mat2] = None
    c_gen: Optional[Mat2] = None


def base_centralizer(b: Mat2) -> BaseCentralizer:
    if is_scalar(b):
        return BaseCentralizer(full_ring=True)
    m = gcd(b.e - b.h, b.f, b.g)
    c = Mat2(
        exact_div(b.e - b.h, m),
        exact_div(b.f, m),
        exact_div(b.g, m),
        (b.e - b.h).zero(),
    )
    return BaseCentralizer(full_ring=False, m=m, e_gen=identity2(b.e), c_gen=c)


def _lift_entries(b: Mat2) -> Mat2:
    if isinstance(b.e, Residue):
        return b.map(lambda r: r.rep)
    return b


def s1_set(ctx: QuotientContext, b: Mat2, budget: int = DEFAULT_BUDGET) -> MatrixSet:
    """The reduced base-ring centralizer {v*E + w*C : v, w in R/<k>},
    materialized and deduplicated (all of M_2 when B is scalar)."""
    b = _lift_entries(b)
    base = base_centralizer(b)
    n = ctx.cardinality
    if base.full_ring:
        total = n**4
        if total > budget:
            raise BudgetError("materializing the full matrix ring", total, budget)
        return MatrixSet(ctx, np.arange(total, dtype=np.int64), presorted=True)
    pairs = n * n
    if pairs > budget:
        raise BudgetError("base-centralizer image materialization", pairs, budget)
    t = ctx.op_tables
    idx = ctx.element_index
    e_hat = reduce_mat(ctx, base.e_gen)
    c_hat = reduce_mat(ctx, base.c_gen)
    v = np.repeat(np.arange(n, dtype=np.int64), n)
    w = np.tile(np.arange(n, dtype=np.int64), n)
    entries = []
    for pos in ("e", "f", "g", "h"):
        ei = idx[getattr(e_hat, pos).rep]
        ci = idx[getattr(c_hat, pos).rep]
        entries.append(t.add[t.mul[v, ei], t.mul[w, ci]])
    return MatrixSet(ctx, _pack(*entries, n))


def s2_ideals(ctx: QuotientContext, b: Mat2):
    """The 2x2 grid of annihilator-intersection ideals: diagonal entries
    ann(f)&ann(g), upper ann(g)&ann(e-h), lower ann(f)&ann(e-h)."""
    b = _lift_entries(b)
    f_hat = ctx.reduce(b.f)
    g_hat = ctx.reduce(b.g)
    diff_hat = ctx.reduce(b.e - b.h)
    diag = ann_intersection(f_hat, g_hat)
    upper = ann_intersection(g_hat, diff_hat)
    lower = ann_intersection(f_hat, diff_hat)
    return ((diag, upper), (lower, diag))


def i_matrix_witness(ctx: QuotientContext, b: Mat2) -> UfdElement:
    """A divisor t of k generating the two-entry ideal <e-h, f> in R/<k>.

    Candidate pairs would be tried in the order (e-h, f), (e-h, g),
    (f, g), but over a Euclidean base ring the two-generated ideal is
    always <gcd(x, y, k)>, so the first pair already answers.
    """
    b = _lift_entries(b)
    return gcd(b.e - b.h, b.f, ctx.modulus)


@dataclass
class CentralizerDescription:
    """Everything the library knows about Cen(B mod k) in one record."""

    ctx: QuotientContext
    b_hat: Mat2
    base: BaseCentralizer
    s1_e: Optional[Mat2]
    s1_c: Optional[Mat2]
    s2: tuple
    witness_t: UfdElement
    defect_d: UfdElement
    cardinality: int

    @property
    def s1_full(self) -> bool:
        return self.base.full_ring

    def to_json(self) -> dict:
        (diag, upper), (lower, _) = self.s2
        return {
            "ring": self.ctx.spec(),
            "k": str(self.ctx.modulus),
            "B": str(self.b_hat),
            "s1": "full"
            if self.s1_full
            else {"E": str(self.s1_e), "C": str(self.s1_c)},
            "s2_generators": [
                [str(diag.generator), str(upper.generator)],
                [str(lower.generator), str(diag.generator)],
            ],
            "witness_t": str(self.witness_t),
            "defect_d": str(self.defect_d),
            "cardinality": self.cardinality,
        }


def describe(ctx: QuotientContext, b: Mat2) -> CentralizerDescription:
    """Assemble the full description from a lift b over the base ring.

    Any lift of the intended residue matrix is accepted: the displayed
    generators depend on the lift but the described set does not.
    """
    b = _lift_entries(b)
    base = base_centralizer(b)
    b_hat = reduce_mat(ctx, b)
    s1_e = s1_c = None
    if not base.full_ring:
        s1_e = reduce_mat(ctx, base.e_gen)
        s1_c = reduce_mat(ctx, base.c_gen)
    return CentralizerDescription(
        ctx=ctx,
        b_hat=b_hat,
        base=base,
        s1_e=s1_e,
        s1_c=s1_c,
        s2=s2_ideals(ctx, b),
        witness_t=i_matrix_witness(ctx, b),
        defect_d=counting.defect(b, ctx.modulus),
        cardinality=counting.count(ctx, b),
    )


# ---------------------------------------------------------------------------
# the field case


@dataclass
class FieldCentralizer:
    """Centralizer over F_p: which of the four shapes applies, plus the
    materialized two-parameter (or full) set."""

    case: int
    ctx: QuotientContext
    matrices: tuple[Mat2, ...]

    @property
    def cardinality(self) -> int:
        return len(self.matrices)


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def field_centralizer(p: int, b: Mat2) -> FieldCentralizer:
    """Classify Cen(B) over F_p.

    Case 1: scalar B, the whole matrix ring. Case 2: distinct diagonal,
    the diagonal matrices. Case 3: f = 0, g != 0, lower-triangular
    two-parameter family. Case 4: f != 0, the generic two-parameter
    family [[a, b], [f^-1 g b, a - f^-1 (e-h) b]].
    """
    if not _is_prime(p):
        raise ValueError(f"{p} is not prime")
    ctx = make_context(IntElem(p))
    b = _lift_entries(b)
    bh = reduce_mat(ctx, b)
    e, f, g, h = bh.e, bh.f, bh.g, bh.h
    diff = e - h
    if f.is_zero() and g.is_zero() and diff.is_zero():
        mats = tuple(
            Mat2(a, bb, c, d)
            for a in ctx.enumerate()
            for bb in ctx.enumerate()
            for c in ctx.enumerate()
            for d in ctx.enumerate()
        )
        return FieldCentralizer(1, ctx, mats)
    if f.is_zero() and g.is_zero():
        mats = tuple(
            Mat2(a, ctx.zero, ctx.zero, d)
            for a in ctx.enumerate()
            for d in ctx.enumerate()
        )
        return FieldCentralizer(2, ctx, mats)
    if f.is_zero():
        ginv = inverse(g)
        mats = tuple(
            Mat2(a, ctx.zero, bb, a - ginv * bb * diff)
            for a in ctx.enumerate()
            for bb in ctx.enumerate()
        )
        return FieldCentralizer(3, ctx, mats)
    finv = inverse(f)
    mats = tuple(
        Mat2(a, bb, finv * g * bb, a - finv * bb * diff)
        for a in ctx.enumerate()
        for bb in ctx.enumerate()
    )
    return FieldCentralizer(4, ctx, mats)
