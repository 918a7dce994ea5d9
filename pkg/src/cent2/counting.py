"""Exact centralizer cardinalities over finite quotient rings.

Everything funnels through the defect d = gcd(e-h, f, g, k) of the
lifted matrix: the centralizer of the reduction has exactly

    |R/<k/d>|^2 * |<(k/d)~> in R/<k>|^4

elements, which for R = Z collapses to (k*d)^2. The ideal size
|<g>| is computed as |R/<k>| / |R/<gcd(g,k)>|; the enumeration oracle
cross-checks that index formula elsewhere since it is a design choice,
not part of the statement.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .matrices import Mat2, MatN, reduce_mat
from .quotient import (
    PrincipalIdeal,
    QuotientContext,
    Residue,
    make_context,
    principal_ideal,
    quotient_size,
)
from .ufd import UfdElement, exact_div, gcd, normalize_associate, unit_inverse, xgcd


def defect(b: Mat2, k: UfdElement) -> UfdElement:
    """gcd(e-h, f, g, k), as a canonical associate; divides k."""
    return gcd(b.e - b.h, b.f, b.g, k)


def count(ctx: QuotientContext, b: Mat2) -> int:
    """|Cen(b mod k)| for a lift b over the base ring."""
    k = ctx.modulus
    d = defect(b, k)
    k_over_d = normalize_associate(exact_div(k, d))[1]
    if k_over_d.is_unit():
        # b reduces to a scalar matrix; its centralizer is everything.
        return ctx.cardinality**4
    reduced_size = quotient_size(k_over_d)
    ideal_size = ctx.cardinality // reduced_size
    return reduced_size**2 * ideal_size**4


def count_zk(b: Mat2, k: int) -> int:
    """Integer-ring shortcut (k*d)^2; must agree with count()."""
    from .ufd import IntElem

    d = defect(b, IntElem(k))
    return (k * d.value) ** 2


def coprime_count_check(ctx: QuotientContext, b: Mat2) -> int:
    """|Cen| = |R/<k>|^2 whenever the defect is trivial."""
    if not defect(b, ctx.modulus).is_unit():
        raise ValueError("defect is not a unit; the square law does not apply")
    return ctx.cardinality**2


@dataclass
class EquivClassStructure:
    """How the centralizer splits into translation classes of the ideal
    <(k/d)~>: equal-size blocks in bijection with the centralizer of the
    divided-out matrix over R/<k/d>."""

    d: UfdElement
    k_over_d: UfdElement
    class_ideal: PrincipalIdeal
    class_size: int
    degenerate: bool
    reduced_ctx: Optional[QuotientContext]
    reduced_matrix: Optional[Mat2]

    def class_count(self, total: int) -> int:
        return total // self.class_size


def equiv_structure(ctx: QuotientContext, b: Mat2) -> EquivClassStructure:
    """Defect, class ideal, class size and the reduced matrix B' =
    [[(e-h)/d, f/d], [g/d, 0]] over R/<k/d>.

    When d is an associate of k the reduction collapses to the trivial
    ring; that case is flagged degenerate (one class holding everything)
    instead of building R/<unit>.
    """
    k = ctx.modulus
    d = defect(b, k)
    k_over_d = normalize_associate(exact_div(k, d))[1]
    class_ideal = principal_ideal(ctx, k_over_d)
    class_size = class_ideal.cardinality**4
    if k_over_d.is_unit():
        return EquivClassStructure(
            d=d,
            k_over_d=k_over_d,
            class_ideal=class_ideal,
            class_size=class_size,
            degenerate=True,
            reduced_ctx=None,
            reduced_matrix=None,
        )
    reduced_ctx = make_context(k_over_d)
    zero = k.zero()
    b_prime = Mat2(
        exact_div(b.e - b.h, d), exact_div(b.f, d), exact_div(b.g, d), zero
    )
    return EquivClassStructure(
        d=d,
        k_over_d=k_over_d,
        class_ideal=class_ideal,
        class_size=class_size,
        degenerate=False,
        reduced_ctx=reduced_ctx,
        reduced_matrix=reduce_mat(reduced_ctx, b_prime),
    )


@dataclass
class CrtDecomposition:
    """R/<k> split along the prime powers of k, with both directions of
    the isomorphism available."""

    ctx: QuotientContext
    factors: tuple[QuotientContext, ...]
    idempotents: tuple[Residue, ...]

    def project_residue(self, r: Residue) -> tuple[Residue, ...]:
        return tuple(f.reduce(r.rep) for f in self.factors)

    def combine_residue(self, parts) -> Residue:
        acc = self.ctx.zero
        for part, e in zip(parts, self.idempotents):
            acc = acc + self.ctx.reduce(part.rep) * e
        return acc

    def project_matrix(self, m: Mat2) -> tuple[Mat2, ...]:
        return tuple(m.map(lambda r: f.reduce(r.rep)) for f in self.factors)

    def combine_matrix(self, parts) -> Mat2:
        mats = [
            p.map(lambda r, e=e: self.ctx.reduce(r.rep) * e)
            for p, e in zip(parts, self.idempotents)
        ]
        acc = mats[0]
        for m in mats[1:]:
            acc = acc + m
        return acc


def crt_decompose(ctx: QuotientContext) -> CrtDecomposition:
    """Split R/<k> as the direct sum over the prime powers of k.

    The backward map uses the idempotent attached to each factor, found
    by an extended gcd of k/p^n against p^n.
    """
    k = ctx.modulus
    fact = ctx.factorization
    prime_powers = []
    for prime, exp in fact.factors:
        q = prime
        for _ in range(exp - 1):
            q = q * prime
        prime_powers.append(normalize_associate(q)[1])
    factors = tuple(make_context(q) for q in prime_powers)
    idempotents = []
    for q in prime_powers:
        rest = exact_div(k, q)
        g, u, _ = xgcd(rest, q)
        if not g.is_unit():
            raise AssertionError("prime power cofactors must be coprime")
        idempotents.append(ctx.reduce(u * unit_inverse(g) * rest))
    return CrtDecomposition(ctx=ctx, factors=factors, idempotents=tuple(idempotents))
