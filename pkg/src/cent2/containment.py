"""Containment between the two halves of the centralizer description.

For the reduction of B = [[e,f],[g,h]] mod k:

* the reduced base-ring span already exhausts the centralizer exactly
  when B is scalar or the defect gcd(e-h, f, g, k) is trivial and every
  entry pair leaves the third entry invertible modulo the pair's common
  divisor with k (over our Euclidean rings the extra pair clause follows
  from the trivial defect, but it is kept explicit and checked);
* the ideal grid exhausts the centralizer exactly when f and g both
  reduce to zero;
* the two halves coincide exactly when additionally e-h reduces to
  zero or to an invertible element.

Every predicate here is validated elsewhere against set-level brute
force; a disagreement is a release blocker.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .matrices import Mat2, is_scalar
from .quotient import QuotientContext, Residue, is_invertible
from .ufd import UfdElement, divides, gcd


_PAIRS = (
    (("e-h", "g"), "f"),
    (("e-h", "f"), "g"),
    (("f", "g"), "e-h"),
)


def _parts(b: Mat2) -> dict[str, UfdElement]:
    return {"e-h": b.e - b.h, "f": b.f, "g": b.g}


def _lifted(b: Mat2) -> Mat2:
    if isinstance(b.e, Residue):
        return b.map(lambda r: r.rep)
    return b


def cen_equals_theta(ctx: QuotientContext, b: Mat2) -> bool:
    """Does the reduced base-ring centralizer give everything?

    True iff B is scalar, or the defect is a unit and for each entry
    pair (x, y) with a nontrivial delta = gcd(x, y, k) the remaining
    entry is invertible mod delta (tested as gcd(entry, delta) = 1).
    """
    b = _lifted(b)
    # Scalar over the base ring, not merely scalar mod k: the base-ring
    # centralizer (and hence its image) depends on the chosen lift.
    if is_scalar(b):
        return True
    k = ctx.modulus
    parts = _parts(b)
    if not gcd(parts["e-h"], parts["f"], parts["g"], k).is_unit():
        return False
    for (x, y), third in _PAIRS:
        delta = gcd(parts[x], parts[y], k)
        if delta.is_unit():
            continue
        if not gcd(parts[third], delta).is_unit():
            return False
    return True


def cen_equals_s2(ctx: QuotientContext, b: Mat2) -> bool:
    """Does the ideal grid give everything? True iff f and g vanish mod k."""
    b = _lifted(b)
    return divides(ctx.modulus, b.f) and divides(ctx.modulus, b.g)


def s1_equals_s2(ctx: QuotientContext, b: Mat2) -> bool:
    """Do the two halves coincide? Needs f = g = 0 mod k and e-h either
    zero or invertible mod k."""
    if not cen_equals_s2(ctx, b):
        return False
    b = _lifted(b)
    diff = ctx.reduce(b.e - b.h)
    return diff.is_zero() or is_invertible(diff)


def sufficient_invertible(ctx: QuotientContext, b: Mat2) -> bool:
    """Fast sufficient test: any of e-h, f, g invertible mod k forces the
    reduced base-ring centralizer to be everything."""
    b = _lifted(b)
    return any(
        is_invertible(ctx.reduce(x)) for x in (b.e - b.h, b.f, b.g)
    )


@dataclass(frozen=True)
class PrimeDiagnostic:
    """Why a particular prime power of k blocks the base-ring image from
    covering the centralizer."""

    prime: str
    exponent: int
    condition: str  # "divides-all" or "pair"
    pair: Optional[tuple[str, str]] = None
    blocking: Optional[str] = None

    def to_json(self) -> dict:
        out = {"prime": self.prime, "exponent": self.exponent, "condition": self.condition}
        if self.pair is not None:
            out["pair"] = list(self.pair)
        if self.blocking is not None:
            out["blocking"] = self.blocking
        return out


@dataclass
class ContainmentReport:
    s2_subset_s1: bool
    s1_subset_s2: bool
    s1_equals_s2: bool
    defect: UfdElement
    diagnostics: list[PrimeDiagnostic] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "s2_in_s1": self.s2_subset_s1,
            "s1_in_s2": self.s1_subset_s2,
            "equal": self.s1_equals_s2,
            "defect": str(self.defect),
            "diagnostics": [d.to_json() for d in self.diagnostics],
        }


def report(ctx: QuotientContext, b: Mat2) -> ContainmentReport:
    """All three containment answers plus per-prime diagnostics for any
    prime power of k that blocks the base-ring image."""
    b = _lifted(b)
    parts = _parts(b)
    k = ctx.modulus
    d = gcd(parts["e-h"], parts["f"], parts["g"], k)
    diags: list[PrimeDiagnostic] = []
    if not cen_equals_theta(ctx, b):
        for prime, exp in ctx.factorization.factors:
            if all(divides(prime, parts[name]) for name in ("e-h", "f", "g")):
                diags.append(
                    PrimeDiagnostic(str(prime), exp, "divides-all")
                )
                continue
            for (x, y), third in _PAIRS:
                delta = gcd(parts[x], parts[y], k)
                if (
                    not delta.is_unit()
                    and divides(prime, delta)
                    and not gcd(parts[third], delta).is_unit()
                ):
                    diags.append(
                        PrimeDiagnostic(str(prime), exp, "pair", (x, y), third)
                    )
                    break
    return ContainmentReport(
        s2_subset_s1=cen_equals_theta(ctx, b),
        s1_subset_s2=cen_equals_s2(ctx, b),
        s1_equals_s2=s1_equals_s2(ctx, b),
        defect=d,
        diagnostics=diags,
    )
