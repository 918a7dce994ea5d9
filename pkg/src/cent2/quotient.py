"""Finite quotient rings R/<k> over the three supported base rings.

A QuotientContext fixes the modulus and owns the canonical-representative
machinery:

* integers reduce into [0, k),
* Gaussian integers reduce into the fundamental box of the Hermite normal
  form of the lattice generated by k and k*i inside Z^2,
* polynomials reduce to remainders of degree < deg k.

Residues are plain immutable values bound to their context; contexts are
immutable after construction and safe to share.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterator

import numpy as np

from .ufd import (
    Factorization,
    GaussElem,
    IntElem,
    ParseError,
    PolyElem,
    UfdElement,
    divides,
    exact_div,
    factor,
    gcd,
    normalize_associate,
    parse_gauss_elem,
    parse_int_elem,
    parse_poly_elem,
    unit_inverse,
    xgcd,
)


def quotient_size(k: UfdElement) -> int:
    """|R/<k>| for nonzero k (1 when k is a unit)."""
    if k.is_zero():
        raise ValueError("quotient by zero is not finite")
    if isinstance(k, IntElem):
        return abs(k.value)
    if isinstance(k, GaussElem):
        return k.norm()
    if isinstance(k, PolyElem):
        return k.p ** k.degree()
    raise TypeError(f"unsupported element {k!r}")


class QuotientContext:
    """The finite ring R/<k>; construct via make_context."""

    def __init__(self, k: UfdElement):
        if k.is_zero():
            raise ValueError("modulus must be nonzero")
        if k.is_unit():
            raise ValueError("modulus must not be a unit")
        _, self.modulus = normalize_associate(k)
        self.cardinality = quotient_size(self.modulus)
        if isinstance(self.modulus, GaussElem):
            self._hnf = _gauss_lattice_box(self.modulus)
        if isinstance(self.modulus, IntElem):
            self.kind = "int"
        elif isinstance(self.modulus, GaussElem):
            self.kind = "gauss"
        else:
            self.kind = "poly"

    # value semantics ------------------------------------------------------

    def __eq__(self, other):
        return isinstance(other, QuotientContext) and self.modulus == other.modulus

    def __hash__(self):
        return hash(("QuotientContext", self.modulus))

    def __repr__(self):
        return f"QuotientContext({self.spec()})"

    def spec(self) -> str:
        """The ring in the CLI's ring-spec notation."""
        if self.kind == "poly":
            return f"poly/{self.modulus.p}/{self.modulus}"
        return f"{self.kind}/{self.modulus}"

    @cached_property
    def factorization(self) -> Factorization:
        return factor(self.modulus)

    # representatives --------------------------------------------------------

    def reduce_elem(self, x: UfdElement) -> UfdElement:
        """Canonical representative of x mod <k>."""
        self.modulus._check(x)
        if isinstance(x, IntElem):
            return IntElem(x.value % self.modulus.value)
        if isinstance(x, GaussElem):
            d, s, m = self._hnf
            re, im = x.re, x.im
            q = im // m
            re -= q * s
            im -= q * m
            return GaussElem(re % d, im)
        return x.euclid_divmod(self.modulus)[1]

    def reduce(self, x: UfdElement) -> "Residue":
        return Residue(self, self.reduce_elem(x))

    @cached_property
    def zero(self) -> "Residue":
        return self.reduce(self.modulus.zero())

    @cached_property
    def one(self) -> "Residue":
        return self.reduce(self.modulus.one())

    # enumeration -----------------------------------------------------------

    @cached_property
    def elements(self) -> tuple[UfdElement, ...]:
        """All canonical representatives, in enumeration order."""
        k = self.modulus
        if isinstance(k, IntElem):
            return tuple(IntElem(v) for v in range(k.value))
        if isinstance(k, GaussElem):
            d, _, m = self._hnf
            return tuple(
                GaussElem(re, im) for re in range(d) for im in range(m)
            )
        p, deg = k.p, k.degree()
        out = []
        for idx in range(p**deg):
            coeffs, v = [], idx
            for _ in range(deg):
                coeffs.append(v % p)
                v //= p
            out.append(PolyElem.make(p, coeffs))
        return tuple(out)

    def enumerate(self) -> Iterator["Residue"]:
        """Each residue exactly once, in a fixed deterministic order."""
        for e in self.elements:
            yield Residue(self, e)

    @cached_property
    def element_index(self) -> dict[UfdElement, int]:
        return {e: i for i, e in enumerate(self.elements)}

    def index_of(self, r: "Residue") -> int:
        return self.element_index[r.rep]

    def residue_at(self, i: int) -> "Residue":
        return Residue(self, self.elements[i])

    @cached_property
    def additive_generators(self) -> tuple["Residue", ...]:
        """Residues generating (R/<k>, +): 1 for Z, {1, i} for Z[i],
        the monomials below deg k for F_p[x]."""
        k = self.modulus
        if isinstance(k, IntElem):
            return (self.one,)
        if isinstance(k, GaussElem):
            return (self.one, self.reduce(GaussElem(0, 1)))
        p = k.p
        return tuple(
            self.reduce(PolyElem.make(p, [0] * j + [1])) for j in range(k.degree())
        )

    @cached_property
    def op_tables(self) -> "OpTables":
        """Index-level addition/multiplication tables for enumeration work."""
        n = self.cardinality
        elems = self.elements
        index = self.element_index
        add = np.empty((n, n), dtype=np.int64)
        mul = np.empty((n, n), dtype=np.int64)
        for i, a in enumerate(elems):
            for j, b in enumerate(elems):
                add[i, j] = index[self.reduce_elem(a + b)]
                mul[i, j] = index[self.reduce_elem(a * b)]
        return OpTables(n=n, add=add, mul=mul)


@dataclass(frozen=True)
class OpTables:
    n: int
    add: np.ndarray
    mul: np.ndarray


def _gauss_lattice_box(k: GaussElem) -> tuple[int, int, int]:
    """Hermite-form box for the lattice spanned by k and k*i in Z^2.

    Returns (d, s, m): the lattice has basis (d, 0) and (s, m) with
    0 <= s < d, and {(x, y) : 0 <= x < d, 0 <= y < m} is a transversal.
    """
    a, b = k.re, k.im
    g, u, v = _int_xgcd(b, a)
    m = abs(g)
    if g < 0:
        u, v = -u, -v
    # u*b + v*a = m, so u*(a, b) + v*(-b, a) has second coordinate m
    sx = u * a - v * b
    d = k.norm() // m
    return d, sx % d, m


def _int_xgcd(a: int, b: int) -> tuple[int, int, int]:
    x, nx, y, ny, g, ng = 1, 0, 0, 1, a, b
    while ng:
        q = g // ng
        x, nx = nx, x - q * nx
        y, ny = ny, y - q * ny
        g, ng = ng, g - q * ng
    return g, x, y


def make_context(k: UfdElement) -> QuotientContext:
    """R/<k> for a nonzero nonunit k; the modulus is normalized first."""
    return QuotientContext(k)


class Residue:
    """A canonical representative of an element of R/<k>."""

    __slots__ = ("ctx", "rep")

    def __init__(self, ctx: QuotientContext, rep: UfdElement):
        self.ctx = ctx
        self.rep = rep

    @property
    def lift(self) -> UfdElement:
        return self.rep

    def is_zero(self) -> bool:
        return self.rep.is_zero()

    def _check(self, other):
        if not isinstance(other, Residue) or other.ctx != self.ctx:
            raise TypeError(f"residues from different rings: {self!r}, {other!r}")

    def __add__(self, other):
        self._check(other)
        return Residue(self.ctx, self.ctx.reduce_elem(self.rep + other.rep))

    def __sub__(self, other):
        self._check(other)
        return Residue(self.ctx, self.ctx.reduce_elem(self.rep - other.rep))

    def __mul__(self, other):
        self._check(other)
        return Residue(self.ctx, self.ctx.reduce_elem(self.rep * other.rep))

    def __neg__(self):
        return Residue(self.ctx, self.ctx.reduce_elem(-self.rep))

    def __eq__(self, other):
        return (
            isinstance(other, Residue)
            and self.ctx == other.ctx
            and self.rep == other.rep
        )

    def __hash__(self):
        return hash((self.rep,))

    def __str__(self):
        return str(self.rep)

    def __repr__(self):
        return f"Residue({self.rep} mod {self.ctx.modulus})"


def is_invertible(r: Residue) -> bool:
    """Invertibility is coprimality of the lift with the modulus."""
    return gcd(r.rep, r.ctx.modulus).is_unit()


def inverse(r: Residue) -> Residue:
    g, u, _ = xgcd(r.rep, r.ctx.modulus)
    if not g.is_unit():
        raise ValueError(f"{r} is not invertible")
    return r.ctx.reduce(u * unit_inverse(g))


class PrincipalIdeal:
    """An ideal <g> of R/<k>, tracked by the canonical divisor of k that
    generates it."""

    __slots__ = ("ctx", "stride", "generator", "cardinality")

    def __init__(self, ctx: QuotientContext, generator):
        gen_elem = generator.rep if isinstance(generator, Residue) else generator
        ctx.modulus._check(gen_elem)
        # <g> = <gcd(g, k)> in R/<k>; the gcd is the canonical choice.
        self.ctx = ctx
        self.stride = gcd(gen_elem, ctx.modulus)
        self.generator = ctx.reduce(self.stride)
        self.cardinality = ctx.cardinality // quotient_size(self.stride)

    def __eq__(self, other):
        return (
            isinstance(other, PrincipalIdeal)
            and self.ctx == other.ctx
            and self.stride == other.stride
        )

    def __hash__(self):
        return hash((self.ctx, self.stride))

    def __repr__(self):
        return f"PrincipalIdeal(<{self.generator}> in {self.ctx.spec()})"

    def is_whole_ring(self) -> bool:
        return self.stride.is_unit()

    def is_zero_ideal(self) -> bool:
        return self.cardinality == 1

    def contains(self, r: Residue) -> bool:
        if r.ctx != self.ctx:
            raise TypeError("residue from a different ring")
        return divides(self.stride, r.rep)

    def members(self) -> tuple[Residue, ...]:
        """All elements, found by scanning multiples (no index formula)."""
        gen = self.generator
        seen: dict[Residue, None] = {}
        for r in self.ctx.enumerate():
            seen.setdefault(r * gen)
        out = sorted(seen, key=lambda r: r.rep.sort_key())
        return tuple(out)


def principal_ideal(ctx: QuotientContext, generator) -> PrincipalIdeal:
    return PrincipalIdeal(ctx, generator)


def annihilator(r: Residue) -> PrincipalIdeal:
    """{x : x*r = 0}, generated by k / gcd(lift r, k)."""
    k = r.ctx.modulus
    delta = gcd(r.rep, k)
    return PrincipalIdeal(r.ctx, exact_div(k, delta))


def ann_intersection(x: Residue, y: Residue) -> PrincipalIdeal:
    """ann(x) meet ann(y) = ann(gcd of the lifts)."""
    x._check(y)
    return annihilator(x.ctx.reduce(gcd(x.rep, y.rep)))


# ---------------------------------------------------------------------------
# ring-spec literals: int/12, gauss/12, gauss/1+1i, poly/2/x^2+x+1


def parse_ring(spec: str) -> QuotientContext:
    parts = spec.strip().split("/")
    family = parts[0]
    if family == "int":
        if len(parts) != 2:
            raise ParseError("expected int/<k>", 0, spec)
        return make_context(parse_int_elem(parts[1], len("int/")))
    if family == "gauss":
        if len(parts) != 2:
            raise ParseError("expected gauss/<a+bi>", 0, spec)
        return make_context(parse_gauss_elem(parts[1], len("gauss/")))
    if family == "poly":
        if len(parts) != 3:
            raise ParseError("expected poly/<p>/<f>", 0, spec)
        try:
            p = int(parts[1])
        except ValueError:
            raise ParseError(f"bad characteristic {parts[1]!r}", len("poly/")) from None
        if p < 2 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
            raise ParseError(f"{p} is not prime", len("poly/"))
        return make_context(parse_poly_elem(parts[2], p, len(f"poly/{p}/")))
    raise ParseError(f"unknown ring family {family!r}", 0, spec)
