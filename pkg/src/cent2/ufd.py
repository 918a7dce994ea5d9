"""Exact arithmetic in three Euclidean domains: Z, Z[i] and F_p[x].

Elements are immutable values supporting +, -, * and Euclidean division.
Every element knows how to split itself into a unit times a canonical
associate, which makes gcd a genuine function (not a value up to units):

* integers normalize to their absolute value,
* Gaussian integers normalize into the quarter plane re > 0, im >= 0,
* polynomials normalize to their monic associate.

Python integers are exact and unbounded, so arithmetic here never wraps
or loses precision.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator


class ParseError(ValueError):
    """Raised on malformed element / ring / matrix literals.

    Carries the offset of the offending character so callers can point
    at it.
    """

    def __init__(self, message: str, pos: int, text: str = ""):
        super().__init__(f"at position {pos}: {message}")
        self.pos = pos
        self.text = text


class UfdElement:
    """Common behaviour of elements of the three supported domains."""

    __slots__ = ()

    def is_zero(self) -> bool:
        raise NotImplementedError

    def is_unit(self) -> bool:
        raise NotImplementedError

    def euclid_divmod(self, other: "UfdElement"):
        """Quotient and remainder with the remainder strictly smaller
        (in the domain's Euclidean size) than the divisor."""
        raise NotImplementedError

    def normalize_associate(self):
        """Split into (unit, canonical) with self == unit * canonical."""
        raise NotImplementedError

    def sort_key(self):
        """Total order used for deterministic enumeration and output."""
        raise NotImplementedError

    # Shared conveniences -------------------------------------------------

    def zero(self) -> "UfdElement":
        raise NotImplementedError

    def one(self) -> "UfdElement":
        raise NotImplementedError

    def same_ring(self, other: "UfdElement") -> bool:
        raise NotImplementedError

    def _check(self, other: "UfdElement") -> None:
        if not isinstance(other, UfdElement) or not self.same_ring(other):
            raise TypeError(f"mixed base rings: {self!r} and {other!r}")


@dataclass(frozen=True, slots=True)
class IntElem(UfdElement):
    """An ordinary integer."""

    value: int

    def is_zero(self):
        return self.value == 0

    def is_unit(self):
        return self.value in (1, -1)

    def __add__(self, other):
        self._check(other)
        return IntElem(self.value + other.value)

    def __sub__(self, other):
        self._check(other)
        return IntElem(self.value - other.value)

    def __mul__(self, other):
        self._check(other)
        return IntElem(self.value * other.value)

    def __neg__(self):
        return IntElem(-self.value)

    def euclid_divmod(self, other):
        self._check(other)
        if other.value == 0:
            raise ZeroDivisionError("division by zero")
        q, r = divmod(self.value, other.value)
        return IntElem(q), IntElem(r)

    def normalize_associate(self):
        if self.value < 0:
            return IntElem(-1), IntElem(-self.value)
        return IntElem(1), self

    def sort_key(self):
        return (self.value,)

    def zero(self):
        return IntElem(0)

    def one(self):
        return IntElem(1)

    def same_ring(self, other):
        return isinstance(other, IntElem)

    def __str__(self):
        return str(self.value)

    def __repr__(self):
        return f"IntElem({self.value})"


@dataclass(frozen=True, slots=True)
class GaussElem(UfdElement):
    """A Gaussian integer re + im*i."""

    re: int
    im: int

    def is_zero(self):
        return self.re == 0 and self.im == 0

    def is_unit(self):
        return self.norm() == 1

    def norm(self) -> int:
        return self.re * self.re + self.im * self.im

    def conj(self) -> "GaussElem":
        return GaussElem(self.re, -self.im)

    def __add__(self, other):
        self._check(other)
        return GaussElem(self.re + other.re, self.im + other.im)

    def __sub__(self, other):
        self._check(other)
        return GaussElem(self.re - other.re, self.im - other.im)

    def __mul__(self, other):
        self._check(other)
        return GaussElem(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    def __neg__(self):
        return GaussElem(-self.re, -self.im)

    def euclid_divmod(self, other):
        self._check(other)
        n = other.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero")
        # Round the exact complex quotient to the nearest lattice point;
        # this keeps the remainder norm at most half the divisor norm.
        num = self * other.conj()
        q = GaussElem(_round_nearest(num.re, n), _round_nearest(num.im, n))
        return q, self - q * other

    def normalize_associate(self):
        if self.is_zero():
            return GaussElem(1, 0), self
        z = self
        for j in range(4):
            if z.re > 0 and z.im >= 0:
                # self == unit * z with unit = i**(-j) = i**((4-j) % 4)
                return _GAUSS_UNITS[(4 - j) % 4], z
            z = GaussElem(-z.im, z.re)  # multiply by i
        raise AssertionError("unreachable: one rotation lands in the quarter plane")

    def sort_key(self):
        return (self.re, self.im)

    def zero(self):
        return GaussElem(0, 0)

    def one(self):
        return GaussElem(1, 0)

    def same_ring(self, other):
        return isinstance(other, GaussElem)

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return f"{self.im}i"
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}i"

    def __repr__(self):
        return f"GaussElem({self.re}, {self.im})"


_GAUSS_UNITS = (GaussElem(1, 0), GaussElem(0, 1), GaussElem(-1, 0), GaussElem(0, -1))


def _round_nearest(num: int, den: int) -> int:
    """Nearest integer to num/den for den > 0, ties rounded up."""
    return (2 * num + den) // (2 * den)


@dataclass(frozen=True, slots=True)
class PolyElem(UfdElement):
    """A univariate polynomial over F_p.

    Coefficients are stored lowest degree first, reduced mod p, with no
    trailing zeros; the zero polynomial has an empty tuple.
    """

    p: int
    coeffs: tuple[int, ...]

    @staticmethod
    def make(p: int, coeffs) -> "PolyElem":
        cs = [c % p for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        return PolyElem(p, tuple(cs))

    def is_zero(self):
        return not self.coeffs

    def is_unit(self):
        return len(self.coeffs) == 1

    def degree(self) -> int:
        """Degree, with the zero polynomial mapped to -1."""
        return len(self.coeffs) - 1

    def __add__(self, other):
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return PolyElem.make(
            self.p,
            [self._coef(i) + other._coef(i) for i in range(n)],
        )

    def __sub__(self, other):
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return PolyElem.make(
            self.p,
            [self._coef(i) - other._coef(i) for i in range(n)],
        )

    def __mul__(self, other):
        self._check(other)
        if self.is_zero() or other.is_zero():
            return PolyElem(self.p, ())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return PolyElem.make(self.p, out)

    def __neg__(self):
        return PolyElem.make(self.p, [-c for c in self.coeffs])

    def _coef(self, i: int) -> int:
        return self.coeffs[i] if i < len(self.coeffs) else 0

    def euclid_divmod(self, other):
        self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero")
        p = self.p
        rem = list(self.coeffs)
        div = other.coeffs
        dlen = len(div)
        inv_lead = pow(div[-1], -1, p)
        q = [0] * max(len(rem) - dlen + 1, 0)
        for i in range(len(rem) - dlen, -1, -1):
            c = rem[i + dlen - 1] % p
            if c == 0:
                continue
            factor = (c * inv_lead) % p
            q[i] = factor
            for j in range(dlen):
                rem[i + j] = (rem[i + j] - factor * div[j]) % p
        return PolyElem.make(p, q), PolyElem.make(p, rem)

    def normalize_associate(self):
        if self.is_zero():
            return PolyElem.make(self.p, [1]), self
        lead = self.coeffs[-1]
        if lead == 1:
            return PolyElem.make(self.p, [1]), self
        inv = pow(lead, -1, self.p)
        monic = PolyElem.make(self.p, [c * inv for c in self.coeffs])
        return PolyElem.make(self.p, [lead]), monic

    def sort_key(self):
        # Orders by the base-p value of the coefficient vector: constants
        # first, then degree-1 polynomials, and so on.
        return (len(self.coeffs), tuple(reversed(self.coeffs)))

    def zero(self):
        return PolyElem(self.p, ())

    def one(self):
        return PolyElem(self.p, (1,))

    def same_ring(self, other):
        return isinstance(other, PolyElem) and other.p == self.p

    def __str__(self):
        if self.is_zero():
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            elif i == 1:
                terms.append("x" if c == 1 else f"{c}x")
            else:
                terms.append(f"x^{i}" if c == 1 else f"{c}x^{i}")
        return "+".join(terms)

    def __repr__(self):
        return f"PolyElem(p={self.p}, {str(self)!r})"


@dataclass(frozen=True)
class Factorization:
    """unit * prod(prime**exp) == the factored element, with canonical
    pairwise non-associate primes."""

    unit: UfdElement
    factors: tuple[tuple[UfdElement, int], ...]

    def value(self) -> UfdElement:
        out = self.unit
        for prime, exp in self.factors:
            for _ in range(exp):
                out = out * prime
        return out


# ---------------------------------------------------------------------------
# gcd family


def gcd(*elems: UfdElement) -> UfdElement:
    """Greatest common divisor, returned as a canonical associate.

    gcd() of an empty list is undefined; gcd(0, 0) = 0 by convention.
    """
    if not elems:
        raise TypeError("gcd needs at least one argument")
    acc = elems[0]
    for e in elems[1:]:
        acc._check(e)
        acc = _gcd2(acc, e)
    return acc.normalize_associate()[1]


def _gcd2(a: UfdElement, b: UfdElement) -> UfdElement:
    while not b.is_zero():
        a, b = b, a.euclid_divmod(b)[1]
    return a


def xgcd(a: UfdElement, b: UfdElement):
    """Extended Euclid: returns (g, u, v) with u*a + v*b == g.

    g is an associate of gcd(a, b), not necessarily canonical.
    """
    a._check(b)
    zero, one = a.zero(), a.one()
    g, g2 = a, b
    u, u2 = one, zero
    v, v2 = zero, one
    while not g2.is_zero():
        q, r = g.euclid_divmod(g2)
        g, g2 = g2, r
        u, u2 = u2, u - q * u2
        v, v2 = v2, v - q * v2
    return g, u, v


def normalize_associate(a: UfdElement):
    """(unit, canonical) with a == unit * canonical."""
    return a.normalize_associate()


def exact_div(a: UfdElement, b: UfdElement) -> UfdElement:
    """a / b when b divides a exactly; anything else is a caller bug."""
    a._check(b)
    if b.is_zero():
        raise ValueError("exact_div by zero")
    q, r = a.euclid_divmod(b)
    if not r.is_zero():
        raise ValueError(f"{a} is not divisible by {b}")
    return q


def divides(b: UfdElement, a: UfdElement) -> bool:
    """True iff b | a (with 0 | 0)."""
    if b.is_zero():
        return a.is_zero()
    return a.euclid_divmod(b)[1].is_zero()


def unit_inverse(u: UfdElement) -> UfdElement:
    if not u.is_unit():
        raise ValueError(f"{u} is not a unit")
    return exact_div(u.one(), u)


# ---------------------------------------------------------------------------
# factorization


def factor(k: UfdElement) -> Factorization:
    """Prime factorization with canonical primes; trial-division scale."""
    if k.is_zero():
        raise ValueError("cannot factor zero")
    if isinstance(k, IntElem):
        return _factor_int(k)
    if isinstance(k, GaussElem):
        return _factor_gauss(k)
    if isinstance(k, PolyElem):
        return _factor_poly(k)
    raise TypeError(f"unsupported element {k!r}")


def _factor_int(k: IntElem) -> Factorization:
    n = abs(k.value)
    unit = IntElem(1) if k.value > 0 else IntElem(-1)
    factors = []
    for p, e in _int_factor_pairs(n):
        factors.append((IntElem(p), e))
    return Factorization(unit, tuple(factors))


def _int_factor_pairs(n: int) -> Iterator[tuple[int, int]]:
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            yield d, e
        d += 1 if d == 2 else 2
    if n > 1:
        yield n, 1


def _sqrt_minus_one(p: int) -> int:
    """Smallest a with a*a = -1 mod p, for p = 1 mod 4; plain search."""
    for a in range(2, p):
        if (a * a) % p == p - 1:
            return a
    raise ValueError(f"-1 is not a square mod {p}")


def _factor_gauss(k: GaussElem) -> Factorization:
    rest = k
    factors: list[tuple[GaussElem, int]] = []

    def strip(prime: GaussElem) -> int:
        nonlocal rest
        e = 0
        while True:
            q, r = rest.euclid_divmod(prime)
            if not r.is_zero():
                return e
            rest = q
            e += 1

    for p, _ in _int_factor_pairs(k.norm()):
        if p == 2:
            cand = [GaussElem(1, 1)]
        elif p % 4 == 3:
            cand = [GaussElem(p, 0)]
        else:
            a = _sqrt_minus_one(p)
            pi = gcd(GaussElem(p, 0), GaussElem(a, 1))
            cand = [pi, pi.conj().normalize_associate()[1]]
        for prime in cand:
            prime = prime.normalize_associate()[1]
            e = strip(prime)
            if e:
                factors.append((prime, e))
    if not rest.is_unit():
        raise AssertionError(f"nonunit {rest} left after stripping primes of {k}")
    factors.sort(key=lambda pe: pe[0].sort_key())
    prod = GaussElem(1, 0)
    for prime, e in factors:
        for _ in range(e):
            prod = prod * prime
    return Factorization(exact_div(k, prod), tuple(factors))


def _monic_polys(p: int, deg: int) -> Iterator[PolyElem]:
    """All monic polynomials of exactly the given degree, lex order."""
    total = p**deg
    for idx in range(total):
        coeffs = []
        v = idx
        for _ in range(deg):
            coeffs.append(v % p)
            v //= p
        coeffs.append(1)
        yield PolyElem(p, tuple(coeffs))


def _factor_poly(k: PolyElem) -> Factorization:
    unit, rest = k.normalize_associate()
    factors: list[tuple[PolyElem, int]] = []
    deg = 1
    while rest.degree() >= 2 * deg:
        for cand in _monic_polys(k.p, deg):
            e = 0
            while True:
                q, r = rest.euclid_divmod(cand)
                if not r.is_zero():
                    break
                rest = q
                e += 1
            if e:
                factors.append((cand, e))
            if rest.degree() < 2 * deg:
                break
        deg += 1
    if rest.degree() >= 1:
        factors.append((rest, 1))
    factors.sort(key=lambda pe: pe[0].sort_key())
    return Factorization(unit, tuple(factors))


# ---------------------------------------------------------------------------
# element literals
#
# Int:    -?[0-9]+
# Gauss:  a | bi | a+bi | a-bi     (imaginary coefficient always explicit)
# Poly:   sums of c, cx, cx^n, x, x^n over the declared prime


def parse_int_elem(text: str, offset: int = 0) -> IntElem:
    t = text.strip()
    try:
        return IntElem(int(t))
    except ValueError:
        raise ParseError(f"bad integer literal {text!r}", offset) from None


def parse_gauss_elem(text: str, offset: int = 0) -> GaussElem:
    t = text.strip()
    if not t:
        raise ParseError("empty Gaussian literal", offset)
    body = t
    if body.endswith("i"):
        body = body[:-1]
        # split off the trailing signed coefficient of i
        cut = -1
        for j in range(len(body) - 1, 0, -1):
            if body[j] in "+-":
                cut = j
                break
        if cut == -1:
            re_part, im_part = "0", body
        else:
            re_part, im_part = body[:cut], body[cut:]
        if im_part in ("", "+", "-"):
            raise ParseError(
                "imaginary part needs an explicit coefficient (write 1i, not i)",
                offset + len(t) - 1,
            )
        try:
            return GaussElem(int(re_part), int(im_part))
        except ValueError:
            raise ParseError(f"bad Gaussian literal {text!r}", offset) from None
    try:
        return GaussElem(int(body), 0)
    except ValueError:
        raise ParseError(f"bad Gaussian literal {text!r}", offset) from None


def parse_poly_elem(text: str, p: int, offset: int = 0) -> PolyElem:
    t = text.strip().replace(" ", "")
    if not t:
        raise ParseError("empty polynomial literal", offset)
    coeffs: dict[int, int] = {}
    for term in t.split("+"):
        if not term:
            raise ParseError("empty polynomial term", offset)
        if "x" in term:
            head, _, tail = term.partition("x")
            coeff = 1 if head == "" else _parse_nonneg(head, offset)
            if tail == "":
                exp = 1
            elif tail.startswith("^"):
                exp = _parse_nonneg(tail[1:], offset)
            else:
                raise ParseError(f"bad polynomial term {term!r}", offset)
        else:
            coeff = _parse_nonneg(term, offset)
            exp = 0
        coeffs[exp] = coeffs.get(exp, 0) + coeff
    top = max(coeffs)
    return PolyElem.make(p, [coeffs.get(i, 0) for i in range(top + 1)])


def _parse_nonneg(text: str, offset: int) -> int:
    if not text.isdigit():
        raise ParseError(f"expected a number, got {text!r}", offset)
    return int(text)
