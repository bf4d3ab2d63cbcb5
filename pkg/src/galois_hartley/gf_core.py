"""Exact arithmetic in GF(p^r), p an odd prime, in a polynomial basis.

Elements are stored as length-``r`` coefficient tuples (constant term first),
fully reduced modulo ``p`` and the field's monic reduction polynomial.
Integer operands are accepted in arithmetic and read as constants.

>>> F = make_field(7, 1)
>>> F(3) * F(5)
GF(7)(1)
>>> element_order(F(3))
6
"""

from __future__ import annotations

import random
import re
from collections.abc import Iterator, Sequence
from dataclasses import dataclass, field
from functools import lru_cache
from math import gcd

from .errors import (
    DegreeMismatch,
    EvenCharacteristic,
    FieldMismatch,
    NoSuchOrder,
    NotPrime,
    OutOfRangeCoefficient,
    ParseError,
    ReducibleModulus,
    ZeroElement,
    ZeroInverse,
)

__all__ = [
    "FieldSpec",
    "FieldElement",
    "make_field",
    "inv",
    "element_order",
    "find_element_of_order",
    "primitive_element",
    "is_quadratic_residue",
    "is_irreducible",
    "is_primitive_modulus",
    "factorize",
    "is_prime",
    "parse_poly",
    "format_poly",
]


# ---------------------------------------------------------------------------
# integers

def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division (adequate for n up to ~1e12)."""
    if n < 1:
        raise ValueError(f"cannot factor {n}")
    out: dict[int, int] = {}
    f = 2
    while f * f <= n:
        while n % f == 0:
            out[f] = out.get(f, 0) + 1
            n //= f
        f += 1 if f == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


# ---------------------------------------------------------------------------
# dense polynomials over GF(p), coefficient lists with the constant term first

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a: list[int], m: Sequence[int], p: int) -> list[int]:
    a = [c % p for c in a]
    dm = len(m) - 1
    lead_inv = pow(m[-1], -1, p)
    for d in range(len(a) - 1, dm - 1, -1):
        c = a[d] * lead_inv % p
        if c:
            off = d - dm
            for t in range(dm + 1):
                a[off + t] = (a[off + t] - c * m[t]) % p
    return _trim(a[:dm] if len(a) > dm else a)


def _poly_mulmod(a: Sequence[int], b: Sequence[int], m: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    prod = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] += ai * bj
    return _poly_mod(prod, m, p)


def _poly_powmod(a: Sequence[int], e: int, m: Sequence[int], p: int) -> list[int]:
    result = [1]
    base = _poly_mod(list(a), m, p)
    while e:
        if e & 1:
            result = _poly_mulmod(result, base, m, p)
        base = _poly_mulmod(base, base, m, p)
        e >>= 1
    return result


def _poly_divmod(a: Sequence[int], b: Sequence[int], p: int) -> tuple[list[int], list[int]]:
    a = [c % p for c in a]
    db = len(b) - 1
    if len(a) <= db:
        return [], _trim(a)
    lead_inv = pow(b[-1], -1, p)
    quot = [0] * (len(a) - db)
    for d in range(len(a) - 1, db - 1, -1):
        c = a[d] * lead_inv % p
        if c:
            quot[d - db] = c
            for t in range(db + 1):
                a[d - db + t] = (a[d - db + t] - c * b[t]) % p
    return _trim(quot), _trim(a[:db])


def _poly_inverse(a: Sequence[int], m: Sequence[int], p: int) -> list[int]:
    """u with a*u = 1 (mod m), for a coprime to m (extended Euclid)."""
    r0, r1 = list(m), _trim([c % p for c in a])
    s0, s1 = [], [1]
    while r1:
        quot, rem = _poly_divmod(r0, r1, p)
        prod = [0] * (len(quot) + len(s1))
        for i, qi in enumerate(quot):
            for j, sj in enumerate(s1):
                prod[i + j] += qi * sj
        nxt = prod + [0] * max(0, len(s0) - len(prod))
        for i, c in enumerate(s0):
            nxt[i] -= c
        r0, r1 = r1, rem
        s0, s1 = s1, _trim([-c % p for c in nxt])
    c = pow(r0[0], -1, p)
    return [x * c % p for x in s0]


def _poly_gcd(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    a = _trim([c % p for c in a])
    b = _trim([c % p for c in b])
    while b:
        a, b = b, _poly_mod(a, b, p)
    if a:
        lead_inv = pow(a[-1], -1, p)
        a = [c * lead_inv % p for c in a]
    return a


def is_irreducible(poly: Sequence[int], p: int) -> bool:
    """Rabin's irreducibility test for a polynomial over GF(p).

    ``poly`` is a coefficient sequence, constant term first.
    """
    f = _trim([c % p for c in poly])
    n = len(f) - 1
    if n < 1:
        return False
    if n == 1:
        return True
    x = [0, 1]
    # x^(p^n) == x (mod f)
    h = x
    for _ in range(n):
        h = _poly_powmod(h, p, f, p)
    if h != x:
        return False
    for d in factorize(n):
        h = x
        for _ in range(n // d):
            h = _poly_powmod(h, p, f, p)
        diff = list(h) + [0] * max(0, 2 - len(h))
        diff[1] -= 1
        if len(_poly_gcd(diff, f, p)) > 1:
            return False
    return True


# ---------------------------------------------------------------------------
# text format

_TERM = re.compile(r"(\d+)?\*?(x(?:\^(\d+))?)?")


def parse_poly(text: str) -> dict[int, int]:
    """Parse ``"x^5+x^4+x^2+1"`` into ``{exponent: coefficient}``.

    Whitespace is ignored. Terms are ``+``-separated; each is a decimal
    coefficient, a power of ``x``, or both (``2x^3``, ``2*x^3``).
    Repeated exponents are rejected.
    """
    stripped = "".join(text.split())
    if not stripped:
        raise ParseError("empty polynomial", text, 0)
    terms: dict[int, int] = {}
    pos = 0
    while True:
        m = _TERM.match(stripped, pos)
        if m is None or m.end() == pos:
            raise ParseError("expected a term", stripped, pos)
        coeff_s, xpart, exp_s = m.group(1), m.group(2), m.group(3)
        if xpart is None and "*" in m.group(0):
            raise ParseError("dangling '*'", stripped, m.end())
        coeff = int(coeff_s) if coeff_s is not None else 1
        exp = 0 if xpart is None else (int(exp_s) if exp_s is not None else 1)
        if exp in terms:
            raise ParseError(f"repeated power x^{exp}", stripped, pos)
        terms[exp] = coeff
        pos = m.end()
        if pos == len(stripped):
            return terms
        if stripped[pos] != "+":
            raise ParseError(f"unexpected {stripped[pos]!r}", stripped, pos)
        pos += 1


def format_poly(coeffs: Sequence[int]) -> str:
    """Render a coefficient sequence (constant term first) as ``"2x^3+x+1"``."""
    parts = []
    for e in range(len(coeffs) - 1, -1, -1):
        c = coeffs[e]
        if not c:
            continue
        if e == 0:
            parts.append(str(c))
            continue
        mono = "x" if e == 1 else f"x^{e}"
        parts.append(mono if c == 1 else f"{c}{mono}")
    return "+".join(parts) if parts else "0"


# ---------------------------------------------------------------------------
# fields


@dataclass(frozen=True)
class FieldSpec:
    """GF(p^r) with an explicit monic reduction polynomial.

    Use :func:`make_field` to build a validated instance. ``modulus`` holds
    ``r + 1`` coefficients, constant term first, leading coefficient 1.
    Two specs are interchangeable iff ``(p, r, modulus)`` agree.
    """

    p: int
    r: int
    modulus: tuple[int, ...]
    q: int = field(init=False, compare=False, repr=False)
    order_factors: dict[int, int] = field(init=False, compare=False, repr=False, hash=False)
    reduction: tuple[tuple[int, ...], ...] = field(init=False, compare=False, repr=False, hash=False)
    byte_products: bool = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        q = self.p ** self.r
        # everything derived is built eagerly so the spec stays immutable and shareable
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "order_factors", factorize(q - 1) if q > 2 else {})
        # rows: x^(r+t) mod modulus for t = 0 .. r-2
        rows = []
        for t in range(max(0, self.r - 1)):
            rem = _poly_mod([0] * (self.r + t) + [1], self.modulus, self.p)
            rows.append(tuple(_pad(rem, self.r)))
        object.__setattr__(self, "reduction", tuple(rows))
        # product coefficients fit in one byte: multiply via int.from_bytes packing
        object.__setattr__(self, "byte_products", self.r * (self.p - 1) ** 2 < 256)

    def __str__(self) -> str:
        name = f"GF({self.p})" if self.r == 1 else f"GF({self.p}^{self.r})"
        return name if self.r == 1 else f"{name} mod {format_poly(self.modulus)}"

    def __call__(self, value) -> FieldElement:
        return self.element(value)

    def element(self, value) -> FieldElement:
        """Coerce an int (a constant), a coefficient sequence, a string or an element."""
        if isinstance(value, FieldElement):
            if value.spec != self:
                raise FieldMismatch(f"{value!r} is not in {self}")
            return value
        if isinstance(value, int):
            return FieldElement(self, (value % self.p,) + (0,) * (self.r - 1))
        if isinstance(value, str):
            return self.parse(value)
        coeffs = list(value)
        if len(coeffs) > self.r:
            if any(c % self.p for c in coeffs[self.r:]):
                return FieldElement(self, tuple(_pad(_poly_mod(coeffs, self.modulus, self.p), self.r)))
            coeffs = coeffs[: self.r]
        return FieldElement(self, tuple(c % self.p for c in _pad(coeffs, self.r)))

    def parse(self, text: str) -> FieldElement:
        """Parse the text format: a decimal integer for r = 1, else a polynomial in x."""
        terms = parse_poly(text)
        coeffs = [0] * self.r
        for exp, c in terms.items():
            if exp >= self.r:
                raise OutOfRangeCoefficient(f"power x^{exp} exceeds degree {self.r - 1} of {self}")
            if c >= self.p:
                raise OutOfRangeCoefficient(f"coefficient {c} not in [0, {self.p})")
            coeffs[exp] = c
        return FieldElement(self, tuple(coeffs))

    @property
    def zero(self) -> FieldElement:
        return FieldElement(self, (0,) * self.r)

    @property
    def one(self) -> FieldElement:
        return FieldElement(self, (1,) + (0,) * (self.r - 1))

    @property
    def generator(self) -> FieldElement:
        """The residue class of x (equal to 0 when r = 1)."""
        if self.r == 1:
            return self.zero
        return FieldElement(self, (0, 1) + (0,) * (self.r - 2))

    def from_index(self, n: int) -> FieldElement:
        """Element whose base-p digits (least significant first) are its coefficients."""
        if not 0 <= n < self.q:
            raise ValueError(f"index {n} out of range for {self}")
        coeffs = []
        for _ in range(self.r):
            n, c = divmod(n, self.p)
            coeffs.append(c)
        return FieldElement(self, tuple(coeffs))

    def elements(self) -> Iterator[FieldElement]:
        """All q elements in lexicographic (index) order, zero first."""
        for n in range(self.q):
            yield self.from_index(n)

    def random_element(self, rng: random.Random, nonzero: bool = False) -> FieldElement:
        lo = 1 if nonzero else 0
        return self.from_index(rng.randrange(lo, self.q))


def _pad(coeffs: Sequence[int], r: int) -> list[int]:
    return list(coeffs) + [0] * (r - len(coeffs))


class FieldElement:
    """A reduced residue of GF(p^r). Immutable; hashable."""

    __slots__ = ("spec", "coeffs")

    def __init__(self, spec: FieldSpec, coeffs: tuple[int, ...]):
        # trusted constructor: callers pass reduced, length-r tuples
        object.__setattr__(self, "spec", spec)
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("FieldElement is immutable")

    def __reduce__(self):
        return (FieldElement, (self.spec, self.coeffs))

    # -- helpers -----------------------------------------------------------

    def _coerce(self, other) -> FieldElement | None:
        if isinstance(other, FieldElement):
            if other.spec is not self.spec and other.spec != self.spec:
                raise FieldMismatch(f"{self.spec} vs {other.spec}")
            return other
        if isinstance(other, int):
            return self.spec.element(other)
        return None

    @property
    def index(self) -> int:
        n = 0
        for c in reversed(self.coeffs):
            n = n * self.spec.p + c
        return n

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = self.spec.element(other)
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.coeffs == other.coeffs and (self.spec is other.spec or self.spec == other.spec)

    def __hash__(self) -> int:
        return hash((self.spec.p, self.spec.modulus, self.coeffs))

    def __repr__(self) -> str:
        name = f"GF({self.spec.p})" if self.spec.r == 1 else f"GF({self.spec.p}^{self.spec.r})"
        return f"{name}({self})"

    def __str__(self) -> str:
        if self.spec.r == 1:
            return str(self.coeffs[0])
        return format_poly(self.coeffs)

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        p = self.spec.p
        return FieldElement(self.spec, tuple((a + b) % p for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        p = self.spec.p
        return FieldElement(self.spec, tuple((a - b) % p for a, b in zip(self.coeffs, o.coeffs)))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        p = self.spec.p
        return FieldElement(self.spec, tuple(-a % p for a in self.coeffs))

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        spec = self.spec
        if spec.r == 1:
            return FieldElement(spec, (self.coeffs[0] * o.coeffs[0] % spec.p,))
        return FieldElement(spec, _mul_reduce(self.coeffs, o.coeffs, spec))

    __rmul__ = __mul__

    def inverse(self) -> FieldElement:
        if self.is_zero():
            raise ZeroInverse(f"0 has no inverse in {self.spec}")
        spec = self.spec
        if spec.r == 1:
            return FieldElement(spec, (pow(self.coeffs[0], -1, spec.p),))
        return FieldElement(spec, tuple(_pad(_poly_inverse(self.coeffs, spec.modulus, spec.p), spec.r)))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        spec = self.spec
        if e < 0:
            return self.inverse() ** (-e)
        if self.is_zero():
            return spec.one if e == 0 else self
        e %= spec.q - 1
        if spec.r == 1:
            return FieldElement(spec, (pow(self.coeffs[0], e, spec.p),))
        result, base = spec.one.coeffs, self.coeffs
        while e:
            if e & 1:
                result = _mul_reduce(result, base, spec)
            e >>= 1
            if e:
                base = _mul_reduce(base, base, spec)
        return FieldElement(spec, result)

    def frobenius(self, s: int = 1) -> FieldElement:
        """x^(p^s), applied as a GF(p)-linear map on the coefficients."""
        spec = self.spec
        s %= spec.r
        if s == 0:
            return self
        res = [0] * spec.r
        for c, row in zip(self.coeffs, _frobenius_rows(spec, s)):
            if c:
                for t, v in enumerate(row):
                    res[t] += c * v
        p = spec.p
        return FieldElement(spec, tuple([c % p for c in res]))


@lru_cache(maxsize=128)
def _frobenius_rows(spec: FieldSpec, s: int) -> tuple[tuple[int, ...], ...]:
    # image of each basis monomial x^i under x -> x^(p^s)
    xp = spec.generator ** (spec.p ** s)
    rows, cur = [], spec.one
    for _ in range(spec.r):
        rows.append(cur.coeffs)
        cur = cur * xp
    return tuple(rows)


def _mul_reduce(a: tuple[int, ...], b: tuple[int, ...], spec: FieldSpec) -> tuple[int, ...]:
    r = spec.r
    if spec.byte_products:
        prod = (int.from_bytes(bytes(a), "little") * int.from_bytes(bytes(b), "little")).to_bytes(2 * r, "little")
    else:
        prod = [0] * (2 * r - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    prod[i + j] += ai * bj
    res = list(prod[:r])
    for row, c in zip(spec.reduction, prod[r:]):
        if c:
            for s, rs in enumerate(row):
                res[s] += c * rs
    p = spec.p
    return tuple([c % p for c in res])


def inv(x: FieldElement) -> FieldElement:
    return x.inverse()


# ---------------------------------------------------------------------------
# construction


def make_field(p: int, r: int = 1, modulus: Sequence[int] | str | None = None) -> FieldSpec:
    """Build GF(p^r).

    ``modulus`` may be a coefficient sequence (constant term first) or text
    such as ``"x^5+x^4+x^2+1"``. When omitted, the smallest irreducible monic
    polynomial of degree ``r`` is used, ordering candidates by their
    coefficients from x^(r-1) down to the constant term.
    """
    if not isinstance(p, int) or not is_prime(p):
        raise NotPrime(f"characteristic {p} is not prime")
    if p == 2:
        raise EvenCharacteristic("characteristic 2 is not supported (2 must be invertible)")
    if not isinstance(r, int) or r < 1:
        raise DegreeMismatch(f"extension degree must be >= 1, got {r}")
    if modulus is None:
        return FieldSpec(p, r, _default_modulus(p, r))
    if isinstance(modulus, str):
        terms = parse_poly(modulus)
        coeffs = [0] * (max(terms) + 1)
        for e, c in terms.items():
            coeffs[e] = c
    else:
        coeffs = list(modulus)
    if any(not 0 <= c < p for c in coeffs):
        raise OutOfRangeCoefficient(f"modulus coefficients must lie in [0, {p})")
    coeffs = _trim(coeffs)
    if len(coeffs) - 1 != r:
        raise DegreeMismatch(f"modulus has degree {len(coeffs) - 1}, expected {r}")
    if coeffs[-1] != 1:
        raise OutOfRangeCoefficient("modulus must be monic")
    if not is_irreducible(coeffs, p):
        raise ReducibleModulus(f"{format_poly(coeffs)} factors over GF({p})")
    return FieldSpec(p, r, tuple(coeffs))


def _default_modulus(p: int, r: int) -> tuple[int, ...]:
    for n in range(p ** r):
        low = []
        for _ in range(r):
            n, c = divmod(n, p)
            low.append(c)
        cand = low + [1]
        if is_irreducible(cand, p):
            return tuple(cand)
    raise AssertionError("unreachable: irreducible polynomials exist in every degree")


def is_primitive_modulus(spec: FieldSpec) -> bool:
    """True when a root of the modulus generates the multiplicative group."""
    root = spec.generator if spec.r > 1 else spec(-spec.modulus[0])
    return not root.is_zero() and element_order(root) == spec.q - 1


# ---------------------------------------------------------------------------
# orders and residues


def element_order(x: FieldElement) -> int:
    """Multiplicative order, found by stripping prime factors of q - 1."""
    if x.is_zero():
        raise ZeroElement("0 has no multiplicative order")
    spec = x.spec
    n = spec.q - 1
    one = spec.one
    for f in spec.order_factors:
        while n % f == 0 and x ** (n // f) == one:
            n //= f
    return n


def primitive_element(spec: FieldSpec) -> FieldElement:
    """First element of order q - 1 in index order."""
    for n in range(1, spec.q):
        x = spec.from_index(n)
        if element_order(x) == spec.q - 1:
            return x
    raise AssertionError("unreachable: the multiplicative group is cyclic")


def find_element_of_order(spec: FieldSpec, n: int) -> FieldElement:
    """Smallest element (in index order) of multiplicative order exactly ``n``.

    The order-``n`` elements are g^(t(q-1)/n) with gcd(t, n) = 1 for any
    generator g, so only those phi(n) candidates are examined.
    """
    if n < 1 or (spec.q - 1) % n:
        raise NoSuchOrder(f"{n} does not divide {spec.q - 1} = |{spec}*|")
    g = primitive_element(spec)
    h = g ** ((spec.q - 1) // n)
    best = None
    y = spec.one
    for t in range(n):
        if gcd(t, n) == 1 and (best is None or y.index < best.index):
            best = y
        y = y * h
    return best


def is_quadratic_residue(x: FieldElement) -> bool:
    """Euler's criterion: x is a square iff x^((q-1)/2) = 1."""
    if x.is_zero():
        raise ZeroElement("residue status of 0 is undefined")
    return x ** ((x.spec.q - 1) // 2) == x.spec.one
