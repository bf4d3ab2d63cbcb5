"""Gaussian integers a + jb over GF(q), j^2 = -1.

The pair form is a field exactly when -1 is a quadratic non-residue in the
host field, i.e. q = 3 (mod 4); it is then a copy of GF(q^2).
"""

from __future__ import annotations

import random
from collections.abc import Iterator

from .errors import BadExponent, FieldMismatch, MinusOneIsResidue, ParseError, ZeroInverse
from .gf_core import FieldElement, FieldSpec, is_quadratic_residue

__all__ = [
    "GaussianField",
    "GaussianElement",
    "embed",
    "conj",
    "frobenius",
    "gi_add",
    "gi_sub",
    "gi_neg",
    "gi_mul",
    "gi_inv",
    "gi_pow",
]


class GaussianField:
    """GI(q) over a host field whose -1 is not a square."""

    __slots__ = ("base",)

    def __init__(self, base: FieldSpec):
        if is_quadratic_residue(-base.one):
            raise MinusOneIsResidue(
                f"-1 is a square in {base} (q = {base.q} = 1 mod 4); "
                "adjoining j = sqrt(-1) does not give a field"
            )
        object.__setattr__(self, "base", base)

    def __setattr__(self, name, value):
        raise AttributeError("GaussianField is immutable")

    def __eq__(self, other) -> bool:
        return isinstance(other, GaussianField) and self.base == other.base

    def __hash__(self) -> int:
        return hash(("GI", self.base))

    def __repr__(self) -> str:
        return f"GaussianField({self.base})"

    @property
    def q(self) -> int:
        """Size of the host field."""
        return self.base.q

    @property
    def zero(self) -> GaussianElement:
        return _gi(self.base.zero, self.base.zero)

    @property
    def one(self) -> GaussianElement:
        return _gi(self.base.one, self.base.zero)

    @property
    def j(self) -> GaussianElement:
        return _gi(self.base.zero, self.base.one)

    def __call__(self, re=0, im=0) -> GaussianElement:
        if isinstance(re, GaussianElement):
            if re.re.spec != self.base:
                raise FieldMismatch(f"{re!r} is not over {self.base}")
            return re
        if isinstance(re, str):
            return self.parse(re)
        return _gi(self.base.element(re), self.base.element(im))

    def embed(self, x: FieldElement) -> GaussianElement:
        return _gi(self.base.element(x), self.base.zero)

    def elements(self) -> Iterator[GaussianElement]:
        for im in self.base.elements():
            for re in self.base.elements():
                yield _gi(re, im)

    def random_element(self, rng: random.Random, nonzero: bool = False) -> GaussianElement:
        while True:
            x = _gi(self.base.random_element(rng), self.base.random_element(rng))
            if not (nonzero and x.is_zero()):
                return x

    def parse(self, text: str) -> GaussianElement:
        """Parse ``"a"``, ``"bj"`` or ``"a+bj"``.

        Top-level ``+``-separated terms are summed; a term ending in ``j`` is
        imaginary (bare ``j`` means 1j). Multi-term polynomial components are
        parenthesised, as in ``"x^4+2x+(x+1)j"``.
        """
        s = "".join(text.split())
        if not s:
            raise ParseError("empty element", text, 0)
        re_part, im_part = self.base.zero, self.base.zero
        for start, term in _split_terms(s):
            imaginary = term.endswith("j")
            body = term[:-1] if imaginary else term
            if imaginary and body == "":
                value = self.base.one
            else:
                if body.startswith("(") and body.endswith(")"):
                    body, start = body[1:-1], start + 1
                if not body or "j" in body or "(" in body or ")" in body:
                    raise ParseError("malformed term", s, start)
                try:
                    value = self.base.parse(body)
                except ParseError as exc:
                    offset = exc.position if exc.position is not None else 0
                    raise ParseError(str(exc).split(" at position")[0], s, start + offset) from None
            if imaginary:
                im_part = im_part + value
            else:
                re_part = re_part + value
        return _gi(re_part, im_part)


def _split_terms(s: str) -> list[tuple[int, str]]:
    terms, depth, start = [], 0, 0
    for i, ch in enumerate(s):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise ParseError("unbalanced ')'", s, i)
        elif ch == "+" and depth == 0:
            if i == start:
                raise ParseError("empty term", s, i)
            terms.append((start, s[start:i]))
            start = i + 1
    if depth:
        raise ParseError("unbalanced '('", s, len(s))
    if start == len(s):
        raise ParseError("empty term", s, start)
    terms.append((start, s[start:]))
    return terms


def _gi(re: FieldElement, im: FieldElement) -> GaussianElement:
    x = object.__new__(GaussianElement)
    object.__setattr__(x, "re", re)
    object.__setattr__(x, "im", im)
    return x


class GaussianElement:
    """re + j*im with both parts in one host field."""

    __slots__ = ("re", "im")

    def __init__(self, re: FieldElement, im: FieldElement | None = None):
        if im is None:
            im = re.spec.zero
        if re.spec != im.spec:
            raise FieldMismatch(f"{re.spec} vs {im.spec}")
        if re.spec.q % 4 != 3:
            raise MinusOneIsResidue(f"-1 is a square in {re.spec}")
        object.__setattr__(self, "re", re)
        object.__setattr__(self, "im", im)

    def __setattr__(self, name, value):
        raise AttributeError("GaussianElement is immutable")

    def __reduce__(self):
        return (GaussianElement, (self.re, self.im))

    @property
    def spec(self) -> FieldSpec:
        return self.re.spec

    @property
    def field(self) -> GaussianField:
        return GaussianField(self.re.spec)

    def _coerce(self, other) -> GaussianElement | None:
        if isinstance(other, GaussianElement):
            if other.re.spec is not self.re.spec and other.re.spec != self.re.spec:
                raise FieldMismatch(f"{self.re.spec} vs {other.re.spec}")
            return other
        if isinstance(other, (FieldElement, int)):
            return _gi(self.re.spec.element(other), self.re.spec.zero)
        return None

    def is_zero(self) -> bool:
        return self.re.is_zero() and self.im.is_zero()

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other) -> bool:
        try:
            o = self._coerce(other)
        except FieldMismatch:
            return False
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self) -> int:
        if self.im.is_zero():
            return hash(self.re)
        return hash((self.re, self.im))

    def __repr__(self) -> str:
        return f"GI({self.re.spec.q})({self})"

    def __str__(self) -> str:
        re_s = str(self.re)
        if self.im.is_zero():
            return re_s
        im_s = str(self.im)
        if "+" in im_s:
            im_s = f"({im_s})j"
        elif im_s == "1":
            im_s = "j"
        else:
            im_s += "j"
        if self.re.is_zero():
            return im_s
        return f"{re_s}+{im_s}"

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return _gi(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return _gi(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        return _gi(-self.re, -self.im)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a1, b1, a2, b2 = self.re, self.im, o.re, o.im
        if b2.is_zero():
            return _gi(a1 * a2, b1 * a2)
        if b1.is_zero():
            return _gi(a1 * a2, a1 * b2)
        return _gi(a1 * a2 - b1 * b2, a1 * b2 + a2 * b1)

    __rmul__ = __mul__

    def conj(self) -> GaussianElement:
        return _gi(self.re, -self.im)

    def norm(self) -> FieldElement:
        return self.re * self.re + self.im * self.im

    def inverse(self) -> GaussianElement:
        if self.is_zero():
            raise ZeroInverse(f"0 has no inverse in GI({self.re.spec.q})")
        # a^2 + b^2 != 0 for nonzero a + jb because -1 is a non-square
        n_inv = self.norm().inverse()
        return _gi(self.re * n_inv, -self.im * n_inv)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return self.inverse() ** (-e)
        result = _gi(self.re.spec.one, self.re.spec.zero)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def frobenius(self, e: int) -> GaussianElement:
        """x^e for e a power of the characteristic, via (a + jb)^e = a^e + b^e j^e."""
        p = self.re.spec.p
        t, s = e, 0
        while t > 1 and t % p == 0:
            t //= p
            s += 1
        if e < 1 or t != 1:
            raise BadExponent(f"{e} is not a power of the characteristic {p}")
        # e is odd, so j^e = j or -j according to e mod 4
        im = self.im.frobenius(s)
        return _gi(self.re.frobenius(s), -im if e % 4 == 3 else im)


def embed(x: FieldElement) -> GaussianElement:
    return GaussianElement(x, x.spec.zero)


def conj(x: GaussianElement) -> GaussianElement:
    return x.conj()


def frobenius(x: GaussianElement, q: int) -> GaussianElement:
    return x.frobenius(q)


def gi_add(x: GaussianElement, y: GaussianElement) -> GaussianElement:
    return x + y


def gi_sub(x: GaussianElement, y: GaussianElement) -> GaussianElement:
    return x - y


def gi_neg(x: GaussianElement) -> GaussianElement:
    return -x


def gi_mul(x: GaussianElement, y: GaussianElement) -> GaussianElement:
    return x * y


def gi_inv(x: GaussianElement) -> GaussianElement:
    return x.inverse()


def gi_pow(x: GaussianElement, e: int) -> GaussianElement:
    return x ** e
