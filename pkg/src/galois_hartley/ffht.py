"""Finite field Hartley transform by direct O(N^2) summation.

    V_k = sum_i v_i cas_k(i)            (forward)
    v_i = N^-1 sum_k V_k cas_k(i)       (inverse, same kernel)

Signals and spectra hold values in GI(q^m); a GF(q)-valued signal is the
special case with zero imaginary parts and coefficients in the embedded
base field.
"""

from __future__ import annotations

from collections.abc import Iterator, Sequence
from dataclasses import dataclass, field

from .errors import FieldMismatch, LengthMismatch, PlanMismatch
from .gaussian_ext import GaussianElement, GaussianField, _gi as _gi_pair
from .gf_core import FieldElement, FieldSpec, format_poly, make_field
from .ktrig import TrigContext, make_trig_context

__all__ = [
    "TransformPlan",
    "Signal",
    "Spectrum",
    "make_plan",
    "forward",
    "inverse",
    "convolve_spectral",
    "convolve_naive",
    "shift_spectrum",
    "dc_term",
    "initial_value",
    "reverse",
    "rotate",
    "time_reverse",
]


@dataclass(frozen=True, eq=False)
class TransformPlan:
    """Everything fixed for one transform length.

    ``base`` is GF(q), ``ext`` is GF(q^m) where the kernel element lives.
    ``base_root`` is the image in ``ext`` of the base field's generator x
    (``None`` when the base field is prime or ``m == 1``).
    """

    base: FieldSpec
    ext: FieldSpec
    m: int
    trig: TrigContext
    inv_n: FieldElement = field(repr=False)
    base_root: FieldElement | None = field(default=None, repr=False)
    packer: _Packer = field(default=None, repr=False)
    cas_packed: tuple[tuple[int, int, int], ...] = field(default=(), repr=False)

    @property
    def N(self) -> int:
        return self.trig.N

    @property
    def q(self) -> int:
        return self.base.q

    @property
    def alpha(self) -> FieldElement:
        return self.trig.alpha

    @property
    def gi(self) -> GaussianField:
        return self.trig.gi

    def __eq__(self, other) -> bool:
        if not isinstance(other, TransformPlan):
            return NotImplemented
        return self.base == other.base and self.ext == other.ext and self.trig == other.trig

    def __hash__(self) -> int:
        return hash((self.base, self.ext, self.alpha))

    def embed(self, x: FieldElement) -> FieldElement:
        """Injection GF(q) -> GF(q^m)."""
        if x.spec != self.base:
            raise FieldMismatch(f"{x!r} is not in {self.base}")
        if self.m == 1:
            return x
        if self.base_root is None:
            return self.ext(x.coeffs[0])
        acc, power = self.ext.zero, self.ext.one
        for c in x.coeffs:
            if c:
                acc = acc + power * c
            power = power * self.base_root
        return acc

    def is_base_valued(self, x: GaussianElement) -> bool:
        """True when x lies in the embedded copy of GF(q) (x^q = x and no j part)."""
        return x.im.is_zero() and x.re.frobenius(self.base.r) == x.re

    def element(self, value) -> GaussianElement:
        if isinstance(value, GaussianElement):
            if value.spec == self.ext:
                return value
            if value.spec == self.base:
                return self.gi(self.embed(value.re), self.embed(value.im))
            raise FieldMismatch(f"{value!r} is over neither {self.base} nor {self.ext}")
        if isinstance(value, FieldElement):
            if value.spec == self.ext:
                return self.gi.embed(value)
            return self.gi.embed(self.embed(value))
        if isinstance(value, int):
            return self.gi.embed(self.ext(value))
        if isinstance(value, str):
            return self.gi.parse(value)
        raise TypeError(f"cannot read {value!r} as an element of GI({self.ext.q})")

    def signal(self, values) -> Signal:
        return Signal(self, self._values(values))

    def spectrum(self, values) -> Spectrum:
        return Spectrum(self, self._values(values))

    def _values(self, values) -> tuple[GaussianElement, ...]:
        if isinstance(values, str):
            values = values.split(",")
        vals = tuple(self.element(v) for v in values)
        if len(vals) != self.N:
            raise LengthMismatch(f"expected {self.N} values, got {len(vals)}")
        return vals

    def describe(self) -> dict:
        return {
            "p": self.base.p,
            "r": self.base.r,
            "m": self.m,
            "q": self.base.q,
            "modulus": format_poly(self.base.modulus),
            "ext_modulus": format_poly(self.ext.modulus),
            "alpha": str(self.alpha),
            "N": self.N,
        }


class _Vector:
    __slots__ = ("plan", "values")

    def __init__(self, plan: TransformPlan, values: Sequence[GaussianElement]):
        values = tuple(values)
        if len(values) != plan.N:
            raise LengthMismatch(f"expected {plan.N} values, got {len(values)}")
        object.__setattr__(self, "plan", plan)
        object.__setattr__(self, "values", values)

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, k):
        return self.values[k]

    def __iter__(self) -> Iterator[GaussianElement]:
        return iter(self.values)

    def __eq__(self, other) -> bool:
        if type(other) is not type(self):
            return NotImplemented
        return self.values == other.values and self.plan == other.plan

    def __hash__(self) -> int:
        return hash(self.values)

    def __str__(self) -> str:
        return ",".join(str(v) for v in self.values)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self})"

    def scale(self, c):
        return type(self)(self.plan, [c * v for v in self.values])

    def __add__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        _same_plan(self.plan, other)
        return type(self)(self.plan, [a + b for a, b in zip(self.values, other.values)])


class Signal(_Vector):
    """Time-domain vector v_0 ... v_{N-1}."""


class Spectrum(_Vector):
    """Hartley-domain vector V_0 ... V_{N-1}."""


def make_plan(
    base: FieldSpec,
    m: int = 1,
    *,
    alpha=None,
    N: int | None = None,
    ext_modulus=None,
) -> TransformPlan:
    """Plan a length-N transform of GF(q) signals with kernel alpha in GF(q^m).

    ``alpha`` may be an element of GF(q^m) or its text form. With only ``N``
    the smallest element of that order is chosen; with neither, the smallest
    primitive element.
    """
    if m < 1:
        raise ValueError(f"extension degree m must be >= 1, got {m}")
    base_root = None
    if m == 1:
        if ext_modulus is not None and make_field(base.p, base.r, ext_modulus) != base:
            raise FieldMismatch("with m = 1 the extension field is the base field")
        ext = base
    else:
        ext = make_field(base.p, base.r * m, ext_modulus)
        if base.r > 1:
            base_root = _find_root(base, ext)
    gi = GaussianField(ext)
    if isinstance(alpha, str):
        alpha = ext.parse(alpha)
    elif isinstance(alpha, int):
        alpha = ext(alpha)
    if alpha is None and N is None:
        N = ext.q - 1
    trig = make_trig_context(gi.base, alpha, N)
    packer = _Packer(ext, trig.N)
    cas_packed = tuple(
        (packer.pack(c.re), packer.pack(c.im), packer.pack(-c.im)) for c in trig.cas_table
    )
    # N | q^m - 1, so N is prime to p and invertible
    return TransformPlan(
        base=base,
        ext=ext,
        m=m,
        trig=trig,
        inv_n=ext(trig.N).inverse(),
        base_root=base_root,
        packer=packer,
        cas_packed=cas_packed,
    )


class _Packer:
    """Kronecker substitution: a polynomial becomes one integer with wide digits.

    Digits are wide enough that a sum of 2N products of reduced polynomials
    never carries, so one big-integer product performs a whole polynomial
    product and reduction happens once per accumulated sum.
    """

    def __init__(self, spec: FieldSpec, n_terms: int):
        self.spec = spec
        bound = 2 * n_terms * spec.r * (spec.p - 1) ** 2
        self.width = bound.bit_length() + 1
        self.mask = (1 << self.width) - 1

    def pack(self, x: FieldElement) -> int:
        out = 0
        for c in reversed(x.coeffs):
            out = (out << self.width) | c
        return out

    def unpack(self, n: int) -> FieldElement:
        spec, w, mask = self.spec, self.width, self.mask
        digits = []
        while n:
            digits.append(n & mask)
            n >>= w
        return spec.element(digits)


def _find_root(base: FieldSpec, ext: FieldSpec) -> FieldElement:
    """First root (in index order) of the base modulus inside ext."""
    for beta in ext.elements():
        acc = ext.zero
        for c in reversed(base.modulus):
            acc = acc * beta + c
        if acc.is_zero():
            return beta
    raise AssertionError(f"{base} does not embed in {ext}")


def _as_values(plan: TransformPlan, v) -> tuple[GaussianElement, ...]:
    if isinstance(v, _Vector):
        _same_plan(plan, v)
        return v.values
    return plan._values(v)


def _same_plan(plan: TransformPlan, v: _Vector) -> None:
    if v.plan is not plan and v.plan != plan:
        raise PlanMismatch(f"vector was built for a different plan (alpha={v.plan.alpha}, N={v.plan.N})")


def _hartley(plan: TransformPlan, values: Sequence[GaussianElement]) -> list[GaussianElement]:
    """out_k = sum_i values_i cas_k(i), accumulated on packed integers."""
    n = plan.N
    cas = plan.cas_packed
    pk = plan.packer
    nz = [(i, pk.pack(x.re), pk.pack(x.im)) for i, x in enumerate(values) if not x.is_zero()]
    out = []
    for k in range(n):
        acc_re = acc_im = 0
        for i, a, b in nz:
            c, s, neg_s = cas[(i * k) % n]
            # (a + jb)(c + js) = (ac - bs) + j(as + bc)
            acc_re += a * c + b * neg_s
            acc_im += a * s + b * c
        out.append(_gi_pair(pk.unpack(acc_re), pk.unpack(acc_im)))
    return out


def forward(plan: TransformPlan, v) -> Spectrum:
    """Hartley spectrum of ``v``.

    Accepts a :class:`Signal`, a raw sequence, or a :class:`Spectrum` (the
    kernel is self-dual, so transforming a spectrum returns N times its signal).
    """
    return Spectrum(plan, _hartley(plan, _as_values(plan, v)))


def inverse(plan: TransformPlan, V) -> Signal:
    inv_n = plan.inv_n
    return Signal(plan, [x * inv_n for x in _hartley(plan, _as_values(plan, V))])


def convolve_naive(plan: TransformPlan, g, v) -> Signal:
    """Cyclic convolution w_n = sum_i g_i v_{n-i} by the double loop."""
    gv, vv = _as_values(plan, g), _as_values(plan, v)
    n = plan.N
    out = []
    for k in range(n):
        acc = plan.gi.zero
        for i in range(n):
            acc = acc + gv[i] * vv[(k - i) % n]
        out.append(acc)
    return Signal(plan, out)


def convolve_spectral(plan: TransformPlan, g, v) -> Signal:
    """Cyclic convolution through the Hartley domain.

    W_k = (G_k V_k + G_k V_-k + G_-k V_k - G_-k V_-k) / 2
    """
    G = forward(plan, g).values
    V = forward(plan, v).values
    n = plan.N
    half = plan.trig.inv2
    W = []
    for k in range(n):
        gk, gm, vk, vm = G[k], G[-k % n], V[k], V[-k % n]
        W.append((gk * vk + gk * vm + gm * vk - gm * vm) * half)
    return inverse(plan, Spectrum(plan, W))


def shift_spectrum(plan: TransformPlan, G, d: int) -> Spectrum:
    """Spectrum of the signal delayed by d: V_k = cos_k(d) G_k + sin_k(d) G_-k."""
    gv = _as_values(plan, G)
    n = plan.N
    t = plan.trig
    return Spectrum(plan, [t.cos(k, d) * gv[k] + t.sin(k, d) * gv[-k % n] for k in range(n)])


def dc_term(plan: TransformPlan, V) -> GaussianElement:
    """V_0, which equals the sum of the signal's samples."""
    return _as_values(plan, V)[0]


def initial_value(plan: TransformPlan, V) -> GaussianElement:
    """v_0 recovered as N^-1 times the sum of the spectrum."""
    acc = plan.gi.zero
    for x in _as_values(plan, V):
        acc = acc + x
    return acc * plan.inv_n


def reverse(plan: TransformPlan, V) -> Spectrum:
    vals = _as_values(plan, V)
    n = plan.N
    return Spectrum(plan, [vals[-k % n] for k in range(n)])


def rotate(plan: TransformPlan, g, d: int) -> Signal:
    """Cyclic delay: out_i = g_{i-d}."""
    vals = _as_values(plan, g)
    n = plan.N
    return Signal(plan, [vals[(i - d) % n] for i in range(n)])


def time_reverse(plan: TransformPlan, g) -> Signal:
    vals = _as_values(plan, g)
    n = plan.N
    return Signal(plan, [vals[-i % n] for i in range(n)])
