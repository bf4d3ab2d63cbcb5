"""k-trigonometric kernels over a fixed element alpha of order N.

    cos_k(i) = (alpha^(ik) + alpha^(-ik)) / 2
    sin_k(i) = (alpha^(ik) - alpha^(-ik)) / 2j
    cas_k(i) = cos_k(i) + sin_k(i)

Each kernel depends on (i, k) only through ik mod N, so the context keeps one
length-N table per kernel indexed by that exponent.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import NoSuchOrder
from .gaussian_ext import GaussianElement, GaussianField
from .gf_core import FieldElement, FieldSpec, element_order, find_element_of_order

__all__ = ["TrigContext", "make_trig_context", "cos_k", "sin_k", "cas_k", "trig_table"]


@dataclass(frozen=True, eq=False)
class TrigContext:
    host: FieldSpec
    alpha: FieldElement
    N: int
    gi: GaussianField = field(repr=False)
    inv2: FieldElement = field(repr=False)
    powers: tuple[FieldElement, ...] = field(repr=False)
    cos_table: tuple[GaussianElement, ...] = field(repr=False)
    sin_table: tuple[GaussianElement, ...] = field(repr=False)
    cas_table: tuple[GaussianElement, ...] = field(repr=False)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TrigContext):
            return NotImplemented
        return self.host == other.host and self.alpha == other.alpha

    def __hash__(self) -> int:
        return hash((self.host, self.alpha))

    def scalar(self, n: int) -> GaussianElement:
        """The integer n reduced mod p, as an element of GI."""
        return self.gi.embed(self.host(n))

    def cos(self, k: int, i: int) -> GaussianElement:
        return self.cos_table[(i * k) % self.N]

    def sin(self, k: int, i: int) -> GaussianElement:
        return self.sin_table[(i * k) % self.N]

    def cas(self, k: int, i: int) -> GaussianElement:
        return self.cas_table[(i * k) % self.N]


def make_trig_context(host: FieldSpec, alpha: FieldElement | None = None, N: int | None = None) -> TrigContext:
    """Build the kernel tables for ``alpha`` (or the first element of order ``N``).

    Raises :class:`NoSuchOrder` if ``alpha`` is given and its order is not ``N``.
    """
    gi = GaussianField(host)
    if alpha is None:
        if N is None:
            raise ValueError("need alpha or N")
        alpha = find_element_of_order(host, N)
    alpha = host.element(alpha)
    order = element_order(alpha)
    if N is not None and order != N:
        raise NoSuchOrder(f"{alpha} has order {order}, not {N}")
    N = order

    inv2 = host(2).inverse()
    powers = [host.one]
    for _ in range(N - 1):
        powers.append(powers[-1] * alpha)
    zero = host.zero
    cos_t, sin_t, cas_t = [], [], []
    for e in range(N):
        a, a_inv = powers[e], powers[-e % N]
        c = (a + a_inv) * inv2
        # 1/(2j) = -j/2, so sin = -j (a - a^-1) / 2 = j (a^-1 - a) / 2
        s = (a_inv - a) * inv2
        cos_t.append(gi(c, zero))
        sin_t.append(gi(zero, s))
        cas_t.append(gi(c, s))
    return TrigContext(
        host=host,
        alpha=alpha,
        N=N,
        gi=gi,
        inv2=inv2,
        powers=tuple(powers),
        cos_table=tuple(cos_t),
        sin_table=tuple(sin_t),
        cas_table=tuple(cas_t),
    )


def cos_k(ctx: TrigContext, k: int, i: int) -> GaussianElement:
    return ctx.cos(k, i)


def sin_k(ctx: TrigContext, k: int, i: int) -> GaussianElement:
    return ctx.sin(k, i)


def cas_k(ctx: TrigContext, k: int, i: int) -> GaussianElement:
    return ctx.cas(k, i)


def trig_table(ctx: TrigContext) -> tuple[list[list[GaussianElement]], list[list[GaussianElement]]]:
    """N x N matrices ``(cos, sin)`` with rows indexed by k and columns by i."""
    n = ctx.N
    cos_m = [[ctx.cos(k, i) for i in range(n)] for k in range(n)]
    sin_m = [[ctx.sin(k, i) for i in range(n)] for k in range(n)]
    return cos_m, sin_m
