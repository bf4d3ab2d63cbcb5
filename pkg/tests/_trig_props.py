"""Exhaustive checks of the k-trigonometric identities.

Each checker returns the list of failing index tuples (empty on success).
"""

from __future__ import annotations

from galois_hartley.ktrig import TrigContext


def unit_circle(ctx: TrigContext):
    n, one = ctx.N, ctx.gi.one
    return [(k, i) for k in range(n) for i in range(n)
            if ctx.sin(k, i) * ctx.sin(k, i) + ctx.cos(k, i) * ctx.cos(k, i) != one]


def parity(ctx: TrigContext):
    n = ctx.N
    return [(k, i) for k in range(n) for i in range(n)
            if ctx.cos(k, i) != ctx.cos(k, -i) or ctx.sin(k, i) != -ctx.sin(k, -i)]


def euler(ctx: TrigContext):
    n, j = ctx.N, ctx.gi.j
    return [(k, i) for k in range(n) for i in range(n)
            if ctx.gi.embed(ctx.alpha ** (i * k)) != ctx.cos(k, i) + j * ctx.sin(k, i)]


def arc_addition(ctx: TrigContext):
    n = ctx.N
    bad = []
    for k in range(n):
        for i in range(n):
            ci, si = ctx.cos(k, i), ctx.sin(k, i)
            for t in range(n):
                ct, st = ctx.cos(k, t), ctx.sin(k, t)
                if ctx.cos(k, i + t) != ci * ct - si * st or ctx.sin(k, i + t) != si * ct + st * ci:
                    bad.append((k, i, t))
    return bad


def double_arc(ctx: TrigContext):
    n, one = ctx.N, ctx.gi.one
    half = ctx.gi.embed(ctx.inv2)
    bad = []
    for k in range(n):
        for i in range(n):
            c2 = ctx.cos(k, 2 * i)
            if ctx.cos(k, i) * ctx.cos(k, i) != (one + c2) * half:
                bad.append((k, i))
            elif ctx.sin(k, i) * ctx.sin(k, i) != (one - c2) * half:
                bad.append((k, i))
    return bad


def symmetry(ctx: TrigContext):
    n = ctx.N
    return [(k, i) for k in range(n) for i in range(n)
            if ctx.cos(k, i) != ctx.cos(i, k) or ctx.sin(k, i) != ctx.sin(i, k)]


def _sum(ctx, terms):
    acc = ctx.gi.zero
    for t in terms:
        acc = acc + t
    return acc


def cos_summation(ctx: TrigContext):
    n = ctx.N
    return [i for i in range(n)
            if _sum(ctx, (ctx.cos(k, i) for k in range(n))) != (ctx.scalar(n) if i == 0 else ctx.gi.zero)]


def sin_summation(ctx: TrigContext):
    n = ctx.N
    return [i for i in range(n) if _sum(ctx, (ctx.sin(k, i) for k in range(n))) != ctx.gi.zero]


def cos_sin_orthogonality(ctx: TrigContext):
    n = ctx.N
    return [(i, t) for i in range(n) for t in range(n)
            if _sum(ctx, (ctx.cos(k, i) * ctx.sin(k, t) for k in range(n))) != ctx.gi.zero]


def cas_orthogonality(ctx: TrigContext):
    n = ctx.N
    bad = []
    for i in range(n):
        for t in range(n):
            h = _sum(ctx, (ctx.cas(k, i) * ctx.cas(k, t) for k in range(n)))
            if h != (ctx.scalar(n) if i == t else ctx.gi.zero):
                bad.append((i, t))
    return bad


ALL = {
    "unit circle": unit_circle,
    "even/odd": parity,
    "Euler": euler,
    "arc addition": arc_addition,
    "double arc": double_arc,
    "symmetry": symmetry,
    "cos summation": cos_summation,
    "sin summation": sin_summation,
    "cos/sin orthogonality": cos_sin_orthogonality,
    "cas orthogonality": cas_orthogonality,
}
