"""Polynomials with FieldElem coefficients (dense tuples, lowest term first).

The zero polynomial is the empty tuple; nonzero polynomials carry no trailing
zero coefficients.  Everything here is context-agnostic plumbing shared by the
Cantor group law and the Miller loop.
"""

from __future__ import annotations


def trim(coeffs):
    n = len(coeffs)
    while n > 0 and coeffs[n - 1].is_zero():
        n -= 1
    return tuple(coeffs[:n])


def deg(a) -> int:
    return len(a) - 1  # -1 for the zero polynomial


def from_ints(ctx, ints):
    return trim([ctx.elem(c) for c in ints])


def add(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = out[i] + c
    return trim(out)


def neg(a):
    return tuple(-c for c in a)


def sub(a, b):
    return add(a, neg(b))


def mul(a, b):
    if not a or not b:
        return ()
    zero = a[0].ctx.zero()
    out = [zero] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai.is_zero():
            continue
        for j, bj in enumerate(b):
            out[i + j] = out[i + j] + ai * bj
    return trim(out)


def scale(a, k):
    if k.is_zero():
        return ()
    return tuple(c * k for c in a)


def divmod_(a, b):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a)
    if len(a) < len(b):
        return (), a
    inv = b[-1].inverse()
    zero = b[-1].ctx.zero()
    q = [zero] * (len(a) - len(b) + 1)
    db = len(b) - 1
    for i in range(len(r) - 1, db - 1, -1):
        c = r[i]
        if c.is_zero():
            continue
        c = c * inv
        q[i - db] = c
        for j, bj in enumerate(b):
            r[i - db + j] = r[i - db + j] - c * bj
    return trim(q), trim(r)


def mod(a, b):
    return divmod_(a, b)[1]


def exact_div(a, b):
    q, r = divmod_(a, b)
    if r:
        raise ArithmeticError("polynomial division was not exact")
    return q


def monic(a):
    if not a or a[-1] == a[-1].ctx.one():
        return a
    return scale(a, a[-1].inverse())


def ext_gcd(a, b):
    """(g, s, t) with s*a + t*b = g and g monic (or zero)."""
    ctx = None
    for poly in (a, b):
        if poly:
            ctx = poly[0].ctx
            break
    if ctx is None:
        raise ZeroDivisionError("gcd of zero polynomials")
    one, zero = (ctx.one(),), ()
    r0, r1 = a, b
    s0, s1 = one, zero
    t0, t1 = zero, one
    while r1:
        q, rem = divmod_(r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, sub(s0, mul(q, s1))
        t0, t1 = t1, sub(t0, mul(q, t1))
    if r0 and r0[-1] != ctx.one():
        inv = r0[-1].inverse()
        r0, s0, t0 = scale(r0, inv), scale(s0, inv), scale(t0, inv)
    return r0, s0, t0


def evaluate(a, x):
    if not a:
        return x.ctx.zero()
    acc = a[-1]
    for c in reversed(a[:-1]):
        acc = acc * x + c
    return acc


def resultant(a, b):
    """Res(a, b) via the Euclidean algorithm; returns a FieldElem."""
    ctx = (a or b)[0].ctx
    if not a or not b:
        return ctx.zero()
    if deg(a) == 0:
        return a[0] ** deg(b) if deg(b) >= 0 else ctx.one()
    if deg(b) == 0:
        return b[0] ** deg(a)
    sign_flip = (deg(a) * deg(b)) % 2 == 1
    r = mod(a, b)
    if not r:
        return ctx.zero()
    value = b[-1] ** (deg(a) - deg(r)) * resultant(b, r)
    return -value if sign_flip else value
