"""Genus-2 curves in the imaginary model, Mumford divisors, Cantor arithmetic.

The group law keeps hold of the rational functions it implicitly divides out:
`cantor_add_with_trace` returns, along with the reduced sum, the data of a
function c with div(c) = D1 + D2 - D3.  Pairing code consumes these traces to
evaluate Miller functions without re-deriving the group law.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from . import fpoly
from .field import FieldElem, frobenius_power


class CurveError(ValueError):
    """Invalid curve data or divisor usage."""


class CurveParams:
    """A nonsingular genus-2 curve y^2 + h(x) y = f(x), deg f = 5, f monic.

    `ground_deg` is the degree over the prime field of the field the curve is
    *defined* over; the ambient context may be any extension of it.  The
    Frobenius acting on divisors is the p^ground_deg power map.
    """

    __slots__ = ("ctx", "h", "f", "ground_deg")

    def __init__(self, ctx, h, f, ground_deg: int = 1, check: bool = True):
        self.ctx = ctx
        self.h = _as_poly(ctx, h)
        self.f = _as_poly(ctx, f)
        self.ground_deg = ground_deg
        if check:
            validate_curve(self)

    def extend(self, new_ctx) -> "CurveParams":
        """Base-change a curve with prime-field coefficients into new_ctx."""
        if self.ctx.r != 1:
            raise CurveError("extend() expects a curve over a prime field")
        if new_ctx.p != self.ctx.p:
            raise CurveError("extension has a different characteristic")
        h = [new_ctx.elem(c.coeffs[0]) for c in self.h]
        f = [new_ctx.elem(c.coeffs[0]) for c in self.f]
        return CurveParams(new_ctx, h, f, ground_deg=self.ground_deg, check=False)

    def identity(self) -> "MumfordDivisor":
        return MumfordDivisor(self, (self.ctx.one(),), (), check=False)

    def __eq__(self, other):
        return (isinstance(other, CurveParams) and self.ctx == other.ctx
                and self.h == other.h and self.f == other.f)

    def __repr__(self):
        return f"CurveParams(q={self.ctx.q}, h={self.h}, f={self.f})"


def _is_poly(coeffs) -> bool:
    return isinstance(coeffs, tuple) and all(isinstance(c, FieldElem) for c in coeffs)


def _as_poly(ctx, coeffs):
    out = []
    for c in coeffs:
        if isinstance(c, FieldElem):
            if c.ctx != ctx:
                raise CurveError("coefficient from a different field context")
            out.append(c)
        else:
            out.append(ctx.elem(int(c)))
    return fpoly.trim(out)


def validate_curve(curve: CurveParams) -> None:
    """Check the degree and nonsingularity invariants; raise CurveError if bad."""
    h, f = curve.h, curve.f
    if fpoly.deg(h) > 2:
        raise CurveError("deg h must be <= 2")
    if fpoly.deg(f) != 5:
        raise CurveError(f"deg f must be 5, got {fpoly.deg(f)}")
    if f[-1] != curve.ctx.one():
        raise CurveError("f must be monic (rescale first, see normalize_curve)")
    # odd characteristic: singular affine point <=> h^2 + 4f has a repeated root
    disc = fpoly.add(fpoly.mul(h, h), fpoly.scale(f, curve.ctx.elem(4)))
    ddisc = fpoly.trim([disc[i] * curve.ctx.elem(i) for i in range(1, len(disc))])
    g, _, _ = fpoly.ext_gcd(disc, ddisc)
    if fpoly.deg(g) != 0:
        raise CurveError("curve is singular")


def normalize_curve(ctx, h, f):
    """Bring a degree-5 model to monic form by (x, y) -> (c x, c^2 y).

    Returns (CurveParams, record) where record documents the rescaling, or is
    None when the input was already monic.  Degree-6 input is rejected (the
    imaginary model is required; move a rational Weierstrass point to infinity
    first).
    """
    h = _as_poly(ctx, h)
    f = _as_poly(ctx, f)
    if fpoly.deg(f) == 6:
        raise CurveError("degree-6 model not supported; supply a degree-5 model "
                         "with a rational Weierstrass point at infinity")
    if fpoly.deg(f) != 5:
        raise CurveError(f"deg f must be 5, got {fpoly.deg(f)}")
    c = f[-1]
    if c == ctx.one():
        return CurveParams(ctx, h, f), None
    # f_new(X) = c^4 f(X/c) made monic, h_new(X) = c^2 h(X/c)
    powers = [ctx.one()]
    for _ in range(5):
        powers.append(powers[-1] * c)
    f_new = [f[i] * powers[4 - i] if i < 5 else ctx.one() for i in range(6)]
    h_new = [h[i] * powers[2 - i] for i in range(len(h))]
    record = {"x_scale": c.to_json(), "y_scale": (c * c).to_json()}
    return CurveParams(ctx, h_new, f_new), record


class MumfordDivisor:
    """A reduced divisor class (u, v): u monic with deg <= 2, deg v < deg u."""

    __slots__ = ("curve", "u", "v")

    def __init__(self, curve, u, v, check: bool = True):
        self.curve = curve
        self.u = u if _is_poly(u) else _as_poly(curve.ctx, u)
        self.v = v if _is_poly(v) else _as_poly(curve.ctx, v)
        if check:
            self._check()

    def _check(self):
        u, v = self.u, self.v
        if not u:
            raise CurveError("u must be nonzero")
        if u[-1] != self.curve.ctx.one():
            raise CurveError("u must be monic")
        if fpoly.deg(u) > 2:
            raise CurveError("deg u must be <= 2 for a reduced divisor")
        if fpoly.deg(v) >= max(fpoly.deg(u), 1) and fpoly.deg(u) >= 1:
            raise CurveError("deg v must be < deg u")
        if fpoly.deg(u) == 0 and v:
            raise CurveError("identity must have v = 0")
        member = fpoly.add(fpoly.mul(v, v), fpoly.mul(self.curve.h, v))
        member = fpoly.sub(member, self.curve.f)
        if fpoly.mod(member, u):
            raise CurveError("u does not divide v^2 + h v - f")

    def is_identity(self) -> bool:
        return fpoly.deg(self.u) == 0

    def neg(self) -> "MumfordDivisor":
        if self.is_identity():
            return self
        v = fpoly.mod(fpoly.neg(fpoly.add(self.v, self.curve.h)), self.u)
        return MumfordDivisor(self.curve, self.u, v, check=False)

    def __add__(self, other):
        if not isinstance(other, MumfordDivisor):
            return NotImplemented
        return cantor_add(self, other)

    def __sub__(self, other):
        if not isinstance(other, MumfordDivisor):
            return NotImplemented
        return cantor_add(self, other.neg())

    def __neg__(self):
        return self.neg()

    def __rmul__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        return scalar_mul(self, k)

    def __eq__(self, other):
        return (isinstance(other, MumfordDivisor) and self.u == other.u
                and self.v == other.v)

    def __hash__(self):
        return hash((self.u, self.v))

    def key(self):
        """Hashable coefficient key (useful as a dict index)."""
        return (tuple(c.coeffs for c in self.u), tuple(c.coeffs for c in self.v))

    def __repr__(self):
        return f"MumfordDivisor(u={list(self.u)}, v={list(self.v)})"

    def to_json(self):
        return {"u": [c.to_json() for c in self.u],
                "v": [c.to_json() for c in self.v]}


def _compose(D1: MumfordDivisor, D2: MumfordDivisor):
    """Cantor composition; returns semi-reduced (u, v) and the gcd polynomial d
    with D1 + D2 = (u, v) + div(d)."""
    curve = D1.curve
    u1, v1, u2, v2 = D1.u, D1.v, D2.u, D2.v
    d1, e1, e2 = fpoly.ext_gcd(u1, u2)
    vsum = fpoly.add(fpoly.add(v1, v2), curve.h)
    d, c1, c2 = fpoly.ext_gcd(d1, vsum)
    s1, s2 = fpoly.mul(c1, e1), fpoly.mul(c1, e2)
    s3 = c2
    u = fpoly.exact_div(fpoly.mul(u1, u2), fpoly.mul(d, d))
    num = fpoly.add(fpoly.mul(fpoly.mul(s1, u1), v2), fpoly.mul(fpoly.mul(s2, u2), v1))
    num = fpoly.add(num, fpoly.mul(s3, fpoly.add(fpoly.mul(v1, v2), curve.f)))
    v = fpoly.mod(fpoly.exact_div(num, d), u)
    return u, v, d


def _reduce(curve: CurveParams, u, v):
    """Cantor reduction; returns reduced (u, v) plus [(v_i, u_next_i)] where
    each step divides out the function (y - v_i) / u_next_i."""
    steps = []
    while fpoly.deg(u) > 2:
        num = fpoly.sub(curve.f, fpoly.add(fpoly.mul(v, curve.h), fpoly.mul(v, v)))
        unext = fpoly.monic(fpoly.exact_div(num, u))
        vnext = fpoly.mod(fpoly.neg(fpoly.add(curve.h, v)), unext)
        steps.append((v, unext))
        u, v = unext, vnext
    return fpoly.monic(u), v, steps


def cantor_add_with_trace(D1: MumfordDivisor, D2: MumfordDivisor):
    """Reduced sum D3 and the trace (d, steps) of the function c with
    div(c) = D1 + D2 - D3, where c = d(x) * prod (y - v_i(x)) / u_i(x)."""
    if D1.curve != D2.curve:
        raise CurveError("divisors on different curves")
    u, v, d = _compose(D1, D2)
    u, v, steps = _reduce(D1.curve, u, v)
    return MumfordDivisor(D1.curve, u, v, check=False), (d, steps)


def cantor_add(D1: MumfordDivisor, D2: MumfordDivisor) -> MumfordDivisor:
    return cantor_add_with_trace(D1, D2)[0]


def scalar_mul(D: MumfordDivisor, k: int) -> MumfordDivisor:
    if k < 0:
        return scalar_mul(D.neg(), -k)
    acc = D.curve.identity()
    base = D
    while k > 0:
        if k & 1:
            acc = cantor_add(acc, base)
        base = cantor_add(base, base)
        k >>= 1
    return acc


def solve_curve_y(curve: CurveParams, x: FieldElem):
    """The y-values over x on the curve: [] (no point), [y] or [y1, y2]."""
    hx = fpoly.evaluate(curve.h, x)
    fx = fpoly.evaluate(curve.f, x)
    disc = hx * hx + 4 * fx
    s = curve.ctx.sqrt(disc)
    if s is None:
        return []
    inv2 = curve.ctx.elem(2).inverse()
    y1 = (-hx + s) * inv2
    y2 = (-hx - s) * inv2
    return [y1] if y1 == y2 else [y1, y2]


def divisor_from_points(curve: CurveParams, pts) -> MumfordDivisor:
    """Reduced divisor from one or two affine points with distinct x."""
    ctx = curve.ctx
    if len(pts) == 1:
        (x0, y0), = pts
        return MumfordDivisor(curve, (-x0, ctx.one()), (y0,))
    (x1, y1), (x2, y2) = pts
    if x1 == x2:
        raise CurveError("points must have distinct x-coordinates")
    u = fpoly.mul((-x1, ctx.one()), (-x2, ctx.one()))
    slope = (y2 - y1) * (x2 - x1).inverse()
    v = fpoly.trim([y1 - slope * x1, slope])
    return MumfordDivisor(curve, u, v)


def random_divisor(curve: CurveParams, rng) -> MumfordDivisor:
    """A pseudo-random reduced divisor; deterministic for a seeded rng.

    Samples one or two affine points with rational x and pairs them; retries
    internally when the fibre above a sampled x is empty.
    """
    if isinstance(rng, int):
        rng = random.Random(rng)
    ctx = curve.ctx
    for _ in range(10000):
        if rng.randrange(8) == 0:
            x0 = ctx.random_elem(rng)
            ys = solve_curve_y(curve, x0)
            if not ys:
                continue
            return divisor_from_points(curve, [(x0, rng.choice(ys))])
        x1 = ctx.random_elem(rng)
        x2 = ctx.random_elem(rng)
        if x1 == x2:
            continue
        ys1 = solve_curve_y(curve, x1)
        ys2 = solve_curve_y(curve, x2)
        if not ys1 or not ys2:
            continue
        return divisor_from_points(curve, [(x1, rng.choice(ys1)), (x2, rng.choice(ys2))])
    raise CurveError("failed to sample a divisor (curve has too few points?)")


def frobenius_on_divisor(D: MumfordDivisor) -> MumfordDivisor:
    """Apply the ground-field Frobenius x -> x^(p^ground_deg) coefficient-wise."""
    e = D.curve.ground_deg
    u = tuple(frobenius_power(c, e) for c in D.u)
    v = tuple(frobenius_power(c, e) for c in D.v)
    return MumfordDivisor(D.curve, u, v, check=False)


@dataclass(frozen=True)
class ZetaData:
    """Weil polynomial data: P(x) = x^4 - s1 x^3 + s2 x^2 - q s1 x + q^2."""

    q: int
    s1: int
    s2: int

    def __post_init__(self):
        if self.s1 * self.s1 > 16 * self.q:
            raise CurveError("|s1| violates the Weil bound")
        if abs(self.s2) > 6 * self.q:
            raise CurveError("|s2| violates the Weil bound")
        if self.order(1) <= 0:
            raise CurveError("P(1) must be positive")

    def charpoly(self):
        """Coefficients of P, lowest degree first."""
        return (self.q * self.q, -self.q * self.s1, self.s2, -self.s1, 1)

    def power_sums(self, r: int):
        """Newton power sums t_k = sum alpha_i^k of the Frobenius roots, k <= r."""
        e1, e2, e3, e4 = self.s1, self.s2, self.q * self.s1, self.q * self.q
        t = [4]  # t_0
        for k in range(1, r + 1):
            if k == 1:
                t.append(e1)
            elif k == 2:
                t.append(e1 * t[1] - 2 * e2)
            elif k == 3:
                t.append(e1 * t[2] - e2 * t[1] + 3 * e3)
            elif k == 4:
                t.append(e1 * t[3] - e2 * t[2] + e3 * t[1] - 4 * e4)
            else:
                t.append(e1 * t[k - 1] - e2 * t[k - 2] + e3 * t[k - 3] - e4 * t[k - 4])
        return t

    def order(self, r: int = 1) -> int:
        """#J(F_{q^r}), evaluated exactly over the integers."""
        t = self.power_sums(2 * r)
        n1 = self.q ** r + 1 - t[r]
        n2 = self.q ** (2 * r) + 1 - t[2 * r]
        return (n1 * n1 + n2) // 2 - self.q ** r

    def base_extend(self, r: int) -> "ZetaData":
        """Zeta data of the same Jacobian over F_{q^r}."""
        t = self.power_sums(2 * r)
        return ZetaData(self.q ** r, t[r], (t[r] * t[r] - t[2 * r]) // 2)


def order_from_zeta(zeta: ZetaData, r: int) -> int:
    if r < 1:
        raise CurveError("extension degree must be >= 1")
    return zeta.order(r)
