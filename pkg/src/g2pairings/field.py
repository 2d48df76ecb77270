"""Prime fields, flat extension fields F_p[x]/(m(x)), roots of unity, discrete logs.

Contexts are immutable and deterministic: equal (p, r) inputs always produce
the same modulus, so serialized data is reproducible across runs.  Elements
are coefficient tuples over the prime field; extension multiplication packs
coefficients into big integers (Kronecker substitution) so the heavy lifting
happens in C.
"""

from __future__ import annotations

import random

from . import modpoly

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


class FieldError(ValueError):
    """Invalid field construction or element usage."""


def is_probable_prime(n: int) -> bool:
    """Miller-Rabin; deterministic for n < 3.3e24, 12 fixed bases above."""
    if n < 2:
        return False
    for small in _MR_BASES:
        if n % small == 0:
            return n == small
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class FieldElem:
    """An element of a PrimeFieldCtx or ExtFieldCtx, as a coefficient tuple."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx, coeffs):
        self.ctx = ctx
        self.coeffs = coeffs

    def _coerce(self, other):
        if isinstance(other, FieldElem):
            if other.ctx is not self.ctx and other.ctx != self.ctx:
                raise FieldError("elements from different field contexts")
            return other
        if isinstance(other, int):
            return self.ctx.elem(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        p = self.ctx.p
        return FieldElem(self.ctx, tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        p = self.ctx.p
        return FieldElem(self.ctx, tuple((a - b) % p for a, b in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __neg__(self):
        p = self.ctx.p
        return FieldElem(self.ctx, tuple(-a % p for a in self.coeffs))

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return FieldElem(self.ctx, self.ctx._mul(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result = self.ctx.one()
        base = self
        while e > 0:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def inverse(self):
        if not any(self.coeffs):
            raise ZeroDivisionError("inverse of zero field element")
        ctx = self.ctx
        if ctx.r == 1:
            return FieldElem(ctx, (pow(self.coeffs[0], -1, ctx.p),))
        g, s, _ = _poly_ext_gcd(modpoly.trim(list(self.coeffs)), ctx.modulus, ctx.p)
        inv_lead = pow(g[0], -1, ctx.p)
        s = modpoly.scale(s, inv_lead, ctx.p)
        return FieldElem(ctx, _pad(s, ctx.r))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            return self == self.ctx.elem(other)
        return (isinstance(other, FieldElem) and self.coeffs == other.coeffs
                and (self.ctx is other.ctx or self.ctx == other.ctx))

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        if self.ctx.r == 1:
            return f"{self.coeffs[0]}"
        return f"FieldElem{self.coeffs}"

    def to_json(self):
        return [str(c) for c in self.coeffs]


def _pad(coeffs, r):
    return tuple(coeffs) + (0,) * (r - len(coeffs))


def _poly_ext_gcd(a, b, p):
    """Extended gcd over Z/p[x]: returns (g, s, t) with s*a + t*b = g."""
    r0, r1 = a, b
    s0, s1 = (1,), ()
    t0, t1 = (), (1,)
    while r1:
        q, rem = modpoly.divmod_(r0, r1, p)
        r0, r1 = r1, rem
        s0, s1 = s1, modpoly.sub(s0, modpoly.mul(q, s1, p), p)
        t0, t1 = t1, modpoly.sub(t0, modpoly.mul(q, t1, p), p)
    return r0, s0, t0


class _BaseCtx:
    """Shared context behaviour; see PrimeFieldCtx and ExtFieldCtx."""

    def one(self):
        return self.elem(1)

    def zero(self):
        return self.elem(0)

    def elem(self, value: int) -> FieldElem:
        return FieldElem(self, (value % self.p,) + (0,) * (self.r - 1))

    def from_coeffs(self, coeffs) -> FieldElem:
        coeffs = [int(c) % self.p for c in coeffs]
        if len(coeffs) > self.r:
            raise FieldError(f"coefficient vector longer than degree {self.r}")
        return FieldElem(self, _pad(coeffs, self.r))

    def elem_from_index(self, i: int) -> FieldElem:
        """i-th element in the canonical enumeration (base-p digits, c0 first)."""
        coeffs = []
        for _ in range(self.r):
            coeffs.append(i % self.p)
            i //= self.p
        if i:
            raise FieldError("index out of range for field size")
        return FieldElem(self, tuple(coeffs))

    def random_elem(self, rng: random.Random) -> FieldElem:
        return FieldElem(self, tuple(rng.randrange(self.p) for _ in range(self.r)))

    @property
    def q(self) -> int:
        return self.p ** self.r

    def sqrt(self, x: FieldElem):
        """A square root of x, or None if x is a non-residue (Tonelli-Shanks)."""
        if x.is_zero():
            return self.zero()
        q = self.q
        if x ** ((q - 1) // 2) != self.one():
            return None
        # q - 1 = 2^e * odd
        odd, e = q - 1, 0
        while odd % 2 == 0:
            odd //= 2
            e += 1
        if e == 1:
            return x ** ((q + 1) // 4)
        c = self._nonresidue() ** odd
        y = x ** ((odd + 1) // 2)
        t = x ** odd
        m = e
        one = self.one()
        while t != one:
            t2, i = t, 0
            while t2 != one:
                t2 = t2 * t2
                i += 1
            b = c ** (1 << (m - i - 1))
            y = y * b
            c = b * b
            t = t * c
            m = i
        return y

    def _nonresidue(self) -> FieldElem:
        if getattr(self, "_nr", None) is None:
            half = (self.q - 1) // 2
            i = 1
            while True:
                cand = self.elem_from_index(i)
                if not cand.is_zero() and cand ** half != self.one():
                    self._nr = cand
                    break
                i += 1
        return self._nr

    def to_json(self):
        return {"p": str(self.p), "r": str(self.r),
                "modulus": [str(c) for c in self.modulus]}


class PrimeFieldCtx(_BaseCtx):
    """The field Z/p for an odd prime p."""

    def __init__(self, p: int):
        p = int(p)
        if p <= 2 or not is_probable_prime(p):
            raise FieldError(f"modulus {p} is not an odd prime")
        self.p = p
        self.r = 1
        self.modulus = (0, 1)  # x, so the quotient is F_p itself
        self._nr = None

    def _mul(self, a, b):
        return (a[0] * b[0] % self.p,)

    def __eq__(self, other):
        return isinstance(other, _BaseCtx) and other.p == self.p and other.r == 1

    def __hash__(self):
        return hash((self.p, 1))

    def __repr__(self):
        return f"PrimeFieldCtx({self.p})"


class ExtFieldCtx(_BaseCtx):
    """F_p[x]/(m(x)) for a monic irreducible m of degree r."""

    def __init__(self, base: PrimeFieldCtx, r: int, modulus):
        if r < 1:
            raise FieldError("extension degree must be >= 1")
        modulus = tuple(int(c) % base.p for c in modulus)
        if len(modulus) != r + 1 or modulus[-1] != 1:
            raise FieldError("modulus must be monic of degree r")
        if not modpoly.is_irreducible(modulus, base.p):
            raise FieldError("modulus is not irreducible")
        self.base = base
        self.p = base.p
        self.r = r
        self.modulus = modulus
        self._nr = None
        # Kronecker packing parameters: slots must hold the fold accumulator
        p = self.p
        bound = r * (p - 1) ** 2 * (1 + (r - 1) * (p - 1))
        self._bits = max(bound.bit_length() + 1, 8)
        self._mask = (1 << self._bits) - 1
        # packed x^k mod m for k = r .. 2r-2
        self._redtable = []
        tail = [(-modulus[i]) % p for i in range(r)]  # x^r mod m
        cur = tail[:]
        for _ in range(r - 1):
            self._redtable.append(self._pack(cur))
            carry = cur[-1]
            cur = [0] + cur[:-1]
            if carry:
                for i in range(r):
                    cur[i] = (cur[i] + carry * tail[i]) % p

    def _pack(self, coeffs):
        acc = 0
        for c in reversed(coeffs):
            acc = (acc << self._bits) | c
        return acc

    def _mul(self, a, b):
        p = self.p
        r = self.r
        if r == 1:
            return (a[0] * b[0] % p,)
        prod = self._pack(a) * self._pack(b)
        mask = self._mask
        bits = self._bits
        # fold coefficients of degree >= r through the reduction table
        acc = prod & ((1 << (bits * r)) - 1)
        prod >>= bits * r
        k = 0
        table = self._redtable
        while prod:
            c = prod & mask
            if c:
                acc += c * table[k]
            prod >>= bits
            k += 1
        return tuple(((acc >> (bits * i)) & mask) % p for i in range(r))

    def __eq__(self, other):
        return (isinstance(other, _BaseCtx) and other.p == self.p
                and other.r == self.r and other.modulus == self.modulus)

    def __hash__(self):
        return hash((self.p, self.r, self.modulus))

    def __repr__(self):
        return f"ExtFieldCtx(p={self.p}, r={self.r})"


def make_extension(p: int, r: int) -> ExtFieldCtx:
    """Deterministic degree-r extension of F_p.

    The modulus is the first monic irreducible found by counting coefficient
    vectors (c0, c1, ...) as base-p digits with c0 moving fastest, so repeated
    calls with the same (p, r) give identical contexts.
    """
    base = PrimeFieldCtx(p)
    if r < 1:
        raise FieldError("extension degree must be >= 1")
    index = 0
    while True:
        coeffs = []
        i = index
        for _ in range(r):
            coeffs.append(i % p)
            i //= p
        if i:
            raise FieldError("no irreducible polynomial found")  # unreachable
        cand = tuple(coeffs) + (1,)
        if modpoly.is_irreducible(cand, p):
            return ExtFieldCtx(base, r, cand)
        index += 1


def frobenius_power(x: FieldElem, i: int) -> FieldElem:
    """x^(p^i), the i-th power of the absolute Frobenius."""
    ctx = x.ctx
    if ctx.r == 1 or x.is_zero():
        return x
    e = pow(ctx.p, i % ctx.r, ctx.q - 1)
    return x ** e


def primitive_root_of_unity(ctx, ell: int, n: int) -> FieldElem:
    """A fixed primitive l^n-th root of unity in ctx.

    Deterministic: derived from the first element (canonical enumeration)
    whose (q-1)/l^n power has exact order l^n.
    """
    if n == 0:
        return ctx.one()
    q = ctx.q
    m = ell ** n
    if (q - 1) % m != 0:
        raise FieldError(f"{ell}^{n} does not divide q - 1")
    cof = (q - 1) // m
    sub = ell ** (n - 1)
    i = 1
    while True:
        z = ctx.elem_from_index(i) ** cof
        if not z.is_zero() and z ** sub != ctx.one():
            return z
        i += 1


def dlog_prime_power(zeta: FieldElem, y: FieldElem, ell: int, n: int) -> int:
    """e in [0, l^n) with zeta^e = y; Pohlig-Hellman with per-digit BSGS.

    zeta must have exact order l^n; raises FieldError when y is outside
    the subgroup generated by zeta.
    """
    ctx = zeta.ctx
    one = ctx.one()
    if n == 0:
        if y != one:
            raise FieldError("dlog: y not a root of unity of the stated order")
        return 0
    m = ell ** n
    if zeta ** m != one or (n > 0 and zeta ** (m // ell) == one):
        raise FieldError("dlog: base does not have exact order l^n")
    if y ** m != one:
        raise FieldError("dlog: y is not in the subgroup")
    gamma = zeta ** (ell ** (n - 1))  # order l
    step = max(1, int(ell ** 0.5))
    while step * step < ell:
        step += 1
    baby = {}
    g = one
    for j in range(step):
        baby.setdefault(g.coeffs, j)
        g = g * gamma
    giant = (gamma ** step).inverse()
    zeta_inv = zeta.inverse()
    x = 0
    cur = y
    for k in range(n):
        t = cur ** (ell ** (n - 1 - k))
        digit = None
        w = t
        for i in range(step + 1):
            j = baby.get(w.coeffs)
            if j is not None:
                digit = (i * step + j) % ell
                break
            w = w * giant
        if digit is None:
            raise FieldError("dlog: digit search failed (y not in subgroup)")
        if digit:
            x += digit * ell ** k
            cur = cur * zeta_inv ** (digit * ell ** k)
    return x
