"""Dense polynomial arithmetic over Z/p with plain int coefficients.

Used for constructing extension-field moduli and for factoring minimal
polynomials mod small primes.  Polynomials are tuples of ints in [0, p),
lowest coefficient first, with no trailing zeros (the zero polynomial is
the empty tuple).
"""

from __future__ import annotations


def trim(c: list[int]) -> tuple[int, ...]:
    n = len(c)
    while n > 0 and c[n - 1] == 0:
        n -= 1
    return tuple(c[:n])


def add(a, b, p):
    n = max(len(a), len(b))
    return trim([((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)) % p
                 for i in range(n)])


def sub(a, b, p):
    n = max(len(a), len(b))
    return trim([((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p
                 for i in range(n)])


def mul(a, b, p):
    if not a or not b:
        return ()
    c = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                c[i + j] += ai * bj
    return trim([x % p for x in c])


def scale(a, k, p):
    k %= p
    return trim([ai * k % p for ai in a])


def divmod_(a, b, p):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a)
    q = [0] * max(len(a) - len(b) + 1, 0)
    inv = pow(b[-1], -1, p)
    db = len(b) - 1
    for i in range(len(r) - 1, db - 1, -1):
        coeff = r[i] % p
        if coeff:
            coeff = coeff * inv % p
            q[i - db] = coeff
            for j, bj in enumerate(b):
                r[i - db + j] = (r[i - db + j] - coeff * bj) % p
    return trim(q), trim(r)


def mod(a, b, p):
    return divmod_(a, b, p)[1]


def gcd(a, b, p):
    while b:
        a, b = b, mod(a, b, p)
    if a:
        a = scale(a, pow(a[-1], -1, p), p)
    return a


def monic(a, p):
    if not a:
        return a
    return scale(a, pow(a[-1], -1, p), p)


def pow_mod(a, e, m, p):
    """a^e mod m over Z/p."""
    result = (1,)
    a = mod(a, m, p)
    while e > 0:
        if e & 1:
            result = mod(mul(result, a, p), m, p)
        a = mod(mul(a, a, p), m, p)
        e >>= 1
    return result


def derivative(a, p):
    return trim([i * a[i] % p for i in range(1, len(a))])


def is_irreducible(m, p):
    """Rabin test: x^(p^r) = x mod m, and x^(p^(r/t)) - x coprime to m."""
    r = len(m) - 1
    if r < 1:
        return False
    if r == 1:
        return True
    x = (0, 1)
    xq = pow_mod(x, p ** r, m, p)
    if xq != mod(x, m, p):
        return False
    for t in _prime_factors(r):
        xk = pow_mod(x, p ** (r // t), m, p)
        if gcd(sub(xk, x, p), m, p) != (1,):
            return False
    return True


def _prime_factors(n: int):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _pth_root(m, p):
    """p-th root of a polynomial that is a p-th power (over the prime field)."""
    root = [0] * ((len(m) - 1) // p + 1)
    for i, c in enumerate(m):
        if c and i % p != 0:
            raise ValueError("not a p-th power")
        if i % p == 0:
            root[i // p] = c  # c^(1/p) = c over Z/p
    return trim(root)


def squarefree_decomposition(m, p):
    """Yun-style decomposition m = prod A_i^i over Z/p, char-p aware.

    Returns a list of (A_i, i) with A_i squarefree, pairwise coprime, deg >= 1.
    """
    m = monic(m, p)
    if len(m) <= 1:
        return []
    dm = derivative(m, p)
    if not dm:
        return [(a, i * p) for a, i in squarefree_decomposition(_pth_root(m, p), p)]
    out = []
    c = gcd(m, dm, p)
    w = divmod_(m, c, p)[0]
    i = 1
    while len(w) > 1:
        y = gcd(w, c, p)
        z = divmod_(w, y, p)[0]
        if len(z) > 1:
            out.append((z, i))
        w = y
        c = divmod_(c, y, p)[0]
        i += 1
    if len(c) > 1:
        out.extend((a, j * p) for a, j in squarefree_decomposition(_pth_root(c, p), p))
    return out


def factor_pattern(m, p):
    """(degree, multiplicity) of every irreducible factor of m over Z/p, sorted."""
    out = []
    for part, mult in squarefree_decomposition(m, p):
        for deg, count in _ddf(part, p):
            out.extend([(deg, mult)] * count)
    return sorted(out)


def _ddf(m, p):
    """Distinct-degree factorization pattern of squarefree monic m.

    Returns list of (degree, number_of_factors_of_that_degree).
    """
    out = []
    x = (0, 1)
    xq = x
    d = 0
    while len(m) - 1 >= 2 * (d + 1):
        d += 1
        xq = pow_mod(xq, p, m, p)
        g = gcd(sub(xq, x, p), m, p)
        if len(g) > 1:
            out.append((d, (len(g) - 1) // d))
            m = divmod_(m, g, p)[0]
            xq = mod(xq, m, p)
    if len(m) > 1:
        out.append((len(m) - 1, 1))
    return out
