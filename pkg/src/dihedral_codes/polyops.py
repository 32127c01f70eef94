"""Dense polynomial arithmetic over any ring object from ``galois_ring``.

Polynomials are Python lists of ring elements in ascending degree order,
trimmed so the zero polynomial is ``[]``.  Functions with an ``r`` prefix
work over the residue ring: every coefficient is reduced mod p.
"""
from __future__ import annotations

from typing import Sequence

from .errors import InternalBezoutFailure, NotAUnit


def trim(ring, a: Sequence) -> list:
    out = list(a)
    z = ring.zero
    while out and out[-1] == z:
        out.pop()
    return out


def degree(a: Sequence) -> int:
    """Degree with -1 as the zero-polynomial sentinel."""
    return len(a) - 1


def padd(ring, a: Sequence, b: Sequence) -> list:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = ring.add(out[i], c)
    return trim(ring, out)


def pneg(ring, a: Sequence) -> list:
    return [ring.neg(c) for c in a]


def psub(ring, a: Sequence, b: Sequence) -> list:
    return padd(ring, a, pneg(ring, b))


def pscale(ring, c, a: Sequence) -> list:
    return trim(ring, [ring.mul(c, x) for x in a])


def pmul(ring, a: Sequence, b: Sequence) -> list:
    if not a or not b:
        return []
    out = [ring.zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == ring.zero:
            continue
        for j, y in enumerate(b):
            out[i + j] = ring.add(out[i + j], ring.mul(x, y))
    return trim(ring, out)


def pdivmod(ring, a: Sequence, b: Sequence) -> tuple[list, list]:
    """Division with remainder; the leading coefficient of ``b`` must be a unit."""
    b = trim(ring, b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    lead_inv = ring.inv(b[-1])
    r = trim(ring, a)
    db = len(b) - 1
    q = [ring.zero] * max(len(r) - db, 0)
    while len(r) - 1 >= db:
        c = ring.mul(r[-1], lead_inv)
        shift = len(r) - 1 - db
        q[shift] = c
        for j, bj in enumerate(b):
            r[shift + j] = ring.sub(r[shift + j], ring.mul(c, bj))
        r = trim(ring, r)
    return trim(ring, q), r


def pmod(ring, a: Sequence, b: Sequence) -> list:
    return pdivmod(ring, a, b)[1]


def exact_div(ring, a: Sequence, b: Sequence) -> list:
    q, r = pdivmod(ring, a, b)
    if r:
        raise ArithmeticError("polynomial division is not exact")
    return q


def reverse(ring, a: Sequence) -> list:
    """Coefficient reversal x^deg(a) a(1/x)."""
    return trim(ring, list(reversed(trim(ring, a))))


def x_pow_minus_one(ring, n: int) -> list:
    return [ring.neg(ring.one)] + [ring.zero] * (n - 1) + [ring.one]


def cyclic_mul(ring, a: Sequence, b: Sequence, n: int) -> list:
    """Product in ring[x]/(x^n - 1)."""
    out = [ring.zero] * n
    for i, x in enumerate(a):
        if x == ring.zero:
            continue
        for j, y in enumerate(b):
            k = (i + j) % n
            out[k] = ring.add(out[k], ring.mul(x, y))
    return trim(ring, out)


def cyclic_reduce(ring, a: Sequence, n: int) -> list:
    out = [ring.zero] * n
    for i, c in enumerate(a):
        out[i % n] = ring.add(out[i % n], c)
    return trim(ring, out)


def cyclic_invert_x(ring, a: Sequence, n: int) -> list:
    """a(x^{n-1}) in ring[x]/(x^n - 1)."""
    out = [ring.zero] * n
    for i, c in enumerate(a):
        out[(-i) % n] = ring.add(out[(-i) % n], c)
    return trim(ring, out)


def pad(ring, a: Sequence, n: int) -> list:
    return list(a) + [ring.zero] * (n - len(a))


# residue-ring (mod p) variants


def rreduce(ring, a: Sequence) -> list:
    return trim(ring, [ring.mod_p(c) for c in a])


def _rinv(ring, c):
    if ring.mod_p(c) == ring.zero:
        raise NotAUnit("zero residue has no inverse")
    return ring.mod_p(ring.inv(c))


def rdivmod(ring, a: Sequence, b: Sequence) -> tuple[list, list]:
    b = rreduce(ring, b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    lead_inv = _rinv(ring, b[-1])
    r = rreduce(ring, a)
    db = len(b) - 1
    q = [ring.zero] * max(len(r) - db, 0)
    while len(r) - 1 >= db:
        c = ring.mod_p(ring.mul(r[-1], lead_inv))
        shift = len(r) - 1 - db
        q[shift] = c
        for j, bj in enumerate(b):
            r[shift + j] = ring.mod_p(ring.sub(r[shift + j], ring.mul(c, bj)))
        r = trim(ring, r)
    return trim(ring, q), r


def rmul(ring, a: Sequence, b: Sequence) -> list:
    return rreduce(ring, pmul(ring, a, b))


def rsub(ring, a: Sequence, b: Sequence) -> list:
    return rreduce(ring, psub(ring, a, b))


def rmonic(ring, a: Sequence) -> list:
    a = rreduce(ring, a)
    if not a:
        return a
    return rreduce(ring, pscale(ring, _rinv(ring, a[-1]), a))


def rxgcd(ring, a: Sequence, b: Sequence) -> tuple[list, list, list]:
    """Return (g, s, t) with s*a + t*b = g monic, all mod p."""
    r0, r1 = rreduce(ring, a), rreduce(ring, b)
    s0, s1 = [ring.one], []
    t0, t1 = [], [ring.one]
    while r1:
        q, r = rdivmod(ring, r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, rsub(ring, s0, rmul(ring, q, s1))
        t0, t1 = t1, rsub(ring, t0, rmul(ring, q, t1))
    if not r0:
        return [], [], []
    lead_inv = _rinv(ring, r0[-1])
    return (
        rreduce(ring, pscale(ring, lead_inv, r0)),
        rreduce(ring, pscale(ring, lead_inv, s0)),
        rreduce(ring, pscale(ring, lead_inv, t0)),
    )


def rgcd(ring, a: Sequence, b: Sequence) -> list:
    return rxgcd(ring, a, b)[0]


def bezout_residue(ring, a: Sequence, b: Sequence) -> tuple[list, list]:
    """(s, t) with s*a + t*b = 1 mod p; raises if a, b share a factor mod p."""
    g, s, t = rxgcd(ring, a, b)
    if g != [ring.one]:
        raise InternalBezoutFailure("polynomials are not coprime modulo p")
    return s, t
