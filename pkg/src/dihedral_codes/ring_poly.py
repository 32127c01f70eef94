"""Factorization of x^n - 1 over GR(p^2, m) and the associated idempotents."""
from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Sequence

from . import polyops as P
from .errors import InternalBezoutFailure, NotCoprime, ZeroPolynomial
from .galois_ring import Ring, default_modulus, extend, multiplicative_order

UNITY = "Unity"
SELF_RECIPROCAL = "SelfReciprocal"
PAIR = "Pair"


@dataclass(frozen=True)
class CycloCoset:
    representative: int
    members: tuple[int, ...]


def cyclotomic_cosets(n: int, q: int) -> list[CycloCoset]:
    """q-cyclotomic cosets modulo n, ordered by representative."""
    if n < 1:
        raise ValueError("n must be positive")
    if gcd(n, q) != 1:
        raise NotCoprime(f"gcd({n}, {q}) != 1")
    seen = [False] * n
    out = []
    for i in range(n):
        if seen[i]:
            continue
        members = []
        j = i
        while not seen[j]:
            seen[j] = True
            members.append(j)
            j = (j * q) % n
        out.append(CycloCoset(i, tuple(members)))
    return out


@dataclass(frozen=True)
class Factor:
    index: int
    kind: str
    f: tuple
    d: int
    cosets: tuple[CycloCoset, ...]
    rho: tuple | None = None
    rho_star: tuple | None = None
    rho_conj: tuple | None = None  # monic associate of rho_star

    @property
    def degree(self) -> int:
        return len(self.f) - 1


@dataclass
class FactorProfile:
    ring: Ring
    n: int
    factors: list[Factor]
    r: int
    t: int
    lam: int
    ext: Ring = field(repr=False)
    omega: object = field(repr=False)

    @property
    def p(self) -> int:
        return self.ring.p

    @property
    def m(self) -> int:
        return self.ring.total_degree

    def to_json(self) -> dict:
        R = self.ring
        enc = lambda poly: [R.to_json(c) for c in poly]  # noqa: E731
        items = []
        for fac in self.factors:
            item = {"i": fac.index, "kind": fac.kind, "f": enc(fac.f)}
            if fac.rho is not None:
                item["rho"] = enc(fac.rho)
            item["d"] = fac.d
            items.append(item)
        return {"p": self.p, "m": self.m, "n": self.n, "factors": items,
                "r": self.r, "t": self.t, "lambda": self.lam}


def reciprocal(ring: Ring, g: Sequence) -> list:
    """x^deg(g) g(1/x)."""
    g = P.trim(ring, g)
    if not g:
        raise ZeroPolynomial("reciprocal of the zero polynomial")
    return P.reverse(ring, g)


def _min_poly(ring: Ring, ext: Ring, omega, members: Sequence[int]) -> tuple:
    poly = [ext.one]
    for s in members:
        root = ext.pow(omega, s)
        poly = P.pmul(ext, poly, [ext.neg(root), ext.one])
    out = []
    for c in poly:
        if any(x != ring.zero for x in c[1:]):
            raise ArithmeticError("minimal polynomial left the base ring")
        out.append(c[0])
    return tuple(out)


def factor_unity(ring: Ring, n: int) -> FactorProfile:
    """Classified factorization of x^n - 1 into basic irreducible pieces."""
    p = ring.p
    if n < 1:
        raise ValueError("n must be positive")
    if gcd(n, p) != 1:
        raise NotCoprime(f"gcd(n={n}, p={p}) != 1")
    q = ring.residue_size
    kappa = multiplicative_order(q, n)
    ext = extend(ring, default_modulus(ring, kappa), check=False)
    zeta = ext.teichmuller(ext.gen)
    omega = ext.pow(zeta, (ext.residue_size - 1) // n)

    cosets = cyclotomic_cosets(n, q)
    where = {}
    for c in cosets:
        for s in c.members:
            where[s] = c
    selfs, pairs = [], []
    unity = None
    for c in cosets:
        partner = where[(-c.representative) % n]
        if partner is c:
            f = _min_poly(ring, ext, omega, c.members)
            if c.representative == 0:
                unity = (f, c)
            else:
                selfs.append((len(f) - 1, c.representative, f, c))
        elif c.representative < partner.representative:
            rho = _min_poly(ring, ext, omega, c.members)
            conj = _min_poly(ring, ext, omega, partner.members)
            pairs.append((len(rho) - 1, c.representative, rho, conj, c, partner))

    factors = [Factor(0, UNITY, unity[0], 1, (unity[1],))]
    for d, _, f, c in sorted(selfs, key=lambda s: s[:2]):
        factors.append(Factor(len(factors), SELF_RECIPROCAL, f, d, (c,)))
    r = len(factors) - 1
    for d, _, rho, conj, c, pc in sorted(pairs, key=lambda s: s[:2]):
        f = tuple(P.pmul(ring, rho, conj))
        factors.append(Factor(len(factors), PAIR, f, d, (c, pc), rho=rho,
                              rho_star=tuple(reciprocal(ring, rho)), rho_conj=conj))
    t = len(factors) - 1 - r

    prod = [ring.one]
    for fac in factors:
        prod = P.pmul(ring, prod, fac.f)
    if prod != P.x_pow_minus_one(ring, n):
        raise ArithmeticError("factor product differs from x^n - 1")
    lam = sum(1 for fac in factors[: r + 1] if fac.d == 1)
    return FactorProfile(ring, n, factors, r, t, lam, ext, omega)


@dataclass
class IdempotentFamily:
    profile: FactorProfile
    eps: list[tuple]          # length-n coefficient tuples in R[x]/(x^n - 1)
    pair_eps: dict[int, tuple[tuple, tuple]]  # reduced mod f_i, length deg f_i

    @property
    def ring(self) -> Ring:
        return self.profile.ring

    def to_json(self) -> dict:
        R = self.ring
        enc = lambda poly: [R.to_json(c) for c in P.trim(R, poly)]  # noqa: E731
        return {
            "p": self.profile.p, "m": self.profile.m, "n": self.profile.n,
            "eps": [enc(e) for e in self.eps],
            "pair_eps": {str(i): [enc(a), enc(b)] for i, (a, b) in self.pair_eps.items()},
        }


def _lift_idempotent(mul, add, smul, e0):
    """One Newton step e -> 3e^2 - 2e^3, exact modulo p^2."""
    e2 = mul(e0, e0)
    e3 = mul(e2, e0)
    return add(smul(3, e2), smul(-2, e3))


def primary_idempotents(profile: FactorProfile) -> IdempotentFamily:
    R, n = profile.ring, profile.n
    xn1 = P.x_pow_minus_one(R, n)

    def cmul(a, b):
        return P.pad(R, P.cyclic_mul(R, a, b, n), n)

    def cadd(a, b):
        return P.pad(R, P.padd(R, a, b), n)

    def csmul(k, a):
        return P.pad(R, P.pscale(R, R.from_int(k), a), n)

    eps = []
    for fac in profile.factors:
        F = P.exact_div(R, xn1, list(fac.f))
        s, _ = P.bezout_residue(R, F, list(fac.f))
        e0 = P.pad(R, P.rreduce(R, P.cyclic_reduce(R, P.pmul(R, s, F), n)), n)
        eps.append(tuple(_lift_idempotent(cmul, cadd, csmul, e0)))

    zero = [R.zero] * n
    one = P.pad(R, [R.one], n)
    total = zero
    for i, e in enumerate(eps):
        if cmul(e, e) != list(e):
            raise InternalBezoutFailure(f"eps_{i} is not idempotent")
        for j in range(i + 1, len(eps)):
            if cmul(e, eps[j]) != zero:
                raise InternalBezoutFailure(f"eps_{i} eps_{j} != 0")
        total = cadd(total, e)
    if total != one:
        raise InternalBezoutFailure("idempotents do not sum to 1")

    pair_eps = {}
    for fac in profile.factors:
        if fac.kind != PAIR:
            continue
        f = list(fac.f)
        deg = len(f) - 1

        def fmul(a, b, f=f, deg=deg):
            return P.pad(R, P.pmod(R, P.pmul(R, a, b), f), deg)

        def fadd(a, b, deg=deg):
            return P.pad(R, P.padd(R, a, b), deg)

        def fsmul(k, a, deg=deg):
            return P.pad(R, P.pscale(R, R.from_int(k), a), deg)

        phi, _ = P.bezout_residue(R, list(fac.rho_conj), list(fac.rho))
        e0 = P.pad(R, P.rreduce(R, P.pmod(R, P.pmul(R, phi, list(fac.rho_conj)), f)), deg)
        e1 = _lift_idempotent(fmul, fadd, fsmul, e0)
        e2 = P.pad(R, P.psub(R, P.pad(R, [R.one], deg), e1), deg)
        if fmul(e1, e1) != e1 or fmul(e1, e2) != [R.zero] * deg:
            raise InternalBezoutFailure(f"pair idempotents of factor {fac.index} fail")
        if P.pmod(R, e1, list(fac.rho)) != [R.one] or P.pmod(R, e1, list(fac.rho_conj)):
            raise InternalBezoutFailure(f"pair idempotents of factor {fac.index} misoriented")
        pair_eps[fac.index] = (tuple(e1), tuple(e2))
    return IdempotentFamily(profile, eps, pair_eps)
