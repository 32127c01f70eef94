"""Component algebras A_i = R[x]/(f_i), the involution theta_i, and the
finite solution sets that parameterize left ideals of A_i[y; theta_i]/(y^2 - 1).
"""
from __future__ import annotations

from dataclasses import dataclass, field

from . import polyops as P
from .errors import IndexOutOfRange, KindMismatch
from .galois_ring import QuotientRing, Ring, extend, primitive_unit
from .ring_poly import PAIR, UNITY, FactorProfile, IdempotentFamily

KIND_UNITY = "Unity"
KIND_I = "TypeI"
KIND_II = "TypeII"


@dataclass
class ComponentAlgebra:
    index: int
    kind: str
    f: tuple
    d: int
    n: int
    R: Ring
    A: QuotientRing
    eps: tuple                      # primary idempotent, length n over R
    zeta: object                    # in A (Unity / TypeI) or in upsilon (TypeII)
    theta_images: list = field(repr=False)  # x^{-k} mod f_i for k < deg f_i
    upsilon: Ring | None = None
    zeta_embedded: object = None
    pair_idempotents: tuple | None = None

    @property
    def p(self) -> int:
        return self.R.p

    @property
    def m(self) -> int:
        return self.R.total_degree

    @property
    def md(self) -> int:
        return self.m * self.d

    @property
    def degree(self) -> int:
        return len(self.f) - 1

    @property
    def is_linear(self) -> bool:
        """True for the d = 1 components, where theta is the identity."""
        return self.kind != KIND_II and self.d == 1

    def theta(self, b):
        return theta_apply(self, b)

    def theta_bar(self, b):
        return self.A.mod_p(theta_apply(self, b))


def theta_apply(comp: ComponentAlgebra, b):
    """b(x) -> b(x^{n-1}) mod f_i."""
    A, B = comp.A, comp.R
    if A._int:
        n = A.char
        out = [0] * A.degree
        for c, img in zip(b, comp.theta_images):
            if c:
                for j, v in enumerate(img):
                    out[j] += c * v
        return tuple(v % n for v in out)
    out = A.zero
    for c, img in zip(b, comp.theta_images):
        if c != B.zero:
            out = A.add(out, tuple(B.mul(c, v) for v in img))
    return out


def _primitive_residue_lift(ring: Ring):
    return primitive_unit(ring)


def build_component(profile: FactorProfile, idem: IdempotentFamily, i: int) -> ComponentAlgebra:
    if not 0 <= i < len(profile.factors):
        raise IndexOutOfRange(f"component {i} not in 0..{len(profile.factors) - 1}")
    fac = profile.factors[i]
    R, n = profile.ring, profile.n
    p, q = R.p, R.residue_size
    if fac.kind == PAIR:
        A = QuotientRing(R, fac.f, unit_exponent=p * (q ** fac.d - 1))
        kind = KIND_II
    else:
        A = extend(R, fac.f, check=False)
        kind = KIND_UNITY if fac.kind == UNITY else KIND_I
    theta_images = [A.from_poly([R.zero] * ((n - k) % n) + [R.one]) for k in range(A.degree)]
    comp = ComponentAlgebra(
        index=i, kind=kind, f=fac.f, d=fac.d, n=n, R=R, A=A,
        eps=idem.eps[i], zeta=None, theta_images=theta_images,
    )
    if kind == KIND_II:
        e1, e2 = idem.pair_eps[i]
        comp.pair_idempotents = (tuple(e1), tuple(e2))
        comp.upsilon = extend(R, fac.rho, check=False)
        comp.zeta = _primitive_residue_lift(comp.upsilon)
        comp.zeta_embedded = A.mul(comp.pair_idempotents[0], A.from_poly(list(comp.zeta)))
    else:
        comp.zeta = _primitive_residue_lift(A)
    return comp


@dataclass
class SolutionSets:
    kind: str
    W: list
    V: list | None = None           # TypeI
    U1: list | None = None          # TypeII
    K1: list | None = None
    K2: list | None = None
    Vw: dict | None = None          # TypeII: w -> list of theta values
    u_of_w: dict | None = None      # TypeII: w -> u with w = u + 1/theta(u)

    def to_json(self, A: Ring) -> dict:
        enc = lambda xs: [A.to_json(x) for x in xs]  # noqa: E731
        out = {"kind": self.kind, "W": enc(self.W)}
        if self.V is not None:
            out["V"] = enc(self.V)
        if self.U1 is not None:
            out.update(U1=enc(self.U1), K1=enc(self.K1), K2=enc(self.K2),
                       Vw=[{"w": A.to_json(w), "V": enc(vs)} for w, vs in self.Vw.items()])
        return out


def inverse_in_second(comp: ComponentAlgebra, a):
    """Inverse of a unit of the summand eps_{i,2} A_i, computed inside that summand."""
    A = comp.A
    e1 = comp.pair_idempotents[0]
    return A.sub(A.inv(A.add(a, e1)), e1)


def _check(cond: bool, msg: str):
    if not cond:
        raise ArithmeticError(msg)


def solution_sets(comp: ComponentAlgebra) -> SolutionSets:
    """Solve the defining equations of the parameter sets by exhaustive scan."""
    A = comp.A
    p, md = comp.p, comp.md
    if comp.kind == KIND_I and comp.d >= 2:
        half = p ** (md // 2)
        W = [w for w in A.teichmuller_set()
             if w != A.zero and A.mul(w, theta_apply(comp, w)) == A.one]
        V = [v for v in A.residues()
             if A.mod_p(A.add(theta_apply(comp, v), v)) == A.zero]
        _check(len(W) == half + 1, f"|W_{comp.index}| = {len(W)}, expected {half + 1}")
        _check(len(V) == half, f"|V_{comp.index}| = {len(V)}, expected {half}")
        return SolutionSets(KIND_I, W=W, V=V)
    if comp.kind != KIND_II:
        raise KindMismatch(f"component {comp.index} ({comp.kind}, d={comp.d}) has no solution sets")

    e1 = comp.pair_idempotents[0]
    size = p ** md
    U1 = sorted({A.mul(e1, A.from_poly(list(t))) for t in comp.upsilon.teichmuller_set()}, key=A.key)
    K1 = sorted({A.mod_p(u) for u in U1}, key=A.key)
    K2 = sorted({A.mod_p(theta_apply(comp, u)) for u in U1}, key=A.key)
    _check(len(U1) == size and len(K1) == size and len(K2) == size, "bad |U1|, |K1| or |K2|")

    u_of_w, Vw = {}, {}
    for u in U1:
        if u == A.zero:
            continue
        c = inverse_in_second(comp, theta_apply(comp, u))
        w = A.add(u, c)
        _check(A.mul(w, theta_apply(comp, w)) == A.one, "w * theta(w) != 1")
        c2 = A.mul(c, c)
        vs = {A.mod_p(A.sub(v, A.mul(c2, theta_apply(comp, v)))) for v in K1}
        wbar, twbar = A.mod_p(w), A.mod_p(theta_apply(comp, w))
        for vt in vs:
            lhs = A.add(A.mul(wbar, theta_apply(comp, vt)), A.mul(twbar, vt))
            _check(A.mod_p(lhs) == A.zero, "theta value fails its defining equation")
        _check(len(vs) == size, "bad |V^(w)|")
        u_of_w[w] = u
        Vw[w] = sorted(vs, key=A.key)
    W = sorted(u_of_w, key=A.key)
    _check(len(W) == size - 1, "bad |W|")
    _check(len({A.mod_p(w) for w in W}) == len(W), "W residues collide")
    return SolutionSets(KIND_II, W=W, U1=U1, K1=K1, K2=K2,
                        Vw={w: Vw[w] for w in W}, u_of_w={w: u_of_w[w] for w in W})
