"""Symbolic left ideals of R_i = A_i[y; theta_i]/(y^2 - 1): enumeration,
counting, Euclidean duals and the self-dual / self-orthogonal families.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Sequence

from .component_algebra import KIND_I, KIND_II, ComponentAlgebra, SolutionSets, solution_sets
from .errors import MismatchWithEnumeration, SchemaError
from .ring_poly import FactorProfile

# d = 1 components, p odd
ZERO = "Zero"
FULL = "Full"
P_SCALAR = "PScalar"
P_YMINUS1 = "P_Yminus1"
P_YPLUS1 = "P_Yplus1"
YMINUS1 = "Yminus1"
YPLUS1 = "Yplus1"
YMINUS1_PLUS_P = "Yminus1_plus_P"
YPLUS1_PLUS_P = "Yplus1_plus_P"
# d = 1 components, p = 2
TWO_R = "TwoR"
TWO_R_YMINUS1 = "TwoR_Yminus1"
YMINUS1_PLUS_2R = "Yminus1_plus_2R"
YMINUS1_PLUS_2U = "Yminus1_plus_2u"
# d >= 2 and pair components
POWER_SCALAR = "PowerScalar"
P_WPLUSY = "P_WplusY"
W_THETA_PLUS_Y = "WthetaPlusY"
WPLUSY_PLUS_P = "WplusY_plus_P"
P_EPS = "P_Eps"
EPS_PLUS_P = "Eps_plus_P"
EPS_PLUS_PBY = "Eps_plus_pBy"

LINEAR_ODD_CASES = (ZERO, P_SCALAR, P_YMINUS1, P_YPLUS1, FULL, YMINUS1, YPLUS1,
                    YMINUS1_PLUS_P, YPLUS1_PLUS_P)
LINEAR_TWO_CASES = (ZERO, TWO_R, TWO_R_YMINUS1, FULL, YMINUS1_PLUS_2R, YMINUS1_PLUS_2U)
TYPE_I_CASES = (ZERO, POWER_SCALAR, P_WPLUSY, W_THETA_PLUS_Y, WPLUSY_PLUS_P)
TYPE_II_CASES = (ZERO, POWER_SCALAR, P_EPS, P_WPLUSY, EPS_PLUS_P, EPS_PLUS_PBY,
                 WPLUSY_PLUS_P, W_THETA_PLUS_Y)

_ELEMENT_PARAMS = ("w", "theta", "b", "u")


@dataclass(frozen=True)
class IdealDescriptor:
    component_index: int
    case: str
    params: tuple = ()

    @classmethod
    def make(cls, i: int, case: str, **params) -> "IdealDescriptor":
        return cls(i, case, tuple(sorted(params.items())))

    def get(self, name: str, default=None):
        for k, v in self.params:
            if k == name:
                return v
        return default

    def to_json(self, comp: ComponentAlgebra) -> dict:
        params = {}
        for k, v in self.params:
            params[k] = v if k == "j" else comp.A.to_json(v)
        return {"i": self.component_index, "case": self.case, "params": params}


@dataclass(frozen=True)
class IdealInfo:
    cardinality: int
    min_weight_d: int


def component_sets(comp: ComponentAlgebra) -> SolutionSets | None:
    """Solution sets, cached on the component."""
    if "_sets" not in comp.__dict__:
        comp.__dict__["_sets"] = None if comp.is_linear else solution_sets(comp)
    return comp.__dict__["_sets"]


def teichmuller_params(comp: ComponentAlgebra) -> list:
    if "_teich" not in comp.__dict__:
        comp.__dict__["_teich"] = comp.A.teichmuller_set()
    return comp.__dict__["_teich"]


def cases_for(comp: ComponentAlgebra) -> tuple[str, ...]:
    if comp.is_linear:
        return LINEAR_TWO_CASES if comp.p == 2 else LINEAR_ODD_CASES
    return TYPE_II_CASES if comp.kind == KIND_II else TYPE_I_CASES


def ideal_info(comp: ComponentAlgebra, desc: IdealDescriptor) -> IdealInfo:
    """Cardinality and A_i-Hamming weight from the classification tables."""
    p, m, md = comp.p, comp.m, comp.md
    c = desc.case
    if c == ZERO:
        return IdealInfo(1, 0)
    if comp.is_linear:
        table = {
            FULL: (4 * m, 1), P_SCALAR: (2 * m, 1), TWO_R: (2 * m, 1),
            P_YMINUS1: (m, 2), P_YPLUS1: (m, 2), TWO_R_YMINUS1: (m, 2),
            YMINUS1: (2 * m, 2), YPLUS1: (2 * m, 2), YMINUS1_PLUS_2U: (2 * m, 2),
            YMINUS1_PLUS_P: (3 * m, 1), YPLUS1_PLUS_P: (3 * m, 1), YMINUS1_PLUS_2R: (3 * m, 1),
        }
        e, d = table[c]
        return IdealInfo(p ** e, d)
    if comp.kind == KIND_I:
        table = {P_WPLUSY: (md, 2), W_THETA_PLUS_Y: (2 * md, 2), WPLUSY_PLUS_P: (3 * md, 1)}
        if c == POWER_SCALAR:
            return IdealInfo(p ** (2 * (2 - desc.get("j")) * md), 1)
    else:
        table = {P_EPS: (2 * md, 1), P_WPLUSY: (2 * md, 2), EPS_PLUS_P: (6 * md, 1),
                 EPS_PLUS_PBY: (4 * md, 1), WPLUSY_PLUS_P: (6 * md, 1), W_THETA_PLUS_Y: (4 * md, 2)}
        if c == POWER_SCALAR:
            return IdealInfo(p ** (4 * (2 - desc.get("j")) * md), 1)
    e, d = table[c]
    return IdealInfo(p ** e, d)


def _descriptors(comp: ComponentAlgebra) -> Iterator[IdealDescriptor]:
    i = comp.index
    mk = IdealDescriptor.make
    if comp.is_linear:
        cases = cases_for(comp)
        for c in cases:
            if c == YMINUS1_PLUS_2U:
                for u in teichmuller_params(comp):
                    yield mk(i, c, u=u)
            else:
                yield mk(i, c)
        return
    sets = component_sets(comp)
    yield mk(i, ZERO)
    for j in (0, 1):
        yield mk(i, POWER_SCALAR, j=j)
    if comp.kind == KIND_I:
        for w in sets.W:
            yield mk(i, P_WPLUSY, w=w)
        for w in sets.W:
            for th in sets.V:
                yield mk(i, W_THETA_PLUS_Y, w=w, theta=th)
        for w in sets.W:
            yield mk(i, WPLUSY_PLUS_P, w=w)
        return
    for j in (1, 2):
        yield mk(i, P_EPS, j=j)
    for w in sets.W:
        yield mk(i, P_WPLUSY, w=w)
    for j in (1, 2):
        yield mk(i, EPS_PLUS_P, j=j)
    for j, K in ((1, sets.K1), (2, sets.K2)):
        for b in K:
            yield mk(i, EPS_PLUS_PBY, j=j, b=b)
    for w in sets.W:
        yield mk(i, WPLUSY_PLUS_P, w=w)
    for w in sets.W:
        for th in sets.Vw[w]:
            yield mk(i, W_THETA_PLUS_Y, w=w, theta=th)


def enumerate_ideals(comp: ComponentAlgebra) -> Iterator[tuple[IdealDescriptor, IdealInfo]]:
    """Every left ideal of R_i once, in table-row then parameter order."""
    for desc in _descriptors(comp):
        yield desc, ideal_info(comp, desc)


def component_count(comp: ComponentAlgebra) -> int:
    """Closed-form number of left ideals of R_i."""
    p, m, md = comp.p, comp.m, comp.md
    if comp.is_linear:
        return 2 ** m + 5 if p == 2 else 9
    if comp.kind == KIND_I:
        return p ** md + 3 * p ** (md // 2) + 5
    return p ** (2 * md) + 3 * p ** md + 5


def closed_form_count(profile: FactorProfile) -> int:
    """Product formula over the factor profile."""
    p, m = profile.p, profile.m
    total = (2 ** m + 5 if p == 2 else 9) ** profile.lam
    for fac in profile.factors[1:profile.r + 1]:
        if fac.d >= 2:
            md = m * fac.d
            total *= p ** md + 3 * p ** (md // 2) + 5
    for fac in profile.factors[profile.r + 1:]:
        md = m * fac.d
        total *= p ** (2 * md) + 3 * p ** md + 5
    return total


def count_ideals(profile: FactorProfile, comps: Sequence[ComponentAlgebra]) -> int:
    """Number of left D_2n-codes; cross-checked against the enumeration streams."""
    closed = closed_form_count(profile)
    streamed = math.prod(sum(1 for _ in _descriptors(c)) for c in comps)
    if streamed != closed:
        raise MismatchWithEnumeration(f"closed form {closed} != enumerated {streamed}")
    return closed


# -- duality ------------------------------------------------------------------


def _w_with_residue(comp: ComponentAlgebra, target):
    A = comp.A
    for w in component_sets(comp).W:
        if A.mod_p(w) == target:
            return w
    raise ArithmeticError("no element of W with the requested residue")


def dual_descriptor(desc: IdealDescriptor, comp: ComponentAlgebra) -> IdealDescriptor:
    """Descriptor of the ideal generated by the H_i row of the tables."""
    A = comp.A
    i, c = desc.component_index, desc.case
    mk = IdealDescriptor.make
    if comp.is_linear:
        if comp.p == 2:
            simple = {ZERO: FULL, FULL: ZERO, TWO_R: TWO_R,
                      TWO_R_YMINUS1: YMINUS1_PLUS_2R, YMINUS1_PLUS_2R: TWO_R_YMINUS1}
            if c in simple:
                return mk(i, simple[c])
            u = desc.get("u")
            return mk(i, c, u=A.teichmuller(A.add(u, A.one)))
        simple = {ZERO: FULL, FULL: ZERO, P_SCALAR: P_SCALAR,
                  P_YPLUS1: YMINUS1_PLUS_P, YMINUS1_PLUS_P: P_YPLUS1,
                  P_YMINUS1: YPLUS1_PLUS_P, YPLUS1_PLUS_P: P_YMINUS1,
                  YPLUS1: YMINUS1, YMINUS1: YPLUS1}
        return mk(i, simple[c])
    if c == ZERO:
        return mk(i, POWER_SCALAR, j=0)
    if c == POWER_SCALAR:
        return mk(i, ZERO) if desc.get("j") == 0 else desc
    if c == P_EPS:
        return mk(i, EPS_PLUS_P, j=desc.get("j"))
    if c == EPS_PLUS_P:
        return mk(i, P_EPS, j=desc.get("j"))
    if c == EPS_PLUS_PBY:
        return mk(i, c, j=desc.get("j"), b=A.mod_p(A.neg(desc.get("b"))))
    w = desc.get("w")
    w_neg = _w_with_residue(comp, A.mod_p(A.neg(w)))
    if c == P_WPLUSY:
        return mk(i, WPLUSY_PLUS_P, w=w_neg)
    if c == WPLUSY_PLUS_P:
        return mk(i, P_WPLUSY, w=w_neg)
    # W_THETA_PLUS_Y: rewrite -g0 in the parameterization of the same case
    g0 = outer_first_entry(comp, desc)
    minus = A.neg(g0)
    sets = component_sets(comp)
    if comp.kind == KIND_I:
        th = A.div_p(A.sub(A.mul(minus, A.inv(w_neg)), A.one))
        allowed = sets.V
    else:
        th = A.div_p(A.sub(minus, w_neg))
        allowed = sets.Vw[w_neg]
    if th not in allowed:
        raise ArithmeticError("dual parameter fell outside its solution set")
    return mk(i, c, w=w_neg, theta=th)


def outer_first_entry(comp: ComponentAlgebra, desc: IdealDescriptor):
    """g0 of the single generator (g0, 1) of a WthetaPlusY ideal."""
    A = comp.A
    w, th = desc.get("w"), desc.get("theta")
    if comp.kind == KIND_I:
        return A.mul(w, A.add(A.one, A.mul_p(th)))
    return A.add(w, A.mul_p(th))


def is_self_orthogonal(desc: IdealDescriptor, comp: ComponentAlgebra) -> bool:
    c = desc.case
    if comp.is_linear:
        allowed = (ZERO, TWO_R, TWO_R_YMINUS1) if comp.p == 2 else (ZERO, P_SCALAR, P_YMINUS1, P_YPLUS1)
        return c in allowed
    if c in (ZERO, P_WPLUSY):
        return True
    if c == POWER_SCALAR:
        return desc.get("j") == 1
    if comp.kind == KIND_II:
        if c == P_EPS:
            return True
        if c == EPS_PLUS_PBY:
            return comp.p == 2 or desc.get("b") == comp.A.zero
    return False


def classify_self(desc: IdealDescriptor, comp: ComponentAlgebra) -> dict:
    return {"self_dual": dual_descriptor(desc, comp) == desc,
            "self_orthogonal": is_self_orthogonal(desc, comp)}


def self_dual_descriptors(comp: ComponentAlgebra) -> list[IdealDescriptor]:
    return [d for d in _descriptors(comp) if dual_descriptor(d, comp) == d]


def self_orthogonal_descriptors(comp: ComponentAlgebra) -> list[IdealDescriptor]:
    return [d for d in _descriptors(comp) if is_self_orthogonal(d, comp)]


def closed_form_self_dual(profile: FactorProfile) -> int:
    p, m = profile.p, profile.m
    pairs = profile.factors[profile.r + 1:]
    if p != 2:
        return 3 ** len(pairs)
    return math.prod(2 * 2 ** (m * f.d) + 1 for f in pairs)


def closed_form_self_orthogonal(profile: FactorProfile) -> int:
    p, m = profile.p, profile.m
    total = (3 if p == 2 else 4) ** profile.lam
    for fac in profile.factors[1:profile.r + 1]:
        if fac.d >= 2:
            total *= p ** (m * fac.d // 2) + 3
    for fac in profile.factors[profile.r + 1:]:
        md = m * fac.d
        total *= 3 * 2 ** md + 3 if p == 2 else p ** md + 5
    return total


def count_self_dual(profile: FactorProfile, comps: Sequence[ComponentAlgebra]) -> int:
    closed = closed_form_self_dual(profile)
    streamed = math.prod(len(self_dual_descriptors(c)) for c in comps)
    if streamed != closed:
        raise MismatchWithEnumeration(f"self-dual closed form {closed} != enumerated {streamed}")
    return closed


def count_self_orthogonal(profile: FactorProfile, comps: Sequence[ComponentAlgebra]) -> int:
    closed = closed_form_self_orthogonal(profile)
    streamed = math.prod(len(self_orthogonal_descriptors(c)) for c in comps)
    if streamed != closed:
        raise MismatchWithEnumeration(f"self-orthogonal closed form {closed} != enumerated {streamed}")
    return closed


# -- parsing ------------------------------------------------------------------


def descriptor_from_json(obj: dict, comp: ComponentAlgebra, pointer: str = "") -> IdealDescriptor:
    """Parse and validate one descriptor against the component's parameter sets."""
    if not isinstance(obj, dict):
        raise SchemaError("descriptor must be an object", pointer)
    if obj.get("i") != comp.index:
        raise SchemaError(f"expected component index {comp.index}, got {obj.get('i')!r}", pointer + "/i")
    case = obj.get("case")
    if case not in cases_for(comp):
        raise SchemaError(f"unknown case tag {case!r} for this component", pointer + "/case")
    raw = obj.get("params", {}) or {}
    if not isinstance(raw, dict):
        raise SchemaError("params must be an object", pointer + "/params")
    params = {}
    for k, v in raw.items():
        if k == "j":
            if not isinstance(v, int):
                raise SchemaError("j must be an integer", pointer + "/params/j")
            params[k] = v
        elif k in _ELEMENT_PARAMS:
            try:
                params[k] = comp.A.from_json(v)
            except Exception as exc:  # noqa: BLE001
                raise SchemaError(f"cannot parse element: {exc}", pointer + f"/params/{k}") from exc
        else:
            raise SchemaError(f"unknown parameter {k!r}", pointer + f"/params/{k}")
    desc = IdealDescriptor.make(comp.index, case, **params)
    valid = {d for d in _descriptors_matching(comp, case)}
    if desc not in valid:
        raise SchemaError(f"parameters {raw!r} are not valid for case {case}", pointer + "/params")
    return desc


def _descriptors_matching(comp: ComponentAlgebra, case: str) -> Iterator[IdealDescriptor]:
    return (d for d in _descriptors(comp) if d.case == case)
