"""Concrete R-linear codes of length 2n from per-component ideal descriptors."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

from . import polyops as P
from . import ideal_enumeration as IE
from .component_algebra import KIND_I, ComponentAlgebra
from .errors import ComponentMismatch, IncompleteSelection, TooLarge
from .ideal_enumeration import IdealDescriptor, dual_descriptor, ideal_info
from .setting import DihedralSetting
from .zmodule import ZModule


@dataclass
class OuterMatrix:
    component_index: int
    role: str                 # "G" or "H"
    rows: list                # list of (b0, b1) pairs of A_i elements


def _scalar_rows(A, k: int):
    return [(A.from_int(k), A.zero), (A.zero, A.from_int(k))]


def outer_matrices(desc: IdealDescriptor, comp: ComponentAlgebra) -> tuple[OuterMatrix, OuterMatrix]:
    """(G_i, H_i) exactly as listed in the classification tables."""
    if desc.component_index != comp.index:
        raise ComponentMismatch(f"descriptor for {desc.component_index} used on component {comp.index}")
    A = comp.A
    p = comp.p
    c = desc.case
    one, zero = A.one, A.zero
    pA = A.from_int(p)

    def num(k):
        return A.from_int(k)

    I2 = _scalar_rows(A, 1)
    pI2 = _scalar_rows(A, p)
    G: list
    H: list
    if c == IE.ZERO:
        G, H = [], I2
    elif c == IE.FULL or (c == IE.POWER_SCALAR and desc.get("j") == 0):
        G, H = I2, []
    elif c in (IE.P_SCALAR, IE.TWO_R) or c == IE.POWER_SCALAR:
        G, H = pI2, pI2
    elif comp.is_linear:
        if c == IE.YMINUS1_PLUS_2U:
            g0 = A.add(num(-1), A.mul_p(desc.get("u")))
            G, H = [(g0, one)], [(A.neg(g0), one)]
        else:
            sign = {IE.P_YPLUS1: 1, IE.YPLUS1_PLUS_P: 1, IE.YPLUS1: 1,
                    IE.P_YMINUS1: -1, IE.YMINUS1_PLUS_P: -1, IE.YMINUS1: -1,
                    IE.TWO_R_YMINUS1: -1, IE.YMINUS1_PLUS_2R: -1}[c]
            w = num(sign)
            if c in (IE.P_YPLUS1, IE.P_YMINUS1, IE.TWO_R_YMINUS1):
                G = [(A.mul_p(w), pA)]
                H = [(A.neg(w), one), (zero, pA)]
            elif c in (IE.YPLUS1_PLUS_P, IE.YMINUS1_PLUS_P, IE.YMINUS1_PLUS_2R):
                G = [(w, one), (zero, pA)]
                H = [(A.neg(A.mul_p(w)), pA)]
            else:
                G = [(w, one)]
                H = [(A.neg(w), one)]
    elif c == IE.P_WPLUSY:
        w = desc.get("w")
        G = [(A.mul_p(w), pA)]
        H = [(A.neg(w), one), (zero, pA)]
    elif c == IE.WPLUSY_PLUS_P:
        w = desc.get("w")
        G = [(w, one), (zero, pA)]
        H = [(A.neg(A.mul_p(w)), pA)]
    elif c == IE.W_THETA_PLUS_Y:
        g0 = IE.outer_first_entry(comp, desc)
        G, H = [(g0, one)], [(A.neg(g0), one)]
    else:
        e1, e2 = comp.pair_idempotents
        j = desc.get("j")
        ej, ek = (e1, e2) if j == 1 else (e2, e1)
        Mj = [(ej, zero), (zero, ek)]
        pMj = [(A.mul_p(ej), zero), (zero, A.mul_p(ek))]
        pMk = [(A.mul_p(ek), zero), (zero, A.mul_p(ej))]
        if c == IE.P_EPS:
            G, H = pMj, Mj + pMk
        elif c == IE.EPS_PLUS_P:
            G, H = Mj + pMk, pMj
        elif c == IE.EPS_PLUS_PBY:
            b = desc.get("b")
            pb = A.mul_p(b)
            pbt = A.mul_p(comp.theta(b))
            G = [(ej, pb), (pbt, ek)]
            H = [(ej, A.neg(pb)), (A.neg(pbt), ek)]
        else:
            raise ValueError(f"unknown case {c}")
    i = comp.index
    return OuterMatrix(i, "G", G), OuterMatrix(i, "H", H)


def concatenate(comp: ComponentAlgebra, outer: OuterMatrix) -> list[list]:
    """Expand A_i rows into R rows of length 2n through b -> eps_i b."""
    if outer.component_index != comp.index:
        raise ComponentMismatch(f"matrix for {outer.component_index} used on component {comp.index}")
    R, n = comp.R, comp.n
    eps = list(comp.eps)
    out = []
    for g0, g1 in outer.rows:
        p0, p1 = comp.A.to_poly(g0), comp.A.to_poly(g1)
        for j in range(comp.degree):
            shifted = P.cyclic_mul(R, eps, [R.zero] * j + [R.one], n)
            a0 = P.pad(R, P.cyclic_mul(R, shifted, p0, n), n)
            a1 = P.pad(R, P.cyclic_mul(R, shifted, p1, n), n)
            out.append(a0 + a1)
    return out


@dataclass
class LinearCode:
    setting: DihedralSetting = field(repr=False)
    generators: list                    # rows of 2n elements of R
    cardinality: int
    selection: list

    @property
    def n(self) -> int:
        return self.setting.n

    @property
    def ring(self):
        return self.setting.ring

    def flat_rows(self) -> list[list[int]]:
        """Rows over Z_{p^2}, each symbol expanded into its m coordinates."""
        R = self.ring
        return [[x for c in row for x in R.to_ints(c)] for row in self.generators]

    def module(self) -> ZModule:
        """The code as a Z_{p^2}-module (the R-span of the generators)."""
        if "_module" not in self.__dict__:
            R = self.ring
            m = R.total_degree
            basis = [R.from_ints([1 if k == l else 0 for k in range(m)]) for l in range(m)]
            rows = []
            for row in self.generators:
                for z in basis:
                    rows.append([x for c in row for x in R.to_ints(R.mul(z, c))])
            self.__dict__["_module"] = ZModule(R.p, 2, 2 * self.n * m, rows)
        return self.__dict__["_module"]

    def to_json(self) -> dict:
        s = self.setting
        R = self.ring
        return {
            "p": s.p, "m": s.m, "n": s.n,
            "selection": [d.to_json(s.comps[d.component_index]) for d in self.selection],
            "rows": [[R.to_json(c) for c in row] for row in self.generators],
            "cardinality": str(self.cardinality),
        }


def _check_selection(setting: DihedralSetting, selection: Sequence[IdealDescriptor]):
    if len(selection) != len(setting.comps):
        raise IncompleteSelection(f"need {len(setting.comps)} descriptors, got {len(selection)}")
    for i, d in enumerate(selection):
        if d.component_index != i:
            raise IncompleteSelection(f"slot {i} holds a descriptor for component {d.component_index}")


def build_code(setting: DihedralSetting, selection: Sequence[IdealDescriptor]) -> LinearCode:
    _check_selection(setting, selection)
    rows = []
    card = 1
    for d in selection:
        comp = setting.comps[d.component_index]
        G, _ = outer_matrices(d, comp)
        rows.extend(concatenate(comp, G))
        card *= ideal_info(comp, d).cardinality
    return LinearCode(setting, rows, card, list(selection))


def dual_selection(setting: DihedralSetting, selection: Sequence[IdealDescriptor]) -> list[IdealDescriptor]:
    _check_selection(setting, selection)
    return [dual_descriptor(d, setting.comps[d.component_index]) for d in selection]


def dual_code(setting: DihedralSetting, selection: Sequence[IdealDescriptor]) -> LinearCode:
    """Euclidean dual, generated by the H_i matrices of the tables."""
    dual_sel = dual_selection(setting, selection)
    rows = []
    for d in selection:
        comp = setting.comps[d.component_index]
        _, H = outer_matrices(d, comp)
        rows.extend(concatenate(comp, H))
    card = math.prod(ideal_info(setting.comps[d.component_index], d).cardinality for d in dual_sel)
    return LinearCode(setting, rows, card, dual_sel)


def euclidean_inner(ring, a: Sequence, b: Sequence):
    acc = ring.zero
    for x, y in zip(a, b):
        acc = ring.add(acc, ring.mul(x, y))
    return acc


def _shift(ring, row: Sequence, n: int) -> list:
    a0, a1 = list(row[:n]), list(row[n:])
    return a0[-1:] + a0[:-1] + a1[-1:] + a1[:-1]


def _swap_reverse(ring, row: Sequence, n: int) -> list:
    a0, a1 = row[:n], row[n:]
    return [a1[(-k) % n] for k in range(n)] + [a0[(-k) % n] for k in range(n)]


def dihedral_closure_check(code: LinearCode, *, exhaustive: bool = False, cap: int = 1 << 20) -> bool:
    """Is the code stable under the x-shift and under (a0, a1) -> (a1(x^-1), a0(x^-1))?

    Both maps are R-linear, so testing generators against the Howell form
    suffices.  ``exhaustive`` instead maps every codeword (guarded by ``cap``).
    """
    R, n = code.ring, code.n
    M = code.module()
    m = R.total_degree

    def flat(row):
        return [x for c in row for x in R.to_ints(c)]

    if not exhaustive:
        for row in code.generators:
            for img in (_shift(R, row, n), _swap_reverse(R, row, n)):
                if not M.contains(flat(img)):
                    return False
        return True
    if M.cardinality > cap:
        raise TooLarge(f"{M.cardinality} codewords exceed cap {cap}")
    words = set(M.elements())
    for w in words:
        sym = [R.from_ints(w[k * m:(k + 1) * m]) for k in range(2 * n)]
        for img in (_shift(R, sym, n), _swap_reverse(R, sym, n)):
            if tuple(flat(img)) not in words:
                return False
    return True
