"""Distances, duality checks and brute-force oracles for the ideal tables.

The oracles here work on flattened coordinates: an element b0 + b1*y of
R_i = A_i[y; theta_i]/(y^2 - 1) becomes the Z_{p^2} vector
to_ints(b0) + to_ints(b1), and a left ideal is stored as a ZModule.
"""
from __future__ import annotations

import itertools
import time
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import ideal_enumeration as IE
from .code_builder import LinearCode, euclidean_inner
from .component_algebra import KIND_II, ComponentAlgebra
from .errors import LeeUndefined, TooLarge
from .ideal_enumeration import IdealDescriptor
from .zmodule import ZModule

DEFAULT_CAP = 1 << 24


@dataclass
class WeightReport:
    d_hamming: int | None
    d_lee: int | None
    words_scanned: int
    elapsed_ms: float

    def to_json(self) -> dict:
        out = {"d_hamming": self.d_hamming, "words_scanned": self.words_scanned,
               "elapsed_ms": round(self.elapsed_ms, 3)}
        if self.d_lee is not None:
            out["d_lee"] = self.d_lee
        return out


def lee_weight(a: int, modulus: int) -> int:
    a %= modulus
    return min(a, modulus - a)


def min_distances(code: LinearCode, cap: int = DEFAULT_CAP, lee: bool = False) -> WeightReport:
    """Exhaustive scan of every codeword.

    For the zero code both distances are reported as None.
    """
    start = time.perf_counter()
    R = code.ring
    m = R.total_degree
    if lee and m != 1:
        raise LeeUndefined(f"Lee weight needs the alphabet Z_{R.char} (m = 1), got m = {m}")
    M = code.module()
    if M.cardinality > cap:
        raise TooLarge(f"code has {M.cardinality} words, cap is {cap}")
    N = R.char
    best_h = best_l = None
    scanned = 0
    for block in M.iter_chunks():
        scanned += block.shape[0]
        sym_nz = block.reshape(block.shape[0], -1, m).any(axis=2)
        wh = sym_nz.sum(axis=1)
        mask = wh > 0
        if not mask.any():
            continue
        h = int(wh[mask].min())
        best_h = h if best_h is None else min(best_h, h)
        if lee:
            wl = np.minimum(block, N - block).sum(axis=1)
            lv = int(wl[mask].min())
            best_l = lv if best_l is None else min(best_l, lv)
    elapsed = (time.perf_counter() - start) * 1000.0
    return WeightReport(best_h, best_l, scanned, elapsed)


def verify_duality(code: LinearCode, dual: LinearCode) -> bool:
    """Generator rows pairwise orthogonal and |C| |D| = |R|^{2n}."""
    R = code.ring
    if code.cardinality * dual.cardinality != R.size ** (2 * code.n):
        return False
    if R.total_degree == 1:
        if not code.generators or not dual.generators:
            return True
        a = np.array(code.generators, dtype=np.int64)
        b = np.array(dual.generators, dtype=np.int64)
        return not ((a @ b.T) % R.char).any()
    return all(euclidean_inner(R, u, v) == R.zero for u in code.generators for v in dual.generators)


# -- the skew rings R_i as flat Z_{p^2}-modules ----------------------------------


def _a_basis(A) -> list:
    r = A.rank
    return [A.from_ints([1 if k == j else 0 for k in range(r)]) for j in range(r)]


def _flat(A, pair) -> list[int]:
    return list(A.to_ints(pair[0])) + list(A.to_ints(pair[1]))


def _unflat(A, v: Sequence[int]):
    r = A.rank
    return A.from_ints(v[:r]), A.from_ints(v[r:])


def y_times(comp: ComponentAlgebra, pair):
    """y * (b0 + b1 y) = theta(b1) + theta(b0) y."""
    b0, b1 = pair
    return comp.theta(b1), comp.theta(b0)


def left_ideal(comp: ComponentAlgebra, gens: Sequence, k: int = 2) -> ZModule:
    """Left ideal of R_i generated by ``gens``, as a module over Z_{p^k}.

    With k = 1 the result is the image of the ideal in the residue ring Gamma_i.
    """
    A = comp.A
    basis = _a_basis(A)
    rows = []
    for g in gens:
        for h in (g, y_times(comp, g)):
            for z in basis:
                rows.append(_flat(A, (A.mul(z, h[0]), A.mul(z, h[1]))))
    return ZModule(comp.p, k, 2 * A.rank, rows)


def ideal_generators(desc: IdealDescriptor, comp: ComponentAlgebra) -> list:
    """Generators of the left ideal exactly as the ideal is written in the classification."""
    A = comp.A
    p = comp.p
    c = desc.case
    one, zero = A.one, A.zero

    def k(v):
        return A.from_int(v)

    pA = k(p)
    if c == IE.ZERO:
        return []
    if c == IE.FULL:
        return [(one, zero)]
    if c in (IE.P_SCALAR, IE.TWO_R):
        return [(pA, zero)]
    if c == IE.POWER_SCALAR:
        return [(k(p ** desc.get("j")), zero)]
    if comp.is_linear:
        if c == IE.YMINUS1_PLUS_2U:
            return [(A.add(k(-1), A.mul_p(desc.get("u"))), one)]
        sign = -1 if "minus" in c.lower() else 1
        w = k(sign)
        if c in (IE.P_YPLUS1, IE.P_YMINUS1, IE.TWO_R_YMINUS1):
            return [(A.mul_p(w), pA)]
        if c in (IE.YPLUS1, IE.YMINUS1):
            return [(w, one)]
        return [(w, one), (pA, zero)]
    if c == IE.P_WPLUSY:
        w = desc.get("w")
        return [(A.mul_p(w), pA)]
    if c == IE.WPLUSY_PLUS_P:
        return [(desc.get("w"), one), (pA, zero)]
    if c == IE.W_THETA_PLUS_Y:
        return [(IE.outer_first_entry(comp, desc), one)]
    e = comp.pair_idempotents[desc.get("j") - 1]
    if c == IE.P_EPS:
        return [(A.mul_p(e), zero)]
    if c == IE.EPS_PLUS_P:
        return [(e, zero), (pA, zero)]
    if c == IE.EPS_PLUS_PBY:
        return [(e, A.mul_p(desc.get("b")))]
    raise ValueError(f"unknown case {c}")


def materialize_ideal(desc: IdealDescriptor, comp: ComponentAlgebra, cap: int = 1 << 32) -> ZModule:
    """The left ideal named by ``desc``, built from its own generators.

    Only a Howell form is computed; call ``element_set`` to list the elements.
    """
    if comp.A.size ** 2 > cap:
        raise TooLarge(f"|R_{comp.index}| = {comp.A.size ** 2} exceeds cap {cap}")
    return left_ideal(comp, ideal_generators(desc, comp))


def is_y_closed(comp: ComponentAlgebra, M: ZModule) -> bool:
    A = comp.A
    return all(M.contains(_flat(A, y_times(comp, _unflat(A, r)))) for r in M.rows())


def module_min_weight(comp: ComponentAlgebra, M: ZModule) -> int:
    """Minimum number of nonzero A_i-coordinates over nonzero elements (0 for {0})."""
    r = comp.A.rank
    best = 0
    for block in M.iter_chunks():
        w = block[:, :r].any(axis=1).astype(int) + block[:, r:].any(axis=1).astype(int)
        w = w[w > 0]
        if w.size:
            cur = int(w.min())
            best = cur if best == 0 else min(best, cur)
    return best


def element_set(M: ZModule) -> frozenset:
    return frozenset(M.elements())


# -- brute-force ideal lattices ----------------------------------------------


def _is_subgroup(elems: set, N: int) -> bool:
    for a in elems:
        for b in elems:
            if tuple((x + y) % N for x, y in zip(a, b)) not in elems:
                return False
    return True


def _subset_scan(comp: ComponentAlgebra) -> list[ZModule]:
    """Test every candidate subset (containing 0, size dividing |R_i|) for ideal closure."""
    A = comp.A
    N = A.char
    elems = [_flat(A, (a, b)) for a in A.elements() for b in A.elements()]
    total = len(elems)
    zero = tuple([0] * len(elems[0]))
    nonzero = [tuple(e) for e in elems if tuple(e) != zero]
    mult = [A.gen] + _a_basis(A)

    def closed(S):
        for v in S:
            pair = _unflat(A, v)
            if tuple(_flat(A, y_times(comp, pair))) not in S:
                return False
            for z in mult:
                if tuple(_flat(A, (A.mul(z, pair[0]), A.mul(z, pair[1])))) not in S:
                    return False
        return True

    found = []
    for size in range(1, total + 1):
        if total % size:
            continue
        for combo in itertools.combinations(nonzero, size - 1):
            S = set(combo)
            S.add(zero)
            if _is_subgroup(S, N) and closed(S):
                found.append(ZModule(comp.p, 2, len(zero), S))
    return found


def _closure_family(principal: list[ZModule]) -> list[ZModule]:
    family = {M.key(): M for M in principal}
    frontier = list(family.values())
    while frontier:
        new = []
        current = list(family.values())
        for a in frontier:
            for b in current:
                s = a + b
                if s.key() not in family:
                    family[s.key()] = s
                    new.append(s)
        frontier = new
    return sorted(family.values(), key=lambda M: (M.log_cardinality, M.key()))


def _cyclic_closure(comp: ComponentAlgebra, k: int = 2) -> list[ZModule]:
    A = comp.A
    elems = A.elements() if k == 2 else A.residues()
    ring_elems = list(elems)
    principal = {}
    zero = ZModule(comp.p, k, 2 * A.rank)
    principal[zero.key()] = zero
    for a in ring_elems:
        for b in ring_elems:
            M = left_ideal(comp, [(a, b)], k)
            principal.setdefault(M.key(), M)
    return _closure_family(list(principal.values()))


def brute_force_ideals(comp: ComponentAlgebra, strategy: str = "auto",
                       cap: int = 10_000) -> list[ZModule]:
    """Every left ideal of R_i, found without the classification tables."""
    size = comp.A.size ** 2
    if strategy == "auto":
        strategy = "subset" if size <= 16 else "closure"
    if strategy == "subset":
        if size > 1 << 16:
            raise TooLarge(f"subset scan needs |R_i| <= 65536, got {size}")
        return _subset_scan(comp)
    if size > cap:
        raise TooLarge(f"|R_{comp.index}| = {size} exceeds cap {cap}")
    return _cyclic_closure(comp)


def gamma_ideals(comp: ComponentAlgebra, cap: int = 10_000) -> list[ZModule]:
    """Left ideals of the residue ring Gamma_i = K_i[y; theta]/(y^2 - 1)."""
    size = comp.p ** (2 * comp.A.rank)
    if size > cap:
        raise TooLarge(f"|Gamma_{comp.index}| = {size} exceeds cap {cap}")
    return _cyclic_closure(comp, k=1)


def gamma_count_formula(comp: ComponentAlgebra) -> int:
    p, md = comp.p, comp.md
    if comp.is_linear:
        return 3 if p == 2 else 4
    if comp.kind == KIND_II:
        return p ** md + 3
    return p ** (md // 2) + 3
