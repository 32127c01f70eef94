"""One-stop construction of everything attached to a triple (p, m, n)."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .component_algebra import ComponentAlgebra, build_component
from .galois_ring import Ring, construct_ring
from .ring_poly import FactorProfile, IdempotentFamily, factor_unity, primary_idempotents


@dataclass
class DihedralSetting:
    ring: Ring
    profile: FactorProfile
    idem: IdempotentFamily
    comps: list[ComponentAlgebra]

    @property
    def p(self) -> int:
        return self.ring.p

    @property
    def m(self) -> int:
        return self.ring.total_degree

    @property
    def n(self) -> int:
        return self.profile.n

    def component(self, i: int) -> ComponentAlgebra:
        return self.comps[i]


def make_setting(p: int, m: int, n: int, modulus: Sequence[int] | None = None) -> DihedralSetting:
    return _cached(p, m, n, None if modulus is None else tuple(modulus))


@lru_cache(maxsize=32)
def _cached(p: int, m: int, n: int, modulus: tuple | None) -> DihedralSetting:
    ring = construct_ring(p, m, modulus)
    profile = factor_unity(ring, n)
    idem = primary_idempotents(profile)
    comps = [build_component(profile, idem, i) for i in range(len(profile.factors))]
    return DihedralSetting(ring, profile, idem, comps)
