"""Left dihedral codes over Galois rings GR(p^2, m).

Typical use::

    from dihedral_codes import make_setting, count_ideals
    s = make_setting(2, 1, 15)
    count_ideals(s.profile, s.comps)
"""
from __future__ import annotations

from .code_builder import LinearCode, build_code, dual_code, dual_selection, outer_matrices
from .component_algebra import ComponentAlgebra, build_component, solution_sets
from .errors import DihedralCodesError
from .galois_ring import construct_ring
from .ideal_enumeration import (
    IdealDescriptor,
    count_ideals,
    count_self_dual,
    count_self_orthogonal,
    dual_descriptor,
    enumerate_ideals,
)
from .metrics_oracle import min_distances, verify_duality
from .ring_poly import factor_unity, primary_idempotents
from .setting import DihedralSetting, make_setting

__version__ = "0.1.0"

__all__ = [
    "ComponentAlgebra", "DihedralCodesError", "DihedralSetting", "IdealDescriptor", "LinearCode",
    "build_code", "build_component", "construct_ring", "count_ideals", "count_self_dual",
    "count_self_orthogonal", "dual_code", "dual_descriptor", "dual_selection", "enumerate_ideals",
    "factor_unity", "make_setting", "min_distances", "outer_matrices", "primary_idempotents",
    "solution_sets", "verify_duality",
]
