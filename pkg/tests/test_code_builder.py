from __future__ import annotations

import json

import pytest

from dihedral_codes import code_builder as CB
from dihedral_codes import ideal_enumeration as IE
from dihedral_codes import metrics_oracle as MO
from dihedral_codes.errors import ComponentMismatch, IncompleteSelection
from dihedral_codes.setting import make_setting

mk = IE.IdealDescriptor.make


def _zero(s):
    return [mk(c.index, IE.ZERO) for c in s.comps]


def _two_component(s, w1, t1, w2, t2):
    return [mk(0, IE.ZERO), mk(1, IE.W_THETA_PLUS_Y, w=w1, theta=t1),
            mk(2, IE.W_THETA_PLUS_Y, w=w2, theta=t2), mk(3, IE.ZERO)]


def test_outer_matrix_rows(z4):
    c1, c3 = z4.comps[1], z4.comps[3]
    A1 = c1.A
    G, H = CB.outer_matrices(mk(1, IE.ZERO), c1)
    assert G.rows == [] and H.rows == [(A1.one, A1.zero), (A1.zero, A1.one)]
    w = (0, 1)
    G, H = CB.outer_matrices(mk(1, IE.WPLUSY_PLUS_P, w=w), c1)
    assert G.rows == [(w, A1.one), (A1.zero, A1.from_int(2))]
    assert H.rows == [(A1.neg(A1.mul_p(w)), A1.from_int(2))]
    A3 = c3.A
    e1, e2 = c3.pair_idempotents
    b = IE.component_sets(c3).K1[3]
    G, H = CB.outer_matrices(mk(3, IE.EPS_PLUS_PBY, j=1, b=b), c3)
    assert G.rows == [(e1, A3.mul_p(b)), (A3.mul_p(c3.theta(b)), e2)]
    assert H.rows == [(e1, A3.neg(A3.mul_p(b))), (A3.neg(A3.mul_p(c3.theta(b))), e2)]


def test_component_mismatch(z4):
    with pytest.raises(ComponentMismatch):
        CB.outer_matrices(mk(2, IE.ZERO), z4.comps[1])
    G, _ = CB.outer_matrices(mk(1, IE.POWER_SCALAR, j=0), z4.comps[1])
    with pytest.raises(ComponentMismatch):
        CB.concatenate(z4.comps[2], G)


def test_concatenation_shapes(z4):
    c0 = z4.comps[0]
    G, _ = CB.outer_matrices(mk(0, IE.FULL), c0)
    rows = CB.concatenate(c0, G)
    eps0 = list(z4.idem.eps[0])
    assert rows == [eps0 + [0] * 15, [0] * 15 + eps0]
    assert CB.concatenate(c0, CB.outer_matrices(mk(0, IE.ZERO), c0)[0]) == []
    s1 = IE.component_sets(z4.comps[1])
    G, _ = CB.outer_matrices(mk(1, IE.W_THETA_PLUS_Y, w=s1.W[0], theta=s1.V[1]), z4.comps[1])
    rows = CB.concatenate(z4.comps[1], G)
    assert len(rows) == 2 and all(len(r) == 30 for r in rows)
    assert rows[0][15:] == list(z4.idem.eps[1])


def test_two_component_code_and_dual(z4):
    s1, s2 = IE.component_sets(z4.comps[1]), IE.component_sets(z4.comps[2])
    sel = _two_component(z4, s1.W[0], s1.V[0], s2.W[0], s2.V[2])
    code = CB.build_code(z4, sel)
    assert len(code.generators) == 6 and code.cardinality == 4096
    assert code.module().cardinality == 4096
    dual = CB.dual_code(z4, sel)
    assert dual.cardinality == 4 ** 24
    assert dual.module() == CB.build_code(z4, CB.dual_selection(z4, sel)).module()
    assert MO.verify_duality(code, dual)
    assert CB.dihedral_closure_check(code, exhaustive=True)


def test_trivial_codes(z4):
    zero = CB.build_code(z4, _zero(z4))
    assert zero.generators == [] and zero.cardinality == 1
    assert CB.dihedral_closure_check(zero) and CB.dihedral_closure_check(zero, exhaustive=True)
    whole = CB.dual_code(z4, _zero(z4))
    assert whole.cardinality == 4 ** 30 and whole.module().cardinality == 4 ** 30
    full = [mk(0, IE.FULL)] + [mk(i, IE.POWER_SCALAR, j=0) for i in (1, 2, 3)]
    assert CB.build_code(z4, full).cardinality == 4 ** 30


def test_incomplete_selection(z4):
    with pytest.raises(IncompleteSelection):
        CB.build_code(z4, _zero(z4)[:3])
    sel = _zero(z4)
    sel[1], sel[2] = sel[2], sel[1]
    with pytest.raises(IncompleteSelection):
        CB.build_code(z4, sel)


def test_corrupted_generator_breaks_closure(z4):
    s1 = IE.component_sets(z4.comps[1])
    sel = _zero(z4)
    sel[1] = mk(1, IE.W_THETA_PLUS_Y, w=s1.W[1], theta=s1.V[1])
    code = CB.build_code(z4, sel)
    assert CB.dihedral_closure_check(code)
    bad = CB.LinearCode(z4, [list(r) for r in code.generators], code.cardinality, code.selection)
    bad.generators[0][0] = (bad.generators[0][0] + 1) % 4
    assert not CB.dihedral_closure_check(bad)
    assert not CB.dihedral_closure_check(bad, exhaustive=True)


def test_json_layout(z4):
    s1, s2 = IE.component_sets(z4.comps[1]), IE.component_sets(z4.comps[2])
    code = CB.build_code(z4, _two_component(z4, s1.W[0], s1.V[0], s2.W[0], s2.V[2]))
    js = json.loads(json.dumps(code.to_json()))
    assert js["cardinality"] == "4096"
    assert len(js["rows"]) == 6 and all(len(r) == 30 for r in js["rows"])
    assert [d["case"] for d in js["selection"]] == [IE.ZERO, IE.W_THETA_PLUS_Y, IE.W_THETA_PLUS_Y, IE.ZERO]


def test_gr_rows_serialize_as_vectors():
    s = make_setting(2, 2, 5)
    sel = _zero(s)
    sel[1] = mk(1, IE.POWER_SCALAR, j=1)
    js = CB.build_code(s, sel).to_json()
    assert all(len(sym) == 2 for row in js["rows"] for sym in row)


def test_concatenation_weight_bound():
    # d_H over R of the concatenated code is at least d_H(A_i-cyclic code) times the outer weight
    s = make_setting(2, 1, 7)
    comp = s.comps[0]
    for d in IE._descriptors(comp):
        if d.case == IE.ZERO:
            continue
        sel = _zero(s)
        sel[0] = d
        rep = MO.min_distances(CB.build_code(s, sel))
        inner = 7    # the cyclic code generated by eps_0 is the repetition code
        assert rep.d_hamming >= inner * IE.ideal_info(comp, d).min_weight_d
