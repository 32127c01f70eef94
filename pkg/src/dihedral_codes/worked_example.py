"""Reference checks for left D_30-codes over Z_4 (p = 2, m = 1, n = 15).

Each check returns a small dict ``{check, passed, detail, elapsed_ms}``; the
CLI prints them as a table.
"""
from __future__ import annotations

import time
from typing import Callable

from . import code_builder as CB
from . import ideal_enumeration as IE
from . import metrics_oracle as MO
from . import polyops as P
from .setting import DihedralSetting, make_setting

# Expected values, coefficient lists in ascending powers of x.
FACTORS = [[3, 1], [1, 1, 1], [1, 1, 1, 1, 1]]
RHO3 = [1, 3, 2, 0, 1]
EPS = [
    [3] * 15,
    [2, 1, 1] * 5,
    [0, 1, 1, 1, 1] * 3,
]
EPS31 = [2, 2, 3, 1, 2, 1, 0, 3]
EPS32 = [3, 2, 1, 3, 2, 3, 0, 1]
W1 = {(1, 0), (0, 1), (3, 3)}
V1 = {(0, 0), (1, 0)}
W2 = {(1, 0, 0, 0), (3, 3, 3, 3), (0, 0, 0, 1), (0, 0, 1, 0), (0, 1, 0, 0)}
V2 = {(0, 0, 0, 0), (1, 0, 0, 0), (1, 0, 1, 1), (0, 0, 1, 1)}
ZETA_ORDERS = [((1, [0, 1]), 3), ((2, [1, 1, 0, 2]), 15), ((3, [0, 0, 1]), 15)]
COUNTS = {"total": 1070685, "self_dual": 33, "self_orthogonal": 5355}
STREAMS = [7, 15, 33, 309]
THETA2_TABLE = {(0, 0, 1, 1), (1, 0, 1, 1)}


def setting() -> DihedralSetting:
    return make_setting(2, 1, 15)


def _padded(R, poly, n):
    return list(P.pad(R, P.trim(R, list(poly)), n))


def check_factorization(s: DihedralSetting) -> tuple[bool, str]:
    prof = s.profile
    fs = [list(f.f) for f in prof.factors]
    f3 = P.pmul(s.ring, RHO3, P.reverse(s.ring, RHO3))
    ok = fs[:3] == FACTORS and list(prof.factors[3].rho) == RHO3 and fs[3] == list(f3)
    ok = ok and (prof.r, prof.t, prof.lam) == (2, 1, 1)
    return ok, f"f = {fs}, rho3 = {list(prof.factors[3].rho)}, r,t,lambda = {prof.r},{prof.t},{prof.lam}"


def check_idempotents(s: DihedralSetting) -> tuple[bool, str]:
    R, n = s.ring, s.n
    eps = [list(e) for e in s.idem.eps]
    ok = all(eps[i] == _padded(R, EPS[i], n) for i in range(3))
    total = [0] * n
    for e in eps:
        total = P.pad(R, P.padd(R, total, e), n)
    ok = ok and total == _padded(R, [1], n)
    for i, a in enumerate(eps):
        for j, b in enumerate(eps):
            prod = P.pad(R, P.cyclic_mul(R, a, b, n), n)
            ok = ok and prod == (a if i == j else [0] * n)
    A3 = s.comps[3].A
    e31, e32 = s.comps[3].pair_idempotents
    ok = ok and list(A3.to_poly(e31)) == EPS31 and list(A3.to_poly(e32)) == EPS32
    return ok, "eps_0..eps_2 and the pair idempotents of component 3 compared coefficientwise"


def check_counts(s: DihedralSetting) -> tuple[bool, str]:
    streams = [sum(1 for _ in IE.enumerate_ideals(c)) for c in s.comps]
    total = IE.count_ideals(s.profile, s.comps)
    ok = streams == STREAMS and total == COUNTS["total"]
    return ok, f"streams {streams}, total {total}"


def check_self_families(s: DihedralSetting) -> tuple[bool, str]:
    sd = IE.count_self_dual(s.profile, s.comps)
    so = IE.count_self_orthogonal(s.profile, s.comps)
    ok = sd == COUNTS["self_dual"] and so == COUNTS["self_orthogonal"]
    per = [IE.self_dual_descriptors(c) for c in s.comps]
    ok = ok and all(IE.dual_descriptor(d, c) == d for c, ds in zip(s.comps, per) for d in ds)
    return ok, f"self-dual {sd}, self-orthogonal {so}"


def check_worked_sets(s: DihedralSetting) -> tuple[bool, str]:
    s1, s2 = IE.component_sets(s.comps[1]), IE.component_sets(s.comps[2])
    ok = set(s1.W) == W1 and set(s1.V) == V1 and set(s2.W) == W2 and set(s2.V) == V2
    orders = []
    for (i, poly), want in ZETA_ORDERS:
        c = s.comps[i]
        ring = c.upsilon if c.upsilon is not None else c.A
        got = ring.multiplicative_order(ring.from_poly(poly))
        orders.append(got)
        ok = ok and got == want
    return ok, f"W/V sets compared as sets; element orders {orders}"


def sixty_code_selections(s: DihedralSetting) -> list[list[IE.IdealDescriptor]]:
    mk = IE.IdealDescriptor.make
    s1, s2 = IE.component_sets(s.comps[1]), IE.component_sets(s.comps[2])
    out = []
    for w1 in s1.W:
        for t1 in s1.V:
            for w2 in s2.W:
                for t2 in s2.V:
                    if t2 not in THETA2_TABLE:
                        continue
                    out.append([mk(0, IE.ZERO), mk(1, IE.W_THETA_PLUS_Y, w=w1, theta=t1),
                                mk(2, IE.W_THETA_PLUS_Y, w=w2, theta=t2), mk(3, IE.ZERO)])
    return out


def check_sixty_codes(s: DihedralSetting) -> tuple[bool, str]:
    sels = sixty_code_selections(s)
    bad = 0
    for sel in sels:
        code = CB.build_code(s, sel)
        rep = MO.min_distances(code, lee=True)
        if not (code.cardinality == 4096 and rep.words_scanned == 4096
                and rep.d_hamming == 12 and rep.d_lee == 20):
            bad += 1
    return len(sels) == 60 and bad == 0, f"{len(sels)} codes, {bad} off the (12, 20) target"


CHECKS: list[tuple[str, Callable]] = [
    ("factorization", check_factorization),
    ("idempotents", check_idempotents),
    ("counting", check_counts),
    ("self-dual / self-orthogonal", check_self_families),
    ("worked sets", check_worked_sets),
    ("60-code table", check_sixty_codes),
]


def run_all() -> list[dict]:
    s = setting()
    rows = []
    for name, fn in CHECKS:
        start = time.perf_counter()
        try:
            ok, detail = fn(s)
        except Exception as exc:  # noqa: BLE001 - reported as a failed row
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        rows.append({"check": name, "passed": bool(ok), "detail": detail,
                     "elapsed_ms": round((time.perf_counter() - start) * 1000.0, 1)})
    return rows
