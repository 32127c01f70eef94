"""Command-line front end.  Every successful run prints one JSON document."""
from __future__ import annotations

import argparse
import itertools
import json
import math
import sys
from typing import Sequence

from . import code_builder as CB
from . import ideal_enumeration as IE
from . import metrics_oracle as MO
from .errors import DihedralCodesError, NonPrime, NotCoprime, SchemaError
from .galois_ring import is_prime
from .setting import DihedralSetting, make_setting


class UsageError(DihedralCodesError):
    code = "UsageError"


def _modulus(text: str | None):
    if text is None:
        return None
    text = text.strip()
    try:
        if text.startswith("["):
            vals = json.loads(text)
        else:
            vals = [int(v) for v in text.replace(" ", "").split(",") if v]
    except (ValueError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot parse --modulus {text!r}: {exc}") from exc
    if not all(isinstance(v, int) for v in vals):
        raise UsageError("--modulus must be a list of integers")
    return vals


def setting_from_args(args) -> DihedralSetting:
    if not is_prime(args.p):
        raise NonPrime(f"p = {args.p} is not prime")
    if args.m < 1:
        raise UsageError("m must be positive")
    if args.n < 1 or math.gcd(args.n, args.p) != 1:
        raise NotCoprime(f"need gcd(n, p) = 1, got n = {args.n}, p = {args.p}")
    return make_setting(args.p, args.m, args.n, _modulus(args.modulus))


# -- selection files -----------------------------------------------------------


def parse_selection(obj, s: DihedralSetting) -> list[IE.IdealDescriptor]:
    """Accept either a bare list of descriptors or an object with a "selection" list."""
    base = ""
    if isinstance(obj, dict):
        for key in ("p", "m", "n"):
            if key in obj and obj[key] != getattr(s, key):
                raise SchemaError(f"file says {key} = {obj[key]}, command line says {getattr(s, key)}", f"/{key}")
        if "selection" not in obj:
            raise SchemaError("missing selection list", "/selection")
        obj, base = obj["selection"], "/selection"
    if not isinstance(obj, list):
        raise SchemaError("selection must be a list", base or "/")
    if len(obj) != len(s.comps):
        raise SchemaError(f"expected {len(s.comps)} descriptors, got {len(obj)}", base or "/")
    return [IE.descriptor_from_json(d, s.comps[i], f"{base}/{i}") for i, d in enumerate(obj)]


def selection_to_json(sel: Sequence[IE.IdealDescriptor], s: DihedralSetting) -> dict:
    return {"p": s.p, "m": s.m, "n": s.n,
            "selection": [d.to_json(s.comps[d.component_index]) for d in sel]}


def load_selection(path: str, s: DihedralSetting) -> list[IE.IdealDescriptor]:
    try:
        with open(path, encoding="utf-8") as fh:
            obj = json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON: {exc}", "") from exc
    return parse_selection(obj, s)


# -- subcommands -------------------------------------------------------------


def cmd_factor(args, s):
    return s.profile.to_json()


def cmd_idempotents(args, s):
    return s.idem.to_json()


def cmd_count(args, s):
    if args.self_dual:
        return {"count": str(IE.count_self_dual(s.profile, s.comps))}
    if args.self_orthogonal:
        return {"count": str(IE.count_self_orthogonal(s.profile, s.comps))}
    return {"count": str(IE.count_ideals(s.profile, s.comps))}


def cmd_enumerate(args, s):
    if args.component is None:
        raise UsageError("enumerate needs --component")
    if not 0 <= args.component < len(s.comps):
        raise UsageError(f"component {args.component} not in 0..{len(s.comps) - 1}")
    if args.offset < 0 or (args.limit is not None and args.limit < 0):
        raise UsageError("offset and limit must be non-negative")
    comp = s.comps[args.component]
    stop = None if args.limit is None else args.offset + args.limit
    items = []
    for desc, info in itertools.islice(IE.enumerate_ideals(comp), args.offset, stop):
        item = desc.to_json(comp)
        item["cardinality"] = str(info.cardinality)
        item["d"] = info.min_weight_d
        items.append(item)
    return {"component": args.component, "total": str(IE.component_count(comp)),
            "offset": args.offset, "items": items}


def _need_selection(args, s):
    if not args.selection:
        raise UsageError(f"{args.command} needs --selection")
    return load_selection(args.selection, s)


def cmd_build(args, s):
    return CB.build_code(s, _need_selection(args, s)).to_json()


def cmd_dual(args, s):
    return CB.dual_code(s, _need_selection(args, s)).to_json()


def cmd_classify(args, s):
    sel = _need_selection(args, s)
    per = [IE.classify_self(d, s.comps[d.component_index]) for d in sel]
    return {
        "self_dual": all(c["self_dual"] for c in per),
        "self_orthogonal": all(c["self_orthogonal"] for c in per),
        "components": per,
        "dual_selection": selection_to_json(CB.dual_selection(s, sel), s)["selection"],
    }


def cmd_distance(args, s):
    code = CB.build_code(s, _need_selection(args, s))
    return MO.min_distances(code, cap=args.cap, lee=args.lee).to_json()


def cmd_verify(args, s):
    from .worked_example import run_all

    rows = run_all()
    for r in rows:
        mark = "PASS" if r["passed"] else "FAIL"
        print(f"{mark}  {r['check']:<28} {r['elapsed_ms']:>9.1f} ms  {r['detail']}", file=sys.stderr)
    return {"passed": all(r["passed"] for r in rows), "checks": rows}


COMMANDS = {
    "factor": cmd_factor,
    "idempotents": cmd_idempotents,
    "count": cmd_count,
    "enumerate": cmd_enumerate,
    "build": cmd_build,
    "dual": cmd_dual,
    "classify": cmd_classify,
    "distance": cmd_distance,
    "verify-paper-example": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--p", type=int, default=2, help="residue characteristic (prime)")
    common.add_argument("--m", type=int, default=1, help="Galois ring degree")
    common.add_argument("--n", type=int, default=15, help="dihedral parameter, gcd(n, p) = 1")
    common.add_argument("--modulus", help="basic irreducible modulus for GR(p^2, m), e.g. 1,1,1")
    common.add_argument("--out", help="write the JSON result here instead of stdout")

    parser = argparse.ArgumentParser(prog="dihedral-codes",
                                     description="Left dihedral codes over Galois rings GR(p^2, m).")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in ("factor", "idempotents"):
        sub.add_parser(name, parents=[common])
    pc = sub.add_parser("count", parents=[common])
    grp = pc.add_mutually_exclusive_group()
    grp.add_argument("--self-dual", action="store_true")
    grp.add_argument("--self-orthogonal", action="store_true")
    pe = sub.add_parser("enumerate", parents=[common])
    pe.add_argument("--component", type=int)
    pe.add_argument("--offset", type=int, default=0)
    pe.add_argument("--limit", type=int)
    for name in ("build", "dual", "classify", "distance"):
        ps = sub.add_parser(name, parents=[common])
        ps.add_argument("--selection", help="JSON file with one descriptor per component")
        if name == "distance":
            ps.add_argument("--cap", type=int, default=MO.DEFAULT_CAP)
            ps.add_argument("--lee", action="store_true")
    sub.add_parser("verify-paper-example", parents=[common])
    return parser


def _emit_error(code: str, detail: str, **extra) -> int:
    obj = {"error": code, "detail": detail}
    obj.update(extra)
    print(json.dumps(obj), file=sys.stderr)
    return 2


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        if exc.code in (0, None):
            return 0
        return _emit_error("UsageError", "invalid command-line arguments")
    try:
        if args.command == "verify-paper-example":
            s = None
        else:
            s = setting_from_args(args)
        result = COMMANDS[args.command](args, s)
    except SchemaError as exc:
        return _emit_error(exc.code, exc.detail, pointer=exc.pointer)
    except DihedralCodesError as exc:
        return _emit_error(exc.code, exc.detail)
    text = json.dumps(result, indent=None if args.command == "enumerate" else 1)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
