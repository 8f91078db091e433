"""neronlab command line.

Every subcommand prints a JSON object with --json and a short text form
otherwise.  Exit status: 0 when everything requested succeeded or passed,
1 on a failed check or domain error, 2 on a parse error.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from ..algebra import GF, INFINITY, ZERO, ParseError, Place, parse_coefficients, parse_element, parse_ratfunc
from ..groupscheme import check_axioms, h1_free_orbit_count
from ..localred import potential_reduction, tate_reduce
from ..ramify import (
    RamFiltration,
    change_of_group_table,
    gl2f2_delta_one,
    hasse_herbrand_phi,
    sl2f3_delta_one,
    swan_delta,
    swan_from_orders,
    upper_breaks,
)
from ..torsion import criterion_report, hasse_invariant, specialize
from ..weierstrass import (
    CurvePoint,
    WeierstrassEq,
    base_change,
    frobenius_pullback,
    twist_higher,
    twist_quadratic,
    twist_quadratic_as,
)
from . import properties, registry


class CliError(Exception):
    def __init__(self, payload: dict, code: int = 1):
        super().__init__(payload.get("message", ""))
        self.payload = payload
        self.code = code


def _field(args):
    return GF(args.char, args.field_deg)


def _curve(args) -> WeierstrassEq:
    F = _field(args)
    return WeierstrassEq.from_coeffs(parse_coefficients(args.eq, F), F)


def _place(args) -> Place:
    text = getattr(args, "place", "0")
    if text in ("0", None):
        return ZERO
    if text.lower() in ("inf", "infinity"):
        return INFINITY
    return Place.finite(parse_element(text, _field(args)))


def _frac_list(text: str) -> list[int]:
    return [int(x) for x in text.replace(" ", "").split(",") if x]


def cmd_reduce(args) -> dict:
    E = _curve(args)
    v = _place(args)
    rd = tate_reduce(E, v)
    out = rd.to_dict()
    out["place"] = v.label(E.F)
    out["j"] = None if E.j is None else E.j.to_str()
    out["potential"] = potential_reduction(E, v)
    return out


def cmd_twist(args) -> dict:
    E = _curve(args)
    d = parse_ratfunc(args.param, E.F)
    if args.kind == "quadratic":
        T = twist_quadratic_as(E, d) if E.char == 2 else twist_quadratic(E, d)
    else:
        T = twist_higher(E, args.kind, d)
    v = _place(args)
    return {"twist": T.literal(), "kodaira": str(tate_reduce(E, v).kodaira),
            "twist_kodaira": str(tate_reduce(T, v).kodaira)}


def cmd_frobenius(args) -> dict:
    E = _curve(args)
    Fr = E
    for _ in range(args.times):
        Fr = frobenius_pullback(Fr)
    v = _place(args)
    a, b = tate_reduce(E, v), tate_reduce(Fr, v)
    return {"pullback": Fr.literal(), "kodaira": str(a.kodaira), "nu_delta": a.nu_delta,
            "pullback_kodaira": str(b.kodaira), "pullback_nu_delta": b.nu_delta, "pullback_delta": b.delta}


def cmd_basechange(args) -> dict:
    E = _curve(args)
    g = parse_ratfunc(args.sub, E.F)
    B = base_change(E, g)
    rd = tate_reduce(B, _place(args))
    out = rd.to_dict()
    out["pulled_back"] = B.literal()
    out["j"] = B.j.to_str()
    return out


def cmd_torsion(args) -> dict:
    E = _curve(args)
    v = _place(args)
    out = {"hasse": hasse_invariant(E, v).h.to_str(), "hasse_order": str(hasse_invariant(E, v).vanishing_order)}
    if args.point:
        x, y = (parse_ratfunc(s, E.F) for s in _split_point(args.point))
        P = CurvePoint(x, y)
        rep = specialize(E, P, v)
        out.update(rep.to_dict())
        if E.char in (2, 3) and rep.order == E.char:
            crit = criterion_report(E, P, v)
            out["nonzero_in_phi_criterion"] = None if crit is None else crit.nonzero_in_phi
    return out


def _split_point(text: str) -> tuple[str, str]:
    s = text.strip().lstrip("(").rstrip(")")
    depth = 0
    for i, ch in enumerate(s):
        depth += ch == "("
        depth -= ch == ")"
        if ch == "," and depth == 0:
            return s[:i], s[i + 1:]
    raise ParseError("point must be written (x,y)", text, 0)


def cmd_swan(args) -> dict:
    if args.group:
        G = {"sl2f3": sl2f3_delta_one, "gl2f2": gl2f2_delta_one}[args.group]()
        out = {"group": args.group, "orders": list(G.orders()), "delta": swan_delta(G)}
        if args.group == "sl2f3":
            table = change_of_group_table()
            if args.subgroup:
                if args.subgroup not in table:
                    raise CliError({"error": "unknown_subgroup", "message": f"choose from {sorted(table)}"})
                out["subgroup"] = args.subgroup
                out["subgroup_delta"] = table[args.subgroup]
            else:
                out["subgroups"] = table
        elif args.subgroup:
            raise CliError({"error": "unknown_subgroup", "message": "subgroups are listed for sl2f3 only"})
        return out
    orders = _frac_list(args.orders)
    codims = _frac_list(args.codims) if args.codims else [2] * (len(orders) - 1)
    return {"orders": orders, "codims": codims, "delta": str(swan_from_orders(orders, codims))}


def cmd_phi(args) -> dict:
    fil = RamFiltration(tuple(_frac_list(args.orders)))
    x = Fraction(args.x)
    return {"orders": list(fil.orders), "x": str(x), "phi": str(hasse_herbrand_phi(fil, x)),
            "upper_breaks": [str(b) for b in upper_breaks(fil)]}


def cmd_groupscheme(args) -> dict:
    if args.action == "axioms":
        F = _field(args)
        tau = parse_element(args.tau, F) if args.tau else 1
        rep = check_axioms(F, tau)
        return rep.to_dict()
    count = h1_free_orbit_count(args.char, GF(args.char, args.field_deg), args.degree_bound)
    return {"p": args.char, "degree_bound": args.degree_bound, "free_orbits": count}


def cmd_verify(args) -> dict:
    params = {}
    for item in args.param or []:
        key, _, val = item.partition("=")
        params[key] = [int(x) for x in val.split(",")]
    tables = list(registry.TABLES) if args.table == "all" else [args.table]
    reports = []
    for t in tables:
        try:
            reports.append(registry.verify(t, params if args.table != "all" else None))
        except registry.UnknownTableError as exc:
            raise CliError({"error": "unknown_table", "message": str(exc.args[0])}) from None
    out = {"ok": all(r.ok for r in reports), "tables": [r.to_dict() for r in reports]}
    if not args.json:
        for r in reports:
            print(r.summary())
            for f in r.failures():
                print(f"  FAIL {f.id}: {f.error or ''} expected {f.expected} computed {f.computed}")
    return out


def cmd_properties(args) -> dict:
    results = [fn(args.seed) if args.count is None else fn(args.seed, args.count)
               for fn in properties.SUITES.values()]
    out = {"ok": all(r.ok for r in results), "seed": args.seed, "suites": [r.to_dict() for r in results]}
    if not args.json:
        for r in results:
            print(f"{r.name}: {'ok' if r.ok else 'FAIL'} ({r.trials} trials)")
    return out


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="neronlab", description="Reduction types of elliptic curves over F_q(t).")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--char", type=int, default=2)
    common.add_argument("--field-deg", type=int, default=1)
    common.add_argument("--json", action="store_true")
    curve = argparse.ArgumentParser(add_help=False, parents=[common])
    curve.add_argument("--eq", required=True, help="[a1,a2,a3,a4,a6], coefficients in t")
    curve.add_argument("--place", default="0", help="0, inf, or a field element c for t = c")
    sub = ap.add_subparsers(dest="command", required=True)

    sub.add_parser("reduce", parents=[curve]).set_defaults(fn=cmd_reduce)
    p = sub.add_parser("twist", parents=[curve])
    p.add_argument("--kind", choices=["quadratic", "cubic", "sextic", "quartic"], default="quadratic")
    p.add_argument("--param", default="t")
    p.set_defaults(fn=cmd_twist)
    p = sub.add_parser("frobenius", parents=[curve])
    p.add_argument("--times", type=int, default=1)
    p.set_defaults(fn=cmd_frobenius)
    p = sub.add_parser("basechange", parents=[curve])
    p.add_argument("--sub", required=True, help="t = g(t), e.g. t^2/(1+t)")
    p.set_defaults(fn=cmd_basechange)
    p = sub.add_parser("torsion", parents=[curve])
    p.add_argument("--point", help="(x,y) with coordinates in t")
    p.set_defaults(fn=cmd_torsion)

    def add_swan(parser):
        parser.add_argument("--group", choices=["sl2f3", "gl2f2"])
        parser.add_argument("--subgroup", help="SL2F3, C6, Q, C4, C3, C2 or 1")
        parser.add_argument("--orders", default="")
        parser.add_argument("--codims", default="")
        parser.set_defaults(fn=cmd_swan)

    def add_phi(parser):
        parser.add_argument("--orders", required=True)
        parser.add_argument("--x", required=True)
        parser.set_defaults(fn=cmd_phi)

    add_swan(sub.add_parser("swan", parents=[common]))
    add_phi(sub.add_parser("phi", parents=[common]))
    p = sub.add_parser("ramify")
    rsub = p.add_subparsers(dest="action", required=True)
    add_swan(rsub.add_parser("swan", parents=[common]))
    add_phi(rsub.add_parser("phi", parents=[common]))

    p = sub.add_parser("groupscheme")
    gsub = p.add_subparsers(dest="action", required=True)
    q = gsub.add_parser("axioms", parents=[common])
    q.add_argument("--tau", help="nonzero field element; default 1")
    q.set_defaults(fn=cmd_groupscheme)
    q = gsub.add_parser("h1count", parents=[common])
    q.add_argument("--degree-bound", type=int, default=1)
    q.set_defaults(fn=cmd_groupscheme)

    p = sub.add_parser("verify", parents=[common])
    p.add_argument("table", help="table id or 'all'")
    p.add_argument("--param", action="append", help="key=v1,v2 restricting the cases, e.g. p=13")
    p.set_defaults(fn=cmd_verify)
    p = sub.add_parser("properties", parents=[common])
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int)
    p.set_defaults(fn=cmd_properties)
    return ap


def _ok(out: dict) -> bool:
    if "ok" in out:
        return bool(out["ok"])
    return True


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        out = args.fn(args)
        code = 0 if _ok(out) else 1
    except ParseError as exc:
        out, code = {"error": "parse", "message": exc.message, "pos": exc.pos, "text": exc.text}, 2
    except CliError as exc:
        out, code = exc.payload, exc.code
    except (ValueError, ArithmeticError) as exc:
        out, code = {"error": type(exc).__name__, "message": str(exc)}, 1
    if args.json or "error" in out:
        print(json.dumps(out, indent=None if "error" in out else 2, default=str))
    elif args.command not in ("verify", "properties"):
        for k, v in out.items():
            print(f"{k}: {v}")
    return code


if __name__ == "__main__":
    sys.exit(main())
