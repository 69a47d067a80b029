"""Command-line front end: exact JSON/DOT reports plus the verify runner.

Exit codes: 0 success, 2 argument or validation failure, 3 structurally
unsupported request (e.g. the Loewy diagram of a general Kac label).
Output is deterministic: same argv, byte-identical bytes.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import braidfmat, fusion, kacmod, sl2rep, verify, wpq
from .exactnum import ParamScalar, Phase, rat_str
from .kacmod import UnsupportedObjectError
from .virasoro import Params, VirLabel, canonical_label, central_charge, conformal_weight

PQ_PRESETS = {
    "2,3": (2, 3),  # critical percolation
    "3,4": (3, 4),
    "2,5": (2, 5),
}


def _emit(payload: dict) -> None:
    sys.stdout.write(json.dumps(payload, indent=2) + "\n")


def _scalar_str(x) -> str:
    if isinstance(x, ParamScalar):
        return str(x)
    return rat_str(Fraction(x))


def _resolve_params(args) -> Params:
    if getattr(args, "pq_preset", None):
        if args.p is not None or args.q is not None:
            raise ValueError("--pq-preset conflicts with explicit --p/--q")
        p, q = PQ_PRESETS[args.pq_preset]
        return Params(p, q)
    if args.p is None or args.q is None:
        raise ValueError("missing --p/--q (or use --pq-preset)")
    return Params(args.p, args.q)


def _add_pq(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--p", type=int, default=None, help="first member of the coprime pair")
    parser.add_argument("--q", type=int, default=None, help="second member of the coprime pair")
    parser.add_argument(
        "--pq-preset",
        choices=sorted(PQ_PRESETS),
        default=None,
        help="preset (p,q) pair; 2,3 is the critical-percolation case",
    )


def _default_format() -> str:
    fmt = os.environ.get("TRIPLET_OUTPUT", "json")
    if fmt not in ("json", "dot"):
        raise ValueError(f"TRIPLET_OUTPUT must be 'json' or 'dot', got {fmt!r}")
    return fmt


def _cmd_weights(args) -> int:
    params = _resolve_params(args)
    lbl = VirLabel(args.r, args.s)
    can = canonical_label(params, lbl)
    _emit(
        {
            "c": rat_str(central_charge(params)),
            "h": rat_str(conformal_weight(params, lbl)),
            "canonical": [can.r, can.s],
        }
    )
    return 0


def _cmd_fuse_l(args) -> int:
    params = _resolve_params(args)
    result = fusion.fuse_L_family(params, args.m, args.n)
    _emit(result.to_json())
    return 0


def _cmd_fuse_c(args) -> int:
    channels = fusion.fuse_C(args.m, args.n)
    _emit({"entries": [{"mult": 1, "obj": {"kind": "Ln", "n": k}} for k in channels]})
    return 0


def _diagram_args_to_mn(params: Params, args) -> tuple[int, int]:
    if args.r is not None or args.s is not None:
        if args.m is not None or args.n is not None:
            raise ValueError("give either --m/--n or --r/--s, not both")
        if args.r is None or args.s is None:
            raise ValueError("--r and --s must be given together")
        r, s = args.r, args.s
        if (r + 1) % params.p == 0 and (s + 1) % params.q == 0:
            m, n = (r + 1) // params.p, (s + 1) // params.q
            if m >= n >= 2:
                return m, n
        raise UnsupportedObjectError(
            f"no Loewy diagram available for the general Kac label K_{{{r},{s}}}"
        )
    if args.m is None or args.n is None:
        raise ValueError("missing --m/--n")
    return args.m, args.n


def _cmd_kac_diagram(args) -> int:
    params = _resolve_params(args)
    m, n = _diagram_args_to_mn(params, args)
    diagram = kacmod.kac_mm_nn_diagram(params, m, n)
    fmt = args.format or _default_format()
    if fmt == "dot":
        sys.stdout.write(kacmod.diagram_to_dot(params, diagram))
        return 0
    _emit(
        {
            "module": {"kind": "KacK", "label": [m * params.p - 1, n * params.q - 1]},
            "m": m,
            "n": n,
            "nodes": [
                {
                    "id": node.id,
                    "label": [node.label.r, node.label.s],
                    "layer": node.layer,
                    "h": rat_str(conformal_weight(params, node.label)),
                }
                for node in diagram.nodes
            ],
            "edges": [[src, dst] for src, dst in diagram.edges],
        }
    )
    return 0


def _fmatrix_json(matrix: braidfmat.FMatrix) -> list[list[str]]:
    return [
        [_scalar_str(matrix.f00), _scalar_str(matrix.f02)],
        [_scalar_str(matrix.f20), _scalar_str(matrix.f22)],
    ]


def _cmd_hexagon(args) -> int:
    params = _resolve_params(args)
    solutions = braidfmat.hexagon_solutions(params)
    t0 = Fraction(args.t) if args.t is not None else None
    if t0 == 0:
        raise ValueError("--t must be nonzero")
    payload = {
        "epsilon": solutions[0].epsilon,
        "solutions": [],
        "residual_zero": True,
    }
    for sol in solutions:
        residual = braidfmat.hexagon_residual(params, sol.matrix)
        zero = all(ParamScalar.coerce(x).is_zero() for x in residual.entries())
        payload["residual_zero"] = payload["residual_zero"] and zero
        entry = {
            "kind": sol.kind,
            "F": _fmatrix_json(sol.matrix),
            "intrinsic_dimension": rat_str(braidfmat.intrinsic_dimension(sol, params)),
        }
        if t0 is not None:
            entry["F_at_t"] = _fmatrix_json(sol.matrix.evaluate(t0))
        payload["solutions"].append(entry)
    if t0 is not None:
        payload["t"] = rat_str(t0)
    _emit(payload)
    return 0


def _cmd_braiding(args) -> int:
    params = _resolve_params(args)
    n = args.n
    if n < 0:
        raise ValueError(f"--n must be >= 0, got {n}")
    channels = fusion.fuse_C(n, n)
    balancing = braidfmat.balancing_check(params, n)
    payload = {
        "n": n,
        "channels": channels,
        "formula": {str(k): braidfmat.r_scalar_formula(params, n, k).to_json() for k in channels},
    }
    if n == 1:
        payload["table"] = {
            str(k): braidfmat.r_scalar_table(params, 1, k).to_json() for k in (0, 2)
        }
        payload["conventions_differ_by_sign"] = all(
            braidfmat.r_scalar_table(params, 1, k)
            == Phase(braidfmat.r_scalar_formula(params, 1, k).exponent + 1)
            for k in (0, 2)
        )
        payload["note"] = (
            "tabulated and formula R-scalars differ by an overall sign; "
            "both conventions square to the balancing phases"
        )
    payload["balancing"] = {str(k): balancing[k].to_json() for k in channels}
    _emit(payload)
    return 0


def _graded_json(decomp: wpq.GradedDecomp, target: str) -> dict:
    entries = []
    for e in decomp.entries:
        row = {}
        if e.psl2 is not None:
            row["psl2"] = e.psl2
        row["mult"] = e.mult
        row["obj"] = e.obj.to_json()
        row["h"] = rat_str(e.lowest_weight)
        entries.append(row)
    return {"target": target, "n_max": decomp.n_max, "entries": entries}


def _cmd_decompose(args) -> int:
    params = _resolve_params(args)
    target = args.target
    if target == "wpq":
        decomp = wpq.decompose_wpq(params, args.nmax)
    elif target == "wpq-equivariant":
        decomp = wpq.decompose_wpq_equivariant(params, args.nmax)
    elif target == "ideal":
        decomp = wpq.decompose_ideal(params, args.nmax)
    else:
        decomp = wpq.decompose_wprime(params, args.nmax)
    _emit(_graded_json(decomp, target))
    return 0


def _cmd_o0_check(args) -> int:
    params = _resolve_params(args)
    rows = [
        {"n": n, "difference": rat_str(diff), "integral": flag}
        for n, diff, flag in wpq.o0_weight_identity(params, args.nmax)
    ]
    _emit({"n_max": args.nmax, "rows": rows})
    return 0


def _matrix_json(matrix) -> list[list[str]]:
    return [[rat_str(x) for x in row] for row in matrix]


def _cmd_sl2(args) -> int:
    if args.n < 0:
        raise ValueError(f"--n must be >= 0, got {args.n}")
    if args.op == "irrep":
        rep = sl2rep.build_irrep(args.n)
        mats = rep.matrices()
        _emit(
            {
                "n": args.n,
                "E": _matrix_json(mats["E"]),
                "F": _matrix_json(mats["F"]),
                "H": _matrix_json(mats["H"]),
            }
        )
        return 0
    if args.op == "form":
        form = sl2rep.invariant_form(args.n)
        _emit({"n": args.n, "B": _matrix_json([list(r) for r in form.matrix])})
        return 0
    if args.m is None or args.k is None:
        raise ValueError("--op cg requires --m and --k")
    proj, incl = sl2rep.cg_maps(args.m, args.n, args.k)
    _emit(
        {
            "m": args.m,
            "n": args.n,
            "k": args.k,
            "projection": _matrix_json(proj),
            "inclusion": _matrix_json(incl),
        }
    )
    return 0


def _cmd_verify(args) -> int:
    names = args.suite or ["all"]
    if "all" in names:
        names = list(verify.SUITES)
    else:
        names = list(dict.fromkeys(names))
    results = verify.run_suites(names)
    failures = 0
    for suite_name, (prop, ok, detail) in results:
        if ok:
            sys.stdout.write(f"ok   {suite_name}.{prop}\n")
        else:
            failures += 1
            sys.stdout.write(f"FAIL {suite_name}.{prop}: {detail}\n")
    sys.stdout.write(
        f"{len(results) - failures}/{len(results)} properties passed"
        + (f", {failures} failed\n" if failures else "\n")
    )
    return 0 if failures == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="triplet",
        description="Exact representation-theoretic data of the W_{p,q} triplet construction.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_weights = sub.add_parser("weights", help="central charge, conformal weight, canonical label")
    _add_pq(p_weights)
    p_weights.add_argument("--r", type=int, required=True)
    p_weights.add_argument("--s", type=int, required=True)
    p_weights.set_defaults(func=_cmd_weights)

    p_fuse_l = sub.add_parser("fuse-L", help="fusion of L_{mp-1,1} with L_{np-1,1}")
    _add_pq(p_fuse_l)
    p_fuse_l.add_argument("--m", type=int, required=True)
    p_fuse_l.add_argument("--n", type=int, required=True)
    p_fuse_l.set_defaults(func=_cmd_fuse_l)

    p_fuse_c = sub.add_parser("fuse-C", help="sl2-type fusion channels of L_m with L_n")
    p_fuse_c.add_argument("--m", type=int, required=True)
    p_fuse_c.add_argument("--n", type=int, required=True)
    p_fuse_c.set_defaults(func=_cmd_fuse_c)

    p_diagram = sub.add_parser("kac-diagram", help="Loewy diagram of K_{mp-1,nq-1}")
    _add_pq(p_diagram)
    p_diagram.add_argument("--m", type=int, default=None)
    p_diagram.add_argument("--n", type=int, default=None)
    p_diagram.add_argument("--r", type=int, default=None, help="request by raw Kac label instead")
    p_diagram.add_argument("--s", type=int, default=None)
    p_diagram.add_argument("--format", choices=("json", "dot"), default=None)
    p_diagram.set_defaults(func=_cmd_kac_diagram)

    p_hex = sub.add_parser("hexagon", help="invertible F-matrix solutions of the hexagon constraint")
    _add_pq(p_hex)
    p_hex.add_argument("--t", type=str, default=None, help="evaluate the family at rational t=NUM/DEN")
    p_hex.set_defaults(func=_cmd_hexagon)

    p_braid = sub.add_parser("braiding", help="R-scalars and balancing phases on L_n (x) L_n")
    _add_pq(p_braid)
    p_braid.add_argument("--n", type=int, required=True)
    p_braid.set_defaults(func=_cmd_braiding)

    p_dec = sub.add_parser("decompose", help="truncated decompositions of the triplet algebra")
    _add_pq(p_dec)
    p_dec.add_argument(
        "--target", choices=("wpq", "wpq-equivariant", "ideal", "wprime"), required=True
    )
    p_dec.add_argument("--nmax", type=int, required=True)
    p_dec.set_defaults(func=_cmd_decompose)

    p_o0 = sub.add_parser("o0-check", help="weight-congruence identities for induction")
    _add_pq(p_o0)
    p_o0.add_argument("--nmax", type=int, required=True)
    p_o0.set_defaults(func=_cmd_o0_check)

    p_sl2 = sub.add_parser("sl2", help="explicit sl2 irreducibles, forms, and CG maps")
    p_sl2.add_argument("--n", type=int, required=True)
    p_sl2.add_argument("--op", choices=("irrep", "form", "cg"), required=True)
    p_sl2.add_argument("--m", type=int, default=None)
    p_sl2.add_argument("--k", type=int, default=None)
    p_sl2.set_defaults(func=_cmd_sl2)

    p_verify = sub.add_parser("verify", help="run the exact property suites")
    p_verify.add_argument(
        "--suite",
        action="append",
        choices=["all"] + sorted(verify.SUITES),
        help="suite to run (repeatable); default all",
    )
    p_verify.set_defaults(func=_cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UnsupportedObjectError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 3
    except (ValueError, ZeroDivisionError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
