"""Command-line interface.

    davenport primes q 30
    davenport primes lpleq 15
    davenport primes lemma-qq --max 1000000
    davenport exact ball:1:3
    davenport supk box:2:2 --k 3
    davenport verify FILE --ground box:5:2
    davenport supk-max box:5:2 --report json
    davenport construct disk-s1 5 --emit FILE
    davenport construct box3 3 --verify
    davenport geometry count-hex --gens "1 0;0 1;-1 -1"
    davenport geometry reorder FILE
    davenport geometry vd --max-d 8 --json
    davenport optimize hexagon
    davenport optimize dodeca --full
    davenport optimize simplex-evidence --d 4
    davenport report bounds --shape ball --d 2 --m 2..20 --csv out.csv \
        --json out.json --plots figdir
"""

from __future__ import annotations

import argparse
import json
import sys

from . import bounds as boundsmod
from . import constructions, kernel, optimize, polytopes, primes, search
from .lattice import parse_ground
from .sequences import is_minimal_zero_sum, seq_from_file, seq_to_file, sequence_sum


def _parse_gens(text: str):
    return [tuple(int(t) for t in part.split()) for part in text.split(";")]


def _parse_range(text: str):
    if ".." in text:
        a, b = text.split("..")
        return range(int(a), int(b) + 1)
    return [int(text)]


def cmd_primes(args):
    if args.op == "q":
        print(primes.q_of(args.n))
    elif args.op == "lpleq":
        print(primes.largest_prime_leq(args.n))
    else:
        rep = primes.check_q_growth(args.max)
        status = "pass" if rep.ok else f"FAIL at m={rep.first_violation}"
        print(f"lemma-qq up to {rep.m_max}: {status} "
              f"(max ratio {rep.max_ratio:.4f})")
        return 0 if rep.ok else 1
    return 0


def cmd_exact(args):
    g = parse_ground(args.ground)
    budget = search.Budget(max_nodes=args.max_nodes,
                           max_seconds=args.max_seconds)
    try:
        res = search.davenport_exact(g, budget)
    except search.BudgetExceeded as exc:
        res = exc.partial
        print(f"budget exceeded; verified lower bound {res.value}")
        return 2
    print(f"D({g}) = {res.value}  [{res.status}, nodes={res.nodes}, cap={res.cap}]")
    if res.witness is not None:
        print(f"witness: {res.witness}")
    return 0


def cmd_supk(args):
    g = parse_ground(args.ground)
    budget = search.Budget(max_nodes=args.max_nodes,
                           max_seconds=args.max_seconds)
    try:
        res = search.davenport_support_k_small(g, args.k, budget)
    except search.BudgetExceeded as exc:
        print(f"budget exceeded; verified lower bound {exc.partial.value}")
        return 2
    print(f"D^({args.k})({g}) = {res.value}")
    if res.witness is not None:
        print(f"witness: {res.witness}")
    return 0


def cmd_verify(args):
    seq = seq_from_file(args.file)
    g = parse_ground(args.ground)
    in_ground = all(v in g for v in seq.support)
    total = sequence_sum(seq)
    minimal, cert = is_minimal_zero_sum(seq, strategy=args.strategy)
    print(f"length         : {seq.length}")
    print(f"in ground set  : {in_ground}")
    print(f"sum            : {total}")
    print(f"minimal        : {minimal}  [method={cert.method}]")
    ok = in_ground and not any(total) and minimal
    print("VALID" if ok else "INVALID")
    return 0 if ok else 1


def cmd_supk_max(args):
    g = parse_ground(args.ground)
    res = kernel.davenport_support_dp1(g, workers=args.workers)
    payload = {
        "ground": str(g),
        "value": res.value,
        "orbits": [{"support": [list(v) for v, _ in orbit],
                    "mults": [mu for _, mu in orbit]} for orbit in res.orbits],
    }
    if g.kind == "box" and g.d == 2:
        payload["m"] = g.m
        payload["formula_value"] = 4 * g.m * g.m - primes.q_of(g.m)
    if args.report == "json":
        print(json.dumps(payload, indent=1))
    else:
        print(f"D^(d+1)({g}) = {res.value} with {len(res.orbits)} orbit(s)")
        if "formula_value" in payload:
            print(f"closed form 4m^2-q(m) = {payload['formula_value']}")
    return 0


def cmd_construct(args):
    gen = constructions.GENERATORS[args.name]
    vc = gen(args.m)
    print(vc.summary())
    if args.verify and vc.sequence is not None:
        for key, val in {**vc.checks, **vc.conditions}.items():
            print(f"  {key}: {'ok' if val else 'FAIL'}")
    if args.emit and vc.sequence is not None:
        seq_to_file(vc.sequence, args.emit)
        print(f"wrote {args.emit}")
    return 0 if vc.valid else 1


def cmd_geometry(args):
    if args.op == "count-hex":
        P = polytopes.ZonotopePolytope(_parse_gens(args.gens))
        print(f"lattice points: {P.lattice_count()}")
        print(f"volume        : {P.volume()}")
        return 0
    if args.op == "reorder":
        seq = seq_from_file(args.file)
        cert = polytopes.greedy_reorder(seq)
        ver = polytopes.verify_reorder(seq, cert, with_count=True)
        print(f"length {cert.length}, runs {len(cert.runs)}")
        print(f"partial sums inside: {ver.sums_inside}, distinct: "
              f"{ver.sums_distinct}, final zero: {ver.final_zero}")
        print(f"lattice count of body: {ver.lattice_count} "
              f"(>= length: {ver.lattice_count >= cert.length})")
        return 0 if ver.ok else 1
    reports = [polytopes.cayley_menger_Vd(d) for d in range(1, args.max_d + 1)]
    if args.json:
        print(json.dumps([{
            "d": r.d, "closed_form": r.closed_form,
            "cayley_menger": r.cayley_menger, "edge_det": r.edge_det,
            "spread": r.max_spread, "ok": r.ok} for r in reports], indent=1))
    else:
        for r in reports:
            print(f"d={r.d}: V_d={r.closed_form:.12f} "
                  f"(spread {r.max_spread:.2e}) {'ok' if r.ok else 'FAIL'}")
    return 0 if all(r.ok for r in reports) else 1


def cmd_optimize(args):
    if args.target == "hexagon":
        res = optimize.maximize(optimize.HEXAGON, grid_n=256, seed=args.seed)
        print(f"argmax: {res.point}")
        print(f"value : {res.value:.12f} (grad_inf {res.grad_inf:.2e})")
    elif args.target == "dodeca":
        objective = optimize.DODECA_FULL if args.full else optimize.DODECA_REDUCED
        res = optimize.maximize(objective, grid_n=64 if not args.full else 9,
                                seed=args.seed)
        print(f"argmax: {res.point}")
        print(f"value : {res.value:.12f} (grad_inf {res.grad_inf:.2e})")
    else:
        rep = optimize.simplex_local_max_evidence(
            args.d, trials=args.trials, eps=args.eps, seed=args.seed)
        kind = "proved optimum" if rep.proved_dimension else "conjecture evidence"
        print(f"d={rep.d} ({kind}): base volume {rep.base_volume:.9f}, "
              f"max increase {rep.max_increase:.3e} over {rep.trials} trials "
              f"-> {'ok' if rep.ok else 'FAIL'}")
        return 0 if rep.ok else 1
    return 0


def cmd_report(args):
    rows = boundsmod.evaluate_bounds(args.shape, args.d, _parse_range(args.m))
    bad = boundsmod.validate_rows(rows)
    if bad:
        print(f"bound consistency violations: {bad}", file=sys.stderr)
        return 1
    if args.csv:
        with open(args.csv, "w", encoding="utf-8") as fh:
            fh.write(boundsmod.rows_to_csv(rows))
        print(f"wrote {args.csv}")
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            fh.write(boundsmod.rows_to_json(rows))
        print(f"wrote {args.json}")
    if args.plots:
        from .plots import render_bounds_plots
        for path in render_bounds_plots(rows, args.plots):
            print(f"wrote {path}")
    if not (args.csv or args.json or args.plots):
        print(boundsmod.rows_to_csv(rows), end="")
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="davenport",
                                 description="Davenport constants of boxes "
                                             "and discrete Euclidean balls")
    sub = ap.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("primes", help="prime utilities")
    ps = p.add_subparsers(dest="op", required=True)
    pq = ps.add_parser("q")
    pq.add_argument("n", type=int)
    pl = ps.add_parser("lpleq")
    pl.add_argument("n", type=int)
    pm = ps.add_parser("lemma-qq")
    pm.add_argument("--max", type=int, default=1_000_000)
    p.set_defaults(func=cmd_primes)

    p = sub.add_parser("exact", help="exact Davenport constant (small sets)")
    p.add_argument("ground")
    p.add_argument("--max-nodes", type=int, default=20_000_000)
    p.add_argument("--max-seconds", type=float, default=300.0)
    p.set_defaults(func=cmd_exact)

    p = sub.add_parser("supk", help="exact support-size-k Davenport constant")
    p.add_argument("ground")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--max-nodes", type=int, default=20_000_000)
    p.add_argument("--max-seconds", type=float, default=300.0)
    p.set_defaults(func=cmd_supk)

    p = sub.add_parser("verify", help="verify a sequence file")
    p.add_argument("file")
    p.add_argument("--ground", required=True)
    p.add_argument("--strategy", default="auto",
                   choices=["auto", "kernel", "exhaustive", "lattice"])
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("supk-max", help="maximize over supports of size d+1")
    p.add_argument("ground")
    p.add_argument("--report", default="text", choices=["text", "json"])
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_supk_max)

    p = sub.add_parser("construct", help="build and certify a construction")
    p.add_argument("name", choices=sorted(constructions.GENERATORS))
    p.add_argument("m", type=int)
    p.add_argument("--emit")
    p.add_argument("--verify", action="store_true")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("geometry", help="polytope queries")
    gs = p.add_subparsers(dest="op", required=True)
    gh = gs.add_parser("count-hex")
    gh.add_argument("--gens", required=True)
    gr = gs.add_parser("reorder")
    gr.add_argument("file")
    gv = gs.add_parser("vd")
    gv.add_argument("--max-d", type=int, default=8)
    gv.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_geometry)

    p = sub.add_parser("optimize", help="geometric objective maximization")
    os_ = p.add_subparsers(dest="target", required=True)
    oh = os_.add_parser("hexagon")
    od = os_.add_parser("dodeca")
    od.add_argument("--full", action="store_true")
    oe = os_.add_parser("simplex-evidence")
    oe.add_argument("--d", type=int, required=True)
    oe.add_argument("--trials", type=int, default=1000)
    oe.add_argument("--eps", type=float, default=1e-3)
    for q in (oh, od, oe):
        q.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_optimize)

    p = sub.add_parser("report", help="bound tables")
    rs = p.add_subparsers(dest="what", required=True)
    rb = rs.add_parser("bounds")
    rb.add_argument("--shape", required=True, choices=["box", "ball"])
    rb.add_argument("--d", type=int, required=True)
    rb.add_argument("--m", required=True, help="single value or A..B")
    rb.add_argument("--csv")
    rb.add_argument("--json")
    rb.add_argument("--plots", help="directory for rendered PNG figures")
    p.set_defaults(func=cmd_report)

    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
