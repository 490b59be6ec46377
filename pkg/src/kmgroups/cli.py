"""``km``: build presentations, compute invariants and run the checks.

Exit codes: 0 success, 1 a check failed, 2 bad usage or input.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import checks, groups, homs, rewrite, schreier, symchar
from .groups import build, lambda_generators, quad_name
from .lattice import h1
from .presentation import load, save, validate
from .report import Report, Timer

FAMILY_CHOICES = ("gamma", "gamma_hat", "delta", "delta_hat")


class UsageError(Exception):
    pass


def _default_mode(family: str, mode: str | None, reduced_default: bool) -> str:
    if mode:
        return mode
    if family.startswith("gamma") and reduced_default:
        return "reduced"
    return "full"


def _source(args, reduced_default: bool = False):
    """Presentation from ``--input`` or from ``--family/--n/--mode``."""
    if getattr(args, "input", None):
        p = load(args.input)
        problems = validate(p)
        if problems:
            raise UsageError(f"{args.input}: " + "; ".join(problems[:3]))
        return p, {"input": str(args.input)}
    if not args.family or args.n is None:
        raise UsageError("give --input or both --family and --n")
    mode = _default_mode(args.family, args.mode, reduced_default)
    return build(args.family, args.n, mode), {"family": args.family, "n": args.n, "mode": mode}


def cmd_present(args) -> Report:
    mode = _default_mode(args.family, args.mode, False)
    p = build(args.family, args.n, mode)
    if args.output:
        save(p, args.output)
    kinds = {k: p.count(k) for k in ("involutive", "commutative", "pentagon", "dihedral")}
    return Report("present", {"family": args.family, "n": args.n, "mode": mode},
                  {"generators": p.ngens, "relators": len(p.relators), "by kind": kinds,
                   "written to": str(args.output) if args.output else None})


def cmd_h1(args) -> Report:
    p, inputs = _source(args)
    with Timer() as t:
        inv = h1(p)
    return Report("h1", inputs, {"h1": str(inv), "expanded": inv.expanded(), "free rank": inv.free_rank,
                                 "torsion": list(inv.torsion), "generators": p.ngens,
                                 "relators": len(p.relators), "seconds": round(t.seconds, 3)})


def cmd_min_gens(args) -> Report:
    lam = lambda_generators(args.n, args.family)
    res = {"generators": [quad_name(q, args.n) for q in lam], "size": len(lam)}
    if args.family.startswith("gamma"):
        res["C(n,3)-1"] = groups.n_gens_count(args.n)
        res["(n-3)(n^2+2)/6"] = groups.n_gens_closed_form(args.n)
    else:
        from math import comb
        res["C(n-1,3)"] = comb(args.n - 1, 3)
    return Report("min-gens", {"family": args.family, "n": args.n}, res)


def cmd_rewrite(args) -> Report:
    q = groups.parse_quad(args.quad) if args.quad.startswith("(") else None
    if q is None:
        try:
            q = tuple(int(x) for x in args.quad.replace(",", " ").split())
        except ValueError:
            raise UsageError(f"cannot read quadruple {args.quad!r}") from None
    w, cert = rewrite.rewrite_in_lambda(q, args.n, args.family)
    p = rewrite.family_presentation(args.family, args.n)
    ok = rewrite.verify_certificate(cert, p)
    res = {"quad": quad_name(q, args.n), "word": p.format(w), "length": len(w),
           "moves": len(cert.moves), "certificate verifies": ok}
    if args.certificate:
        Path(args.certificate).write_text(json.dumps({
            "family": args.family, "n": args.n, "start": [list(x) for x in cert.start],
            "end": [list(x) for x in cert.end],
            "moves": [[m.kind, m.position, m.relator, m.invert, m.rotation] for m in cert.moves]}))
        res["certificate written to"] = str(args.certificate)
    rep = Report("rewrite", {"family": args.family, "n": args.n, "quad": args.quad}, res)
    rep.checks.append({"name": "certificate", "passed": ok})
    return rep


def cmd_kernel_h1(args) -> Report:
    p, inputs = _source(args, reduced_default=True)
    inputs["hom"] = args.hom
    try:
        h = homs.make_hom(args.hom, p)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    with Timer() as t:
        table = schreier.coset_table(p, h)
        reps = None
        if args.transversal:
            reps = schreier.transversal_from_words(table, schreier.parse_transversal(args.transversal, p))
            inputs["transversal"] = args.transversal
        inv = schreier.h1_kernel(p, h, reps)
    res = {"index": table.index, "h1 kernel": str(inv), "expanded": inv.expanded(),
           "seconds": round(t.seconds, 3)}
    if table.index <= schreier.STREAM_INDEX:
        reps = reps or schreier.schreier_transversal(table)
        rs = schreier.rs_presentation(p, table, reps)
        res["transversal"] = [p.format(w) for w in reps]
        res["schreier generators"] = rs.presentation.ngens
        res["freely trivial"] = len(rs.trivial)
        res["tau relators"] = rs.tau_relators
        if args.naming:
            Path(args.naming).write_text(json.dumps(rs.naming, indent=1))
            res["naming written to"] = str(args.naming)
    return Report("kernel-h1", inputs, res)


def cmd_chars(args) -> Report:
    n = args.n
    parts = symchar.partitions(n)
    rows = {"classes": [list(lam) for lam in parts],
            "class sizes": [symchar.class_size(lam) for lam in parts],
            "chi2": list(symchar.chi_subset_function(n, 2).values),
            "chi3": list(symchar.chi_subset_function(n, 3).values)}
    for lab in symchar.IRREP_LABELS:
        rows[lab] = list(symchar.irrep_function(lab, n).values)
    res = {"table": rows, "hook dims": {
        lab: symchar.hook_dim(d) for lab in symchar.IRREP_LABELS
        if (d := symchar.label_diagram(lab, n)) is not None}}
    rep = Report("chars", {"n": n}, res)
    if args.verify:
        r = checks.check_characters(ns=(n,))
        rep.checks.append(r.to_dict())
    return rep


def cmd_verify_all(args) -> Report:
    ns = range(args.n_min, args.n_max + 1)
    results = checks.run_all(ns, include_slow=args.include_slow, seed=args.seed,
                             files=args.presentation or ())
    rep = Report("verify-all", {"n": [args.n_min, args.n_max], "include slow": args.include_slow,
                                "seed": args.seed, "threads": args.threads})
    rep.checks = [r.to_dict() for r in results]
    rep.results = {r.name: r.passed for r in results}
    return rep


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="text")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--threads", type=int, default=1,
                        help="accepted for interface compatibility; computations run single threaded")

    def family_args(sp, need=True):
        sp.add_argument("--family", choices=FAMILY_CHOICES, required=need)
        sp.add_argument("--n", type=int, required=need)

    ap = argparse.ArgumentParser(prog="km", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("present", parents=[common], help="build a family presentation")
    family_args(sp)
    sp.add_argument("--mode", choices=("full", "reduced"))
    sp.add_argument("--output", help="write the presentation (.json or text)")
    sp.set_defaults(func=cmd_present, report_file=False)

    sp = sub.add_parser("h1", parents=[common], help="abelianization invariants")
    family_args(sp, need=False)
    sp.add_argument("--mode", choices=("full", "reduced"))
    sp.add_argument("--input", help="presentation file instead of a family")
    sp.add_argument("--output", help="write the report here")
    sp.set_defaults(func=cmd_h1)

    sp = sub.add_parser("min-gens", parents=[common], help="minimal generating set")
    family_args(sp)
    sp.add_argument("--output")
    sp.set_defaults(func=cmd_min_gens)

    sp = sub.add_parser("rewrite", parents=[common], help="rewrite a generator over the generating set")
    family_args(sp)
    sp.add_argument("--quad", required=True, help='e.g. "(1345)" or "1,3,4,5"')
    sp.add_argument("--certificate", help="write the certificate as JSON")
    sp.add_argument("--output")
    sp.set_defaults(func=cmd_rewrite)

    sp = sub.add_parser("kernel-h1", parents=[common], help="H1 of a kernel by Reidemeister-Schreier")
    family_args(sp, need=False)
    sp.add_argument("--mode", choices=("full", "reduced"),
                    help="defaults to reduced for the gamma families")
    sp.add_argument("--input")
    sp.add_argument("--hom", required=True, choices=homs.HOM_NAMES)
    sp.add_argument("--transversal", help='coset representatives, e.g. "1;(1234)"')
    sp.add_argument("--naming", help="write the Schreier generator naming map as JSON")
    sp.add_argument("--output")
    sp.set_defaults(func=cmd_kernel_h1)

    sp = sub.add_parser("chars", parents=[common], help="symmetric group characters")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--verify", action="store_true")
    sp.add_argument("--output")
    sp.set_defaults(func=cmd_chars)

    sp = sub.add_parser("verify-all", parents=[common], help="run every acceptance check")
    sp.add_argument("--n-min", type=int, default=4)
    sp.add_argument("--n-max", type=int, default=6)
    sp.add_argument("--include-slow", action="store_true",
                    help="add the n = 7 reduced H1 and the 512 coset kernel")
    sp.add_argument("--presentation", action="append",
                    help="also check that a saved presentation file matches a fresh build")
    sp.add_argument("--output")
    sp.set_defaults(func=cmd_verify_all)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    if getattr(args, "n", None) is not None and args.n < 4:
        ap.error(f"--n too small: {args.n}")
    try:
        with Timer() as t:
            rep = args.func(args)
    except (UsageError, ValueError, FileNotFoundError, KeyError) as exc:
        print(f"km {args.command}: error: {exc}", file=sys.stderr)
        return 2
    rep.seconds = t.seconds
    text = rep.render(args.format)
    if args.output and getattr(args, "report_file", True):
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return 0 if rep.passed else 1


if __name__ == "__main__":
    sys.exit(main())
