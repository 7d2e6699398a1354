"""Command-line front end: ingest monoid/representation files or named
monoids, run analyses, emit deterministic JSON or plain-text reports.

Exit codes: 0 ok, 2 parse error, 3 precondition violation, 4 budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time

from . import __version__
from . import monoid as mo
from .monoid import FiniteMonoid, MonoidError, SubmonoidRef
from . import rep as rp
from .rep import MissingProviderError, RepresentationError
from . import symrep
from . import groupzoo
from . import clifford as cl
from . import theta as th
from . import symext
from . import corpus

EXIT_PARSE = 2
EXIT_PRECONDITION = 3
EXIT_BUDGET = 4


class CliError(Exception):
    def __init__(self, message, code):
        super().__init__(message)
        self.code = code


def load_monoid(spec: str) -> FiniteMonoid:
    try:
        return corpus.named_monoid(spec)
    except KeyError:
        pass
    try:
        return mo.load_monoid_file(spec)
    except FileNotFoundError:
        raise CliError("no such monoid or file: %r" % spec, EXIT_PARSE)
    except (MonoidError, json.JSONDecodeError, KeyError) as exc:
        raise CliError("monoid file %r: %s" % (spec, exc), EXIT_PARSE)


def parse_submonoid(m: FiniteMonoid, spec: str) -> SubmonoidRef:
    spec = spec.strip().lower()
    if spec == "all":
        return mo.full_submonoid(m)
    if spec == "units":
        return mo.units_submonoid(m)
    if spec in ("1", "trivial"):
        return mo.trivial_submonoid(m)
    try:
        members = tuple(int(x) for x in spec.split(","))
        return mo.submonoid_closure(m, members)
    except (ValueError, MonoidError) as exc:
        raise CliError("bad submonoid spec %r: %s" % (spec, exc), EXIT_PARSE)


def emit(args, payload: dict, started: float):
    payload = {"command": args.command, "version": __version__, **payload}
    if args.format == "json":
        text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    else:
        text = render_text(payload)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    print("wall-time: %.3fs" % (time.time() - started), file=sys.stderr)


def render_text(payload: dict, indent: int = 0) -> str:
    lines = []

    def walk(obj, pad):
        if isinstance(obj, dict):
            for k in sorted(obj):
                v = obj[k]
                if isinstance(v, (dict, list)) and v:
                    lines.append(" " * pad + str(k) + ":")
                    walk(v, pad + 2)
                else:
                    lines.append(" " * pad + "%s: %s" % (k, v))
        elif isinstance(obj, list):
            for v in obj:
                if isinstance(v, (dict, list)):
                    lines.append(" " * pad + "-")
                    walk(v, pad + 2)
                else:
                    lines.append(" " * pad + "- %s" % (v,))
        else:
            lines.append(" " * pad + str(obj))

    walk(payload, indent)
    return "\n".join(lines) + "\n"


def cmd_green(args):
    m = load_monoid(args.monoid)
    n = parse_submonoid(m, args.N)
    k = parse_submonoid(m, args.K)
    data = mo.green_relative(m, n, k)
    classes = []
    for rec in data.classes:
        classes.append(
            {
                "representative": rec.rep,
                "size": len(rec.members),
                "alpha": len(rec.x_transversal),
                "beta": len(rec.y_transversal),
                "h_size": len(rec.h_members),
                "alpha*beta*h": len(rec.x_transversal)
                * len(rec.y_transversal)
                * len(rec.h_members),
                "members": rec.members,
            }
        )
    return {"size": m.size, "classes": classes}


def cmd_mackey(args):
    m = load_monoid(args.monoid)
    n = parse_submonoid(m, args.N)
    k = parse_submonoid(m, args.K)
    cells = mo.mackey_decompose(m, n, k)
    return {
        "size": m.size,
        "classes": len(cells),
        "cells": [
            {
                "representative": rec.rep,
                "x_transversal": rec.x_transversal,
                "y_transversal": rec.y_transversal,
                "h_members": rec.h_members,
            }
            for rec in cells
        ],
        "cover_ok": True,
    }


def cmd_irr(args):
    m = load_monoid(args.monoid)
    try:
        cat = rp.cmp_irreducibles(m, groupzoo.auto_provider)
    except MissingProviderError as exc:
        raise CliError(str(exc), EXIT_PRECONDITION)
    return {
        "size": m.size,
        "count": len(cat),
        "dims": [v.dim for v in cat],
        "sum_dim_sq": sum(v.dim * v.dim for v in cat),
        "apexes": [v.apex.idempotent if v.apex else None for v in cat],
    }


def cmd_semisimple(args):
    m = load_monoid(args.monoid)
    cert = rp.is_semisimple(m)
    return {
        "size": m.size,
        "semisimple": cert.ok,
        "classes": [
            {
                "representative": c.rep,
                "regular": c.regular,
                "square": c.square,
                "nonsingular": c.nonsingular,
            }
            for c in cert.classes
        ],
    }


def cmd_theta(args):
    rng = random.Random(args.seed)
    results = []
    splits = 0
    for case in range(args.cases):
        bi = corpus.random_bimodule(rng)
        rec = th.proposition_theta_battery(bi)
        results.append(
            {
                "case": case,
                "m1": bi.m1.size,
                "m2": bi.m2.size,
                "dim": bi.rep.dim,
                "verdicts": [
                    rec.theta_verdict,
                    rec.b_equals_zac,
                    rec.a_equals_zbc,
                    rec.bimodule_shape,
                    rec.multiplicity_free,
                    rec.contraction_bound,
                ],
                "unanimous": rec.unanimous(),
            }
        )
        if not rec.unanimous():
            splits += 1
    return {"seed": args.seed, "cases": args.cases, "splits": splits, "results": results}


def cmd_clifford(args):
    m = load_monoid(args.monoid)
    n = parse_submonoid(m, args.N)
    if not mo.is_centric(m, n):
        raise CliError("N is not centric in M", EXIT_PRECONDITION)
    try:
        stab = cl.stability_submonoids(m, n, args.sigma)
        system = cl.intertwiner_cocycle(stab)
    except (RepresentationError, MonoidError) as exc:
        raise CliError(str(exc), EXIT_PRECONDITION)
    cocycle_table = [
        [i, j, v]
        for (i, j), v in sorted(system.cocycle.values.items())
        if v not in (0, None)
    ]
    return {
        "sigma": args.sigma,
        "apex": stab.e,
        "I_lr": stab.i_lr,
        "J0": stab.j0,
        "J1": stab.j1,
        "I0": stab.i0,
        "I1": stab.i1,
        "I_M": stab.i_m,
        "J_M": stab.j_m,
        "representatives": system.reps,
        "kappa0": system.kappa0,
        "kappa1": system.kappa1,
        "nontrivial_cocycle_entries": cocycle_table,
        "factorization_rho1_rho2": cl.verify_factorization(system),
    }


def cmd_symext(args):
    g = load_monoid(args.group)
    if not g.is_group():
        raise CliError("symext needs a group", EXIT_PRECONDITION)
    out = {
        "group": args.group,
        "n": args.n,
        "algebra_dim": symext.SymExtAlgebra.build(g, args.n).dim,
        "algebra_semisimple": symext.SymExtAlgebra.build(g, args.n).is_semisimple(),
    }
    try:
        ext = symext.symmetric_extension(g, args.n, args.budget)
        out["closure_size"] = ext.monoid.size
        out["monoid_semisimple"] = rp.is_semisimple(ext.monoid).ok
        out["elements"] = [
            {"coeffs": [[list(k), c.numerator, c.denominator] for k, c in e.coeffs]}
            for e in ext.elements
        ]
        out["table"] = [list(row) for row in ext.monoid.table]
    except symext.BudgetExceededError as exc:
        if args.strict:
            raise CliError(str(exc), EXIT_BUDGET)
        out["closure_size"] = None
        out["budget_exceeded"] = exc.diagnostics
    return out


def cmd_theta1(args):
    g = load_monoid(args.group)
    if not g.is_group():
        raise CliError("theta1 needs a group", EXIT_PRECONDITION)
    try:
        pi = corpus.named_group_rep(g, args.rep)
    except KeyError as exc:
        raise CliError(str(exc), EXIT_PARSE)
    try:
        rpt = symext.theorem_theta1_check(g, pi, args.chi, args.n, args.budget)
    except symext.BudgetExceededError as exc:
        raise CliError(str(exc), EXIT_BUDGET)
    return {
        "group": args.group,
        "rep": args.rep,
        "chi": args.chi,
        "n": args.n,
        "verdict": rpt.verdict,
        "commutant_dim": rpt.commutant_dim,
        "algebra_image_dim": rpt.algebra_image_dim,
        "binomial": rpt.binomial,
        "pairs": [
            {"partition": list(lam), "theta": name, "dim_theta": mult}
            for lam, name, mult in rpt.pairs
        ],
        "monoid_level_verdict": rpt.monoid_level_verdict,
        "closure_size": rpt.closure_size,
    }


def cmd_bruhat(args):
    if args.perm:
        try:
            p = tuple(int(ch) - 1 for ch in args.perm)
        except ValueError:
            raise CliError("bad permutation %r" % args.perm, EXIT_PARSE)
        if sorted(p) != list(range(len(p))):
            raise CliError("not a permutation: %r" % args.perm, EXIT_PARSE)
        return {"perm": args.perm, "length": symrep.bruhat_length(p)}
    n = args.n
    named = {
        "w_n": symrep.w_cycle(n),
        "w_half": symrep.w_half(n),
        "w0": symrep.w_longest(n),
    }
    return {
        "n": n,
        "lengths": {k: symrep.bruhat_length(v) for k, v in named.items()},
        "perms": {k: "".join(str(i + 1) for i in v) for k, v in named.items()},
    }


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="monoidrep",
        description="Exact representation theory of finite monoids",
    )
    ap.add_argument("--format", choices=["json", "text"], default="json")
    ap.add_argument("--out", help="write the report to a file instead of stdout")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("green", help="relative Green classes with transversals")
    p.add_argument("--monoid", required=True)
    p.add_argument("--N", default="all")
    p.add_argument("--K", default="all")
    p.set_defaults(fn=cmd_green)

    p = sub.add_parser("mackey", help="Mackey cell decomposition")
    p.add_argument("--monoid", required=True)
    p.add_argument("--N", default="all")
    p.add_argument("--K", default="all")
    p.set_defaults(fn=cmd_mackey)

    p = sub.add_parser("irr", help="CMP irreducible catalog")
    p.add_argument("--monoid", required=True)
    p.set_defaults(fn=cmd_irr)

    p = sub.add_parser("semisimple", help="sandwich-matrix semisimplicity certificate")
    p.add_argument("--monoid", required=True)
    p.set_defaults(fn=cmd_semisimple)

    p = sub.add_parser("theta", help="random bimodule battery for the six-way equivalence")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--cases", type=int, default=5)
    p.set_defaults(fn=cmd_theta)

    p = sub.add_parser("clifford", help="stability submonoids and cocycle")
    p.add_argument("--monoid", required=True)
    p.add_argument("--N", required=True)
    p.add_argument("--sigma", type=int, default=0, help="index into Irr(N)")
    p.set_defaults(fn=cmd_clifford)

    p = sub.add_parser("symext", help="symmetric extension closure / algebra")
    p.add_argument("--group", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--budget", type=int, default=20000)
    p.add_argument("--strict", action="store_true",
                   help="exit 4 when the closure budget is exceeded")
    p.set_defaults(fn=cmd_symext)

    p = sub.add_parser("theta1", help="theta property of V^(x)n over G^(.)n x S_n")
    p.add_argument("--group", required=True)
    p.add_argument("--rep", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--chi", choices=["trivial", "sign"], default="trivial")
    p.add_argument("--budget", type=int, default=20000)
    p.set_defaults(fn=cmd_theta1)

    p = sub.add_parser("bruhat", help="Bruhat lengths of named permutations")
    p.add_argument("--perm", help="one-line permutation like 1234")
    p.add_argument("--n", type=int, default=4)
    p.set_defaults(fn=cmd_bruhat)
    return ap


def main(argv=None) -> int:
    started = time.time()
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        payload = args.fn(args)
    except CliError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return exc.code
    except MonoidError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_PRECONDITION
    emit(args, payload, started)
    return 0


if __name__ == "__main__":
    sys.exit(main())
