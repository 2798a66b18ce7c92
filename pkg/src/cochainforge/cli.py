"""Command-line surface: verify, cohomology, ahss, deligne, series.

Exit codes are a stable contract: 0 success, 2 usage or input error,
3 step budget exceeded.  JSON reports are deterministic for a fixed
run configuration (sorted keys, no wall-clock fields); the seed used
for any randomized demonstration is recorded in every envelope.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field
from typing import List, Optional

from .ahss.engine import converge, factorization_targets, init_pages, apply_d3
from .ahss.model import CohomologyModel, ModelError
from .catalog import runner as catalog_runner
from .cech.complexes import (RingMismatch, SimplicialComplex,
                             cohomology_groups)
from .cech.double import deligne_groups
from .cech.fgab import FGAbelianGroup
from .charclass import (REFERENCE_17, exterior_brute_force,
                        kernel_series_reference, poincare_series)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_BUDGET = 3


@dataclass
class RunConfig:
    subcommand: str
    inputs: List[str] = field(default_factory=list)
    output_format: str = "text"
    budget: Optional[int] = None
    jobs: int = 1
    seed: int = 0

    def envelope(self) -> dict:
        return {"subcommand": self.subcommand, "inputs": list(self.inputs),
                "seed": self.seed,
                **({"budget": self.budget} if self.budget else {}),
                "jobs": self.jobs}


def _emit_json(cfg: RunConfig, payload: dict) -> None:
    out = {"config": cfg.envelope(), **payload}
    print(json.dumps(out, sort_keys=True, indent=1))


# ----------------------------------------------------------------------
# verify
# ----------------------------------------------------------------------

def cmd_verify(args) -> int:
    cfg = RunConfig("verify", [], "json" if args.json else "text",
                    args.budget, args.jobs, args.seed)
    if args.manifest:
        from .catalog.identities import manifest
        _emit_json(cfg, {"manifest": manifest()})
        return EXIT_OK
    if args.all:
        ids = catalog_runner.all_ids()
    elif args.id:
        ids = list(args.id)
    else:
        print("verify: give --id ..., --all or --manifest", file=sys.stderr)
        return EXIT_USAGE
    try:
        reports = catalog_runner.run_catalog(ids, args.budget, args.jobs)
    except catalog_runner.UnknownIdentity as exc:
        print(f"verify: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.json:
        records = []
        for r in reports:
            rec = r.to_dict()
            rec.pop("seconds", None)  # keep reports byte-reproducible
            records.append(rec)
        _emit_json(cfg, {"reports": records})
    else:
        for r in reports:
            print(r.line())
            if r.status == catalog_runner.FAILED:
                print(f"    statement: {r.statement}")
                print(f"    residue: {r.residue[:400]}")
    if any(r.status == catalog_runner.BUDGET for r in reports):
        return EXIT_BUDGET
    return EXIT_OK if all(r.verified for r in reports) else 1


# ----------------------------------------------------------------------
# cohomology
# ----------------------------------------------------------------------

def cmd_cohomology(args) -> int:
    cfg = RunConfig("cohomology", [args.input],
                    "json" if args.json else "text", seed=args.seed)
    try:
        K = SimplicialComplex.load(args.input)
    except (OSError, KeyError, ValueError) as exc:
        print(f"cohomology: cannot read complex: {exc}", file=sys.stderr)
        return EXIT_USAGE
    degrees = args.degree if args.degree else None
    try:
        groups = cohomology_groups(K, args.ring, degrees)
    except RingMismatch as exc:
        print(f"cohomology: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.json:
        _emit_json(cfg, {"complex": K.name, "ring": args.ring,
                         "groups": {str(p): str(g)
                                    for p, g in sorted(groups.items())}})
    else:
        print(f"{K.name or args.input}: ring {args.ring}")
        for p in sorted(groups):
            print(f"  H^{p} = {groups[p]}")
    return EXIT_OK


# ----------------------------------------------------------------------
# ahss
# ----------------------------------------------------------------------

def cmd_ahss(args) -> int:
    path = args.model or args.input
    cfg = RunConfig("ahss", [path], "json" if args.json else "text",
                    seed=args.seed)
    if not path:
        print("ahss: give --model FILE", file=sys.stderr)
        return EXIT_USAGE
    try:
        model = CohomologyModel.load(path)
        if args.h is not None:
            model = model.with_twist([args.h])
        report = converge(model)
    except (OSError, KeyError, ValueError, ModelError) as exc:
        print(f"ahss: {exc}", file=sys.stderr)
        return EXIT_USAGE
    payload = report.to_dict()
    try:
        targets = factorization_targets(model, report)
        payload["factorization_targets"] = targets.to_dict()
    except ModelError:
        payload["factorization_targets"] = "indeterminate"
    if args.json:
        _emit_json(cfg, payload)
    else:
        print(f"model {model.name}, twist {model.h}")
        print("  page 5:", report.page5.table())
        for line in report.constraints_echo:
            print("  constraint:", line)
        for c in report.candidates:
            print(f"  [{c.label}] K0 = {c.k_str(0)}   K1 = {c.k_str(1)}")
            for msg in c.indeterminate:
                print(f"    indeterminate: {msg}")
        for w in report.warnings:
            print("  warning:", w)
    return EXIT_OK


# ----------------------------------------------------------------------
# deligne
# ----------------------------------------------------------------------

def cmd_deligne(args) -> int:
    cfg = RunConfig("deligne", [args.input],
                    "json" if args.json else "text", seed=args.seed)
    try:
        with open(args.input, "r", encoding="utf-8") as fh:
            data = json.load(fh)
        groups = {int(p): FGAbelianGroup.from_dict(g)
                  for p, g in data.get("groups", {}).items()}
        result = deligne_groups(groups, args.n, args.p)
    except (OSError, KeyError, ValueError) as exc:
        print(f"deligne: {exc}", file=sys.stderr)
        return EXIT_USAGE
    desc = (result.to_dict() if hasattr(result, "to_dict") else str(result))
    if args.json:
        _emit_json(cfg, {"weight": args.n, "degree": args.p,
                         "group": desc if isinstance(desc, dict) else str(result)})
    else:
        print(f"weight {args.n}, degree {args.p}: {result}")
    return EXIT_OK


# ----------------------------------------------------------------------
# series
# ----------------------------------------------------------------------

def cmd_series(args) -> int:
    cfg = RunConfig("series", [], "json" if args.json else "text",
                    seed=args.seed)
    N = args.n
    ps = poincare_series(N)
    data = exterior_brute_force(N)
    ref = kernel_series_reference(N)
    rows = []
    for d in data:
        n = d.weight
        rows.append({
            "degree": n,
            "series": ps[n],
            "dim": d.dim,
            "kernel": d.kernel_dim,
            "kernel_reference": ref[n],
            "cokernel": d.cokernel_dim if d.cokernel_dim >= 0 else None,
            "agrees": ps[n] == d.kernel_dim + (1 if n == 3 else 0),
        })
    if args.json:
        _emit_json(cfg, {"N": N, "rows": rows})
    else:
        print(" n  P(t)  dim  ker  coker  agrees")
        for r in rows:
            cok = "-" if r["cokernel"] is None else r["cokernel"]
            print(f"{r['degree']:>2}  {r['series']:>4}  {r['dim']:>3}  "
                  f"{r['kernel']:>3}  {cok:>5}  {r['agrees']}")
    return EXIT_OK if all(r["agrees"] for r in rows) else 1


# ----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="cochainforge",
        description="exact cochain identities, cohomology and twisted "
                    "K-group tables")
    ap.add_argument("--seed", type=int, default=0,
                    help="seed recorded in reports (for randomized demos)")
    sub = ap.add_subparsers(dest="subcommand", required=True)

    v = sub.add_parser("verify", help="verify catalog identities")
    v.add_argument("--id", action="append", help="identity id (repeatable)")
    v.add_argument("--all", action="store_true")
    v.add_argument("--manifest", action="store_true",
                   help="print the static catalog manifest and exit")
    v.add_argument("--budget", type=int,
                   default=None, help=f"rewrite-step budget (or set "
                                      f"{catalog_runner.BUDGET_ENV})")
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--json", action="store_true")
    v.set_defaults(fn=cmd_verify)

    c = sub.add_parser("cohomology", help="cohomology of a complex file")
    c.add_argument("--input", required=True)
    c.add_argument("--ring", default="Z", help="Z, Q or Zmod:n")
    c.add_argument("--degree", type=int, action="append")
    c.add_argument("--json", action="store_true")
    c.set_defaults(fn=cmd_cohomology)

    a = sub.add_parser("ahss", help="twisted K-groups of a model file")
    a.add_argument("--model")
    a.add_argument("--input")
    a.add_argument("--h", type=int, default=None, help="twist override")
    a.add_argument("--json", action="store_true")
    a.set_defaults(fn=cmd_ahss)

    d = sub.add_parser("deligne", help="Deligne cohomology at group level")
    d.add_argument("--input", required=True,
                   help="JSON with integral cohomology groups per degree")
    d.add_argument("--n", type=int, required=True, help="weight")
    d.add_argument("--p", type=int, required=True, help="degree")
    d.add_argument("--json", action="store_true")
    d.set_defaults(fn=cmd_deligne)

    s = sub.add_parser("series", help="characteristic-class dimension table")
    s.add_argument("--n", type=int, default=17)
    s.add_argument("--json", action="store_true")
    s.set_defaults(fn=cmd_series)
    return ap


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except catalog_runner.UnknownIdentity as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
