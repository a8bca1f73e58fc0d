"""Command-line interface: ``bw <command> [flags]`` with JSON output.

Exit status is 0 when every check passes, 1 when a check fails and 2 on
malformed input. Errors are also reported as JSON on standard error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from typing import Any, Optional, Sequence

from . import __version__
from .bethe import (ZParams, default_relations, plucker_sweep, random_z, trial_points,
                    verify_identities)
from .combinatorics import Partition, as_partition, num_syt, partitions_of
from .grassmann import (PluckerVector, plucker_relations, poly_from_roots,
                        positivity_check)
from .scalars import format_scalar, parse_scalar
from .solver import (SolveConfig, SolverError, solution_bases, solve_inverse_wronski)
from .specht import RepForm, build_rep
from .symfunc import bethe_dimension

IDENTITIES = ("commutativity", "translation", "plucker-single-column",
              "plucker-single-row", "plucker-all")


class InputError(Exception):
    """Malformed flags or input documents (exit status 2)."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InputError(message)


def _partition_arg(text: str) -> Partition:
    try:
        parts = [int(p) for p in text.split(",") if p.strip()] if text.strip() else []
        return as_partition(parts)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad partition {text!r}: {exc}") from exc


def _composition_arg(text: str) -> tuple[int, ...]:
    try:
        parts = tuple(int(p) for p in text.split(","))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad composition {text!r}") from exc
    if not parts or any(p <= 0 for p in parts):
        raise argparse.ArgumentTypeError(f"bad composition {text!r}")
    return parts


def _scalars_arg(text: str) -> tuple:
    try:
        return tuple(parse_scalar(v) for v in text.split(","))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _scalar_arg(text: str):
    try:
        return parse_scalar(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="bw", description="Bethe operators and the inverse Wronski problem.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, seed=True):
        if seed:
            p.add_argument("--seed", type=int, default=0, help="seed for every random choice")
        p.add_argument("--out", help="write the JSON document here instead of stdout")

    p = sub.add_parser("solve", help="solve the inverse Wronski problem in one Schubert cell")
    p.add_argument("--nu", type=_partition_arg, required=True)
    p.add_argument("--z", type=_scalars_arg, required=True,
                   help="comma-separated z_i such as 1,3/2,0.25 (use --z=-1,2 for a leading minus)")
    p.add_argument("--form", choices=("seminormal", "orthogonal"), default="seminormal",
                   help="seminormal: exact construction then float eigensolve")
    p.add_argument("--tol-cluster", type=float, default=1e-7)
    p.add_argument("--tol-residual", type=float, default=1e-8)
    p.add_argument("--max-retries", type=int, default=5)
    p.add_argument("--vectors", action="store_true", help="include eigenvectors in the output")
    common(p)

    p = sub.add_parser("verify", help="check operator identities on Specht modules")
    who = p.add_mutually_exclusive_group(required=True)
    who.add_argument("--n", type=int, help="check every partition of n")
    who.add_argument("--nu", type=_partition_arg)
    p.add_argument("--which", default="all",
                   help="comma-separated subset of " + ", ".join(IDENTITIES) + ", or 'all'")
    p.add_argument("--z", type=_scalars_arg, help="parameters; random rationals when omitted")
    p.add_argument("--form", choices=("seminormal", "orthogonal"), default="seminormal")
    p.add_argument("--trials", type=int, default=3, help="number of (s, t) trial pairs")
    p.add_argument("--full-relations", action="store_true",
                   help="stream every Plücker relation of Gr(n, 2n), including vacuous ones")
    common(p)

    p = sub.add_parser("dims", help="dimensions of Bethe algebras with repeated parameters")
    p.add_argument("--kappa", type=_composition_arg, required=True)
    p.add_argument("--nu", type=_partition_arg)
    common(p, seed=False)

    p = sub.add_parser("basis", help="echelon basis and h-basis of solved points")
    p.add_argument("--input", default="-", help="JSON file from 'solve' (default stdin)")
    p.add_argument("--z", type=_scalars_arg, help="parameters, if the input does not carry them")
    p.add_argument("--t", type=_scalar_arg, help="base point of the h-basis")
    p.add_argument("--d", type=int, help="dimension of the spaces (default: length of nu)")
    p.add_argument("--tol-residual", type=float, default=1e-8)
    common(p, seed=False)

    p = sub.add_parser("positivity", help="total nonnegativity / positivity of solved points")
    p.add_argument("--input", default="-", help="JSON file from 'solve' (default stdin)")
    p.add_argument("--mode", choices=("tnn", "tp-in-cell"), default="tnn")
    p.add_argument("--tol", type=float, default=1e-9)
    common(p, seed=False)

    p = sub.add_parser("relations", help="count or list Plücker relations of Gr(d, m)")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--family", choices=("all", "single-column", "single-row"), default="all")
    p.add_argument("--max-size", type=int)
    p.add_argument("--list", action="store_true", help="include every relation in the output")
    common(p, seed=False)
    return parser


# ------------------------------------------------------------- commands

def _header(args, **extra) -> dict:
    doc = {"command": args.command, "version": __version__}
    if hasattr(args, "seed"):
        doc["seed"] = args.seed
    doc.update(extra)
    return doc


def cmd_solve(args) -> tuple[dict, bool]:
    nu, z = args.nu, ZParams(args.z)
    if nu.size() == 0:
        raise InputError("nu must be nonempty")
    if z.n != nu.size():
        raise InputError(f"|nu| = {nu.size()} but {z.n} values of z were given")
    cfg = SolveConfig(seed=args.seed, cluster_tol=args.tol_cluster, residual_tol=args.tol_residual,
                      max_retries=args.max_retries,
                      mode="exact-build+float-solve" if args.form == "seminormal" else "float")
    sols = solve_inverse_wronski(nu, z, cfg)
    tol = cfg.residual_tol if z.real else cfg.complex_tol
    passed = sum(s.multiplicity for s in sols) == num_syt(nu) and all(
        abs(s.residuals["wronskian"]) <= tol and abs(s.residuals["relations"]) <= tol for s in sols)
    doc = _header(args, nu=list(nu), z=z.to_json(), f_nu=num_syt(nu),
                  config={"cluster_tol": cfg.cluster_tol, "residual_tol": cfg.residual_tol,
                          "max_retries": cfg.max_retries, "mode": cfg.mode},
                  solutions=[s.to_json(with_vectors=args.vectors) for s in sols], passed=passed)
    return doc, passed


def cmd_verify(args) -> tuple[dict, bool]:
    which = IDENTITIES if args.which == "all" else tuple(w.strip() for w in args.which.split(","))
    bad = [w for w in which if w not in IDENTITIES]
    if bad:
        raise InputError(f"unknown identity {bad[0]!r}")
    nus = partitions_of(args.n) if args.nu is None else [args.nu]
    n = args.n if args.nu is None else args.nu.size()
    if n < 1:
        raise InputError("n must be positive")
    exact = args.form == "seminormal"
    z = ZParams(args.z) if args.z is not None else random_z(args.seed, n, exact=exact)
    if z.n != n:
        raise InputError(f"need {n} values of z, got {z.n}")
    if exact and not z.exact:
        raise InputError("the seminormal form needs rational z; use --form orthogonal")
    points = trial_points(args.seed, args.trials, exact=exact)
    reps = [build_rep(nu, RepForm.SEMINORMAL if exact else RepForm.ORTHOGONAL) for nu in nus]
    results = []
    for w in which:
        if w.startswith("plucker-"):
            fam = w[len("plucker-"):]
            rels = plucker_relations(n, 2 * n, fam) if args.full_relations else default_relations(n, fam)
            reports = plucker_sweep(reps, z, points, rels)
            for rep in reports:
                rep.which = w
        else:
            reports = [verify_identities(rep, z, w, points) for rep in reps]
        results.extend(r.to_json() for r in reports)
    passed = all(r["passed"] for r in results)
    doc = _header(args, n=n, z=z.to_json(), form=RepForm.parse(args.form).value,
                  trial_points=[[format_scalar(s), format_scalar(t)] for s, t in points],
                  reports=results, passed=passed)
    return doc, passed


def cmd_dims(args) -> tuple[dict, bool]:
    n = sum(args.kappa)
    table = [{"nu": list(nu), "dim": bethe_dimension(nu, args.kappa)} for nu in partitions_of(n)]
    doc = _header(args, kappa=list(args.kappa), table=table, total=sum(r["dim"] for r in table))
    if args.nu is not None:
        if args.nu.size() != n:
            raise InputError(f"|nu| = {args.nu.size()} but kappa sums to {n}")
        doc["dim"] = bethe_dimension(args.nu, args.kappa)
    return doc, True


def _read_input(path: str) -> Any:
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
        return json.loads(text)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"input is not JSON: {exc}") from exc


def _points_from(doc: Any) -> tuple[list[PluckerVector], Optional[list]]:
    """Plücker vectors (and z, when present) from a solve document or fragments of one."""
    z = None
    if isinstance(doc, dict) and "solutions" in doc:
        z = doc.get("z")
        items = doc["solutions"]
    elif isinstance(doc, list):
        items = doc
    else:
        items = [doc]
    out = []
    try:
        for item in items:
            out.append(PluckerVector.from_json(item["delta"] if "delta" in item else item))
    except (TypeError, ValueError, KeyError) as exc:
        raise InputError(f"unrecognised Plücker vector document: {exc}") from exc
    return out, z


def cmd_basis(args) -> tuple[dict, bool]:
    points, zdoc = _points_from(_read_input(args.input))
    zvals = args.z if args.z is not None else zdoc
    if zvals is None:
        raise InputError("the input carries no z; pass --z")
    z = ZParams(zvals)
    results = []
    passed = True
    for delta in points:
        if z.n != delta.n:
            raise InputError(f"need {delta.n} values of z, got {z.n}")
        bases = solution_bases(delta, delta.nu, z, t=args.t, d=args.d)
        target = poly_from_roots(list(z.values))
        pad = len(target)
        resid = 0.0
        for key in ("wronskian_echelon", "wronskian_h"):
            w = list(bases[key]) + [0] * (pad - len(bases[key]))
            resid = max([resid] + [abs(a - b) for a, b in zip(w, target)])
        ok = resid <= args.tol_residual
        passed = passed and ok
        results.append({
            "delta": delta.to_json(),
            "d": bases["d"], "m": bases["m"], "t": format_scalar(bases["t"]),
            "echelon": [f.to_json() for f in bases["echelon"]],
            "h": [f.to_json() for f in bases["h"]],
            "wronskian_echelon": [format_scalar(c) for c in bases["wronskian_echelon"]],
            "wronskian_h": [format_scalar(c) for c in bases["wronskian_h"]],
            "wronskian_residual": format_scalar(resid),
            "passed": ok,
        })
    return _header(args, z=z.to_json(), bases=results, passed=passed), passed


def cmd_positivity(args) -> tuple[dict, bool]:
    points, _ = _points_from(_read_input(args.input))
    verdicts = []
    for delta in points:
        tol = 0.0 if delta.mode == "exact" else args.tol
        verdict = positivity_check(delta, args.mode, tol)
        verdicts.append({"nu": list(delta.nu), **verdict.to_json()})
    passed = all(v["ok"] for v in verdicts)
    return _header(args, mode=args.mode, verdicts=verdicts, passed=passed), passed


def cmd_relations(args) -> tuple[dict, bool]:
    if not 0 <= args.d <= args.m:
        raise InputError("need 0 <= d <= m")
    rels = plucker_relations(args.d, args.m, args.family, max_size=args.max_size)
    count = 0
    listing = []
    for rel in rels:
        count += 1
        if args.list:
            listing.append(rel.to_json())
    doc = _header(args, d=args.d, m=args.m, family=args.family, count=count)
    if args.list:
        doc["relations"] = listing
    return doc, True


COMMANDS = {
    "solve": cmd_solve, "verify": cmd_verify, "dims": cmd_dims,
    "basis": cmd_basis, "positivity": cmd_positivity, "relations": cmd_relations,
}


def _emit_error(kind: str, message: str) -> None:
    sys.stderr.write(json.dumps({"error": kind, "message": message}) + "\n")


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        doc, passed = COMMANDS[args.command](args)
    except InputError as exc:
        _emit_error("input", str(exc))
        return 2
    except SolverError as exc:
        _emit_error("solver", str(exc))
        return 1
    except (ValueError, ArithmeticError) as exc:
        _emit_error("input", str(exc))
        return 2
    text = json.dumps(doc, indent=2, ensure_ascii=False) + "\n"
    if args.out:
        try:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(text)
        except OSError as exc:
            _emit_error("output", str(exc))
            return 2
    else:
        sys.stdout.write(text)
    return 0 if passed else 1


if __name__ == "__main__":
    sys.exit(main())
