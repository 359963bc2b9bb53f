"""Command-line interface: ``lie-breadth <command> ...``.

Exit codes: 0 success, 1 invalid input, 2 a check failed, 3 internal error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import catalog, deformation
from .errors import InvalidParam, LieBreadthError, TheoremViolation, ValidationError
from .exact_linalg import format_rational, format_vector, parse_rational
from .invariants import (
    B2Class,
    SamplingConfig,
    classify_b2,
    default_seed,
    verify_theorem_b,
)
from .io import read_algebra, read_cochain, serialize_algebra, write_text
from .lie import jacobi_check, nilpotency_class, series_dimensions

EXIT_OK, EXIT_INVALID, EXIT_FAILED, EXIT_INTERNAL = 0, 1, 2, 3


def _dims(text: str) -> list[int]:
    """``"4..10"`` (inclusive) or a comma list ``"5,7,9"``."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            out = list(range(int(lo), int(hi) + 1))
        else:
            out = [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad dimension range {text!r}") from None
    if not out:
        raise argparse.ArgumentTypeError(f"empty dimension range {text!r}")
    return out


def _seeds(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad seed list {text!r}") from None


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ValidationError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _params(items) -> dict[str, Fraction]:
    out = {}
    for item in items or ():
        key, sep, value = item.partition("=")
        if not sep or not key:
            raise InvalidParam(f"--param expects k=v, got {item!r}")
        out[key] = parse_rational(value)
    return out


def _cfg(args) -> SamplingConfig:
    seed = default_seed() if args.seed is None else args.seed
    return SamplingConfig(samples=args.samples, seed=seed, bound=args.bound)


def _emit(args, text: str) -> None:
    if getattr(args, "output", None):
        write_text(args.output, text)
    else:
        sys.stdout.write(text)


def _json(doc) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


# ------------------------------------------------------------------ commands


def cmd_check(args) -> int:
    g = read_algebra(args.file)
    bad = jacobi_check(g)
    if not bad:
        print(f"{g.name}: Jacobi identity holds")
        return EXIT_OK
    print(f"{g.name}: Jacobi identity fails on {len(bad)} triple(s)")
    for i, j, k, res in bad:
        print(f"  (X{i},X{j},X{k}): {format_vector(res)}")
    return EXIT_FAILED


def _invariants_doc(g, cfg: SamplingConfig) -> dict:
    report = verify_theorem_b(g, cfg)
    doc = report.to_dict()
    doc["nilpotency_class"] = nilpotency_class(g)
    doc["series_dimensions"] = series_dimensions(g)
    doc["sampling"] = {"samples": cfg.samples, "seed": cfg.seed, "bound": cfg.bound}
    return doc


def cmd_invariants(args) -> int:
    g = read_algebra(args.file, strict=True)
    cfg = _cfg(args)
    doc = _invariants_doc(g, cfg)
    if args.json:
        sys.stdout.write(_json(doc))
    else:
        seq = "(" + ",".join(map(str, doc["sequence"])) + ")"
        series = doc["series_dimensions"]
        bound = doc["center_bound"]
        print(f"breadth: {doc['breadth']}, sequence: {seq}")
        print(f"algebra: {g.name} (dim {g.dim})")
        print(f"breadth (Monte Carlo, seed={cfg.seed}): {doc['breadth']}, witness {doc['breadth_witness']}")
        print(f"characteristic sequence: {seq}, witness {doc['sequence_witness']}")
        print(f"nilpotency class: {doc['nilpotency_class']}")
        print("lower central series dims: " + ",".join(map(str, series["lower_central"])))
        print("ascending series dims: " + ",".join(map(str, series["ascending"])))
        print(f"center dim: {doc['center_dim']}")
        status = "ok" if doc["sequence_agrees"] else "FAILED"
        print(f"breadth = sum(c_i - 1): {status} ({doc['breadth_from_sequence']})")
        if bound is not None:
            print(f"breadth <= dim - dim Z - 1 = {bound}: {'ok' if doc['center_bound_ok'] else 'FAILED'}")
    return EXIT_OK if doc["pass"] else EXIT_FAILED


def cmd_classify(args) -> int:
    g = read_algebra(args.file, strict=True)
    try:
        cls, b, seq = classify_b2(g, _cfg(args))
    except TheoremViolation as exc:
        print(f"classification contradiction: {exc}")
        return EXIT_FAILED
    if cls is B2Class.NotBreadth2:
        print(f"breadth {b}, c={seq}")
    else:
        print(f"{cls.value}, c={seq}")
    return EXIT_OK


def cmd_catalog(args) -> int:
    if args.action == "list":
        for key, constraint, source in catalog.list_entries():
            print(f"{key}\t{constraint}\t{source}")
        return EXIT_OK
    if not args.key:
        raise InvalidParam("catalog emit needs a key")
    g = catalog.build(args.key, args.dim, _params(args.param))
    _emit(args, serialize_algebra(g))
    return EXIT_OK


def cmd_verify_catalog(args) -> int:
    report = catalog.verify_all(args.dims, _cfg(args), seeds=args.seeds, workers=args.workers)
    if args.json:
        sys.stdout.write(_json(report.to_dict()))
    else:
        for row in report.rows:
            params = ",".join(f"{k}={format_rational(v)}" for k, v in sorted(row.params.items()))
            label = f"{row.key}[n={row.dim}{', ' + params if params else ''}]"
            comp = row.computed
            detail = ""
            if "sequence" in comp:
                detail = f" c=({','.join(map(str, comp['sequence']))}) b={comp['breadth']} class={comp['class']}"
            print(f"{row.status:15} {label}{detail}")
            for problem in row.problems:
                print(f"{'':15}   {problem}")
            if row.note and row.status != "ok":
                print(f"{'':15}   note: {row.note}")
        print(f"{len(report.rows)} instance(s), {len(report.mismatches)} mismatch(es), "
              f"{sum(r.status == 'suspected-typo' for r in report.rows)} suspected typo(s)")
    return EXIT_OK if report.passed else EXIT_FAILED


def cmd_cocycle_check(args) -> int:
    base = read_algebra(args.base, strict=True)
    phi = read_cochain(args.phi).cochain
    report = deformation.SYSTEMS[args.system](base, phi, limit=args.limit)
    if args.json:
        sys.stdout.write(_json(report.to_dict()))
    else:
        for cond in report.conditions:
            print(f"{cond.name}: {'pass' if cond.passed else 'FAIL'}")
            for idx, value in cond.violations:
                args_txt = ",".join(f"X{i}" for i in idx)
                print(f"  ({args_txt}) -> {format_vector(value)}")
        print(f"{args.system}: {'pass' if report.passed else 'FAIL'}")
    return EXIT_OK if report.passed else EXIT_FAILED


def cmd_deform(args) -> int:
    base = read_algebra(args.base)
    phi = read_cochain(args.phi).cochain
    g = deformation.linear_deform(base, phi, args.t, name=args.name)
    _emit(args, serialize_algebra(g))
    return EXIT_OK


# -------------------------------------------------------------------- parser


class _Parser(argparse.ArgumentParser):
    """Usage errors are invalid input (exit 1), not a failed check."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INVALID, f"{self.prog}: error: {message}\n")


def _sampling_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--samples", type=int, default=25, help="random samples after the structured ones")
    p.add_argument("--seed", type=int, default=None, help="RNG seed (default: $LIE_BREADTH_SEED or 0)")
    p.add_argument("--bound", type=int, default=10, help="random coordinates lie in [-bound, bound]")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="lie-breadth", description="Breadth and characteristic sequence of nilpotent Lie algebras.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("check", help="verify the Jacobi identity of an algebra file")
    p.add_argument("file")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("invariants", help="breadth, characteristic sequence and series")
    p.add_argument("file")
    _sampling_args(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("classify", help="2-step / 3-step classification of breadth 2")
    p.add_argument("file")
    _sampling_args(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("catalog", help="list catalog entries or emit one as an algebra file")
    p.add_argument("action", choices=("list", "emit"))
    p.add_argument("key", nargs="?")
    p.add_argument("--dim", type=int, default=None)
    p.add_argument("--param", action="append", metavar="K=V")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("verify-catalog", help="check every catalog entry against its expected invariants")
    p.add_argument("--dims", type=_dims, default=_dims("5..10"), help="e.g. 4..10 or 5,7,9")
    p.add_argument("--seeds", type=_seeds, default=None, help="comma list; sequences must agree across them")
    p.add_argument("--workers", type=int, default=1)
    _sampling_args(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify_catalog)

    p = sub.add_parser("cocycle-check", help="run a deformation condition system")
    p.add_argument("--base", required=True)
    p.add_argument("--phi", required=True)
    p.add_argument("--system", required=True, choices=sorted(deformation.SYSTEMS))
    p.add_argument("--limit", type=int, default=10, help="violations listed per condition")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_cocycle_check)

    p = sub.add_parser("deform", help="write the algebra mu0 + t phi")
    p.add_argument("--base", required=True)
    p.add_argument("--phi", required=True)
    p.add_argument("--t", type=_rational, default=Fraction(1))
    p.add_argument("--name")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_deform)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except LieBreadthError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAILED
    except Exception as exc:  # noqa: BLE001
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
