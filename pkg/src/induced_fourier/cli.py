"""Command-line front end: ``validate``, ``transform`` and ``verify``."""
from __future__ import annotations

import argparse
import sys
import warnings
from pathlib import Path


from .errors import GroupLawError, NotIrreducibleWarning, RepresentationError
from .formats import FormatError, dumps, field_to_dict, measure_from_dict, read_json, subgroup_from_dict
from .group import Subgroup, haar_weights, subgroup_closure
from .induce import induce
from .transform import VectorMeasure, fourier_field
from .verify import TOL_ENV, VerifyConfig, report_to_dict, resolve_group, resolve_sigma, run_verification

EXIT_INPUT = 2


def _parse_subgroup(G, spec: str) -> Subgroup:
    """``"3"``, ``"1,2"``, ``"[1, 2]"`` or a JSON file with a ``generators`` list."""
    if spec.endswith(".json") or Path(spec).is_file():
        return subgroup_from_dict(G, read_json(spec), spec)
    text = spec.strip().strip("[]")
    try:
        gens = [int(x) for x in text.replace(",", " ").split()] if text else []
    except ValueError:
        raise FormatError("--subgroup", None, f"expected comma-separated element indices, got {spec!r}") from None
    return subgroup_from_dict(G, {"generators": gens}, "--subgroup")


def cmd_validate(args) -> int:
    G = resolve_group(args.group)
    print(f"order {G.order}")
    subgroups = []
    for spec in args.subgroup or []:
        K = _parse_subgroup(G, spec)
        subgroups.append((spec, K))
        members = ", ".join(str(k) for k in sorted(K.members))
        print(f"order {G.order}, [G:K]={K.index} for K = <{spec}> of order {K.order}: {{{members}}}")
    for (a, K), (b, H) in ((x, y) for x in subgroups for y in subgroups if x is not y):
        if set(K.members) < set(H.members):
            print(f"<{a}> < <{b}>")
    return 0


def cmd_transform(args) -> int:
    G = resolve_group(args.group)
    K = _parse_subgroup(G, args.subgroup) if args.subgroup is not None else subgroup_closure(G, range(G.order))
    if not args.sigma:
        raise FormatError("--sigma", None, "at least one representation is required")
    reps = {}
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", NotIrreducibleWarning)
        for spec in args.sigma:
            L = resolve_sigma(spec, K)
            label = L.label or spec
            reps[label] = induce(G, K, L, label)
    m = measure_from_dict(G, read_json(args.measure), args.measure)
    if args.density:
        lam = haar_weights(G, K).lam_array()
        m = VectorMeasure(G, m.atoms * lam[:, None])
    text = dumps(field_to_dict(fourier_field(m, reps), G.name))
    if args.out and args.out != "-":
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def _format_table(reports) -> str:
    rows = [("claim", "sigma", "status", "kind", "max residual", "tolerance")]
    for r in reports:
        rows.append((r.claim, r.sigma, r.status, "asserted" if r.asserted else "report-only",
                     f"{r.max_residual:.3e}", f"{r.tolerance:.1e}"))
    widths = [max(len(row[i]) for row in rows) for i in range(len(rows[0]))]
    return "\n".join("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() for row in rows)


def cmd_verify(args) -> int:
    config = VerifyConfig.load(args.config)
    if args.seed is not None:
        config.seed = args.seed
    if args.claim:
        config.claims = args.claim
        config.__post_init__()
    reports, code = run_verification(config)
    doc = report_to_dict(config, reports, code)
    if args.report:
        Path(args.report).write_text(dumps(doc))
    if args.json:
        sys.stdout.write(dumps(doc))
    else:
        print(_format_table(reports))
        failed = sum(r.status == "FAIL" for r in reports if r.asserted)
        print(f"{len(reports)} checks, {failed} asserted failures, exit {code}")
    return code


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="induced-fourier",
        description="Fourier-Stieltjes transforms through induced representations on finite groups.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a group table and optional subgroups")
    p.add_argument("group", help="group JSON file or built-in name such as symmetric:3")
    p.add_argument("--subgroup", action="append", help="generators, e.g. 3 or 1,2 (repeatable)")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("transform", help="transform a measure and write the spectral field as JSON")
    p.add_argument("--group", required=True)
    p.add_argument("--subgroup", help="generators of K (default: K = G)")
    p.add_argument("--sigma", action="append", help="catalog name or rep JSON file (repeatable)")
    p.add_argument("--measure", required=True, help="measure JSON file")
    p.add_argument("--density", action="store_true",
                   help="treat the atoms as a density with respect to Haar measure")
    p.add_argument("--out", help="output path (default: stdout)")
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("verify", help="run the claim verification suite",
                       epilog=f"{TOL_ENV} overrides the default tolerance of every numeric claim.")
    p.add_argument("--config", required=True, help="verify JSON config")
    p.add_argument("--report", help="also write the JSON report here")
    p.add_argument("--json", action="store_true", help="print the JSON report instead of a table")
    p.add_argument("--seed", type=int, help="override the config seed")
    p.add_argument("--claim", action="append", help="restrict to these claims (repeatable)")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (FormatError, GroupLawError, RepresentationError, KeyError, ValueError, OSError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"error: {type(exc).__name__}: {msg}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
