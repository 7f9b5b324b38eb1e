"""Command-line front end.

Exit codes: 0 verdict true / agreement, 1 verdict false / disagreement,
2 usage or parse error.
"""
from __future__ import annotations

import argparse
import json
import sys
import time

from . import oracle
from .ample import (
    ALL_IDS,
    EXHAUSTIVE_MAX_N,
    check,
    cross_check,
    enumerate_families,
    is_ample,
    sample_families,
)
from .convexity import (
    DEFAULT_TOLERANCE,
    is_sign_convex,
    orthant_pattern,
    parse_point_cloud,
    region_pattern,
    satisfies_sca,
)
from .cubihedron import baryc_dot, complex_summary, skeleton_dot
from .shatter import dress_pajor, vc_dimension
from .signs import FormatError, parse_family


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _load_family(path: str):
    text = _read(path)
    try:
        return parse_family(text)
    except FormatError as exc:
        where = f"{path}:{exc.lineno}: " if exc.lineno else f"{path}: "
        raise UsageError(where + str(exc)) from None


def _yes(b: bool) -> str:
    return "true" if b else "false"


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False) + "\n"


# --- commands ---------------------------------------------------------------

def cmd_check(args) -> tuple[int, str]:
    L = _load_family(args.family)
    if args.which.lower() == "all":
        report = cross_check(L)
        data = report.to_json()
        code = 0 if report.agree and report.verdicts["is_ample"] else 1
        if args.format == "json":
            return code, _dump(data)
        lines = [f"n: {L.n}", f"members: {len(L)}"]
        lines += [f"{k}: {_yes(v)}" for k, v in report.verdicts.items()]
        lines.append(f"agree: {_yes(report.agree)}")
        for k, w in report.witnesses.items():
            lines.append(f"witness {k}: {json.dumps(w)}")
        return code, "\n".join(lines) + "\n"
    try:
        verdict = check(L, args.which)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    code = 0 if verdict.holds else 1
    which = args.which.upper()
    if args.format == "json":
        return code, _dump({"n": L.n, "family": L.strings(), "verdicts": {which: verdict.holds},
                            "witnesses": {which: verdict.witness} if verdict.witness else {}})
    text = f"{which}: {_yes(verdict.holds)}\n"
    if verdict.witness is not None:
        text += f"witness: {json.dumps(verdict.witness)}\n"
    return code, text


def cmd_report(args) -> tuple[int, str]:
    L = _load_family(args.family)
    report = cross_check(L)
    data = report.to_json()
    data["complex"] = complex_summary(L)
    code = 0 if report.agree else 1
    if args.format == "json":
        return code, _dump(data)
    lower, middle, upper = dress_pajor(L)
    c = data["complex"]
    lines = [
        f"n: {L.n}",
        f"members: {middle}",
        f"strongly shattered / members / shattered: {lower} <= {middle} <= {upper}",
        f"vc dimension: {vc_dimension(L)}",
        f"complex dimension: {c['dimension']}",
        f"f-vector: {' '.join(map(str, c['f_vector']))}",
        f"cocircuits: {' '.join(c['cocircuits']) or '(none)'}",
        f"circuits: {' '.join(c['circuits']) or '(none)'}",
    ]
    lines += [f"{k}: {_yes(v)}" for k, v in report.verdicts.items()]
    lines.append(f"agree: {_yes(report.agree)}")
    for k, w in report.witnesses.items():
        lines.append(f"witness {k}: {json.dumps(w)}")
    return code, "\n".join(lines) + "\n"


def cmd_enumerate(args) -> tuple[int, str]:
    if args.sample is not None:
        return _sample(args)
    if args.n < 0 or args.n > EXHAUSTIVE_MAX_N:
        raise UsageError(f"n must be between 0 and {EXHAUSTIVE_MAX_N} for exhaustive enumeration")
    start = time.perf_counter()
    try:
        count = enumerate_families(args.n, args.which, jobs=args.jobs)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    elapsed = time.perf_counter() - start
    if args.format == "json":
        return 0, _dump({"n": args.n, "predicate": args.which.upper(), "count": count,
                         "seconds": round(elapsed, 3)})
    print(f"wall time: {elapsed:.3f}s", file=sys.stderr)
    return 0, f"{count}\n"


def _sample(args) -> tuple[int, str]:
    if args.sample < 0 or args.n < 0:
        raise UsageError("n and --sample must be non-negative")
    try:
        count = sample_families(args.n, args.which, args.sample, args.seed)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.format == "json":
        return 0, _dump({"n": args.n, "predicate": args.which.upper(), "samples": args.sample,
                         "seed": args.seed, "count": count})
    return 0, f"{count} of {args.sample}\n"


def cmd_orthants(args) -> tuple[int, str]:
    text = _read(args.points)
    try:
        K = parse_point_cloud(text)
    except ValueError as exc:
        raise UsageError(f"{args.points}: {exc}") from None
    if args.tolerance < 0:
        raise UsageError("tolerance must be non-negative")
    L = orthant_pattern(K, args.tolerance)
    J = region_pattern(K, args.tolerance)
    data = {
        "n": K.ground.n,
        "orthants": L.strings(),
        "regions": J.strings(),
        "sca": satisfies_sca(J),
        "sign_convex": is_sign_convex(J),
        "ample": is_ample(L),
    }
    if args.format == "json":
        return 0, _dump(data)
    lines = [
        f"L: {' '.join(data['orthants']) or '(empty)'}",
        f"J: {' '.join(data['regions']) or '(empty)'}",
        f"sca: {_yes(data['sca'])}",
        f"sign_convex: {_yes(data['sign_convex'])}",
        f"ample: {_yes(data['ample'])}",
    ]
    return 0, "\n".join(lines) + "\n"


def cmd_export(args) -> tuple[int, str]:
    L = _load_family(args.family)
    if args.format == "json":
        return 0, _dump(complex_summary(L))
    if args.what == "skeleton":
        return 0, skeleton_dot(L)
    return 0, baryc_dot(L)


def cmd_oracle(args) -> tuple[int, str]:
    if args.family:
        L = _load_family(args.family)
        members = [oracle.to_tuple(s) for s in L.strings()]
        shattered = oracle.shattered(members, L.n)
        strong = oracle.strongly_shattered(members, L.n)
        data = {"n": L.n, "members": len(members), "shattered": len(shattered),
                "strongly_shattered": len(strong), "ample": len(members) == len(shattered)}
    else:
        if args.n is None:
            raise UsageError("oracle needs either --family or --n")
        if args.n < 0 or args.n > EXHAUSTIVE_MAX_N:
            raise UsageError(f"n must be between 0 and {EXHAUSTIVE_MAX_N}")
        data = {"n": args.n, "ample_families": oracle.count_ample(args.n)}
    if args.format == "json":
        return 0, _dump(data)
    return 0, "".join(f"{k}: {_yes(v) if isinstance(v, bool) else v}\n" for k, v in data.items())


# --- parser -----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ids = ", ".join(c.value for c in ALL_IDS)
    parser = argparse.ArgumentParser(prog="amplesets", description="Ample sets of sign vectors.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", help="write the result here instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", parents=[common], help="evaluate one characterization or all of them",
                       description=f"Characterization ids: {ids}, or 'all'.")
    p.add_argument("family")
    p.add_argument("which", nargs="?", default="all")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("report", parents=[common], help="full report: counts, complex, all verdicts")
    p.add_argument("family")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_report)

    p = sub.add_parser("enumerate", parents=[common], help="count families over {+-1}^n satisfying a predicate")
    p.add_argument("n", type=int)
    p.add_argument("which", nargs="?", default="COUNT")
    p.add_argument("--jobs", type=int, default=None, help="worker processes (default: all cores)")
    p.add_argument("--sample", type=int, metavar="K", help="test K seeded random families instead (any n)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("orthants", parents=[common], help="orthant and region patterns of a point cloud")
    p.add_argument("points")
    p.add_argument("--tolerance", type=float, default=DEFAULT_TOLERANCE)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_orthants)

    p = sub.add_parser("export", parents=[common], help="DOT graph of the skeleton or barycenter grid")
    p.add_argument("family")
    p.add_argument("what", choices=["skeleton", "baryc"], nargs="?", default="skeleton")
    p.add_argument("--format", choices=["dot", "json"], default="dot")
    p.set_defaults(func=cmd_export)

    p = sub.add_parser("oracle", parents=[common], help="naive reference counts")
    p.add_argument("--n", type=int)
    p.add_argument("--family")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_oracle)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "jobs", None) is not None and args.jobs < 1:
        parser.error("--jobs must be at least 1")
    try:
        code, out = args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.output:
        try:
            with open(args.output, "w", encoding="utf-8") as fh:
                fh.write(out)
        except OSError as exc:
            print(f"error: cannot write {args.output}: {exc.strerror}", file=sys.stderr)
            return 2
    else:
        sys.stdout.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
