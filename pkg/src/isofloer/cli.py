"""Command-line interface: classification, raw-profile checks, witness replay.

Exit codes: 0 when a verdict was produced (Unresolved and NoContradiction
are verdicts), 1 on domain or usage errors, 2 on malformed input files.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from .catalog import (
    FamilyError,
    data_to_json,
    enumerate_families,
    gauss_image_data,
    validate_family,
)
from .criteria import (
    CaseReport,
    UNRESOLVED,
    WIDE,
    classify,
    report_to_json,
    wide_check_biran_cornea,
)
from .homology import ProfileError, profile_from_json, profile_to_json
from .specseq import (
    CONTRADICTION,
    FEASIBLE,
    SearchCapError,
    UnknownSlotsError,
    WitnessError,
    oracle_narrow_feasible,
    propagate_narrow,
    replay_witness,
    verdict_from_json,
    verdict_to_json,
)

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_FORMAT = 2

LIFTED_THEORY_PRECONDITION = "lifted Floer theory needs minimal Maslov number >= 3"


@dataclass(frozen=True)
class CliConfig:
    """Parsed invocation, normalized across subcommands."""

    command: str
    fmt: str = "text"
    verbose: bool = False
    g: int | None = None
    m1: int | None = None
    m2: int | None = None
    bound: int = 16
    profile_path: str | None = None
    maslov: int | None = None
    nu: int | None = None
    use_oracle: bool = False
    search_cap: int | None = None
    witness_path: str | None = None


class _Parser(argparse.ArgumentParser):
    # usage problems are domain errors (exit 1), not format errors
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_DOMAIN)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="isofloer",
        description="Displaceability obstructions for Gauss images of isoparametric hypersurfaces.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=("text", "json"), default="text",
                       help="output format (default: text)")
        p.add_argument("--verbose", action="store_true",
                       help="print witness chains in text output")

    p = sub.add_parser("classify", parents=[], help="classify one family (g, m1, m2)")
    p.add_argument("--g", type=int, required=True, help="number of distinct principal curvatures")
    p.add_argument("--m1", type=int, required=True, help="first multiplicity")
    p.add_argument("--m2", type=int, required=True, help="second multiplicity")
    add_format(p)
    p.set_defaults(handler=_cmd_classify)

    p = sub.add_parser("classify-all", help="classify every family with m1+m2 <= bound")
    p.add_argument("--bound", type=int, default=16, help="multiplicity-sum bound (default 16)")
    add_format(p)
    p.set_defaults(handler=_cmd_classify_all)

    p = sub.add_parser("narrow-check", help="run the narrowness deciders on a raw profile")
    p.add_argument("--profile", required=True, help="path to a profile JSON file")
    p.add_argument("--maslov", type=int, required=True, help="minimal Maslov number of the model")
    p.add_argument("--nu", type=int, default=None,
                   help="page turns before collapse (default floor((n+1)/maslov))")
    p.add_argument("--oracle", action="store_true",
                   help="also run the exhaustive rank-assignment oracle")
    p.add_argument("--cap", type=int, default=None, help="oracle search cap on the total dimension")
    add_format(p)
    p.set_defaults(handler=_cmd_narrow_check)

    p = sub.add_parser("wide-check", help="run the wideness criterion on a raw profile")
    p.add_argument("--profile", required=True, help="path to a profile JSON file")
    p.add_argument("--maslov", type=int, required=True, help="minimal Maslov number of the model")
    add_format(p)
    p.set_defaults(handler=_cmd_wide_check)

    p = sub.add_parser("replay", help="re-derive a stored narrowness verdict")
    p.add_argument("witness_file", help="path to a narrow-check JSON output file")
    add_format(p)
    p.set_defaults(handler=_cmd_replay)

    p = sub.add_parser("catalog", help="dump Gauss-image data for every family up to a bound")
    p.add_argument("--bound", type=int, default=16, help="multiplicity-sum bound (default 16)")
    add_format(p)
    p.set_defaults(handler=_cmd_catalog)

    return parser


def _config_from_args(args: argparse.Namespace) -> CliConfig:
    return CliConfig(
        command=args.command,
        fmt=getattr(args, "format", "text"),
        verbose=getattr(args, "verbose", False),
        g=getattr(args, "g", None),
        m1=getattr(args, "m1", None),
        m2=getattr(args, "m2", None),
        bound=getattr(args, "bound", 16),
        profile_path=getattr(args, "profile", None),
        maslov=getattr(args, "maslov", None),
        nu=getattr(args, "nu", None),
        use_oracle=getattr(args, "oracle", False),
        search_cap=getattr(args, "cap", None),
        witness_path=getattr(args, "witness_file", None),
    )


def _load_json_file(path: str):
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return json.load(handle)
    except OSError as exc:
        print(f"error: cannot read {path}: {exc}", file=sys.stderr)
        return None
    except json.JSONDecodeError as exc:
        print(f"error: {path} is not valid JSON: {exc}", file=sys.stderr)
        return None


def _emit_json(payload) -> None:
    print(json.dumps(payload, indent=2))


def _print_report_text(report: CaseReport, verbose: bool) -> None:
    f = report.family
    print(f"g={f.g} m1={f.m1} m2={f.m2} n={f.n}: {report.status}")
    for step in report.justification:
        print(f"  [{step.kind}] {step.claim}" + (f"  ({step.source})" if step.source else ""))
        if verbose and step.verdict is not None:
            for line in _verdict_text_lines(step.verdict):
                print(f"      {line}")
    if report.status == WIDE:
        print(f"  intersects the real form: {'yes' if report.intersects_real_form else 'no'}")
    if report.volume_lower_bound is not None:
        print(f"  sweep-volume lower bound: {report.volume_lower_bound:.6f}")


def _verdict_text_lines(verdict) -> list[str]:
    lines = [_verdict_summary(verdict)]
    payload = verdict_to_json(verdict)["witness"]
    if payload["type"] == "contradiction-chain":
        for c in payload["chain"]:
            lines.append(
                f"page {c['page']}: slot bound {c['lower_before']} -> {c['lower_after']} "
                f"(neighbours {c['left']} hi={c['left_hi']}, {c['right']} hi={c['right_hi']})"
            )
    elif payload["type"] == "rank-assignment":
        for rv in payload["ranks"]:
            lines.append(f"page {rv['page']}: ranks {rv['ranks']}")
    return lines


def _verdict_summary(verdict) -> str:
    if verdict.kind == CONTRADICTION:
        return (
            f"Contradiction at slot {verdict.slot} "
            f"(final page {verdict.page}, forced lower bound {verdict.bound})"
        )
    if verdict.kind == FEASIBLE:
        return "Feasible: a legal rank assignment reaches the zero page"
    return verdict.kind


def _cmd_classify(config: CliConfig) -> int:
    try:
        family = validate_family(config.g, config.m1, config.m2)
    except FamilyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    report = classify(family)
    if config.fmt == "json":
        _emit_json(report_to_json(report))
    else:
        _print_report_text(report, config.verbose)
    return EXIT_OK


def _cmd_classify_all(config: CliConfig) -> int:
    if config.bound < 2:
        print("error: --bound must be >= 2", file=sys.stderr)
        return EXIT_DOMAIN
    reports = [classify(f) for f in enumerate_families(config.bound)]
    if config.fmt == "json":
        _emit_json([report_to_json(r) for r in reports])
        return EXIT_OK
    print(f"{'g':>3} {'n':>4} {'m1':>4} {'m2':>4}  status")
    for report in reports:
        f = report.family
        print(f"{f.g:>3} {f.n:>4} {f.m1:>4} {f.m2:>4}  {report.status}")
    unresolved = [r.family for r in reports if r.status == UNRESOLVED]
    if unresolved:
        listed = ", ".join(f"({f.g},{f.m1},{f.m2})" for f in unresolved)
        print(f"unresolved: {listed}")
    else:
        print("unresolved: none")
    return EXIT_OK


def _cmd_narrow_check(config: CliConfig) -> int:
    data = _load_json_file(config.profile_path)
    if data is None:
        return EXIT_FORMAT
    try:
        profile = profile_from_json(data)
    except ProfileError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FORMAT
    if config.maslov < 3:
        print(f"error: {LIFTED_THEORY_PRECONDITION}, got {config.maslov}", file=sys.stderr)
        return EXIT_DOMAIN
    nu = config.nu if config.nu is not None else (profile.n + 1) // config.maslov
    if nu < 0:
        print("error: --nu must be >= 0", file=sys.stderr)
        return EXIT_DOMAIN
    verdict = propagate_narrow(profile, config.maslov, profile.n, nu)
    oracle_verdict = None
    oracle_note = None
    if config.use_oracle:
        try:
            oracle_verdict = oracle_narrow_feasible(profile, config.maslov, nu, config.search_cap)
        except (UnknownSlotsError, SearchCapError) as exc:
            oracle_note = str(exc)
    envelope = {
        "profile": profile_to_json(profile),
        "maslov": config.maslov,
        "n": profile.n,
        "nu": nu,
        "verdict": verdict_to_json(verdict),
        "oracle": verdict_to_json(oracle_verdict) if oracle_verdict is not None else None,
    }
    if config.fmt == "json":
        _emit_json(envelope)
    else:
        print(f"propagation: {_verdict_summary(verdict)}")
        if config.verbose or verdict.kind == CONTRADICTION:
            for line in _verdict_text_lines(verdict)[1:]:
                print(f"  {line}")
        if oracle_verdict is not None:
            print(f"oracle: {_verdict_summary(oracle_verdict)}")
            if config.verbose:
                for line in _verdict_text_lines(oracle_verdict)[1:]:
                    print(f"  {line}")
        elif oracle_note is not None:
            print(f"oracle skipped: {oracle_note}")
    return EXIT_OK


def _cmd_wide_check(config: CliConfig) -> int:
    data = _load_json_file(config.profile_path)
    if data is None:
        return EXIT_FORMAT
    try:
        profile = profile_from_json(data)
    except ProfileError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FORMAT
    try:
        wide = wide_check_biran_cornea(profile, config.maslov)
    except (ProfileError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    tested = list(range(config.maslov - 1, profile.n + 1, config.maslov))
    if config.fmt == "json":
        _emit_json({"wide": wide, "maslov": config.maslov, "tested_degrees": tested})
    else:
        print(f"wide: {'yes' if wide else 'no'} (degrees tested: {tested})")
    return EXIT_OK


def _cmd_replay(config: CliConfig) -> int:
    data = _load_json_file(config.witness_path)
    if data is None:
        return EXIT_FORMAT
    try:
        profile = profile_from_json(data["profile"])
        maslov = data["maslov"]
        nu = data["nu"]
        verdicts = [verdict_from_json(data["verdict"])]
        if data.get("oracle") is not None:
            verdicts.append(verdict_from_json(data["oracle"]))
    except (KeyError, TypeError, ProfileError, WitnessError) as exc:
        print(f"error: malformed witness file: {exc}", file=sys.stderr)
        return EXIT_FORMAT
    try:
        ok = all(replay_witness(v, profile, maslov, nu) for v in verdicts)
    except WitnessError as exc:
        print(f"error: malformed witness file: {exc}", file=sys.stderr)
        return EXIT_FORMAT
    if config.fmt == "json":
        _emit_json({"replayed": ok, "verdicts": len(verdicts)})
    else:
        print("witness replay: " + ("ok" if ok else "MISMATCH"))
    return EXIT_OK if ok else EXIT_DOMAIN


def _cmd_catalog(config: CliConfig) -> int:
    if config.bound < 2:
        print("error: --bound must be >= 2", file=sys.stderr)
        return EXIT_DOMAIN
    records = [gauss_image_data(f) for f in enumerate_families(config.bound)]
    if config.fmt == "json":
        _emit_json([data_to_json(rec) for rec in records])
        return EXIT_OK
    print(f"{'g':>3} {'n':>4} {'m1':>4} {'m2':>4} {'maslov':>7} {'nu':>3} {'orient':>7}")
    for rec in records:
        f = rec.family
        print(
            f"{f.g:>3} {f.n:>4} {f.m1:>4} {f.m2:>4} {rec.maslov:>7} {rec.nu:>3} "
            f"{'yes' if rec.orientable else 'no':>7}"
        )
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse help exits 0; our _Parser.error exits 1
        return exc.code if isinstance(exc.code, int) else EXIT_DOMAIN
    config = _config_from_args(args)
    return args.handler(config)


def main_entry() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    main_entry()
