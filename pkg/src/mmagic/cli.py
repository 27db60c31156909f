"""Command line: ``mmagic {generate,verify,oracle,sweep,render}``.

Exit codes: 0 everything passed; 1 inadmissible input or unreadable file;
2 a labeling was produced or read but fails its checks (or the oracle found
nothing); 64 usage errors.  Any flag may also come from ``--config FILE``,
a JSON object keyed by flag name; explicit flags win.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path
from typing import Any, Sequence

from .constructions import Scheme, admissible, generate
from .model import BipolarPathLabeling, CheckReport, LabelRangeError
from .numerics import InadmissibleError, Kind, scale_band, to_decimal_string
from .oracle import OracleBoundsError, brute_force_search, write_jsonl
from .serialization import (
    LabelingFormatError,
    labeling_to_dict,
    load_labeling,
    spectrum_to_dict,
    to_dot,
    to_table,
)
from .verification import Mode, NegativeRule, conformance, extract_spectrum, verify_m_magic

EXIT_OK = 0
EXIT_INADMISSIBLE = 1
EXIT_FAILED = 2
EXIT_USAGE = 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # type: ignore[override]
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    try:
        bounds = (int(lo), int(hi)) if sep else (int(lo), int(lo))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected A..B, got {text!r}") from None
    return bounds


def build_parser(config: dict[str, Any] | None = None) -> argparse.ArgumentParser:
    parser = _Parser(prog="mmagic", description=__doc__.splitlines()[0])
    parser.add_argument("--config", help="JSON file with default flag values")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    g = sub.add_parser("generate", help="build a labeling from its closed form and check it")
    g.add_argument("--family", choices=[s.value for s in Scheme])
    g.add_argument("--n", type=int)
    g.add_argument("--m", type=int)
    g.add_argument("--scale-exp", type=int, help="override the exponent p of d = 10^-p")
    g.add_argument("--format", choices=["json", "dot", "table"], default="json")
    g.add_argument("--out")

    v = sub.add_parser("verify", help="check a labeling file")
    v.add_argument("--input")
    v.add_argument("--m", type=int)
    v.add_argument("--mode", choices=[m.value for m in Mode], default="strict")
    v.add_argument("--negative-rule", choices=[r.value for r in NegativeRule], default="min-bound")

    o = sub.add_parser("oracle", help="exhaustive search on a small grid")
    o.add_argument("--n", type=int)
    o.add_argument("--m", type=int)
    o.add_argument("--grid", type=int)
    o.add_argument("--mode", choices=[m.value for m in Mode], default="lax")
    o.add_argument("--limit", type=int, default=10)
    o.add_argument("--scale-exp", type=int, default=2)
    o.add_argument("--family", choices=[k.value for k in Kind], default="anti-fuzzy")
    o.add_argument("--override", action="store_true", help="lift the default n/G bounds")
    o.add_argument("--workers", type=int, default=1)
    o.add_argument("--out")

    s = sub.add_parser("sweep", help="CSV over admissible (n, m)")
    s.add_argument("--family", choices=["m-magic", "bipolar-m-magic"], default="m-magic")
    s.add_argument("--m-range", type=_range)
    s.add_argument("--a-range", type=_range)
    s.add_argument("--scale-exp", type=int)
    s.add_argument("--out")

    r = sub.add_parser("render", help="DOT drawing of a labeling file")
    r.add_argument("--input")
    r.add_argument("--out")

    for p in (g, v, o, s, r):
        p.add_argument("--config", help="JSON file with default flag values")
    if config:
        normalized = {k.replace("-", "_"): v for k, v in config.items()}
        for k in ("m_range", "a_range"):
            if isinstance(normalized.get(k), str):
                normalized[k] = _range(normalized[k])
        for p in (g, v, o, s, r):
            p.set_defaults(**normalized)
    return parser


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _require(args: argparse.Namespace, *names: str) -> None:
    missing = [f"--{n.replace('_', '-')}" for n in names if getattr(args, n, None) is None]
    if missing:
        raise UsageError(f"missing required flag(s): {', '.join(missing)}")


def _summary(name: str, report: CheckReport) -> list[str]:
    if report.passed:
        return [f"{name}: pass"]
    lines = [f"{name}: FAIL"]
    for v in report.violations:
        where = f"edge {v.index}" if v.index is not None else "labeling"
        observed = ", ".join(f"{k}={val}" for k, val in v.to_dict()["observed"].items())
        lines.append(f"  {where}: {v.condition} ({observed})")
    return lines


def cmd_generate(args: argparse.Namespace) -> int:
    _require(args, "family", "n")
    scheme = Scheme(args.family)
    if scheme.fixed_m is not None:
        if args.m is not None and args.m != scheme.fixed_m:
            raise UsageError(f"--m {args.m} conflicts with --family {scheme.value} (m = {scheme.fixed_m})")
        m = scheme.fixed_m
    else:
        _require(args, "m")
        m = args.m
    n, kind = args.n, scheme.kind
    if n < 2 or m < 1:
        print("inadmissible: need n >= 2 and m >= 1", file=sys.stderr)
        return EXIT_INADMISSIBLE
    report = admissible(n, m, kind)
    if scheme.fixed_m is None and not report.admissible:
        print(report.reason, file=sys.stderr)
        return EXIT_INADMISSIBLE
    p = args.scale_exp if args.scale_exp is not None else scale_band(n, kind)
    try:
        L = generate(scheme, n, m, p)
    except (InadmissibleError, LabelRangeError) as exc:
        print(f"inadmissible: {exc}", file=sys.stderr)
        return EXIT_INADMISSIBLE
    verified = verify_m_magic(L, m, Mode.STRICT)
    conf = conformance(L, n, m, scheme)
    spectrum = extract_spectrum(L, Mode.LAX)
    passed = verified.passed and conf.passed

    if args.format == "json":
        doc = {
            "family": scheme.value,
            "n": n,
            "m": m,
            "scale_exp": p,
            "admissibility": report.to_dict(),
            "labeling": labeling_to_dict(L),
            "spectrum": spectrum_to_dict(spectrum),
            "verify": verified.to_dict(),
            "conformance": conf.to_dict(),
            "passed": passed,
        }
        _emit(json.dumps(doc, indent=2, ensure_ascii=False) + "\n", args.out)
    elif args.format == "table":
        text = to_table(L, spectrum.constants, spectrum.negative_constants)
        text += "\n".join(["", *_summary("verify", verified), *_summary("conformance", conf)]) + "\n"
        _emit(text, args.out)
    else:
        _emit(to_dot(L), args.out)
        for line in _summary("verify", verified) + _summary("conformance", conf):
            print(line, file=sys.stderr)
    return EXIT_OK if passed else EXIT_FAILED


def cmd_verify(args: argparse.Namespace) -> int:
    _require(args, "input", "m")
    try:
        L = load_labeling(args.input)
    except (OSError, LabelingFormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INADMISSIBLE
    report = verify_m_magic(L, args.m, args.mode, args.negative_rule)
    print(json.dumps(report.to_dict(), indent=2))
    return EXIT_OK if report.passed else EXIT_FAILED


def cmd_oracle(args: argparse.Namespace) -> int:
    _require(args, "n", "m", "grid")
    try:
        result = brute_force_search(
            args.n, args.m, args.grid, args.scale_exp, args.mode, args.limit,
            args.family, override=args.override, workers=args.workers,
        )
    except (OracleBoundsError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INADMISSIBLE
    buf = io.StringIO()
    write_jsonl(result, buf)
    _emit(buf.getvalue(), args.out)
    return EXIT_OK if result.found else EXIT_FAILED


SWEEP_HEADER = ["family", "n", "m", "a", "scale_exp", "constants", "passed"]


def sweep_rows(scheme: Scheme, m_range: tuple[int, int], a_range: tuple[int, int], scale_exp: int | None = None) -> list[list[str]]:
    rows = []
    for m in range(m_range[0], m_range[1] + 1):
        for a in range(a_range[0], a_range[1] + 1):
            n = 2 * m + 1 + m * a
            p = scale_exp if scale_exp is not None else scale_band(n, scheme.kind)
            try:
                L = generate(scheme, n, m, p)
            except LabelRangeError:
                rows.append([scheme.value, str(n), str(m), str(a), str(p), "", "false"])
                continue
            ok = verify_m_magic(L, m, Mode.STRICT).passed and conformance(L, n, m, scheme).passed
            constants = extract_spectrum(L, Mode.LAX).constants
            rows.append([
                scheme.value, str(n), str(m), str(a), str(p),
                ";".join(to_decimal_string(c) for c in constants),
                "true" if ok else "false",
            ])
    rows.sort(key=lambda r: (int(r[2]), int(r[1])))
    return rows


def cmd_sweep(args: argparse.Namespace) -> int:
    _require(args, "m_range", "a_range")
    (m_lo, m_hi), (a_lo, a_hi) = args.m_range, args.a_range
    if m_lo > m_hi or a_lo > a_hi or m_lo < 1 or a_lo < 0:
        print("error: empty or invalid sweep range", file=sys.stderr)
        return EXIT_INADMISSIBLE
    rows = sweep_rows(Scheme(args.family), args.m_range, args.a_range, args.scale_exp)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(SWEEP_HEADER)
    writer.writerows(rows)
    _emit(buf.getvalue(), args.out)
    return EXIT_OK if all(r[-1] == "true" for r in rows) else EXIT_FAILED


def cmd_render(args: argparse.Namespace) -> int:
    _require(args, "input")
    try:
        L = load_labeling(args.input)
    except (OSError, LabelingFormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INADMISSIBLE
    name = "BP" if isinstance(L, BipolarPathLabeling) else "P"
    _emit(to_dot(L, f"{name}{L.n}"), args.out)
    return EXIT_OK


COMMANDS = {
    "generate": cmd_generate,
    "verify": cmd_verify,
    "oracle": cmd_oracle,
    "sweep": cmd_sweep,
    "render": cmd_render,
}


def _load_config(argv: Sequence[str]) -> dict[str, Any] | None:
    pre = argparse.ArgumentParser(add_help=False)
    pre.add_argument("--config")
    known, _ = pre.parse_known_args(argv)
    if not known.config:
        return None
    try:
        config = json.loads(Path(known.config).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read config {known.config}: {exc}") from exc
    if not isinstance(config, dict):
        raise UsageError("config file must hold a JSON object")
    config.pop("config", None)
    return config


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        parser = build_parser(_load_config(argv))
        try:
            args = parser.parse_args(argv)
        except SystemExit as exc:  # --help and usage errors
            return int(exc.code or 0)
        if args.command is None:
            parser.print_help(sys.stderr)
            return EXIT_USAGE
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"mmagic: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
