"""Command-line front end.

Exit codes: 0 on success, 1 on invalid input, 2 when the mathematics is
inconclusive (an inconclusive classification or an undetermined gate).
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from ._rational import fmt, fmt_vec, parse_vec, pretty
from .folding import TABLE1, FoldingError, fold, unramified_gate
from .rootdata import (
    TYPE_LABELS,
    RootDataError,
    build_datum,
    coroot_json,
    coroots_at_level,
    region_count,
)
from .satake import WDParameter, check_pure
from .unitarity import (
    DEFAULT_R0_TABLE,
    DEFAULT_RANK_CEILING,
    ClassificationError,
    R0Table,
    classify_bruteforce,
    classify_half_integral,
    corollary_gate,
    evaluate_point,
    in_half_lattice,
    required_representations,
    same_classification,
)
from .weyl import dominant_representative

CONFIG_ENV = "UNITARY_SATAKE_CONFIG"
FORMATS = ("json", "text", "markdown")

EXIT_OK, EXIT_INVALID, EXIT_INCONCLUSIVE = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass
class CliConfig:
    r0_table: R0Table = DEFAULT_R0_TABLE
    output_format: str = "json"
    rank_ceiling: int = DEFAULT_RANK_CEILING


def load_config(path: Optional[str]) -> CliConfig:
    cfg = CliConfig()
    if not path:
        return cfg
    p = Path(path)
    try:
        data = json.loads(p.read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read config {path}: {exc}") from exc
    if not isinstance(data, dict):
        raise UsageError("config must be a JSON object")
    unknown = set(data) - {"r0_overrides", "output_format", "rank_ceiling"}
    if unknown:
        raise UsageError(f"unknown config keys: {sorted(unknown)}")
    if "r0_overrides" in data:
        src = data["r0_overrides"]
        if isinstance(src, str) and not Path(src).is_absolute():
            src = p.parent / src
        cfg.r0_table = R0Table.from_json(src)
    if "output_format" in data:
        if data["output_format"] not in FORMATS:
            raise UsageError(f"output_format must be one of {FORMATS}")
        cfg.output_format = data["output_format"]
    if "rank_ceiling" in data:
        cfg.rank_ceiling = int(data["rank_ceiling"])
    return cfg


# -- argument helpers --------------------------------------------------------

def _parse_type(label: str, rank: Optional[int]):
    if label in TYPE_LABELS:
        return build_datum(label, rank)
    m = re.fullmatch(r"([ABCD])(\d+)", label)
    if m and rank is None:
        return build_datum(m.group(1), int(m.group(2)))
    raise UsageError(f"unknown type {label!r}; expected one of {TYPE_LABELS}, optionally with a rank")


def _group_name(t: str, n: int) -> str:
    return {"A": f"PGL({n + 1})", "B": f"SO({2 * n + 1})", "C": f"PSp({2 * n})",
            "D": f"PSO({2 * n})"}.get(t, f"adjoint {t}")


def _point_label(fw) -> str:
    terms = []
    for i, x in enumerate(fw):
        if x:
            terms.append(f"{pretty(x)} omega_{i + 1}")
    return " + ".join(terms) if terms else "0"


# -- commands ----------------------------------------------------------------

def cmd_classify(args, cfg):
    datum = _parse_type(args.type, args.rank)
    report = classify_half_integral(datum, cfg.r0_table, rank_ceiling=cfg.rank_ceiling)
    out = {"group": _group_name(datum.type_label, datum.rank)}
    out.update(report.to_json())
    out["unitary_set_labels"] = [_point_label(p.fw_coords) for p in report.unitary_set]
    code = EXIT_INCONCLUSIVE if report.inconclusive else EXIT_OK
    if args.oracle:
        other = classify_bruteforce(datum, cfg.r0_table)
        agrees = same_classification(report, other)
        out["oracle"] = {"method": other.method, "agrees": agrees,
                         "unitary_set": [fmt_vec(p.fw_coords) for p in other.unitary_set]}
        if not agrees:
            code = EXIT_INCONCLUSIVE
    return out, code


def cmd_regions(args, cfg):
    datum = _parse_type(args.type, args.rank)
    return {"type": datum.name, "coxeter_number": datum.coxeter_number,
            "degrees": list(datum.degrees), "regions": region_count(datum)}, EXIT_OK


def cmd_coroots(args, cfg):
    datum = _parse_type(args.type, args.rank)
    cs = coroots_at_level(datum, args.level) if args.level is not None else datum.positive_coroots
    out = {"type": datum.name, "count": len(cs), "coroots": [coroot_json(datum, c) for c in cs]}
    if args.level is not None:
        out["level"] = args.level
    return out, EXIT_OK


def cmd_fold(args, cfg):
    datum = _parse_type(args.type, args.rank)
    return fold(datum.type_label, datum.rank, args.order).to_json(), EXIT_OK


def cmd_check_point(args, cfg):
    datum = _parse_type(args.type, args.rank)
    coords = parse_vec(args.nu)
    if args.order is not None:
        gate = unramified_gate(datum.type_label, datum.rank, args.order, coords)
        datum = fold(datum.type_label, datum.rank, args.order).canonical
        nu = datum.point(coords)
    else:
        nu = datum.point(coords)
        gate = corollary_gate(datum, required_representations(datum), nu)
    cert = dominant_representative(datum, nu)
    verdict = evaluate_point(datum, nu, cfg.r0_table)
    out = {"type": datum.name, "nu_fw": fmt_vec(nu.fw_coords),
           "dominant_fw": fmt_vec(cert.dominant.fw_coords), "weyl_word": list(cert.word),
           "half_integral": in_half_lattice(cert.dominant)}
    filters = verdict.to_json()
    filters.pop("nu_fw")
    out.update(filters)
    out["alcove_pairing"] = fmt(verdict.alcove_pairing)
    out["gate"] = gate.to_json()
    return out, EXIT_INCONCLUSIVE if gate.verdict == "undetermined" else EXIT_OK


def cmd_wd_check(args, cfg):
    try:
        wd = WDParameter.from_json(args.file)
    except OSError as exc:
        raise UsageError(f"cannot read {args.file}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise UsageError(f"{args.file} is not valid JSON: {exc}") from exc
    out = check_pure(wd, args.direction).to_json()
    out["direction"] = args.direction
    return out, EXIT_OK


def _table1_rows():
    samples = {0: [("A", 3), ("A", 5), ("A", 7)], 1: [("A", 2), ("A", 4), ("A", 6)],
               2: [("D", 4), ("D", 5), ("D", 6)], 3: [("D", 4)], 4: [("E6", None)]}
    rows = []
    for k, row in enumerate(TABLE1):
        checks = []
        for t, r in samples[k]:
            f = fold(t, r, row["order"])
            checks.append({"base": f.base.name, "folded": f.fixed_datum.name,
                           "recognized": "".join(map(str, f.fixed_datum.recognized_type))})
        rows.append(dict(row, examples=checks))
    return rows


def cmd_table1(args, cfg):
    return {"table1": _table1_rows()}, EXIT_OK


FULL_TABLE_CASES = ([("A", n) for n in range(1, 10)] + [("B", n) for n in range(2, 9)]
                    + [("C", n) for n in range(2, 9)] + [("D", n) for n in range(4, 9)]
                    + [("E6", None), ("E7", None), ("E8", None), ("F4", None), ("G2", None)])


def cmd_full_table(args, cfg):
    rows, code = [], EXIT_OK
    for t, r in FULL_TABLE_CASES:
        datum = build_datum(t, r)
        report = classify_half_integral(datum, cfg.r0_table, rank_ceiling=cfg.rank_ceiling)
        if report.inconclusive:
            code = EXIT_INCONCLUSIVE
        rows.append({"type": datum.name, "group": _group_name(datum.type_label, datum.rank),
                     "r0": report.r0,
                     "unitary_set": [_point_label(p.fw_coords) for p in report.unitary_set],
                     "inconclusive": report.inconclusive})
    return {"half_integral_unitary": rows, "table1": _table1_rows()}, code


# -- rendering ---------------------------------------------------------------

_RATIONAL = re.compile(r"-?\d+/\d+")


def _show(x) -> str:
    if isinstance(x, str):
        return pretty(x) if _RATIONAL.fullmatch(x) else x
    if isinstance(x, bool):
        return "yes" if x else "no"
    if isinstance(x, list):
        if x and isinstance(x[0], dict):
            return "; ".join("{" + ", ".join(f"{k}: {_show(v)}" for k, v in d.items()) + "}" for d in x)
        return "[" + ", ".join(_show(v) for v in x) + "]"
    if isinstance(x, dict):
        return "{" + ", ".join(f"{k}: {_show(v)}" for k, v in x.items()) + "}"
    if x is None:
        return "-"
    return str(x)


def render_text(payload: dict) -> str:
    lines = []
    for k, v in payload.items():
        if isinstance(v, list) and v and isinstance(v[0], dict):
            lines.append(f"{k}:")
            lines.extend("  " + _show(d)[1:-1] for d in v)
        else:
            lines.append(f"{k}: {_show(v)}")
    return "\n".join(lines) + "\n"


def _md_table(rows: list[dict]) -> list[str]:
    keys = list(rows[0])
    out = ["| " + " | ".join(keys) + " |", "|" + "---|" * len(keys)]
    for r in rows:
        out.append("| " + " | ".join(_show(r.get(k)).replace("|", "\\|") for k in keys) + " |")
    return out


def render_markdown(payload: dict) -> str:
    lines, tables = [], []
    for k, v in payload.items():
        if isinstance(v, list) and v and isinstance(v[0], dict):
            tables.append((k, v))
        else:
            lines.append(f"- **{k}**: {_show(v)}")
    for k, v in tables:
        lines += ["", f"### {k}", ""] + _md_table(v)
    return "\n".join(lines).lstrip("\n") + "\n"


def render(payload: dict, fmt_name: str) -> str:
    if fmt_name == "json":
        return json.dumps(payload, indent=2, ensure_ascii=True) + "\n"
    if fmt_name == "text":
        return render_text(payload)
    return render_markdown(payload)


# -- parser ------------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default=None)
    common.add_argument("--config", default=None,
                        help=f"JSON config file (default: ${CONFIG_ENV} if set)")
    common.add_argument("--rank-ceiling", type=int, default=None)

    parser = _Parser(prog="unitary-satake",
                     description="Half-integral spherical unitary Satake parameters.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def typed(name, func, help_):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.add_argument("type")
        p.add_argument("rank", type=int, nargs="?")
        p.set_defaults(func=func)
        return p

    p = typed("classify", cmd_classify, "classify half-integral candidates")
    p.add_argument("--oracle", action="store_true", help="cross-check with the brute-force route")
    typed("regions", cmd_regions, "number of regions cut out of the dominant chamber")
    p = typed("coroots", cmd_coroots, "positive coroots, optionally at one level")
    p.add_argument("--level", type=int)
    p = typed("fold", cmd_fold, "fold along a diagram automorphism")
    p.add_argument("--order", type=int, default=2)
    p = typed("check-point", cmd_check_point, "filters and gate verdict for one point")
    p.add_argument("--nu", required=True, help="comma-separated fundamental-weight coordinates")
    p.add_argument("--order", type=int, help="treat TYPE as the base of an unramified quasi-split form")
    p = sub.add_parser("wd-check", parents=[common], help="purity of a Weil-Deligne parameter")
    p.add_argument("--file", required=True)
    p.add_argument("--direction", choices=("raising", "lowering"), default="raising")
    p.set_defaults(func=cmd_wd_check)
    sub.add_parser("table1", parents=[common], help="unramified quasi-split forms").set_defaults(func=cmd_table1)
    sub.add_parser("full-table", parents=[common],
                   help="half-integral unitary sets for all types plus the folding table"
                   ).set_defaults(func=cmd_full_table)
    return parser


def main(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        cfg = load_config(args.config or os.environ.get(CONFIG_ENV))
        if args.format:
            cfg.output_format = args.format
        if args.rank_ceiling is not None:
            cfg.rank_ceiling = args.rank_ceiling
        payload, code = args.func(args, cfg)
    except (UsageError, RootDataError, ClassificationError, FoldingError, ValueError, IndexError) as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_INVALID
    stdout.write(render(payload, cfg.output_format))
    return code


if __name__ == "__main__":
    sys.exit(main())
