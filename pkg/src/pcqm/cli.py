"""Command-line front end.

Subcommands: verify (symbolic identity battery), irrep (Casimir sweep),
spectrum (level table), bound (length exclusion bound), convert (units),
eval (parse and normal-order an operator expression).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import re
import sys
from dataclasses import dataclass, field
from fractions import Fraction

from . import hydrogen, irrep, operators, so4, units
from .expr import evaluate_text
from .scalars import set_degree_window
from .units import ConstantSet

CONSTANTS_ENV = "PCQM_CONSTANTS"
FORMATS = ("text", "json", "csv")


@dataclass
class RunConfig:
    command: str
    fmt: str = "text"
    constants_mode: str = units.PAPER_APPROX
    degree_window: tuple[int, int] | None = None
    word_cap: int | None = None
    params: dict = field(default_factory=dict)


_VALUE_UNIT_RE = re.compile(
    r"^\s*([-+]?(?:\d+\.?\d*|\.\d+)(?:[eE][-+]?\d+)?)\s*([A-Za-z][A-Za-z0-9^\-]*)?\s*$"
)


def parse_value_with_unit(text: str, default_unit: str) -> tuple[float, str]:
    m = _VALUE_UNIT_RE.match(text)
    if m is None:
        raise ValueError(f"cannot parse value {text!r} (expected e.g. '4e-9eV')")
    return float(m.group(1)), m.group(2) or default_unit


def _energy_in_ev(text: str, constants: ConstantSet) -> float:
    value, unit = parse_value_with_unit(text, "eV")
    if unit == "eV":
        return value
    return float(units.convert(units.quantity(value, unit), "eV", constants).magnitude)


def _parse_window(text: str) -> tuple[int, int]:
    try:
        lo, hi = text.split(":")
        return int(lo), int(hi)
    except ValueError:
        raise ValueError(f"degree window must look like '-4:4', got {text!r}") from None


def _add_common(parser: argparse.ArgumentParser, suppress: bool) -> None:
    # Suppressed defaults on subparsers keep values given before the
    # subcommand from being clobbered.
    def default(value):
        return argparse.SUPPRESS if suppress else value

    parser.add_argument("--format", "-f", choices=FORMATS, default=default("text"))
    parser.add_argument(
        "--constants",
        choices=(units.PAPER_APPROX, units.PRECISE),
        default=default(os.environ.get(CONSTANTS_ENV, units.PAPER_APPROX)),
        help="constant set (env %s)" % CONSTANTS_ENV,
    )
    parser.add_argument(
        "--degree-window", type=_parse_window, default=default(None), metavar="LO:HI"
    )
    parser.add_argument("--word-cap", type=int, default=default(None))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pcqm",
        description="Pseudo-complex quantum mechanics toolkit",
    )
    _add_common(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)

    def subparser(name: str, help: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help)
        _add_common(p, suppress=True)
        return p

    subparser("verify", "run the full symbolic identity battery")

    p = subparser("irrep", "Casimir and denominator sweep over (k,k) irreps")
    p.add_argument("--k-max", type=Fraction, default=Fraction(5))

    p = subparser("spectrum", "hydrogen level table with the l^2 correction")
    p.add_argument("--l", type=float, default=0.0, help="minimal length in GeV^-1")
    p.add_argument("--kappa", type=float, default=1.0, help="correction strength in GeV^2")
    p.add_argument("--n-max", type=int, default=5)
    p.add_argument("--literal-e2", action="store_true", help="literal charge-squared numerator")

    p = subparser("bound", "upper bound on the minimal length")
    p.add_argument("--delta-e", default="4e-9eV", help="observed splitting (eV or Hz)")
    p.add_argument("--e-ref", default="13eV", help="reference level energy (eV or Hz)")
    p.add_argument("--kappa", type=float, default=1.0)

    p = subparser("convert", "natural-units conversion")
    p.add_argument("--value", type=float, required=True)
    p.add_argument("--from", dest="from_unit", required=True, choices=units.UNITS)
    p.add_argument("--to", dest="to_unit", required=True, choices=units.UNITS)

    p = subparser("eval", "evaluate an operator expression to normal form")
    p.add_argument("expression")
    return parser


def config_from_args(argv: list[str] | None = None) -> RunConfig:
    args = build_parser().parse_args(argv)
    params = {
        k: v
        for k, v in vars(args).items()
        if k not in ("format", "constants", "degree_window", "word_cap", "command")
    }
    return RunConfig(
        command=args.command,
        fmt=args.format,
        constants_mode=args.constants,
        degree_window=args.degree_window,
        word_cap=args.word_cap,
        params=params,
    )


def _emit_csv(header: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue().rstrip("\n")


def _run_verify(cfg: RunConfig) -> tuple[int, str]:
    reports = [
        operators.verify_canonical_relations(),
        operators.verify_induced_relations(),
        so4.verify_so4_relations(),
        so4.verify_recomposition(),
        so4.verify_component_closure(),
        so4.verify_casimir_commutes(),
        so4.casimir_expansion().report(),
    ]
    all_passed = all(r.all_passed for r in reports)
    code = 0 if all_passed else 1
    if cfg.fmt == "json":
        payload = {
            "schema": "verify-report/v1",
            "all_passed": all_passed,
            "reports": [r.to_dict() for r in reports],
        }
        return code, json.dumps(payload, indent=2)
    if cfg.fmt == "csv":
        rows = [row for r in reports for row in r.to_csv_rows()]
        return code, _emit_csv(["report", "family", "label", "status", "residual"], rows)
    lines = [r.to_text() for r in reports]
    total = sum(len(r.checks) for r in reports)
    lines.append(f"VERIFY: {'PASS' if all_passed else 'FAIL'} ({total} checks)")
    return code, "\n".join(lines)


def _irrep_rows(k_max: Fraction) -> list[dict]:
    rows = []
    k = Fraction(0)
    while k <= k_max:
        rep = irrep.build_irrep(k, k_max=k_max)
        value = irrep.casimir_eigenvalue(rep)
        expected = float(2 * k * (k + 1))
        denom = irrep.denominator_eigenvalue(k)
        rows.append(
            {
                "k": str(k),
                "dim": rep.dim,
                "casimir": value,
                "expected": expected,
                "deviation": abs(value - expected),
                "denominator": str(denom),
                "denominator_closed_form": str(2 * (2 * k + 1) ** 2),
            }
        )
        k += Fraction(1, 2)
    return rows


def _run_irrep(cfg: RunConfig) -> tuple[int, str]:
    rows = _irrep_rows(cfg.params["k_max"])
    ok = all(
        r["deviation"] < 1e-12 and r["denominator"] == r["denominator_closed_form"]
        for r in rows
    )
    code = 0 if ok else 1
    if cfg.fmt == "json":
        return code, json.dumps(
            {"schema": "irrep-sweep/v1", "all_passed": ok, "rows": rows}, indent=2
        )
    if cfg.fmt == "csv":
        header = list(rows[0])
        return code, _emit_csv(header, [[r[h] for h in header] for r in rows])
    lines = [
        f"{'k':>4} {'dim':>5} {'casimir':>10} {'2k(k+1)':>9} {'deviation':>10} {'4(C+1/2)':>9}"
    ]
    for r in rows:
        lines.append(
            f"{r['k']:>4} {r['dim']:>5} {r['casimir']:>10.6g} {r['expected']:>9.6g} "
            f"{r['deviation']:>10.2e} {r['denominator']:>9}"
        )
    lines.append(f"IRREP SWEEP: {'PASS' if ok else 'FAIL'}")
    return code, "\n".join(lines)


def _run_spectrum(cfg: RunConfig) -> tuple[int, str]:
    constants = hydrogen.PhysicalConstants.from_mode(cfg.constants_mode)
    spectrum_cfg = hydrogen.SpectrumConfig(
        constants=constants,
        l_gevinv=cfg.params["l"],
        kappa_gev2=cfg.params["kappa"],
        n_max=cfg.params["n_max"],
        numerator=hydrogen.NUMERATOR_LITERAL_E2
        if cfg.params["literal_e2"]
        else hydrogen.NUMERATOR_BOHR,
    )
    levels = hydrogen.corrected_spectrum(spectrum_cfg)
    if cfg.fmt == "json":
        return 0, json.dumps(
            {"schema": "spectrum/v1", "levels": hydrogen.spectrum_rows(levels)}, indent=2
        )
    if cfg.fmt == "csv":
        rows = hydrogen.spectrum_rows(levels)
        header = list(rows[0])
        return 0, _emit_csv(header, [[r[h] for h in header] for r in rows])
    return 0, hydrogen.spectrum_text(levels)


def _run_bound(cfg: RunConfig) -> tuple[int, str]:
    constants = ConstantSet.from_mode(cfg.constants_mode)
    bound = hydrogen.length_bound(
        delta_e_ev=_energy_in_ev(cfg.params["delta_e"], constants),
        e_ref_ev=_energy_in_ev(cfg.params["e_ref"], constants),
        kappa_gev2=cfg.params["kappa"],
        constants=constants,
    )
    if cfg.fmt == "json":
        return 0, json.dumps(hydrogen.bound_dict(bound), indent=2)
    if cfg.fmt == "csv":
        payload = hydrogen.bound_dict(bound)
        payload.pop("schema")
        return 0, _emit_csv(list(payload), [[payload[k] for k in payload]])
    return 0, hydrogen.bound_text(bound)


def _run_convert(cfg: RunConfig) -> tuple[int, str]:
    constants = ConstantSet.from_mode(cfg.constants_mode)
    q = units.quantity(cfg.params["value"], cfg.params["from_unit"])
    out = units.convert(q, cfg.params["to_unit"], constants)
    if cfg.fmt == "json":
        return 0, json.dumps(
            {
                "schema": "convert/v1",
                "value": cfg.params["value"],
                "from": q.unit,
                "to": out.unit,
                "result": float(out.magnitude),
                "constants": constants.mode,
            },
            indent=2,
        )
    if cfg.fmt == "csv":
        return 0, _emit_csv(
            ["value", "from", "to", "result"],
            [[cfg.params["value"], q.unit, out.unit, float(out.magnitude)]],
        )
    return 0, f"{cfg.params['value']:g} {q.unit} = {float(out.magnitude):.6g} {out.unit}"


def _run_eval(cfg: RunConfig) -> tuple[int, str]:
    result = evaluate_text(cfg.params["expression"])
    rendered = result.render()
    if cfg.fmt == "json":
        return 0, json.dumps(
            {"schema": "eval/v1", "expression": cfg.params["expression"], "normal_form": rendered},
            indent=2,
        )
    if cfg.fmt == "csv":
        return 0, _emit_csv(["expression", "normal_form"], [[cfg.params["expression"], rendered]])
    return 0, rendered


_RUNNERS = {
    "verify": _run_verify,
    "irrep": _run_irrep,
    "spectrum": _run_spectrum,
    "bound": _run_bound,
    "convert": _run_convert,
    "eval": _run_eval,
}


def run(cfg: RunConfig) -> tuple[int, str]:
    """Execute one subcommand; returns (exit status, rendered output)."""
    saved_window = saved_cap = None
    if cfg.degree_window is not None:
        from .scalars import get_degree_window

        saved_window = get_degree_window()
        set_degree_window(*cfg.degree_window)
    if cfg.word_cap is not None:
        saved_cap = operators.get_word_length_cap()
        operators.set_word_length_cap(cfg.word_cap)
    try:
        return _RUNNERS[cfg.command](cfg)
    except (ValueError, ArithmeticError) as err:
        if cfg.fmt == "json":
            return 2, json.dumps({"schema": "error/v1", "error": str(err)})
        return 2, f"error: {err}"
    finally:
        if saved_window is not None:
            set_degree_window(*saved_window)
        if saved_cap is not None:
            operators.set_word_length_cap(saved_cap)


def main(argv: list[str] | None = None) -> int:
    cfg = config_from_args(argv)
    code, output = run(cfg)
    print(output)
    return code


if __name__ == "__main__":
    sys.exit(main())
