"""Natural-units conversion layer (hbar = c = 1).

All dimensions reduce to a single energy exponent: length and time carry
GeV^-1, mass and frequency GeV.  Two constant sets are provided: the
``paper-approx`` set uses the rounded conversion factors

    1 fm  ~ 5 GeV^-1      1 sec = 3e8 m      1 kg ~ 6e26 GeV

while ``precise`` uses CODATA-grade values.  Conversion arithmetic runs on
exact rationals, so every conversion round-trips identically in both modes.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Union

Number = Union[int, float, Fraction, str]

PAPER_APPROX = "paper-approx"
PRECISE = "precise"


class DimensionError(ValueError):
    """Conversion between quantities of different dimension."""


@dataclass(frozen=True)
class ConstantSet:
    mode: str
    fm_to_gevinv: Fraction      # 1 fm  = this many GeV^-1
    sec_to_m: Fraction          # 1 sec = this many m
    kg_to_gev: Fraction         # 1 kg  = this many GeV
    ev_to_hz: Fraction          # 1 eV  = this many Hz

    @classmethod
    def paper_approx(cls) -> "ConstantSet":
        return cls(
            mode=PAPER_APPROX,
            fm_to_gevinv=Fraction(5),
            sec_to_m=Fraction(3) * 10 ** 8,
            kg_to_gev=Fraction(6) * 10 ** 26,
            ev_to_hz=Fraction("2.4e14"),
        )

    @classmethod
    def precise(cls) -> "ConstantSet":
        return cls(
            mode=PRECISE,
            fm_to_gevinv=Fraction("5.0677"),
            sec_to_m=Fraction(299792458),
            kg_to_gev=Fraction("5.6096e26"),
            ev_to_hz=Fraction("2.417989242e14"),
        )

    @classmethod
    def from_mode(cls, mode: str) -> "ConstantSet":
        if mode == PAPER_APPROX:
            return cls.paper_approx()
        if mode == PRECISE:
            return cls.precise()
        raise ValueError(f"unknown constant-set mode {mode!r}")

    @classmethod
    def from_file(cls, path: str | Path) -> "ConstantSet":
        """Load from a small ``key = value`` file; all four factors required."""
        values: dict[str, str] = {}
        for raw in Path(path).read_text().splitlines():
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"malformed constant line {raw!r}")
            key, _, val = line.partition("=")
            values[key.strip()] = val.strip()
        try:
            return cls(
                mode=values.get("mode", "custom"),
                fm_to_gevinv=Fraction(values["fm_to_gevinv"]),
                sec_to_m=Fraction(values["sec_to_m"]),
                kg_to_gev=Fraction(values["kg_to_gev"]),
                ev_to_hz=Fraction(values["ev_to_hz"]),
            )
        except KeyError as missing:
            raise ValueError(f"constant file missing key {missing.args[0]!r}") from None


_UNIT_EXPONENT = {
    "GeV": 1,
    "GeV^2": 2,
    "GeV^-1": -1,
    "GeV^-2": -2,
    "eV": 1,
    "fm": -1,
    "cm": -1,
    "m": -1,
    "sec": -1,
    "Hz": 1,
    "kg": 1,
}

UNITS = tuple(_UNIT_EXPONENT)


def unit_exponent(unit: str) -> int:
    try:
        return _UNIT_EXPONENT[unit]
    except KeyError:
        raise ValueError(f"unknown unit {unit!r}") from None


def unit_factor(unit: str, constants: ConstantSet) -> Fraction:
    """1 <unit> = factor * GeV**exponent."""
    fm = constants.fm_to_gevinv
    if unit in ("GeV", "GeV^2", "GeV^-1", "GeV^-2"):
        return Fraction(1)
    if unit == "eV":
        return Fraction(1, 10 ** 9)
    if unit == "fm":
        return fm
    if unit == "cm":
        return fm * 10 ** 13
    if unit == "m":
        return fm * 10 ** 15
    if unit == "sec":
        return fm * 10 ** 15 * constants.sec_to_m
    if unit == "Hz":
        return Fraction(1, 10 ** 9) / constants.ev_to_hz
    if unit == "kg":
        return constants.kg_to_gev
    raise ValueError(f"unknown unit {unit!r}")


@dataclass(frozen=True)
class Quantity:
    """Magnitude plus energy-exponent dimension and a rendering unit tag."""

    magnitude: Fraction
    exponent: int
    unit: str

    def __float__(self) -> float:
        return float(self.magnitude)

    def __str__(self) -> str:
        return f"{float(self.magnitude):.6g} {self.unit}"


def quantity(value: Number, unit: str) -> Quantity:
    return Quantity(magnitude=Fraction(value), exponent=unit_exponent(unit), unit=unit)


def convert(q: Quantity, target_unit: str, constants: ConstantSet) -> Quantity:
    """Rescale to the target unit; dimension must match."""
    target_exp = unit_exponent(target_unit)
    if target_exp != q.exponent:
        raise DimensionError(
            f"cannot convert {q.unit} (GeV^{q.exponent}) to {target_unit} (GeV^{target_exp})"
        )
    magnitude = q.magnitude * unit_factor(q.unit, constants) / unit_factor(target_unit, constants)
    return Quantity(magnitude=magnitude, exponent=target_exp, unit=target_unit)


# Energy exponents of the theory's symbols in natural units.
_SYMBOL_DIMENSION = {
    "X": -1,
    "x": -1,
    "l": -1,
    "y": 0,
    "P": 1,
    "p": 1,
    "px": 1,
    "py": 2,
    "Lx": 0,
    "Ly": 2,
    "Lxy": 1,
    "Lyx": 1,
    "LR": 0,
    "LI": 1,
    "mu": 1,
    "e2": 0,
}


def dimension_of(symbol: str) -> int:
    """Energy exponent of a tabulated symbol; exponents add under products."""
    try:
        return _SYMBOL_DIMENSION[symbol]
    except KeyError:
        raise ValueError(f"unknown symbol {symbol!r}") from None
