"""Exact pseudo-complex scalar arithmetic.

The coefficient domain of the whole symbolic layer: Laurent polynomials in
the formal length parameter ``l`` over Gaussian rationals, extended by the
pseudo-imaginary unit ``I`` with ``I*I == 1``.  The zero-divisor basis
``sigma_plus = (1+I)/2``, ``sigma_minus = (1-I)/2`` splits every scalar into
two independent components in which multiplication is componentwise.

Everything here is exact rational arithmetic; no floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Union

Rational = Union[int, Fraction]


class DegreeWindowError(ArithmeticError):
    """A Laurent term in l fell outside the configured degree window."""


_degree_window = (-4, 4)


def set_degree_window(lo: int, hi: int) -> None:
    """Set the allowed range of l-exponents (inclusive bounds)."""
    global _degree_window
    lo, hi = int(lo), int(hi)
    if lo > hi:
        raise ValueError(f"empty degree window {lo}..{hi}")
    _degree_window = (lo, hi)


def get_degree_window() -> tuple[int, int]:
    return _degree_window


@dataclass(frozen=True)
class GaussianRational:
    """Exact complex rational ``re + i*im`` (ordinary imaginary unit)."""

    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    @staticmethod
    def of(re: Rational = 0, im: Rational = 0) -> "GaussianRational":
        return GaussianRational(Fraction(re), Fraction(im))

    def is_zero(self) -> bool:
        return not self.re and not self.im

    def __add__(self, other: "GaussianRational") -> "GaussianRational":
        return GaussianRational(self.re + other.re, self.im + other.im)

    def __sub__(self, other: "GaussianRational") -> "GaussianRational":
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __neg__(self) -> "GaussianRational":
        return GaussianRational(-self.re, -self.im)

    def __mul__(self, other: "GaussianRational") -> "GaussianRational":
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def reciprocal(self) -> "GaussianRational":
        n = self.re * self.re + self.im * self.im
        if not n:
            raise ZeroDivisionError("zero Gaussian rational has no reciprocal")
        return GaussianRational(self.re / n, -self.im / n)

    def scale(self, q: Rational) -> "GaussianRational":
        q = Fraction(q)
        return GaussianRational(self.re * q, self.im * q)


_GZERO = GaussianRational()
_GONE = GaussianRational.of(1)


class BaseScalar:
    """Laurent polynomial in l with Gaussian-rational coefficients.

    Canonical form stores no zero coefficients; equality is term-map
    equality.  Construction and multiplication reject exponents outside the
    configured degree window.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, GaussianRational] | Iterable[tuple[int, GaussianRational]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        lo, hi = _degree_window
        clean: dict[int, GaussianRational] = {}
        for deg, coeff in items:
            if coeff.is_zero():
                continue
            if deg < lo or deg > hi:
                raise DegreeWindowError(f"l^{deg} outside degree window {lo}..{hi}")
            clean[deg] = clean.get(deg, _GZERO) + coeff
        object.__setattr__(self, "_terms", tuple(sorted((d, c) for d, c in clean.items() if not c.is_zero())))

    @classmethod
    def zero(cls) -> "BaseScalar":
        return cls()

    @classmethod
    def rational(cls, q: Rational) -> "BaseScalar":
        return cls([(0, GaussianRational.of(q))])

    @classmethod
    def gaussian(cls, re: Rational = 0, im: Rational = 0) -> "BaseScalar":
        return cls([(0, GaussianRational.of(re, im))])

    @classmethod
    def term(cls, degree: int, re: Rational = 0, im: Rational = 0) -> "BaseScalar":
        return cls([(degree, GaussianRational.of(re, im))])

    @classmethod
    def l_power(cls, degree: int, coeff: Rational = 1) -> "BaseScalar":
        return cls([(degree, GaussianRational.of(coeff))])

    def terms(self) -> tuple[tuple[int, GaussianRational], ...]:
        return self._terms

    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, degree: int) -> GaussianRational:
        for d, c in self._terms:
            if d == degree:
                return c
        return _GZERO

    def degrees(self) -> tuple[int, ...]:
        return tuple(d for d, _ in self._terms)

    def __add__(self, other: "BaseScalar") -> "BaseScalar":
        out = dict(self._terms)
        for d, c in other._terms:
            out[d] = out.get(d, _GZERO) + c
        return BaseScalar(out)

    def __sub__(self, other: "BaseScalar") -> "BaseScalar":
        return self + (-other)

    def __neg__(self) -> "BaseScalar":
        return BaseScalar([(d, -c) for d, c in self._terms])

    def __mul__(self, other: "BaseScalar") -> "BaseScalar":
        out: dict[int, GaussianRational] = {}
        for d1, c1 in self._terms:
            for d2, c2 in other._terms:
                d = d1 + d2
                out[d] = out.get(d, _GZERO) + c1 * c2
        return BaseScalar(out)

    def scale(self, q: GaussianRational | Rational) -> "BaseScalar":
        if not isinstance(q, GaussianRational):
            q = GaussianRational.of(q)
        return BaseScalar([(d, c * q) for d, c in self._terms])

    def shift(self, degree: int) -> "BaseScalar":
        """Multiply by l**degree."""
        return BaseScalar([(d + degree, c) for d, c in self._terms])

    def is_unit(self) -> bool:
        return len(self._terms) == 1

    def reciprocal(self) -> "BaseScalar":
        if not self.is_unit():
            raise ZeroDivisionError("only single-term Laurent scalars are invertible")
        d, c = self._terms[0]
        return BaseScalar([(-d, c.reciprocal())])

    def __eq__(self, other: object) -> bool:
        return isinstance(other, BaseScalar) and self._terms == other._terms

    def __hash__(self) -> int:
        return hash(self._terms)

    def __repr__(self) -> str:
        return f"BaseScalar({self._terms!r})"


@dataclass(frozen=True)
class ZeroDivisorPair:
    """Components of a pseudo-complex scalar along sigma_plus and sigma_minus."""

    plus: BaseScalar
    minus: BaseScalar

    def __mul__(self, other: "ZeroDivisorPair") -> "ZeroDivisorPair":
        return ZeroDivisorPair(self.plus * other.plus, self.minus * other.minus)

    def is_zero_divisor(self) -> bool:
        return self.plus.is_zero() != self.minus.is_zero()


@dataclass(frozen=True)
class PcScalar:
    """Pseudo-complex scalar ``re + I*im`` with BaseScalar parts and I*I = 1."""

    re: BaseScalar
    im: BaseScalar

    def is_zero(self) -> bool:
        return self.re.is_zero() and self.im.is_zero()

    def __add__(self, other: "PcScalar") -> "PcScalar":
        return PcScalar(self.re + other.re, self.im + other.im)

    def __sub__(self, other: "PcScalar") -> "PcScalar":
        return PcScalar(self.re - other.re, self.im - other.im)

    def __neg__(self) -> "PcScalar":
        return PcScalar(-self.re, -self.im)

    def __mul__(self, other: "PcScalar") -> "PcScalar":
        # (a + I b)(c + I d) = (ac + bd) + I(ad + bc)
        return PcScalar(
            self.re * other.re + self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    def scale(self, q: GaussianRational | Rational) -> "PcScalar":
        return PcScalar(self.re.scale(q), self.im.scale(q))

    def shift(self, degree: int) -> "PcScalar":
        return PcScalar(self.re.shift(degree), self.im.shift(degree))

    def conjugate(self) -> "PcScalar":
        """Pseudo-conjugation I -> -I; swaps the zero-divisor components."""
        return PcScalar(self.re, -self.im)

    def to_zero_divisor(self) -> ZeroDivisorPair:
        return ZeroDivisorPair(self.re + self.im, self.re - self.im)

    @staticmethod
    def from_zero_divisor(pair: ZeroDivisorPair) -> "PcScalar":
        half = Fraction(1, 2)
        return PcScalar(
            (pair.plus + pair.minus).scale(half),
            (pair.plus - pair.minus).scale(half),
        )

    def is_unit(self) -> bool:
        pair = self.to_zero_divisor()
        return pair.plus.is_unit() and pair.minus.is_unit()

    def reciprocal(self) -> "PcScalar":
        pair = self.to_zero_divisor()
        return PcScalar.from_zero_divisor(
            ZeroDivisorPair(pair.plus.reciprocal(), pair.minus.reciprocal())
        )

    def __str__(self) -> str:
        return render_pc(self)

    def __repr__(self) -> str:
        return f"PcScalar({render_pc(self)!r})"


def pc_rational(q: Rational) -> PcScalar:
    return PcScalar(BaseScalar.rational(q), BaseScalar.zero())


def pc_gaussian(re: Rational = 0, im: Rational = 0) -> PcScalar:
    """re + i*im with the ordinary imaginary unit."""
    return PcScalar(BaseScalar.gaussian(re, im), BaseScalar.zero())


def pc_imag(q: Rational = 1) -> PcScalar:
    """q*i."""
    return PcScalar(BaseScalar.gaussian(0, q), BaseScalar.zero())


def pc_l(degree: int = 1, coeff: Rational = 1) -> PcScalar:
    """coeff * l**degree."""
    return PcScalar(BaseScalar.l_power(degree, coeff), BaseScalar.zero())


def pc_pseudo(q: Rational = 1) -> PcScalar:
    """q*I."""
    return PcScalar(BaseScalar.zero(), BaseScalar.rational(q))


PC_ZERO = pc_rational(0)
PC_ONE = pc_rational(1)
PC_I = pc_imag()
PSEUDO_UNIT = pc_pseudo()
SIGMA_PLUS = PcScalar(BaseScalar.rational(Fraction(1, 2)), BaseScalar.rational(Fraction(1, 2)))
SIGMA_MINUS = PcScalar(BaseScalar.rational(Fraction(1, 2)), BaseScalar.rational(Fraction(-1, 2)))


def _atoms(x: PcScalar) -> list[tuple[Fraction, bool, int, bool]]:
    """Flatten to (rational, has_i, l_degree, has_I) atoms in canonical order."""
    out: list[tuple[Fraction, bool, int, bool]] = []
    for part, has_pseudo in ((x.re, False), (x.im, True)):
        for deg, coeff in part.terms():
            if coeff.re:
                out.append((coeff.re, False, deg, has_pseudo))
            if coeff.im:
                out.append((coeff.im, True, deg, has_pseudo))
    return out


def _atom_str(q: Fraction, has_i: bool, deg: int, has_pseudo: bool) -> str:
    pieces: list[str] = []
    if abs(q) != 1 or (not has_i and deg == 0 and not has_pseudo):
        pieces.append(str(abs(q)))
    if has_i:
        pieces.append("i")
    if deg:
        pieces.append("l" if deg == 1 else f"l^{deg}")
    if has_pseudo:
        pieces.append("I")
    return "*".join(pieces)


def render_pc(x: PcScalar) -> str:
    """Plain-text rendering, e.g. ``3/2 + 1/2*i - l^2*I``; parseable by the CLI."""
    atoms = _atoms(x)
    if not atoms:
        return "0"
    out = []
    for n, (q, has_i, deg, has_pseudo) in enumerate(atoms):
        body = _atom_str(q, has_i, deg, has_pseudo)
        if n == 0:
            out.append(f"-{body}" if q < 0 else body)
        else:
            out.append(f"- {body}" if q < 0 else f"+ {body}")
    return " ".join(out)
