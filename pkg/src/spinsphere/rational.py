"""Rational functions with exact jets, plus bivariate polynomial data for metrics.

Coefficients are stored in ascending degree.  Rational functions are kept
reduced (no shared numerator/denominator root within the matching tolerance)
with a monic denominator, so degree queries and pole/zero orders are stable.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
import numpy.polynomial.polynomial as npoly

from .errors import IdenticallyZero, PoleAt
from .jets import ComplexJet2

ROOT_MATCH_TOL = 1e-9
INF = complex(np.inf)  # marker for the point at infinity


def _trim(coeffs) -> np.ndarray:
    c = np.atleast_1d(np.asarray(coeffs, dtype=complex))
    scale = np.max(np.abs(c)) if c.size else 0.0
    if scale == 0.0:
        return np.zeros(1, dtype=complex)
    keep = np.nonzero(np.abs(c) > 1e-14 * scale)[0]
    if keep.size == 0:
        return np.zeros(1, dtype=complex)
    return c[: keep[-1] + 1]


def _poly_roots(coeffs: np.ndarray) -> np.ndarray:
    c = _trim(coeffs)
    if c.size <= 1:
        return np.empty(0, dtype=complex)
    return np.roots(c[::-1])  # companion matrix wants descending order


@dataclass(frozen=True)
class RationalFunction:
    """Ratio of complex polynomials, reduced, denominator monic."""

    num: np.ndarray
    den: np.ndarray

    def __init__(self, num, den=(1.0,)):
        num = _trim(num)
        den = _trim(den)
        if den.size == 1 and den[0] == 0:
            raise ZeroDivisionError("denominator is the zero polynomial")
        num, den = _reduce(num, den)
        den_lead = den[-1]
        object.__setattr__(self, "num", num / den_lead)
        object.__setattr__(self, "den", den / den_lead)

    # -- basic queries ----------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return self.num.size == 1 and self.num[0] == 0

    @property
    def num_degree(self) -> int:
        return self.num.size - 1

    @property
    def den_degree(self) -> int:
        return self.den.size - 1

    @property
    def degree(self) -> int:
        """Algebraic degree of the induced map of the sphere."""
        return max(self.num_degree, self.den_degree)

    @property
    def degree_at_infinity(self) -> int:
        """Zero order at infinity (negative means a pole there)."""
        return self.den_degree - self.num_degree

    def __call__(self, z):
        return npoly.polyval(z, self.num) / npoly.polyval(z, self.den)

    def jet(self, z) -> ComplexJet2:
        """Exact holomorphic jet: value, f', f''; zbar derivatives vanish."""
        p = npoly.polyval(z, self.num)
        q = npoly.polyval(z, self.den)
        p1 = npoly.polyval(z, npoly.polyder(self.num)) if self.num.size > 1 else 0.0 * p
        q1 = npoly.polyval(z, npoly.polyder(self.den)) if self.den.size > 1 else 0.0 * q
        p2 = npoly.polyval(z, npoly.polyder(self.num, 2)) if self.num.size > 2 else 0.0 * p
        q2 = npoly.polyval(z, npoly.polyder(self.den, 2)) if self.den.size > 2 else 0.0 * q
        iq = 1.0 / q
        f = p * iq
        f1 = (p1 - f * q1) * iq
        f2 = (p2 - 2.0 * f1 * q1 - f * q2) * iq
        return ComplexJet2(f, d_z=f1, d_zz=f2)

    def jet_checked(self, z) -> ComplexJet2:
        q = npoly.polyval(z, self.den)
        majorant = npoly.polyval(np.abs(z), np.abs(self.den)) + 1e-300
        near_pole = np.abs(q) <= 1e-12 * majorant
        if np.any(near_pole):
            bad = z if np.ndim(z) == 0 else np.asarray(z)[near_pole].flat[0]
            raise PoleAt(bad)
        return self.jet(z)

    # -- algebra -----------------------------------------------------------

    def __add__(self, other):
        other = as_rational(other)
        num = npoly.polyadd(npoly.polymul(self.num, other.den), npoly.polymul(other.num, self.den))
        return RationalFunction(num, npoly.polymul(self.den, other.den))

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other):
        return self + (-as_rational(other))

    def __mul__(self, other):
        other = as_rational(other)
        return RationalFunction(npoly.polymul(self.num, other.num), npoly.polymul(self.den, other.den))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = as_rational(other)
        if other.is_zero:
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFunction(npoly.polymul(self.num, other.den), npoly.polymul(self.den, other.num))

    def derivative(self) -> "RationalFunction":
        p1 = npoly.polyder(self.num) if self.num.size > 1 else np.zeros(1, dtype=complex)
        q1 = npoly.polyder(self.den) if self.den.size > 1 else np.zeros(1, dtype=complex)
        num = npoly.polysub(npoly.polymul(p1, self.den), npoly.polymul(self.num, q1))
        return RationalFunction(num, npoly.polymul(self.den, self.den))

    def compose_inverse(self) -> "RationalFunction":
        """The pullback f(1/z) as a rational function of the new coordinate."""
        m, n = self.num_degree, self.den_degree
        d = max(m, n)
        # f(1/z) = z^(d-m) rev(num) / ( z^(d-n) rev(den) )
        num_full = npoly.polymul(self.num[::-1], _monomial(d - m))
        den_full = npoly.polymul(self.den[::-1], _monomial(d - n))
        return RationalFunction(num_full, den_full)

    # -- orders ------------------------------------------------------------

    def zero_pole_order(self, p) -> int:
        """Zero order (positive) / pole order (negative) at p; p may be INF."""
        if self.is_zero:
            raise IdenticallyZero("order queries need a nonzero function")
        if _is_inf(p):
            return self.degree_at_infinity
        return _vanishing_order(self.num, p) - _vanishing_order(self.den, p)

    def poles(self):
        """Finite poles as (location, order); infinity handled by the caller."""
        roots = _poly_roots(self.den)
        return _cluster_roots(roots)

    def zeros(self):
        if self.is_zero:
            raise IdenticallyZero("the zero function has no isolated zeros")
        return _cluster_roots(_poly_roots(self.num))

    # -- serialization -----------------------------------------------------

    def to_json(self) -> dict:
        return {
            "num": [[float(c.real), float(c.imag)] for c in self.num],
            "den": [[float(c.real), float(c.imag)] for c in self.den],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "RationalFunction":
        num = [complex(re, im) for re, im in obj["num"]]
        den = [complex(re, im) for re, im in obj.get("den", [[1.0, 0.0]])]
        return cls(num, den)


def as_rational(x) -> RationalFunction:
    if isinstance(x, RationalFunction):
        return x
    return RationalFunction([complex(x)])


def rational_zero() -> RationalFunction:
    return RationalFunction([0.0])


def rational_const(c) -> RationalFunction:
    return RationalFunction([complex(c)])


def rational_x(*coeffs) -> RationalFunction:
    """Polynomial with the given ascending coefficients."""
    return RationalFunction(list(coeffs))


def _monomial(k: int) -> np.ndarray:
    c = np.zeros(k + 1, dtype=complex)
    c[k] = 1.0
    return c


def _is_inf(p) -> bool:
    return p is INF or (isinstance(p, complex) and np.isinf(p)) or (np.ndim(p) == 0 and np.isinf(np.abs(p)))


def _vanishing_order(coeffs: np.ndarray, p) -> int:
    """Multiplicity of p as a root, by counting vanishing derivatives.

    Derivative values are compared against the absolute-coefficient majorant,
    which stays robust where companion-matrix roots of a multiple root split.
    """
    c = _trim(coeffs)
    if c.size == 1:
        return 0
    ap = abs(p)
    for k in range(c.size):
        dk = npoly.polyder(c, k) if k else c
        v = npoly.polyval(p, dk)
        majorant = npoly.polyval(ap, np.abs(dk)) + 1.0
        if abs(v) > ROOT_MATCH_TOL * majorant:
            return k
    return c.size - 1


def _cluster_roots(roots: np.ndarray, tol: float = 1e-6):
    """Group nearly-identical roots into (location, multiplicity) pairs."""
    out = []
    for r in roots:
        for i, (loc, mult) in enumerate(out):
            if abs(r - loc) <= tol * (1.0 + abs(loc)):
                out[i] = ((loc * mult + r) / (mult + 1), mult + 1)
                break
        else:
            out.append((r, 1))
    return [(complex(loc), int(m)) for loc, m in out]


def _reduce(num: np.ndarray, den: np.ndarray):
    """Cancel shared roots within ROOT_MATCH_TOL; keep inputs exact otherwise."""
    if num.size == 1 or den.size == 1:
        return num, den
    nroots = list(_poly_roots(num))
    droots = list(_poly_roots(den))
    shared = []
    for nr in nroots:
        for j, dr in enumerate(droots):
            if dr is not None and abs(nr - dr) <= max(ROOT_MATCH_TOL, 1e-9 * (1.0 + abs(nr))):
                shared.append(0.5 * (nr + dr))
                droots[j] = None
                break
    if not shared:
        return num, den
    kept_d = [r for r in droots if r is not None]
    new_num = num
    for s in shared:
        new_num = npoly.polydiv(new_num, np.array([-s, 1.0]))[0]
    new_den = den[-1] * npoly.polyfromroots(kept_d) if kept_d else np.array([den[-1]])
    return _trim(new_num), _trim(new_den)


# ---------------------------------------------------------------------------
# Bivariate polynomials in (z, zbar): carriers for conformal factors.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class MixedPoly:
    """Polynomial sum c[j,k] z^j zbar^k with a complex coefficient matrix."""

    coeffs: np.ndarray = field(default_factory=lambda: np.zeros((1, 1), dtype=complex))

    def __init__(self, coeffs):
        c = np.atleast_2d(np.asarray(coeffs, dtype=complex))
        object.__setattr__(self, "coeffs", c)

    def is_hermitian(self, tol: float = 1e-12) -> bool:
        """True when the polynomial is real-valued (c[k,j] = conj(c[j,k]))."""
        n = max(self.coeffs.shape)
        c = np.zeros((n, n), dtype=complex)
        c[: self.coeffs.shape[0], : self.coeffs.shape[1]] = self.coeffs
        scale = np.max(np.abs(c)) or 1.0
        return bool(np.max(np.abs(c - c.conj().T)) <= tol * scale)

    def _dval(self, z, zb, dj: int, dk: int):
        c = self.coeffs
        for _ in range(dj):
            c = c[1:, :] * np.arange(1, c.shape[0])[:, None] if c.shape[0] > 1 else np.zeros((1, c.shape[1]), dtype=complex)
        for _ in range(dk):
            c = c[:, 1:] * np.arange(1, c.shape[1])[None, :] if c.shape[1] > 1 else np.zeros((c.shape[0], 1), dtype=complex)
        # Horner over zbar inside, z outside
        acc = 0.0
        for row in c[::-1]:
            inner = 0.0
            for coeff in row[::-1]:
                inner = inner * zb + coeff
            acc = acc * z + inner
        return acc

    def jet(self, z) -> ComplexJet2:
        zb = np.conjugate(z)
        return ComplexJet2(
            self._dval(z, zb, 0, 0),
            self._dval(z, zb, 1, 0),
            self._dval(z, zb, 0, 1),
            self._dval(z, zb, 2, 0),
            self._dval(z, zb, 1, 1),
            self._dval(z, zb, 0, 2),
        )

    def reversed(self) -> "MixedPoly":
        return MixedPoly(self.coeffs[::-1, ::-1])

    def shifted(self, dj: int, dk: int) -> "MixedPoly":
        """Multiply by z^dj zbar^dk (non-negative shifts)."""
        m, n = self.coeffs.shape
        c = np.zeros((m + dj, n + dk), dtype=complex)
        c[dj:, dk:] = self.coeffs
        return MixedPoly(c)

    def to_json(self):
        return [[[float(v.real), float(v.imag)] for v in row] for row in self.coeffs]

    @classmethod
    def from_json(cls, rows) -> "MixedPoly":
        return cls([[complex(re, im) for re, im in row] for row in rows])


@dataclass(frozen=True)
class MixedRational:
    """Ratio of two MixedPoly's; the shape of every conformal factor here."""

    num: MixedPoly
    den: MixedPoly

    def jet(self, z) -> ComplexJet2:
        return self.num.jet(z) / self.den.jet(z)

    def value(self, z):
        zb = np.conjugate(z)
        return self.num._dval(z, zb, 0, 0) / self.den._dval(z, zb, 0, 0)

    def transition_inverse_chart(self) -> "MixedRational":
        """Conformal-factor pullback under zt = 1/z: new = old(1/zt) |zt|^-4."""
        mp, np_ = self.num.coeffs.shape[0] - 1, self.num.coeffs.shape[1] - 1
        mq, nq = self.den.coeffs.shape[0] - 1, self.den.coeffs.shape[1] - 1
        num, den = self.num.reversed(), self.den.reversed()
        a, b = mq - mp - 2, nq - np_ - 2
        if a >= 0:
            num = num.shifted(a, 0)
        else:
            den = den.shifted(-a, 0)
        if b >= 0:
            num = num.shifted(0, b)
        else:
            den = den.shifted(0, -b)
        return MixedRational(num, den)

    def to_json(self):
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @classmethod
    def from_json(cls, obj) -> "MixedRational":
        return cls(MixedPoly.from_json(obj["num"]), MixedPoly.from_json(obj["den"]))
