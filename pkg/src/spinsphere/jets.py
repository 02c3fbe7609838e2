"""Second-order Wirtinger jets.

A jet carries the value of a function of (z, zbar) together with its
Wirtinger derivatives up to second order.  All arithmetic applies the
product/chain rules exactly at the jet level, so derivatives of closed-form
composites are exact up to floating round-off.  Fields may hold scalars or
numpy arrays; everything broadcasts.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class ComplexJet2:
    """Value and Wirtinger derivatives d_z, d_zbar, d_zz, d_zzbar, d_zbarzbar."""

    value: complex
    d_z: complex = 0.0
    d_zbar: complex = 0.0
    d_zz: complex = 0.0
    d_zzbar: complex = 0.0
    d_zbarzbar: complex = 0.0

    # -- ring operations -------------------------------------------------

    def __add__(self, other):
        other = lift(other)
        return ComplexJet2(
            self.value + other.value,
            self.d_z + other.d_z,
            self.d_zbar + other.d_zbar,
            self.d_zz + other.d_zz,
            self.d_zzbar + other.d_zzbar,
            self.d_zbarzbar + other.d_zbarzbar,
        )

    __radd__ = __add__

    def __neg__(self):
        return ComplexJet2(
            -self.value, -self.d_z, -self.d_zbar, -self.d_zz, -self.d_zzbar, -self.d_zbarzbar
        )

    def __sub__(self, other):
        return self + (-lift(other))

    def __rsub__(self, other):
        return lift(other) + (-self)

    def __mul__(self, other):
        f, g = self, lift(other)
        return ComplexJet2(
            f.value * g.value,
            f.d_z * g.value + f.value * g.d_z,
            f.d_zbar * g.value + f.value * g.d_zbar,
            f.d_zz * g.value + 2.0 * f.d_z * g.d_z + f.value * g.d_zz,
            f.d_zzbar * g.value + f.d_z * g.d_zbar + f.d_zbar * g.d_z + f.value * g.d_zzbar,
            f.d_zbarzbar * g.value + 2.0 * f.d_zbar * g.d_zbar + f.value * g.d_zbarzbar,
        )

    __rmul__ = __mul__

    def reciprocal(self):
        v = self.value
        iv = 1.0 / v
        iv2 = iv * iv
        iv3 = iv2 * iv
        return ComplexJet2(
            iv,
            -self.d_z * iv2,
            -self.d_zbar * iv2,
            -self.d_zz * iv2 + 2.0 * self.d_z * self.d_z * iv3,
            -self.d_zzbar * iv2 + 2.0 * self.d_z * self.d_zbar * iv3,
            -self.d_zbarzbar * iv2 + 2.0 * self.d_zbar * self.d_zbar * iv3,
        )

    def __truediv__(self, other):
        return self * lift(other).reciprocal()

    def __rtruediv__(self, other):
        return lift(other) * self.reciprocal()

    # -- chain rule with a scalar outer function -------------------------

    def _chain(self, g0, g1, g2):
        """Compose with outer g given g(v), g'(v), g''(v)."""
        return ComplexJet2(
            g0,
            g1 * self.d_z,
            g1 * self.d_zbar,
            g2 * self.d_z * self.d_z + g1 * self.d_zz,
            g2 * self.d_z * self.d_zbar + g1 * self.d_zzbar,
            g2 * self.d_zbar * self.d_zbar + g1 * self.d_zbarzbar,
        )

    def log(self):
        v = self.value
        return self._chain(np.log(v), 1.0 / v, -1.0 / (v * v))

    def power(self, a: float):
        """Principal-branch power with real exponent; meant for positive values."""
        v = self.value
        return self._chain(v**a, a * v ** (a - 1.0), a * (a - 1.0) * v ** (a - 2.0))

    def sqrt(self):
        return self.power(0.5)

    def conj(self):
        c = np.conjugate
        return ComplexJet2(
            c(self.value),
            c(self.d_zbar),
            c(self.d_z),
            c(self.d_zbarzbar),
            c(self.d_zzbar),
            c(self.d_zz),
        )

    def real(self):
        return (self + self.conj()) * 0.5

    def abs2(self):
        return self * self.conj()


def lift(x) -> ComplexJet2:
    """Treat a constant (scalar or array) as a jet."""
    if isinstance(x, ComplexJet2):
        return x
    return ComplexJet2(x)


def variable(z) -> ComplexJet2:
    """The coordinate function z itself."""
    z = np.asarray(z, dtype=complex) if np.ndim(z) else complex(z)
    one = np.ones_like(z) if np.ndim(z) else 1.0
    return ComplexJet2(z, d_z=one)


def covariable(z) -> ComplexJet2:
    """The conjugate coordinate zbar as a function of the point z."""
    z = np.asarray(z, dtype=complex) if np.ndim(z) else complex(z)
    one = np.ones_like(z) if np.ndim(z) else 1.0
    return ComplexJet2(np.conjugate(z), d_zbar=one)


def compose(outer: ComplexJet2, inner: ComplexJet2) -> ComplexJet2:
    """Jet of F(w, wbar) through w = w(z, zbar).

    `outer` is the jet of F at the point w = inner.value, with d_z / d_zbar
    playing the role of d_w / d_wbar.  `inner` is the full Wirtinger jet of w.
    """
    c = np.conjugate
    w_z, w_zb = inner.d_z, inner.d_zbar
    wb_z, wb_zb = c(inner.d_zbar), c(inner.d_z)
    w_zz, w_zzb, w_zbzb = inner.d_zz, inner.d_zzbar, inner.d_zbarzbar
    wb_zz, wb_zzb, wb_zbzb = c(w_zbzb), c(w_zzb), c(w_zz)
    Fw, Fwb = outer.d_z, outer.d_zbar
    Fww, Fwwb, Fwbwb = outer.d_zz, outer.d_zzbar, outer.d_zbarzbar
    return ComplexJet2(
        outer.value,
        Fw * w_z + Fwb * wb_z,
        Fw * w_zb + Fwb * wb_zb,
        Fww * w_z * w_z + Fwwb * 2.0 * w_z * wb_z
        + Fwbwb * wb_z * wb_z + Fw * w_zz + Fwb * wb_zz,
        Fww * w_z * w_zb + Fwwb * (w_z * wb_zb + w_zb * wb_z)
        + Fwbwb * wb_z * wb_zb + Fw * w_zzb + Fwb * wb_zzb,
        Fww * w_zb * w_zb + Fwwb * 2.0 * w_zb * wb_zb
        + Fwbwb * wb_zb * wb_zb + Fw * w_zbzb + Fwb * wb_zbzb,
    )


def inverse_chart_inner(zt) -> ComplexJet2:
    """Jet (with respect to zt) of the holomorphic chart change z = 1/zt."""
    zt = np.asarray(zt, dtype=complex) if np.ndim(zt) else complex(zt)
    return ComplexJet2(1.0 / zt, d_z=-1.0 / (zt * zt), d_zz=2.0 / (zt**3))


def fd_wirtinger(fn, z: complex, h: float = 1e-5):
    """Central finite-difference estimate of (d_z, d_zbar) of a callable.

    Oracle utility for tests; fn maps complex -> complex.
    """
    fx = (fn(z + h) - fn(z - h)) / (2.0 * h)
    fy = (fn(z + 1j * h) - fn(z - 1j * h)) / (2.0 * h)
    return 0.5 * (fx - 1j * fy), 0.5 * (fx + 1j * fy)
