"""Deformation coefficients from determinant generating functions.

For gl_n the bilinear coefficients r_m(x, y) are read off the expansion of

    (x, (1 - tau A)^{-1} y) det(1 - tau A)^{-1}

and for sp_{2n} the coefficients l_m(x, y) come from

    omega(x, (1 - tau^2 A^2)^{-1} y) det(1 - tau A)^{-1},

both as exact polynomial functions on the Lie algebra (polynomials in the
basis coordinates of the generic element A).  det(1 - tau A)^{-1} is
expanded through the exponential of sum_k tau^k Tr(A^k)/k rather than by
adjugates; the resolvent factor is a plain Neumann series.

``assemble_kappa_*`` turns a coefficient polynomial beta into the exact
U(g)-valued commutation table [y, x] = sum_m beta_m r_m(x, y) (and the
symplectic analogue), applying trace duality and symmetrization once, at
assembly time.  ``beta_to_tc`` re-expresses an infinitesimal gl family in
the (t, c) presentation used by the category O machinery: t is normalized
to 1 and c is returned both as an explicit element of U(gl_n) and as the
list of Euler-derivative coefficients a_m of the class distribution
(c = sum_m a_m (lambda d/dlambda)^m at lambda = 1, with a_0 = 0).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

import numpy as np

from .exact import SparsePoly, TruncatedSeries
from .liealg import EnvElement, LieAlgebraSpec, symmetrize_function

__all__ = [
    "UnsupportedFamily",
    "OddBetaForSp",
    "BetaParameter",
    "DeformationCoefficient",
    "det_inverse_expansion",
    "r_coefficients",
    "ell_coefficients",
    "kappa_env_table_gl",
    "kappa_env_table_sp",
    "beta_to_tc",
]


class UnsupportedFamily(ValueError):
    pass


class OddBetaForSp(ValueError):
    pass


@dataclass
class BetaParameter:
    """Finite coefficient list beta_0, beta_1, ... of the deformation."""

    coeffs: list[Fraction]

    def __post_init__(self):
        self.coeffs = [Fraction(c) for c in self.coeffs]
        while self.coeffs and self.coeffs[-1] == 0:
            self.coeffs.pop()

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, m: int) -> Fraction:
        return self.coeffs[m] if 0 <= m < len(self.coeffs) else Fraction(0)

    def check_even(self) -> None:
        if any(c != 0 for c in self.coeffs[1::2]):
            raise OddBetaForSp("symplectic beta must have even support")


@dataclass
class DeformationCoefficient:
    """Bilinear table of one expansion order over the chosen bases.

    gl case: entry (i, j) pairs the i-th dual basis vector of h* with the
    j-th basis vector of h.  sp case: (i, j) runs over the Darboux basis of
    V and the table is skew.
    """

    family: str
    n: int
    index: int
    entries: dict[tuple[int, int], SparsePoly]

    def __call__(self, i: int, j: int) -> SparsePoly:
        return self.entries[(i, j)]


def _matrix_powers(a: np.ndarray, m: int) -> list[np.ndarray]:
    d = a.shape[0]
    vars = a[0, 0].vars
    eye = np.empty((d, d), dtype=object)
    for i in range(d):
        for j in range(d):
            eye[i, j] = SparsePoly.const(vars, 1 if i == j else 0)
    powers = [eye]
    for _ in range(m):
        powers.append(powers[-1] @ a)
    return powers


def _poly_trace(a: np.ndarray) -> SparsePoly:
    t = a[0, 0]
    for i in range(1, a.shape[0]):
        t = t + a[i, i]
    return t


def det_inverse_expansion(spec: LieAlgebraSpec, order: int) -> TruncatedSeries:
    """det(1 - tau A)^{-1} = exp(sum_{k>0} tau^k Tr(A^k)/k) through tau^order."""
    if spec.family not in ("gl", "sp"):
        raise UnsupportedFamily(f"det inverse expansion needs gl or sp, got {spec.family}")
    vars, a = spec.generic_matrix()
    powers = _matrix_powers(a, order)
    logs = TruncatedSeries.zero(vars, order)
    for k in range(1, order + 1):
        logs.coeffs[k] = _poly_trace(powers[k]) * Fraction(1, k)
        if spec.family == "sp" and k % 2 == 1 and not logs.coeffs[k].is_zero():
            raise AssertionError("odd power traces must vanish on sp")
    return logs.exp()


def r_coefficients(n: int, order: int, spec: LieAlgebraSpec | None = None) -> list[DeformationCoefficient]:
    """The gl_n tables r_0 .. r_order, exact in the matrix entry coordinates."""
    spec = spec or LieAlgebraSpec.gl(n)
    vars, a = spec.generic_matrix()
    powers = _matrix_powers(a, order)
    detinv = det_inverse_expansion(spec, order)
    out = []
    for m in range(order + 1):
        entries: dict[tuple[int, int], SparsePoly] = {}
        for i in range(n):
            for j in range(n):
                # coefficient of tau^m in (x_i, (1 - tau A)^{-1} y_j) * detinv
                acc = SparsePoly.zero(vars)
                for k in range(m + 1):
                    acc = acc + powers[k][i, j] * detinv.coeffs[m - k]
                entries[(i, j)] = acc
        out.append(DeformationCoefficient("gl", n, m, entries))
    return out


def ell_coefficients(n: int, order: int, spec: LieAlgebraSpec | None = None) -> list[DeformationCoefficient]:
    """The sp_{2n} tables l_0 .. l_order; odd orders vanish identically."""
    spec = spec or LieAlgebraSpec.sp(n)
    d = 2 * n
    vars, a = spec.generic_matrix()
    powers = _matrix_powers(a, order)
    jform = LieAlgebraSpec.symplectic_form(n)
    detinv = det_inverse_expansion(spec, order)
    # omega(v_i, A^{2k} v_j) = (J A^{2k})_{ij}
    jpow = {k: jform @ powers[k] for k in range(0, order + 1, 2)}
    out = []
    for m in range(order + 1):
        entries: dict[tuple[int, int], SparsePoly] = {}
        for i in range(d):
            for j in range(d):
                acc = SparsePoly.zero(vars)
                for k in range(0, m + 1, 2):
                    acc = acc + jpow[k][i, j] * detinv.coeffs[m - k]
                entries[(i, j)] = acc
        out.append(DeformationCoefficient("sp", n, m, entries))
    return out


def kappa_env_table_gl(n: int, beta: BetaParameter, spec: LieAlgebraSpec | None = None) -> dict[tuple[int, int], EnvElement]:
    """[y_j, x_i] = sum_m beta_m r_m(x_i, y_j), symmetrized into U(gl_n)."""
    spec = spec or LieAlgebraSpec.gl(n)
    rs = r_coefficients(n, beta.degree if beta.coeffs else 0, spec)
    table: dict[tuple[int, int], EnvElement] = {}
    for i in range(n):
        for j in range(n):
            f = SparsePoly.zero(spec.labels)
            for m, bm in enumerate(beta.coeffs):
                if bm != 0:
                    f = f + bm * rs[m].entries[(i, j)]
            table[(i, j)] = symmetrize_function(spec, f)
    return table


def kappa_env_table_sp(n: int, beta: BetaParameter, spec: LieAlgebraSpec | None = None) -> dict[tuple[int, int], EnvElement]:
    """[v_a, v_b] = sum_m beta_m l_m(v_a, v_b) over the Darboux basis, a < b."""
    beta.check_even()
    spec = spec or LieAlgebraSpec.sp(n)
    d = 2 * n
    ells = ell_coefficients(n, beta.degree if beta.coeffs else 0, spec)
    table: dict[tuple[int, int], EnvElement] = {}
    for a in range(d):
        for b in range(a + 1, d):
            f = SparsePoly.zero(spec.labels)
            for m, bm in enumerate(beta.coeffs):
                if bm != 0:
                    f = f + bm * ells[m].entries[(a, b)]
            table[(a, b)] = symmetrize_function(spec, f)
    return table


def beta_to_tc(n: int, beta: BetaParameter, spec: LieAlgebraSpec | None = None):
    """Express an infinitesimal gl_n family in the normalized (t, c) form.

    Returns (t, a, c_env): t is fixed to 1 (the split between the delta
    term and the first-derivative part of the class distribution is a
    gauge choice; this is the normalization the Euler grading uses), ``a``
    lists the Euler-derivative coefficients a_0 .. a_{deg+1} of c at
    lambda = 1 (a_0 = 0 by convention, since a multiple of the plain delta
    never contributes to the commutation relation), and ``c_env`` is c as
    an exact element of U(gl_n).

    The translation comes from pairing the class distribution against the
    reflection family s_v(lambda) = 1 + (lambda - 1) p_v and reducing the
    resulting projector moments to the determinant expansion:

        int (x, p_v y) sym(p_v^j) dv = r_j(x, y) / ((j+1) binom(j+n, n-1))
        sum_m a_m (lam d/dlam)^m [(1 - lam^{-1}) F]|_1
            = sum_m a_m sum_{i>=1} (-1)^{i-1} binom(m, i) (lam d/dlam)^{m-i} F|_1.
    """
    deg = beta.degree if beta.coeffs else 0
    top = deg + 1
    a = [Fraction(0)] * (top + 1)
    for j in range(deg, 0, -1):
        rhs = beta[j] * (j + 1) * comb(j + n, n - 1)
        for m in range(j + 2, top + 1):
            rhs -= a[m] * (-1) ** (m - j - 1) * comb(m, m - j)
        a[j + 1] = rhs / Fraction(j + 1)
    t = Fraction(1)
    if top >= 1:
        acc = sum((a[m] * (-1) ** (m - 1) for m in range(2, top + 1)), Fraction(0))
        a[1] = n * (beta[0] - t) - acc
    spec = spec or LieAlgebraSpec.gl(n)
    detinv = det_inverse_expansion(spec, top)
    c_env = EnvElement.zero(spec)
    for m in range(1, top + 1):
        if a[m] != 0:
            c_env = c_env + (a[m] * Fraction(1, comb(m + n - 1, n - 1))) * \
                symmetrize_function(spec, detinv.coeffs[m])
    return t, a, c_env
