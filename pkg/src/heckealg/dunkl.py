"""Dunkl operators: finite reflection data and the continuous orthogonal case.

The finite variant takes explicit rank-1 reflection data (matrix s on h, a
covector beta spanning the image of 1 - s^{-1*}, and a coefficient) and
applies

    D_y f = t d_y f + sum_s c_s beta_s(y) (f(u) - f(su)) / beta_s(u),

all divisions exact.  The orthogonal variant realizes the O(d) class
integral over reflections s_v(u) = u - 2(v,u)v as an exact average over
the unit sphere: the integrand is expanded in auxiliary v-variables,
divided exactly by (v,u), and every v-monomial is replaced by its
normalized sphere moment

    int_{S^{d-1}} v^alpha dsigma = prod_i (alpha_i - 1)!! / prod_j (d + 2j),

zero whenever any alpha_i is odd (j runs over 0 .. |alpha|/2 - 1).  The
class integral is the probability measure on the reflection class, so the
coupling k multiplies a normalized average.

Moments are cached in a ``MomentTable``; a table with deliberately wrong
entries can be injected to watch commutativity fail, and a Gaussian-integral
oracle (half-integer Gamma recurrences) validates the closed form.
"""

from __future__ import annotations

import json
import threading
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .exact import NotDivisible, SparsePoly, poly_divide_exact
from .linalg import identity, inverse, nullspace, rank

__all__ = [
    "MomentTable",
    "sphere_moment",
    "gaussian_moment_oracle",
    "ReflectionDatum",
    "DunklParams",
    "dunkl_apply",
    "reflection_average",
    "commutator_test",
    "dunkl_rep_matrices",
    "monomial_basis",
    "u_vars",
]


def u_vars(d: int) -> tuple[str, ...]:
    return tuple(f"u{i+1}" for i in range(d))


def _v_vars(d: int) -> tuple[str, ...]:
    return tuple(f"v{i+1}" for i in range(d))


class MomentTable:
    """Shared cache of normalized sphere moments with atomic inserts."""

    def __init__(self, overrides: dict[tuple[int, ...], Fraction] | None = None):
        self._cache: dict[tuple[tuple[int, ...], int], Fraction] = {}
        self._lock = threading.Lock()
        self._overrides = dict(overrides or {})

    def moment(self, alpha: tuple[int, ...], d: int) -> Fraction:
        alpha = tuple(alpha)
        if alpha in self._overrides:
            return self._overrides[alpha]
        key = (alpha, d)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        if any(a % 2 for a in alpha):
            val = Fraction(0)
        else:
            num = Fraction(1)
            for a in alpha:
                for odd in range(1, a, 2):
                    num *= odd
            den = Fraction(1)
            for j in range(sum(alpha) // 2):
                den *= d + 2 * j
            val = num / den
        with self._lock:
            self._cache.setdefault(key, val)
        return val

    def load(self, path: str) -> None:
        with open(path) as fh:
            data = json.load(fh)
        with self._lock:
            for item in data:
                key = (tuple(item["alpha"]), item["d"])
                self._cache[key] = Fraction(item["value"])

    def save(self, path: str) -> None:
        with self._lock:
            data = [
                {"alpha": list(alpha), "d": d, "value": f"{v.numerator}/{v.denominator}"}
                for (alpha, d), v in sorted(self._cache.items())
            ]
        with open(path, "w") as fh:
            json.dump(data, fh, indent=0, sort_keys=True)


_default_moments = MomentTable()


def sphere_moment(alpha, d: int, table: MomentTable | None = None) -> Fraction:
    """Normalized moment of v^alpha over the unit sphere in R^d."""
    return (table or _default_moments).moment(tuple(alpha), d)


def _gamma_half(num: int) -> tuple[Fraction, int]:
    """Gamma(num/2) as (rational, power of sqrt(pi)); num a positive integer."""
    if num == 1:
        return Fraction(1), 1
    if num == 2:
        return Fraction(1), 0
    r, p = _gamma_half(num - 2)
    return r * Fraction(num - 2, 2), p


def gaussian_moment_oracle(alpha, d: int) -> Fraction:
    """Independent evaluation of the sphere moment through Gaussian integrals.

    int_{R^d} v^alpha e^{-|v|^2} dv factors into one-dimensional Gamma
    values; dividing out the radial part gives the spherical average.
    """
    alpha = tuple(alpha)
    if any(a % 2 for a in alpha):
        return Fraction(0)
    num_r, num_p = Fraction(1), 0
    for a in alpha:
        r, p = _gamma_half(a + 1)
        num_r, num_p = num_r * r, num_p + p
    gd_r, gd_p = _gamma_half(d)
    top_r, top_p = _gamma_half(sum(alpha) + d)
    # moment = prod Gamma((a_i+1)/2) * Gamma(d/2) / (Gamma((|a|+d)/2) * pi^{d/2})
    val_r = num_r * gd_r / top_r
    val_p = num_p + gd_p - top_p - d
    if val_p != 0:
        raise AssertionError("sqrt(pi) powers must cancel in a spherical moment")
    return val_r


@dataclass
class ReflectionDatum:
    """Rank-1 reflection on h with a covector spanning Im(1 - s^{-1*})."""

    s: np.ndarray
    beta: list[Fraction]
    c: Fraction

    def __post_init__(self):
        self.beta = [Fraction(b) for b in self.beta]
        self.c = Fraction(self.c)
        d = self.s.shape[0]
        if rank(identity(d) - self.s) != 1:
            raise ValueError("reflection datum needs rank(1 - s) = 1")
        if all(b == 0 for b in self.beta):
            raise ValueError("beta must be nonzero")
        # beta must annihilate the fixed hyperplane of s
        for v in nullspace(identity(d) - self.s):
            if sum(b * x for b, x in zip(self.beta, v)) != 0:
                raise ValueError("beta does not vanish on the fixed hyperplane")


@dataclass
class DunklParams:
    """t plus either finite reflection data or the orthogonal class coupling."""

    t: Fraction
    variant: str                       # "finite" | "orthogonal"
    reflections: list[ReflectionDatum] = field(default_factory=list)
    d: int = 0
    k: Fraction = Fraction(0)
    moments: MomentTable | None = None
    _mono_cache: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        self.t = Fraction(self.t)
        self.k = Fraction(self.k)
        if self.variant == "finite":
            if not self.reflections and self.d == 0:
                raise ValueError("finite variant needs reflection data or an explicit dimension")
            if self.reflections:
                self.d = self.reflections[0].s.shape[0]
        elif self.variant != "orthogonal":
            raise ValueError("variant must be 'finite' or 'orthogonal'")

    @classmethod
    def finite(cls, t, reflections, d: int = 0) -> "DunklParams":
        return cls(Fraction(t), "finite", reflections=list(reflections), d=d)

    @classmethod
    def orthogonal(cls, t, d: int, k, moments: MomentTable | None = None) -> "DunklParams":
        return cls(Fraction(t), "orthogonal", d=d, k=Fraction(k), moments=moments)


def _directional(f: SparsePoly, y, vars) -> SparsePoly:
    out = SparsePoly.zero(vars)
    for i, yi in enumerate(y):
        if yi != 0:
            out = out + Fraction(yi) * f.partial(vars[i])
    return out


def moment_average(g: SparsePoly, d: int, table: MomentTable | None = None) -> SparsePoly:
    """Average a polynomial in (v, u) over v on the unit sphere.

    The first d variables of g's table are the sphere coordinates; the
    result lives on the remaining variables.
    """
    table = table or _default_moments
    uvars = g.vars[d:]
    out = SparsePoly.zero(uvars)
    acc: dict[tuple[int, ...], Fraction] = {}
    for exp, c in g.terms.items():
        m = table.moment(exp[:d], d)
        if m == 0:
            continue
        ue = exp[d:]
        acc[ue] = acc.get(ue, Fraction(0)) + c * m
    out.terms = {e: c for e, c in acc.items() if c != 0}
    return out


_reflection_images_cache: dict[int, tuple] = {}


def _sphere_reflection_images(d: int):
    """Images u_i -> u_i - 2 (v, u) v_i over the combined (v, u) table."""
    hit = _reflection_images_cache.get(d)
    if hit is not None:
        return hit
    both = _v_vars(d) + u_vars(d)
    vg = [SparsePoly.variable(both, v) for v in _v_vars(d)]
    ug = [SparsePoly.variable(both, u) for u in u_vars(d)]
    vu = SparsePoly.zero(both)
    for a, b in zip(vg, ug):
        vu = vu + a * b
    images = {}
    for v in _v_vars(d):
        images[v] = SparsePoly.variable(both, v)
    for i, u in enumerate(u_vars(d)):
        images[u] = ug[i] - 2 * vu * vg[i]
    out = (both, vu, vg, images)
    _reflection_images_cache[d] = out
    return out


def _apply_basis_direction(params: DunklParams, i: int, f: SparsePoly) -> SparsePoly:
    """D along the i-th coordinate direction of h, on an arbitrary polynomial."""
    d = params.d
    vars = f.vars
    out = params.t * f.partial(vars[i])
    if params.variant == "finite":
        for datum in params.reflections:
            by = datum.beta[i]
            if datum.c == 0 or by == 0:
                continue
            num = f - f.subs_linear(datum.s)
            if num.is_zero():
                continue
            bu = SparsePoly.zero(vars)
            for j, b in enumerate(datum.beta):
                if b != 0:
                    bu = bu + b * SparsePoly.variable(vars, vars[j])
            out = out + datum.c * by * poly_divide_exact(num, bu)
        return out
    if params.k == 0:
        return out
    both, vu, vg, images = _sphere_reflection_images(d)
    fe = f.extend_vars(both)
    num = fe - fe.subs(images)
    if num.is_zero():
        return out
    quot = poly_divide_exact(num, vu)
    averaged = moment_average(vg[i] * quot, d, params.moments)
    return out + params.k * averaged.extend_vars(vars)


def dunkl_apply(params: DunklParams, y, f: SparsePoly) -> SparsePoly:
    """Apply D_y to a polynomial in the u-coordinates of h.

    ``y`` is the coefficient list of a vector of h in the dual coordinate
    basis.  For homogeneous f the result is homogeneous of degree one less.
    Monomial images per coordinate direction are cached on the parameter
    object, so repeated applications stay cheap.
    """
    vars = f.vars
    y = [Fraction(c) for c in y]
    out = SparsePoly.zero(vars)
    for i, yi in enumerate(y):
        if yi == 0:
            continue
        for exp, c in f.terms.items():
            key = (i, exp, vars)
            img = params._mono_cache.get(key)
            if img is None:
                img = _apply_basis_direction(params, i, SparsePoly(vars, {exp: Fraction(1)}))
                params._mono_cache[key] = img
            out = out + (yi * c) * img
    return out


def reflection_average(params: DunklParams, f: SparsePoly) -> SparsePoly:
    """The class-integral operator: f averaged over the reflection family.

    Orthogonal variant: int f(s_v u) dsigma(v).  Finite variant: the sum
    over the stored reflections weighted by their coefficients (so it is
    the group-algebra element sum_s c_s s acting on polynomials).
    """
    if params.variant == "finite":
        out = SparsePoly.zero(f.vars)
        for datum in params.reflections:
            if datum.c != 0:
                out = out + datum.c * f.subs_linear(datum.s)
        return out
    d = params.d
    both, _, _, images = _sphere_reflection_images(d)
    fe = f.extend_vars(both).subs(images)
    return moment_average(fe, d, params.moments).extend_vars(f.vars)


def monomial_basis(d: int, n: int) -> list[tuple[int, ...]]:
    """Degree-n exponent tuples over d variables, graded lex order."""
    if d == 1:
        return [(n,)]
    out = []
    for first in range(n, -1, -1):
        for rest in monomial_basis(d - 1, n - first):
            out.append((first,) + rest)
    return out


def commutator_test(params: DunklParams, degree: int):
    """Exact [D_y, D_y'] on all monomials of degree <= degree, all basis pairs."""
    d = params.d
    vars = u_vars(d)
    basis_vectors = [[Fraction(1) if i == j else Fraction(0) for j in range(d)] for i in range(d)]
    for n in range(degree + 1):
        for exp in monomial_basis(d, n):
            f = SparsePoly(vars, {exp: Fraction(1)})
            for i in range(d):
                for j in range(i + 1, d):
                    a = dunkl_apply(params, basis_vectors[i], dunkl_apply(params, basis_vectors[j], f))
                    b = dunkl_apply(params, basis_vectors[j], dunkl_apply(params, basis_vectors[i], f))
                    if a != b:
                        return {"zero": False, "witness": (i, j, exp), "difference": a - b}
    return {"zero": True, "witness": None}


def dunkl_rep_matrices(params: DunklParams, n: int):
    """Exact operator matrices on the degree-n monomials of C[h].

    Returns (y_mats, x_mats): y_mats[i] maps degree n to degree n-1 (zero
    columns for n = 0), x_mats[i] maps degree n to degree n+1.
    """
    from .linalg import zeros
    d = params.d
    vars = u_vars(d)
    src = monomial_basis(d, n)
    dst = monomial_basis(d, n - 1) if n > 0 else []
    up = monomial_basis(d, n + 1)
    dst_index = {e: i for i, e in enumerate(dst)}
    up_index = {e: i for i, e in enumerate(up)}
    y_mats, x_mats = [], []
    for i in range(d):
        ym = zeros(max(len(dst), 0), len(src))
        y = [Fraction(1) if j == i else Fraction(0) for j in range(d)]
        for col, exp in enumerate(src):
            img = dunkl_apply(params, y, SparsePoly(vars, {exp: Fraction(1)}))
            for e, c in img.terms.items():
                ym[dst_index[e], col] = c
        y_mats.append(ym)
        xm = zeros(len(up), len(src))
        for col, exp in enumerate(src):
            e = list(exp)
            e[i] += 1
            xm[up_index[tuple(e)], col] = Fraction(1)
        x_mats.append(xm)
    return y_mats, x_mats
