import json
import os
from fractions import Fraction as F

import pytest

from heckealg.exact import SparsePoly, TruncatedSeries
from heckealg.genfun import (BetaParameter, OddBetaForSp, beta_to_tc,
                             det_inverse_expansion, ell_coefficients,
                             kappa_env_table_gl, r_coefficients)
from heckealg.liealg import (EnvElement, LieAlgebraSpec, coadjoint_derivation,
                             function_to_element, symmetrize,
                             symmetrize_function)

GOLDEN = os.path.join(os.path.dirname(__file__), "data", "sl2_casimir_constants.json")


def test_det_inverse_gl1_geometric():
    spec = LieAlgebraSpec.gl(1)
    s = det_inverse_expansion(spec, 6)
    a = SparsePoly.variable(spec.labels, "E11")
    for m in range(7):
        assert s.coeffs[m] == a ** m


def test_det_inverse_gl_low_orders():
    spec = LieAlgebraSpec.gl(3)
    s = det_inverse_expansion(spec, 2)
    vars, a = spec.generic_matrix()
    tr = a[0, 0] + a[1, 1] + a[2, 2]
    a2 = a @ a
    tr2 = a2[0, 0] + a2[1, 1] + a2[2, 2]
    assert s.coeffs[0] == SparsePoly.const(vars, 1)
    assert s.coeffs[1] == tr
    assert s.coeffs[2] == F(1, 2) * tr2 + F(1, 2) * tr * tr


def test_det_inverse_sp_even_orders_only():
    spec = LieAlgebraSpec.sp(1)
    s = det_inverse_expansion(spec, 4)
    assert s.coeffs[1].is_zero() and s.coeffs[3].is_zero()
    assert not s.coeffs[2].is_zero()


@pytest.mark.parametrize("n", [2, 3])
def test_r0_r1_golden(n):
    spec = LieAlgebraSpec.gl(n)
    rs = r_coefficients(n, 1, spec)
    one = EnvElement.one(spec)
    for i in range(n):
        for j in range(n):
            r0 = symmetrize_function(spec, rs[0].entries[(i, j)])
            assert r0 == (one if i == j else EnvElement.zero(spec))
            # r_1(x_i, y_j) = y_j (x) x_i + (x_i, y_j) Id
            expected = EnvElement.generator(spec, spec.labels.index(f"E{j+1}{i+1}"))
            if i == j:
                for k in range(n):
                    expected = expected + EnvElement.generator(spec, spec.labels.index(f"E{k+1}{k+1}"))
            assert symmetrize_function(spec, rs[1].entries[(i, j)]) == expected


def test_gl1_closed_form_via_geometric_oracle():
    # independent oracle: (x,y) * (sum a^k tau^k)^2 has coefficients (m+1) a^m
    spec = LieAlgebraSpec.gl(1)
    a = SparsePoly.variable(spec.labels, "E11")
    geom = TruncatedSeries(6, [a ** k for k in range(7)])
    oracle = geom * geom
    rs = r_coefficients(1, 6, spec)
    for m in range(7):
        assert rs[m].entries[(0, 0)] == oracle.coeffs[m]
        assert rs[m].entries[(0, 0)] == (m + 1) * a ** m


@pytest.mark.parametrize("n", [1, 2])
def test_ell_odd_vanish_and_skew(n):
    spec = LieAlgebraSpec.sp(n)
    ells = ell_coefficients(n, 4, spec)
    d = 2 * n
    for m in range(5):
        for i in range(d):
            for j in range(d):
                if m % 2 == 1:
                    assert ells[m].entries[(i, j)].is_zero()
                else:
                    assert ells[m].entries[(i, j)] == -1 * ells[m].entries[(j, i)]


def test_ell0_is_omega():
    spec = LieAlgebraSpec.sp(2)
    ells = ell_coefficients(2, 0, spec)
    jform = LieAlgebraSpec.symplectic_form(2)
    for i in range(4):
        for j in range(4):
            assert ells[0].entries[(i, j)] == SparsePoly.const(spec.labels, jform[i, j])


def test_sl2_casimir_goldens():
    with open(GOLDEN) as fh:
        gold = json.load(fh)
    gamma = [F(gold["gamma_1"]), F(gold["gamma_2"])]
    spec = LieAlgebraSpec.sp(1)
    ells = ell_coefficients(1, 4, spec)
    L = spec.labels
    delta_s = SparsePoly(L, {(0, 2, 0): F(1, 2), (1, 0, 1): F(-2)})   # h^2/2 + 2ef
    for k in (1, 2):
        elt = function_to_element(spec, ells[2 * k].entries[(0, 1)])
        assert elt == gamma[k - 1] * delta_s ** k
    # at the enveloping level: sym(DeltaS) is the Casimir on the nose,
    # sym(DeltaS^2) picks up the recorded lower-order Casimir correction
    f_ = EnvElement.generator(spec, 0)
    h_ = -1 * EnvElement.generator(spec, 1)
    e_ = -1 * EnvElement.generator(spec, 2)
    delta = F(1, 2) * (h_ * h_) + e_ * f_ + f_ * e_
    assert symmetrize(spec, delta_s) == delta
    assert symmetrize_function(spec, ells[2].entries[(0, 1)]) == gamma[0] * delta
    assert symmetrize(spec, delta_s ** 2) == \
        F(gold["u2_delta2_coeff"]) * (delta * delta) + F(gold["u2_delta_coeff"]) * delta


def _equivariance_gl(n, order):
    spec = LieAlgebraSpec.gl(n)
    rs = r_coefficients(n, order, spec)
    for m in range(order + 1):
        for xi in range(spec.dim):
            r_mat = spec.basis_matrices[xi]
            for i in range(n):
                for j in range(n):
                    lhs = SparsePoly.zero(spec.labels)
                    for c in range(n):
                        if r_mat[i, c] != 0:       # xi . x_i = -sum_c R[i,c] x_c
                            lhs = lhs - r_mat[i, c] * rs[m].entries[(c, j)]
                        if r_mat[c, j] != 0:       # xi . y_j = sum_c R[c,j] y_c
                            lhs = lhs + r_mat[c, j] * rs[m].entries[(i, c)]
                    assert lhs == coadjoint_derivation(spec, xi, rs[m].entries[(i, j)])


def test_r_equivariance_gl2():
    _equivariance_gl(2, 2)


def test_ell_equivariance_sp1():
    spec = LieAlgebraSpec.sp(1)
    ells = ell_coefficients(1, 4, spec)
    for m in (0, 2, 4):
        for xi in range(spec.dim):
            r_mat = spec.basis_matrices[xi]
            for a in range(2):
                for b in range(2):
                    lhs = SparsePoly.zero(spec.labels)
                    for c in range(2):
                        if r_mat[c, a] != 0:
                            lhs = lhs + r_mat[c, a] * ells[m].entries[(c, b)]
                        if r_mat[c, b] != 0:
                            lhs = lhs + r_mat[c, b] * ells[m].entries[(a, c)]
                    assert lhs == coadjoint_derivation(spec, xi, ells[m].entries[(a, b)])


def test_assemble_weyl_and_r1():
    spec = LieAlgebraSpec.gl(2)
    one = EnvElement.one(spec)
    table = kappa_env_table_gl(2, BetaParameter([1]), spec)
    for i in range(2):
        for j in range(2):
            assert table[(i, j)] == (one if i == j else EnvElement.zero(spec))
    table = kappa_env_table_gl(2, BetaParameter([0, 1]), spec)
    rs = r_coefficients(2, 1, spec)
    for i in range(2):
        for j in range(2):
            assert table[(i, j)] == symmetrize_function(spec, rs[1].entries[(i, j)])
    zero = kappa_env_table_gl(2, BetaParameter([]), spec)
    assert all(v.is_zero() for v in zero.values())


def test_sp_beta_must_be_even():
    with pytest.raises(OddBetaForSp):
        BetaParameter([1, 1]).check_even()


def test_beta_to_tc_known_cases():
    spec1 = LieAlgebraSpec.gl(1)
    t, a, c_env = beta_to_tc(1, BetaParameter([1]), spec1)
    assert t == 1 and all(x == 0 for x in a) and c_env.is_zero()
    t, a, c_env = beta_to_tc(1, BetaParameter([0, 1]), spec1)
    assert t == 1 and a == [F(0), F(0), F(1)]
    e2 = EnvElement(spec1, {(2,): F(1)})
    assert c_env == e2
    spec2 = LieAlgebraSpec.gl(2)
    t, a, _ = beta_to_tc(2, BetaParameter([0, 1]), spec2)
    assert a == [F(0), F(1), F(3)]
