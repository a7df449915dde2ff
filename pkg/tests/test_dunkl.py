import random
from fractions import Fraction as F

import pytest

from heckealg.dunkl import (DunklParams, MomentTable, ReflectionDatum,
                            commutator_test, dunkl_apply, dunkl_rep_matrices,
                            gaussian_moment_oracle, monomial_basis,
                            reflection_average, sphere_moment, u_vars)
from heckealg.exact import SparsePoly
from heckealg.linalg import fmat, identity, inverse


def s3_reflection_data(c):
    s1 = fmat([[-1, 1], [0, 1]])
    s2 = fmat([[1, 0], [1, -1]])
    s121 = s1 @ s2 @ s1
    data = []
    for s in (s1, s2, s121):
        m = identity(2) - inverse(s).T
        col = next(tuple(m[:, j]) for j in range(2) if any(x != 0 for x in m[:, j]))
        data.append(ReflectionDatum(s, list(col), c))
    return data


def test_moment_odd_zero():
    assert sphere_moment((1, 2), 2) == 0
    assert sphere_moment((3, 0, 2), 3) == 0


def test_moment_quadratic_and_quartic():
    for d in (1, 2, 3, 5):
        alpha = (2,) + (0,) * (d - 1)
        assert sphere_moment(alpha, d) == F(1, d)
        alpha4 = (4,) + (0,) * (d - 1)
        assert sphere_moment(alpha4, d) == F(3, d * (d + 2))


def test_moment_gaussian_oracle():
    cases = [((2, 0), 2), ((4, 0, 0), 3), ((2, 2), 2), ((6, 0), 2),
             ((2, 2, 2), 3), ((0, 0), 2), ((4, 2, 0), 3), ((8,), 1)]
    for alpha, d in cases:
        assert sphere_moment(alpha, d) == gaussian_moment_oracle(alpha, d)


def test_moment_sum_consistency():
    # sum_i v_i^2 = 1 on the sphere: moments of alpha + 2 e_i sum to moment(alpha)
    for d in (2, 3):
        for alpha in monomial_basis(d, 4):
            total = sum(sphere_moment(tuple(a + (2 if i == j else 0) for j, a in enumerate(alpha)), d)
                        for i in range(d))
            assert total == sphere_moment(alpha, d)


def test_pure_derivative_when_coupling_vanishes():
    params = DunklParams.orthogonal(F(1), 2, 0)
    vars = u_vars(2)
    u1, u2 = SparsePoly.gens(vars)
    f = u1 * u1 * u2
    assert dunkl_apply(params, [1, 0], f) == 2 * u1 * u2
    assert dunkl_apply(params, [0, 1], f) == u1 * u1


def test_rank_one_z2_formula():
    datum = ReflectionDatum(fmat([[-1]]), [F(1)], F(2, 3))
    params = DunklParams.finite(F(1), [datum])
    u = SparsePoly.gens(u_vars(1))[0]
    assert dunkl_apply(params, [1], u) == SparsePoly.const(u_vars(1), F(1) + 2 * F(2, 3))


def test_orthogonal_d1_matches_finite():
    datum = ReflectionDatum(fmat([[-1]]), [F(1)], F(3, 5))
    fin = DunklParams.finite(F(1), [datum])
    orth = DunklParams.orthogonal(F(1), 1, F(3, 5))
    u = SparsePoly.gens(u_vars(1))[0]
    for j in range(7):
        assert dunkl_apply(fin, [1], u ** j) == dunkl_apply(orth, [1], u ** j)


@pytest.mark.parametrize("d,k", [(2, F(1)), (3, F(-1, 2))])
def test_commutativity(d, k):
    params = DunklParams.orthogonal(F(1), d, k)
    assert commutator_test(params, 3)["zero"]


def test_finite_dihedral_commutativity():
    params = DunklParams.finite(F(1), s3_reflection_data(F(1, 2)))
    assert commutator_test(params, 4)["zero"]


def test_corrupted_moment_table_breaks_commutativity():
    bad = MomentTable(overrides={(4, 0): F(1, 99)})
    params = DunklParams.orthogonal(F(1), 2, F(1), moments=bad)
    report = commutator_test(params, 4)
    assert not report["zero"] and report["witness"] is not None


def test_rep_matrices_match_direct_apply():
    params = DunklParams.orthogonal(F(1), 2, F(1, 3))
    vars = u_vars(2)
    for n in (1, 2, 3):
        ys, xs = dunkl_rep_matrices(params, n)
        src = monomial_basis(2, n)
        dst = monomial_basis(2, n - 1)
        for i in range(2):
            y = [F(1) if j == i else F(0) for j in range(2)]
            for col, exp in enumerate(src):
                img = dunkl_apply(params, y, SparsePoly(vars, {exp: F(1)}))
                for row, e in enumerate(dst):
                    assert ys[i][row, col] == img.coefficient(e)


def test_degree_one_matrix_values():
    # D_i x_j = (t + 2k/d) delta_ij at degree 1
    t, k, d = F(1), F(1, 3), 2
    ys, _ = dunkl_rep_matrices(DunklParams.orthogonal(t, d, k), 1)
    for i in range(d):
        for j in range(d):
            assert ys[i][0, j] == ((t + 2 * k / d) if i == j else 0)


def test_x_matrices_full_column_rank():
    from heckealg.linalg import rank
    _, xs = dunkl_rep_matrices(DunklParams.orthogonal(F(1), 2, F(1, 3)), 2)
    for m in xs:
        assert rank(m) == m.shape[1]


def test_homogeneity():
    params = DunklParams.orthogonal(F(1), 2, F(2, 7))
    vars = u_vars(2)
    for exp in monomial_basis(2, 4):
        img = dunkl_apply(params, [1, -2], SparsePoly(vars, {exp: F(1)}))
        assert img.is_zero() or (img.is_homogeneous() and img.degree() == 3)


def test_orthogonal_equivariance_signed_permutations():
    params = DunklParams.orthogonal(F(1), 2, F(1, 2))
    vars = u_vars(2)
    rng = random.Random(21)
    mats = [fmat([[0, 1], [1, 0]]), fmat([[-1, 0], [0, 1]]), fmat([[0, -1], [1, 0]])]
    for g in mats:
        ginv = inverse(g)
        for _ in range(4):
            exp = tuple(rng.randint(0, 2) for _ in range(2))
            f = SparsePoly(vars, {exp: F(1)})
            for i in range(2):
                y = [F(1) if j == i else F(0) for j in range(2)]
                gy = [g[r, i] for r in range(2)]
                lhs = dunkl_apply(params, gy, f.subs_linear(ginv))
                rhs = dunkl_apply(params, y, f).subs_linear(ginv)
                assert lhs == rhs


def test_integrand_even_in_v():
    # replacing v by -v fixes the integrand of the class term
    from heckealg.dunkl import _sphere_reflection_images
    from heckealg.exact import poly_divide_exact
    d = 2
    both, vu, vg, images = _sphere_reflection_images(d)
    f = SparsePoly(u_vars(d), {(2, 1): F(1)}).extend_vars(both)
    quot = poly_divide_exact(f - f.subs(images), vu)
    integrand = vg[0] * quot
    flip = {v: -1 * SparsePoly.variable(both, v) for v in both[:d]}
    flip.update({u: SparsePoly.variable(both, u) for u in both[d:]})
    assert integrand.subs(flip) == integrand


def test_reflection_average_z2():
    datum = ReflectionDatum(fmat([[-1]]), [F(1)], F(1))
    params = DunklParams.finite(F(1), [datum])
    u = SparsePoly.gens(u_vars(1))[0]
    assert reflection_average(params, u ** 2) == u ** 2
    assert reflection_average(params, u) == -1 * u


def test_reflection_datum_validation():
    with pytest.raises(ValueError):
        ReflectionDatum(identity(2), [F(1), F(0)], F(1))       # rank 0
    with pytest.raises(ValueError):
        ReflectionDatum(fmat([[-1, 0], [0, 1]]), [F(0), F(1)], F(1))   # beta on fixed space
