import itertools
from fractions import Fraction as F

import pytest

from heckealg.category_o import (DistributionData, NonTerminating,
                                 char_symmetric_power_dual, character_series,
                                 euler_check, euler_matrix, gl_criterion,
                                 harm_dim, lc_structure, lowest_weight,
                                 shapovalov, shapovalov_adjointness_check,
                                 singular_vectors, sl2_triple_check,
                                 trivial_module_env, trivial_module_group,
                                 verma_build, verma_orthogonal,
                                 verma_orthogonal_commutation)
from heckealg.exact import SparsePoly
from heckealg.genfun import BetaParameter
from heckealg.hecke import cherednik_finite, cyclic_two_group, infinitesimal_gl
from heckealg.linalg import matrices_equal, rank, zeros


def weyl_gl2_module(depth=4):
    H = infinitesimal_gl(2, BetaParameter([1]))
    return verma_build(H, trivial_module_env(H.base), depth)


def test_weyl_y_is_partial_derivative():
    mod = weyl_gl2_module(3)
    # on degree 2 (basis x1^2, x1 x2, x2^2), y1 is d/dx1
    y1 = mod.y_mats[2][0]
    expected = zeros(2, 3)
    expected[0, 0] = F(2)
    expected[1, 1] = F(1)
    assert matrices_equal(y1, expected)


def test_weyl_euler_and_offset():
    mod = weyl_gl2_module(4)
    assert euler_check(mod, 4)
    assert mod.offset == 1           # c = 0, d/2 = 1
    h0 = euler_matrix(mod, 0)
    assert h0[0, 0] == mod.offset


def test_kappa_zero_everything_singular():
    H = cherednik_finite(cyclic_two_group(), t=0, c=0)
    mod = verma_build(H, trivial_module_group(H.base), 3)
    for n in (1, 2, 3):
        assert len(singular_vectors(mod, n)) == mod.dim_at(n)


def test_weyl_no_singular_vectors():
    mod = weyl_gl2_module(4)
    for n in (1, 2, 3, 4):
        assert singular_vectors(mod, n) == []


def test_h_tau_singular_exactly_in_degree_one():
    H = infinitesimal_gl(2, BetaParameter([0, 1]))
    mod = verma_build(H, trivial_module_env(H.base), 3)
    assert euler_check(mod, 3)
    assert len(singular_vectors(mod, 1)) == 2      # all of h*
    assert len(singular_vectors(mod, 2)) == 0
    assert len(singular_vectors(mod, 3)) == 0


def test_euler_nontrivial_beta():
    H = infinitesimal_gl(2, BetaParameter([F(1, 2), F(1, 2)]))
    mod = verma_build(H, trivial_module_env(H.base), 3)
    assert euler_check(mod, 3)


def test_euler_finite_cherednik():
    H = cherednik_finite(cyclic_two_group(), t=1, c=F(1, 3))
    mod = verma_build(H, trivial_module_group(H.base), 4)
    assert euler_check(mod, 4)
    assert mod.offset == F(1, 3) + F(1, 2)


def test_euler_orthogonal():
    mod = verma_orthogonal(2, F(1, 3), 4)
    assert euler_check(mod, 4)
    assert mod.offset == F(1, 3) + 1


def test_orthogonal_routes_agree():
    a = verma_orthogonal(2, F(2, 5), 3)
    b = verma_orthogonal_commutation(2, F(2, 5), 3)
    for n in range(1, 4):
        for i in range(2):
            assert matrices_equal(a.y_mats[n][i], b.y_mats[n][i])


def test_gl_criterion_zero_distribution():
    c = DistributionData([])
    for n in (1, 2, 3):
        out = gl_criterion(c, 2, n)
        assert out["lhs"] == 0 and not out["holds"]


def test_gl_criterion_rank_one_evaluation():
    # n = 1: chi_{S^N h*}(lambda) = lambda^{-N}; evaluation at -1 with weight alpha
    for alpha in (F(-1, 2), F(1, 3)):
        c = DistributionData([(F(-1), 0, alpha)])
        out = gl_criterion(c, 1, 1)
        assert out["lhs"] == alpha * ((-1) ** (-1) - 1) == -2 * alpha
        assert out["holds"] == (alpha == F(-1, 2))


def test_gl_criterion_derivative_two_routes():
    # derivative pairing at lambda = 1 vs substitution mu = 1/lambda
    alpha = F(3, 7)
    c = DistributionData([(F(1), 1, alpha)])
    for bigN in (1, 2, 3):
        char = char_symmetric_power_dual(2, bigN)
        direct = c.pair(char)
        mu = SparsePoly.gens(("mu",))[0]
        poly = SparsePoly.zero(("mu",))
        for p, coeff in char.items():
            poly = poly + coeff * mu ** (-p)
        # d/dlambda = -mu^2 d/dmu at lambda = mu = 1
        sym = -alpha * poly.partial("mu").eval({"mu": F(1)})
        assert direct == sym


def test_char_symmetric_power_dimensions():
    for n, bigN in ((2, 3), (3, 2), (1, 4)):
        char = char_symmetric_power_dual(n, bigN)
        from math import comb
        assert sum(char.values()) == comb(bigN + n - 1, n - 1)


def test_distribution_euler_derivative_conversion():
    # (lam d/dlam)^2 = lam d/dlam + lam^2 d^2/dlam^2 at lam = 1
    c = DistributionData.from_euler_derivatives([F(0), F(0), F(1)])
    for p in (-3, -1, 2, 5):
        assert c.pair({p: F(1)}) == p * p


def test_shapovalov_degree_zero_and_symmetry():
    mod = verma_orthogonal(2, F(1, 3), 4)
    grams = {}
    rep0 = shapovalov(mod, 0, grams)
    assert rep0.gram[0, 0] == 1 and rep0.rank == 1
    rep3 = shapovalov(mod, 3, grams)
    g = rep3.gram
    assert all(g[i, j] == g[j, i] for i in range(4) for j in range(4))


def test_shapovalov_generic_full_rank():
    mod = verma_orthogonal(2, F(1, 3), 5)
    grams = {}
    for n in range(6):
        rep = shapovalov(mod, n, grams)
        assert rep.rank == mod.dim_at(n) and rep.kernel_dim == 0
        assert shapovalov_adjointness_check(mod, n, grams)


def test_shapovalov_kernel_is_submodule():
    from heckealg.linalg import nullspace
    mod = verma_orthogonal(2, F(-2), 6)      # k = -1 - m with m = 1
    grams = {}
    reports = {n: shapovalov(mod, n, grams) for n in range(6)}
    for n in range(1, 5):
        kernel = nullspace(reports[n].gram)
        for v in kernel:
            for i in range(2):
                up = mod.x_mats[n][i] @ v
                assert all(x == 0 for x in (reports[n + 1].gram @ up))
                down = mod.y_mats[n][i] @ v
                if n >= 1 and down.shape[0]:
                    assert all(x == 0 for x in (reports[n - 1].gram @ down))


def test_sl2_triple_small():
    assert sl2_triple_check(2, F(2, 5), 3)
    assert sl2_triple_check(3, 0, 3)
    assert not sl2_triple_check(2, F(2, 5), 3, mutate=True)


def test_lowest_weight_values():
    assert lowest_weight(0, 2) == -1
    assert lowest_weight(F(-2), 2) == 1          # d = 2, k = -1 - m, m = 1 gives m
    # vector module of the orthogonal group: trace of a reflection is d - 2
    d = 3
    assert lowest_weight(F(1, 2), d, trace_on_y=d - 2, dim_y=d) == \
        -F(d, 2) - F(1, 2) * F(d - 2, d)


def test_harm_dims():
    assert [harm_dim(2, n) for n in range(4)] == [1, 2, 2, 2]
    assert [harm_dim(3, n) for n in range(4)] == [1, 3, 5, 7]


def test_lc_structure_m0():
    rep = lc_structure(2, 0)
    assert rep["dimension"] == 1 and rep["ranks"] == [1]
    assert rep["profile_matches"]


def test_lc_structure_d2_m1():
    rep = lc_structure(2, 1)
    assert rep["dimension"] == 4 == rep["expected_dimension"]
    assert rep["ranks"] == [1, 2, 1]
    assert rep["decomposition"] == [(1, 0), (0, 1)]


def test_character_series_identity_element():
    cs = character_series(0, 2, [1, 1], 8)
    for n in range(9):
        assert cs.coefficient(n).constant_term() == n + 1
    assert cs.offset == 1


def test_character_series_generic_torus_point():
    vars = ("l1", "l2")
    l1, l2 = SparsePoly.gens(vars)
    cs = character_series(F(1, 2), 2, [l1, l2], 6)
    for n in range(7):
        h_n = SparsePoly.zero(vars)
        for a in range(n + 1):
            h_n = h_n + (l1 ** a) * (l2 ** (n - a))
        assert cs.coefficient(n) == h_n
    assert cs.offset == F(3, 2)


def test_character_offset_matches_euler_eigenvalue():
    mod = verma_orthogonal(2, F(1, 3), 2)
    cs = character_series(F(1, 3), 2, [1, 1], 2)
    assert cs.offset == mod.offset == euler_matrix(mod, 0)[0, 0]


def test_grading_contract():
    mod = weyl_gl2_module(3)
    for n in range(3):
        for x in mod.x_mats[n]:
            assert x.shape == (mod.dim_at(n + 1), mod.dim_at(n))
    for n in range(1, 4):
        for y in mod.y_mats[n]:
            assert y.shape == (mod.dim_at(n - 1), mod.dim_at(n))
