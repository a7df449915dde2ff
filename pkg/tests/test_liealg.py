import random
from fractions import Fraction as F

import pytest

from heckealg.exact import SparsePoly
from heckealg.genfun import r_coefficients
from heckealg.liealg import (EnvElement, LieAlgebraSpec, NotEquivariant,
                             coadjoint_derivation, function_to_element,
                             killing_form, lie_closure_check, phi_iso_check,
                             symmetrize)
from heckealg.linalg import zeros


def sl2():
    return LieAlgebraSpec.sl(2)


def test_env_unit():
    spec = sl2()
    x = EnvElement.generator(spec, 2)
    assert EnvElement.one(spec) * x == x


def test_sl2_ef_straightening():
    spec = sl2()
    f, h, e = (EnvElement.generator(spec, i) for i in range(3))
    assert e * f == f * e + h


def test_env_associativity_random():
    spec = LieAlgebraSpec.gl(2)
    rng = random.Random(99)

    def rand_elem():
        terms = {}
        for _ in range(rng.randint(1, 3)):
            exp = [0] * spec.dim
            for _ in range(rng.randint(0, 2)):
                exp[rng.randrange(spec.dim)] += 1
            terms[tuple(exp)] = F(rng.randint(-3, 3))
        return EnvElement(spec, terms)

    for _ in range(12):
        a, b, c = rand_elem(), rand_elem(), rand_elem()
        assert (a * b) * c == a * (b * c)


def test_symmetrize_degree_one_and_two():
    spec = sl2()
    L = spec.labels
    f_, h_, e_ = (EnvElement.generator(spec, i) for i in range(3))
    assert symmetrize(spec, SparsePoly.variable(L, "e")) == e_
    ef = SparsePoly(L, {(1, 0, 1): F(1)})
    assert symmetrize(spec, ef) == F(1, 2) * (e_ * f_ + f_ * e_)


def test_symmetrize_casimir():
    spec = sl2()
    f_, h_, e_ = (EnvElement.generator(spec, i) for i in range(3))
    poly = SparsePoly(spec.labels, {(0, 2, 0): F(1, 2), (1, 0, 1): F(2)})
    assert symmetrize(spec, poly) == F(1, 2) * (h_ * h_) + e_ * f_ + f_ * e_


def test_symmetrize_filtered_iso_low_degrees():
    # the top symbol of sym(s) recovers s for monomials of degree <= 3
    spec = LieAlgebraSpec.gl(2)
    rng = random.Random(4)
    for _ in range(10):
        exp = [0] * spec.dim
        for _ in range(rng.randint(1, 3)):
            exp[rng.randrange(spec.dim)] += 1
        mono = SparsePoly(spec.labels, {tuple(exp): F(1)})
        s = symmetrize(spec, mono)
        deg = sum(exp)
        tops = {e: c for e, c in s.terms.items() if sum(e) == deg}
        assert tops == {tuple(exp): F(1)}


def test_killing_abelian_and_gl1():
    two_dim = LieAlgebraSpec.custom(("p", "q"), {})
    assert all(x == 0 for x in killing_form(two_dim).flat)
    assert killing_form(LieAlgebraSpec.gl(1))[0, 0] == 0


def test_killing_sl2_values():
    b = killing_form(sl2())  # basis order f, h, e
    assert b[1, 1] == 8
    assert b[0, 2] == 4 and b[2, 0] == 4
    assert b[0, 0] == 0 and b[2, 2] == 0 and b[0, 1] == 0


def test_killing_invariance():
    for spec in (sl2(), LieAlgebraSpec.so(3), LieAlgebraSpec.gl(2)):
        b = killing_form(spec)
        d = spec.dim
        for a in range(d):
            for i in range(d):
                for j in range(d):
                    lhs = sum(c * b[k, j] for k, c in spec.bracket_coords(a, i).items())
                    rhs = -sum(c * b[i, k] for k, c in spec.bracket_coords(a, j).items())
                    assert lhs == rhs


def test_structure_jacobi_rejects_bad_custom():
    with pytest.raises(ValueError):
        LieAlgebraSpec.custom(("a", "b", "c"),
                              {"a,b": {"c": "1"}, "a,c": {"a": "1"}, "b,c": {"b": "1"}})


def _closure_kappa_from_r1(n, drop_trace=False):
    spec = LieAlgebraSpec.gl(n)
    rs = r_coefficients(n, 1, spec)
    kappa = {}
    for i in range(n):
        for j in range(n):
            coords = [F(0)] * spec.dim
            if drop_trace:
                coords[spec.labels.index(f"E{j+1}{i+1}")] = F(1)
            else:
                elem = function_to_element(spec, rs[1].entries[(i, j)])
                for exp, c in elem.terms.items():
                    coords[next(t for t, e in enumerate(exp) if e)] = c
            kappa[(i, n + j)] = [-c for c in coords]
    e_action = []
    for k in range(spec.dim):
        m = zeros(2 * n, 2 * n)
        r = spec.basis_matrices[k]
        m[:n, :n] = -r.T
        m[n:, n:] = r
        e_action.append(m)
    return spec, e_action, kappa


def test_closure_kappa_zero_is_not_semisimple():
    spec = LieAlgebraSpec.gl(1)
    e_action = [zeros(2, 2)]
    e_action[0][0, 0] = F(-1)
    e_action[0][1, 1] = F(1)
    report = lie_closure_check(spec, e_action, {})
    assert report.is_lie_algebra and not report.semisimple


@pytest.mark.parametrize("n", [2, 3])
def test_closure_r1_gives_sl_n_plus_1(n):
    spec, e_action, kappa = _closure_kappa_from_r1(n)
    report = lie_closure_check(spec, e_action, kappa)
    assert report.is_lie_algebra and report.semisimple
    assert report.dim == (n + 1) ** 2 - 1
    assert report.killing_rank == report.dim


def test_closure_trace_dropped_fails():
    spec, e_action, kappa = _closure_kappa_from_r1(2, drop_trace=True)
    report = lie_closure_check(spec, e_action, kappa)
    assert not report.is_lie_algebra
    assert report.witness is not None


def test_closure_killing_restriction_identity():
    # on the k-block of the closed algebra, B_g(a,b) = B_k(a,b) + Tr_E(ab)
    n = 2
    spec, e_action, kappa = _closure_kappa_from_r1(n)
    dim = spec.dim + 2 * n
    structure = {}
    # rebuild the closure spec the same way the checker does
    report = lie_closure_check(spec, e_action, kappa)
    assert report.is_lie_algebra
    bk = killing_form(spec)
    # full Killing form via a custom spec
    from heckealg.liealg import LieAlgebraSpec as LS

    def kap(a, b):
        if a == b:
            return [F(0)] * spec.dim
        if a < b:
            return list(kappa.get((a, b), [F(0)] * spec.dim))
        return [-c for c in kappa.get((b, a), [F(0)] * spec.dim)]

    for i in range(spec.dim):
        for j in range(i + 1, spec.dim):
            coords = [F(0)] * dim
            for k, c in spec.bracket_coords(i, j).items():
                coords[k] = c
            entry = {k: c for k, c in enumerate(coords) if c != 0}
            if entry:
                structure[(i, j)] = entry
        for b in range(2 * n):
            coords = [F(0)] * dim
            for c in range(2 * n):
                coords[spec.dim + c] = e_action[i][c, b]
            entry = {k: v for k, v in enumerate(coords) if v != 0}
            if entry:
                structure[(i, spec.dim + b)] = entry
    for a in range(2 * n):
        for b in range(a + 1, 2 * n):
            coords = list(kap(a, b)) + [F(0)] * (2 * n)
            entry = {k: v for k, v in enumerate(coords) if v != 0}
            if entry:
                structure[(spec.dim + a, spec.dim + b)] = entry
    g = LS("closure", 0, tuple(f"g{i}" for i in range(dim)), None, structure)
    bg = killing_form(g)
    for i in range(spec.dim):
        for j in range(spec.dim):
            tr_e = sum((e_action[i] @ e_action[j])[t, t] for t in range(2 * n))
            assert bg[i, j] == bk[i, j] + tr_e


def test_phi_iso():
    assert phi_iso_check(1)
    assert phi_iso_check(2)
    assert not phi_iso_check(2, flip_x_sign=True)


def test_coadjoint_derivation_kills_invariants():
    # Tr(A^2) is an invariant polynomial function on gl_2
    spec = LieAlgebraSpec.gl(2)
    vars, a = spec.generic_matrix()
    tr2 = (a @ a)[0, 0] + (a @ a)[1, 1]
    for xi in range(spec.dim):
        assert coadjoint_derivation(spec, xi, tr2).is_zero()
