import random
from fractions import Fraction as F

import pytest

from heckealg.genfun import BetaParameter
from heckealg.hecke import (FiniteGroup, HeckeAlgebra, NotEquivariant, NotFlat,
                            cherednik_finite, cyclic_two_group,
                            dihedral_order6_group, infinitesimal_gl,
                            infinitesimal_sp, reflections_on,
                            sra_cherednik_bridge, symplectic_finite,
                            trivial_deformation)
from heckealg.liealg import EnvElement, LieAlgebraSpec
from heckealg.linalg import fmat, identity, zeros


def trace_dropped_gl2():
    spec = LieAlgebraSpec.gl(2)
    n = 2
    v_action = []
    for k in range(spec.dim):
        m = zeros(2 * n, 2 * n)
        r = spec.basis_matrices[k]
        m[:n, :n] = -r.T
        m[n:, n:] = r
        v_action.append(m)
    kappa = {}
    for i in range(n):
        for j in range(n):
            idx = spec.labels.index(f"E{j+1}{i+1}")
            kappa[(i, n + j)] = -1 * EnvElement.generator(spec, idx)
    return HeckeAlgebra("env", spec, ["x1", "x2", "y1", "y2"], v_action, kappa,
                        roles=["x", "x", "y", "y"])


def test_z2_kappa_entry():
    H = cherednik_finite(cyclic_two_group(), t=1, c=F(1, 3))
    # kappa(x, y) = -(t + 2c s)
    entry = H.kappa[(0, 1)]
    assert entry == {0: F(-1), 1: F(-2, 3)}


def test_weyl_normal_form():
    H = infinitesimal_gl(2, BetaParameter([1]))
    nf = H.normal_form([("v", 2), ("v", 0)])       # y1 * x1
    expected = H.v_monomial((1, 0, 1, 0)) + H.one()
    assert nf == expected


def test_group_element_past_generator():
    group = cyclic_two_group()
    H = cherednik_finite(group, t=0, c=0)
    # s * x = (s x) * s = -x * s on the dual line
    elem = H.normal_form([("b", {1: F(1)}), ("v", 0)])
    assert elem.terms == {((1, 0), 1): F(-1)}


def test_h_tau_normal_form():
    H = infinitesimal_gl(2, BetaParameter([0, 1]))
    nf = H.normal_form([("v", 2), ("v", 0)])       # y1 * x1
    spec = H.base
    expected = H.v_monomial((1, 0, 1, 0)) + \
        H.base_element(EnvElement.generator(spec, spec.labels.index("E11"))) + \
        H.base_element(EnvElement.generator(spec, spec.labels.index("E11")) +
                       EnvElement.generator(spec, spec.labels.index("E22")))
    assert nf == expected


def test_kappa_zero_flat():
    group = cyclic_two_group()
    H = trivial_deformation("group", group, 2,
                            {g: group.rep[g] @ identity(2) for g in range(group.order)})
    assert H.flatness_check().flat_at_degree3
    assert H.pbw_dimension_census(2) == H.h0_census(2)


def test_flat_families_random_beta():
    rng = random.Random(20240918)
    for _ in range(2):
        beta = BetaParameter([F(rng.randint(-3, 3), rng.randint(1, 2)) for _ in range(4)])
        assert infinitesimal_gl(2, beta).flatness_check().flat_at_degree3
    beta = BetaParameter([F(1), F(0), F(rng.randint(-3, 3), 2)])
    assert infinitesimal_sp(1, beta).flatness_check().flat_at_degree3
    assert infinitesimal_sp(2, beta).flatness_check().flat_at_degree3


def test_finite_cherednik_flat():
    assert cherednik_finite(cyclic_two_group(), 1, F(2, 5)).flatness_check().flat_at_degree3
    assert cherednik_finite(dihedral_order6_group(), 1, F(-1, 3)).flatness_check().flat_at_degree3


def test_trace_dropped_not_flat_with_witness():
    rep = trace_dropped_gl2().flatness_check()
    assert not rep.flat_at_degree3
    assert rep.witnesses and all(len(w) == 3 for w in rep.witnesses)


def test_census_requires_flat():
    H = trace_dropped_gl2()
    with pytest.raises(NotFlat):
        H.pbw_dimension_census(2)


def test_census_values():
    H = infinitesimal_gl(1, BetaParameter([1]))
    assert H.pbw_dimension_census(2) == H.h0_census(2) == [3, 6, 9]
    Hz = cherednik_finite(cyclic_two_group(), 1, F(1, 2))
    # (# monomials in x, y of degree <= 2) x |G| summed by degree: 2, 4, 6
    assert Hz.pbw_dimension_census(2) == [2, 4, 6]
    assert sum(Hz.pbw_dimension_census(2)) == 6 * 2


def test_equivariance_rejection_on_perturbed_entry():
    group = dihedral_order6_group()
    H = cherednik_finite(group, 1, F(1, 2))
    bad = dict(H.kappa)
    entry = dict(bad[(0, 2)])
    entry[group.index_of("s1")] = entry.get(group.index_of("s1"), F(0)) + 1
    bad[(0, 2)] = entry
    with pytest.raises(NotEquivariant):
        HeckeAlgebra("group", group, H.v_labels, H.v_action, bad, roles=H.roles)


def test_symplectic_finite_z2():
    group = FiniteGroup.from_matrix_generators({"s": fmat([[-1, 0], [0, -1]])})
    jform = LieAlgebraSpec.symplectic_form(1)
    H = symplectic_finite(group, jform, t=1, c=F(1, 4))
    assert H.flatness_check().flat_at_degree3
    # [v1, v2] = omega(v1,v2) t + c omega((1-s)v1, (1-s)v2) s = 1 + 4c s
    assert H.kappa[(0, 1)] == {0: F(1), 1: F(1)}


def test_confluence_random_words():
    rng = random.Random(7)
    algebras = [
        infinitesimal_gl(2, BetaParameter([1, F(1, 2)])),
        cherednik_finite(dihedral_order6_group(), 1, F(1, 3)),
    ]
    for H in algebras:
        for _ in range(10):
            toks = []
            for _ in range(4):
                if rng.random() < 0.7:
                    toks.append(("v", rng.randrange(H.v_dim)))
                elif H.base_kind == "group":
                    toks.append(("b", {rng.randrange(H.base.order): F(1)}))
                else:
                    toks.append(("b", EnvElement.generator(H.base, rng.randrange(H.base.dim))))
            split = rng.randrange(1, 4)
            left_fold = H.normal_form(toks)
            refold = H.normal_form(toks[:split]) * H.normal_form(toks[split:])
            assert left_fold == refold


def test_filtration_never_increases_v_degree():
    H = cherednik_finite(dihedral_order6_group(), 1, F(1, 3))
    rng = random.Random(13)
    for _ in range(10):
        toks = [("v", rng.randrange(H.v_dim)) for _ in range(4)]
        assert H.normal_form(toks).v_degree() <= 4


def test_symbol_map_multiplicative_at_top_degree():
    # gr of a product equals the product in the undeformed twin algebra
    H = cherednik_finite(cyclic_two_group(), 1, F(2, 7))
    H0 = HeckeAlgebra("group", H.base, H.v_labels, H.v_action, {}, roles=H.roles)
    rng = random.Random(3)
    for _ in range(10):
        e1 = tuple(rng.randint(0, 2) for _ in range(2))
        e2 = tuple(rng.randint(0, 2) for _ in range(2))
        g = rng.randrange(2)
        a = H.v_monomial(e1).mul_base({g: F(1)})
        b = H.v_monomial(e2)
        top = sum(e1) + sum(e2)
        prod = a * b
        tops = {k: c for k, c in prod.terms.items() if sum(k[0]) == top}
        a0 = H0.v_monomial(e1).mul_base({g: F(1)})
        expect = {k: c for k, c in (a0 * H0.v_monomial(e2)).terms.items()}
        assert tops == expect


def test_sra_cherednik_bridge():
    assert sra_cherednik_bridge(cyclic_two_group())
    assert sra_cherednik_bridge(dihedral_order6_group())
    trivial = FiniteGroup.from_matrix_generators({"r": identity(2)})
    assert sra_cherednik_bridge(trivial)    # vacuous: no reflections


def test_reflections_of_s3():
    group = dihedral_order6_group()
    refl = reflections_on(group, group.rep)
    assert len(refl) == 3


def test_group_structure_checks():
    group = dihedral_order6_group()
    assert group.order == 6
    assert sorted(len(c) for c in group.conjugacy_classes()) == [1, 2, 3]
    bad_table = {(i, j): 0 for i in range(2) for j in range(2)}
    with pytest.raises(ValueError):
        FiniteGroup(["e", "g"], bad_table, {0: identity(1), 1: identity(1)})
