"""Deformed semidirect product presentations and PBW normal forms.

An algebra here is generated by a vector space V and a base (the group
algebra of an explicit finite group, or U(g) for a concrete Lie algebra)
subject to

    b . v   =  (action of b on v) . b        (base past generators)
    [v, w]  =  kappa(v, w)  in the base      (deformed commutation)

Elements are kept in normal form: ordered V-monomial times base monomial,
base rightmost.  Rewriting terminates because every kappa step strictly
lowers the V-degree of the pair it touches.  Flatness of the deformation
is certified by resolving the degree-3 critical pairs, i.e. checking the
Jacobi expression [kappa(x,y), z] + [kappa(z,x), y] + [kappa(y,z), x] on
all strict generator triples inside V (x) base.

Sign conventions: Cherednik-type algebras order the generators so that all
of h* (the x's) precedes all of h (the y's), and the defining relation
reads [y, x] = t (y, x) + sum_s c_s (y, (1 - s) x) s, so the Dunkl
realization lowers degree with D_y(1) = 0.  The symplectic family uses the
Darboux order x1, y1, x2, y2, ...
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .genfun import BetaParameter, kappa_env_table_gl, kappa_env_table_sp
from .liealg import EnvElement, LieAlgebraSpec, NotEquivariant
from .linalg import identity, inverse, matrices_equal, rank, zeros

__all__ = [
    "FiniteGroup",
    "HeckeAlgebra",
    "HeckeElement",
    "NotFlat",
    "NotSkew",
    "NotEquivariant",
    "FlatnessReport",
    "cherednik_finite",
    "symplectic_finite",
    "infinitesimal_gl",
    "infinitesimal_sp",
    "trivial_deformation",
    "sra_cherednik_bridge",
    "reflections_on",
    "cyclic_two_group",
    "dihedral_order6_group",
]


class NotFlat(RuntimeError):
    """An operation that requires the PBW property was called on a non-flat algebra."""


class NotSkew(ValueError):
    pass


class FiniteGroup:
    """Explicit finite group with exact matrices on its defining module."""

    def __init__(self, labels, table, rep):
        self.labels = list(labels)
        self.order = len(self.labels)
        self.table = table              # (i, j) -> k meaning g_i g_j = g_k
        self.rep = rep                  # element index -> matrix
        self.identity_index = self._find_identity()
        self.inverse = self._find_inverses()
        self._check_group()

    @classmethod
    def from_matrix_generators(cls, gens: dict[str, np.ndarray]) -> "FiniteGroup":
        """Close a set of exact matrices under multiplication (BFS).

        Element labels are shortest generator words; the identity is "e".
        """
        def key(m):
            return tuple(Fraction(x) for x in m.flat)

        d = next(iter(gens.values())).shape[0]
        eye = identity(d)
        seen = {key(eye): 0}
        labels = ["e"]
        mats = [eye]
        frontier = [0]
        while frontier:
            nxt = []
            for i in frontier:
                for gname, gmat in gens.items():
                    m = mats[i] @ gmat
                    k = key(m)
                    if k not in seen:
                        seen[k] = len(mats)
                        labels.append(gname if labels[i] == "e" else labels[i] + "*" + gname)
                        mats.append(m)
                        nxt.append(seen[k])
            frontier = nxt
            if len(mats) > 4096:
                raise ValueError("group closure did not terminate at a reasonable order")
        table = {}
        for i in range(len(mats)):
            for j in range(len(mats)):
                table[(i, j)] = seen[key(mats[i] @ mats[j])]
        return cls(labels, table, {i: m for i, m in enumerate(mats)})

    def _find_identity(self) -> int:
        for e in range(self.order):
            if all(self.table[(e, j)] == j and self.table[(j, e)] == j for j in range(self.order)):
                return e
        raise ValueError("multiplication table has no identity")

    def _find_inverses(self) -> dict[int, int]:
        inv = {}
        e = self.identity_index
        for i in range(self.order):
            for j in range(self.order):
                if self.table[(i, j)] == e and self.table[(j, i)] == e:
                    inv[i] = j
                    break
            else:
                raise ValueError(f"element {self.labels[i]} has no inverse")
        return inv

    def _check_group(self) -> None:
        # full associativity for small groups, sampled for larger ones
        n = self.order
        triples = itertools.product(range(n), repeat=3) if n <= 12 else \
            itertools.islice(itertools.product(range(n), repeat=3), 0, None, max(1, n ** 3 // 500))
        for a, b, c in triples:
            if self.table[(self.table[(a, b)], c)] != self.table[(a, self.table[(b, c)])]:
                raise ValueError("multiplication table is not associative")
        for (i, j), k in self.table.items():
            if not matrices_equal(self.rep[i] @ self.rep[j], self.rep[k]):
                raise ValueError("representation matrices do not respect the table")

    def conjugacy_classes(self) -> list[list[int]]:
        left = set(range(self.order))
        classes = []
        while left:
            g = min(left)
            cls_ = {self.table[(self.table[(h, g)], self.inverse[h])] for h in range(self.order)}
            classes.append(sorted(cls_))
            left -= cls_
        return classes

    def index_of(self, label: str) -> int:
        return self.labels.index(label)


def _dual_action(m: np.ndarray) -> np.ndarray:
    """Action on the dual module in dual coordinates: inverse transpose."""
    return inverse(m).T


class HeckeAlgebra:
    """A presentation object with normal-form arithmetic over its base."""

    def __init__(self, base_kind: str, base, v_labels, v_action, kappa,
                 roles=None, check: bool = True):
        self.base_kind = base_kind        # "group" or "env"
        self.base = base                  # FiniteGroup or LieAlgebraSpec
        self.v_labels = tuple(v_labels)
        self.v_dim = len(self.v_labels)
        self.v_action = v_action          # group: index -> matrix on V; env: list per basis
        self.kappa = dict(kappa)          # (a, b) with a < b -> base element
        self.roles = tuple(roles) if roles else None
        self._move_cache: dict[tuple, dict] = {}
        self._insert_cache: dict[tuple, dict] = {}
        self._flat: bool | None = None
        for (a, b) in self.kappa:
            if not a < b:
                raise NotSkew("kappa table must be indexed by pairs a < b")
        if check:
            self._check_equivariance()

    # ---- base element helpers ------------------------------------------------

    def base_unit_key(self):
        if self.base_kind == "group":
            return self.base.identity_index
        return (0,) * self.base.dim

    def base_zero(self):
        return {} if self.base_kind == "group" else EnvElement.zero(self.base)

    def base_one(self):
        if self.base_kind == "group":
            return {self.base.identity_index: Fraction(1)}
        return EnvElement.one(self.base)

    def base_terms(self, elem):
        """(base monomial key, coefficient) pairs of a base element."""
        if self.base_kind == "group":
            return elem.items()
        return elem.terms.items()

    def base_from_terms(self, terms: dict):
        if self.base_kind == "group":
            return {k: c for k, c in terms.items() if c != 0}
        return EnvElement(self.base, terms)

    def base_mul_keys(self, k1, k2) -> dict:
        if self.base_kind == "group":
            return {self.base.table[(k1, k2)]: Fraction(1)}
        return self.base.straighten(self.base.word_of(k1) + self.base.word_of(k2))

    def base_scale_add(self, acc: dict, elem, c: Fraction):
        for k, v in self.base_terms(elem):
            s = acc.get(k, Fraction(0)) + v * c
            if s == 0:
                acc.pop(k, None)
            else:
                acc[k] = s
        return acc

    def kappa_full(self, a: int, b: int):
        if a == b:
            return self.base_zero()
        if a < b:
            return self.kappa.get((a, b), self.base_zero())
        entry = self.kappa.get((b, a))
        if entry is None:
            return self.base_zero()
        if self.base_kind == "group":
            return {k: -c for k, c in entry.items()}
        return -entry

    # ---- invariant checks ------------------------------------------------------

    def _kappa_mix(self, coeffs_a, coeffs_b) -> dict:
        """kappa extended bilinearly to vectors given by coordinate lists."""
        acc: dict = {}
        for a, ca in enumerate(coeffs_a):
            if ca == 0:
                continue
            for b, cb in enumerate(coeffs_b):
                if cb == 0:
                    continue
                self.base_scale_add(acc, self.kappa_full(a, b), ca * cb)
        return acc

    def _check_equivariance(self) -> None:
        unitv = [Fraction(0)] * self.v_dim
        if self.base_kind == "group":
            for g in range(self.base.order):
                m = self.v_action[g]
                ginv = self.base.inverse[g]
                for (a, b), entry in self.kappa.items():
                    lhs = self._kappa_mix([m[c, a] for c in range(self.v_dim)],
                                          [m[c, b] for c in range(self.v_dim)])
                    rhs: dict = {}
                    for k, c in entry.items():
                        conj = self.base.table[(self.base.table[(g, k)], ginv)]
                        rhs[conj] = rhs.get(conj, Fraction(0)) + c
                    rhs = {k: c for k, c in rhs.items() if c != 0}
                    if lhs != rhs:
                        raise NotEquivariant(
                            f"kappa not invariant under {self.base.labels[g]} at pair {(a, b)}")
        else:
            for xi in range(self.base.dim):
                m = self.v_action[xi]
                gen = EnvElement.generator(self.base, xi)
                for (a, b), entry in self.kappa.items():
                    lhs_terms = self._kappa_mix([m[c, a] for c in range(self.v_dim)],
                                                [Fraction(1) if c == b else Fraction(0) for c in range(self.v_dim)])
                    lhs = self.base_from_terms(lhs_terms)
                    lhs = lhs + self.base_from_terms(self._kappa_mix(
                        [Fraction(1) if c == a else Fraction(0) for c in range(self.v_dim)],
                        [m[c, b] for c in range(self.v_dim)]))
                    rhs = gen.bracket(entry)
                    if lhs != rhs:
                        raise NotEquivariant(
                            f"kappa not equivariant under {self.base.labels[xi]} at pair {(a, b)}")

    # ---- normal form machinery ---------------------------------------------------

    def zero(self) -> "HeckeElement":
        return HeckeElement(self, {})

    def one(self) -> "HeckeElement":
        return HeckeElement(self, {((0,) * self.v_dim, self.base_unit_key()): Fraction(1)})

    def gen(self, index: int) -> "HeckeElement":
        e = [0] * self.v_dim
        e[index] = 1
        return HeckeElement(self, {(tuple(e), self.base_unit_key()): Fraction(1)})

    def v_monomial(self, exp) -> "HeckeElement":
        return HeckeElement(self, {(tuple(exp), self.base_unit_key()): Fraction(1)})

    def base_element(self, elem) -> "HeckeElement":
        terms = {((0,) * self.v_dim, k): c for k, c in self.base_terms(elem)}
        return HeckeElement(self, terms)

    def _move_base_past_gen(self, bkey, k: int) -> dict[tuple[int, object], Fraction]:
        """b . v_k = sum_j v_j . b_j; returns (j, base key) -> coefficient."""
        ck = (bkey, k)
        cached = self._move_cache.get(ck)
        if cached is not None:
            return cached
        out: dict[tuple[int, object], Fraction] = {}
        if self.base_kind == "group":
            m = self.v_action[bkey]
            for j in range(self.v_dim):
                if m[j, k] != 0:
                    out[(j, bkey)] = m[j, k]
        else:
            word = self.base.word_of(bkey)
            if not word:
                out[(k, bkey)] = Fraction(1)
            else:
                xi, rest_exp = word[0], list(bkey)
                rest_exp[xi] -= 1
                rest = self._move_base_past_gen(tuple(rest_exp), k)
                m = self.v_action[xi]
                gen_word = (xi,)
                for (j, bk), c in rest.items():
                    # xi . (v_j b') = v_j (xi b') + (xi v_j) b'
                    for e2, c2 in self.base.straighten(gen_word + self.base.word_of(bk)).items():
                        key = (j, e2)
                        s = out.get(key, Fraction(0)) + c * c2
                        if s == 0:
                            out.pop(key, None)
                        else:
                            out[key] = s
                    for l in range(self.v_dim):
                        if m[l, j] != 0:
                            key = (l, bk)
                            s = out.get(key, Fraction(0)) + c * m[l, j]
                            if s == 0:
                                out.pop(key, None)
                            else:
                                out[key] = s
        self._move_cache[ck] = out
        return out

    def _insert(self, vexp: tuple[int, ...], j: int) -> dict:
        """(ordered V-monomial) . v_j in normal form; (vexp, bkey) -> coeff."""
        ck = (vexp, j)
        cached = self._insert_cache.get(ck)
        if cached is not None:
            return cached
        last = max((i for i, k in enumerate(vexp) if k), default=-1)
        if last <= j:
            e = list(vexp)
            e[j] += 1
            out = {(tuple(e), self.base_unit_key()): Fraction(1)}
        else:
            head = list(vexp)
            head[last] -= 1
            head_t = tuple(head)
            # v-word = head . v_last:  (head v_j) v_last + head kappa(last, j)
            part1 = HeckeElement(self, self._insert(head_t, j)).mul_gen(last)
            out = dict(part1.terms)
            for bk, c in self.base_terms(self.kappa_full(last, j)):
                key = (head_t, bk)
                s = out.get(key, Fraction(0)) + c
                if s == 0:
                    out.pop(key, None)
                else:
                    out[key] = s
        self._insert_cache[ck] = out
        return out

    def flatness_check(self) -> "FlatnessReport":
        """Resolve all degree-3 critical pairs: the Jacobi sum on strict triples."""
        witnesses = []
        for a in range(self.v_dim):
            for b in range(a + 1, self.v_dim):
                for c in range(b + 1, self.v_dim):
                    total = self.zero()
                    for (x, y, z) in ((a, b, c), (c, a, b), (b, c, a)):
                        kel = self.base_element(self.kappa_full(x, y))
                        zel = self.gen(z)
                        total = total + (kel * zel - zel * kel)
                    if total.terms:
                        witnesses.append((self.v_labels[a], self.v_labels[b], self.v_labels[c]))
        self._flat = not witnesses
        return FlatnessReport(flat_at_degree3=not witnesses, witnesses=witnesses)

    def is_flat(self) -> bool:
        if self._flat is None:
            self.flatness_check()
        return self._flat

    def pbw_dimension_census(self, dmax: int) -> list[int]:
        """Normal-form monomial counts by V-degree, base degree capped at dmax.

        Requires a certified flat algebra; compare against the undeformed
        census of SV (x) base computed independently.
        """
        if not self.is_flat():
            raise NotFlat("dimension census requires a flat algebra")
        if self.base_kind == "group":
            base_count = self.base.order
        else:
            gdim = self.base.dim
            base_count = sum(1 for k in range(dmax + 1)
                             for _ in itertools.combinations_with_replacement(range(gdim), k))
        counts = []
        for d in range(dmax + 1):
            vcount = sum(1 for _ in itertools.combinations_with_replacement(range(self.v_dim), d))
            counts.append(vcount * base_count)
        return counts

    def h0_census(self, dmax: int) -> list[int]:
        """The same counts for the undeformed algebra, by closed formula."""
        from math import comb
        if self.base_kind == "group":
            base_count = self.base.order
        else:
            g = self.base.dim
            base_count = sum(comb(k + g - 1, g - 1) for k in range(dmax + 1))
        return [comb(d + self.v_dim - 1, self.v_dim - 1) * base_count for d in range(dmax + 1)]

    def normal_form(self, tokens) -> "HeckeElement":
        """Normal form of a word, folding left to right.

        Tokens: ("v", index), ("b", base element), or an exact scalar.
        """
        elem = self.one()
        for tok in tokens:
            if isinstance(tok, tuple) and tok[0] == "v":
                elem = elem.mul_gen(tok[1])
            elif isinstance(tok, tuple) and tok[0] == "b":
                elem = elem.mul_base(tok[1])
            else:
                elem = Fraction(tok) * elem
        return elem


@dataclass
class FlatnessReport:
    flat_at_degree3: bool
    witnesses: list


class HeckeElement:
    """Normal-form element: dict (V-exponents, base monomial key) -> coefficient."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: HeckeAlgebra, terms: dict):
        self.algebra = algebra
        self.terms = {k: Fraction(c) for k, c in terms.items() if c != 0}

    def v_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(ve) for ve, _ in self.terms)

    def __add__(self, other: "HeckeElement") -> "HeckeElement":
        terms = dict(self.terms)
        for k, c in other.terms.items():
            s = terms.get(k, Fraction(0)) + c
            if s == 0:
                terms.pop(k, None)
            else:
                terms[k] = s
        return HeckeElement(self.algebra, terms)

    def __sub__(self, other):
        return self + Fraction(-1) * other

    def __rmul__(self, c):
        c = Fraction(c)
        return HeckeElement(self.algebra, {k: c * v for k, v in self.terms.items()})

    def __eq__(self, other):
        return isinstance(other, HeckeElement) and self.terms == other.terms

    def mul_gen(self, k: int) -> "HeckeElement":
        alg = self.algebra
        out: dict = {}
        for (ve, bk), c in self.terms.items():
            for (j, bk2), c2 in alg._move_base_past_gen(bk, k).items():
                for (ve3, bk3), c3 in alg._insert(ve, j).items():
                    for bk4, c4 in alg.base_mul_keys(bk3, bk2).items():
                        key = (ve3, bk4)
                        s = out.get(key, Fraction(0)) + c * c2 * c3 * c4
                        if s == 0:
                            out.pop(key, None)
                        else:
                            out[key] = s
        return HeckeElement(alg, out)

    def mul_base(self, belem) -> "HeckeElement":
        alg = self.algebra
        out: dict = {}
        for (ve, bk), c in self.terms.items():
            for bk2, c2 in alg.base_terms(belem):
                for bk3, c3 in alg.base_mul_keys(bk, bk2).items():
                    key = (ve, bk3)
                    s = out.get(key, Fraction(0)) + c * c2 * c3
                    if s == 0:
                        out.pop(key, None)
                    else:
                        out[key] = s
        return HeckeElement(alg, out)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Fraction(other) * self
        alg = self.algebra
        total = alg.zero()
        for (ve, bk), c in other.terms.items():
            piece = c * self
            for j, k in enumerate(ve):
                for _ in range(k):
                    piece = piece.mul_gen(j)
            if bk != alg.base_unit_key():
                if alg.base_kind == "group":
                    piece = piece.mul_base({bk: Fraction(1)})
                else:
                    piece = piece.mul_base(EnvElement(alg.base, {bk: Fraction(1)}))
            total = total + piece
        return total

    def to_text(self) -> str:
        from .exact import format_scalar
        if not self.terms:
            return "0"
        alg = self.algebra

        def base_text(bk):
            if alg.base_kind == "group":
                return alg.base.labels[bk]
            if not any(bk):
                return "1"
            return EnvElement(alg.base, {bk: Fraction(1)}).to_text()

        parts = []
        for (ve, bk), c in sorted(self.terms.items(),
                                  key=lambda t: (sum(t[0][0]), t[0][0], str(t[0][1])), reverse=True):
            vfac = "*".join(f"{lab}^{k}" if k > 1 else lab
                            for lab, k in zip(alg.v_labels, ve) if k)
            bt = base_text(bk)
            mono = "*".join(x for x in (vfac, bt if bt not in ("e", "1") else "") if x)
            if not mono:
                parts.append(format_scalar(c))
            else:
                parts.append(mono if c == 1 else f"{format_scalar(c)}*{mono}")
        return " + ".join(parts)

    def __repr__(self):
        return f"HeckeElement({self.to_text()!r})"


# ---- constructors ------------------------------------------------------------


def reflections_on(group: FiniteGroup, h_rep: dict[int, np.ndarray]) -> list[int]:
    """Indices of elements acting on h with rank(1 - g) exactly 1."""
    out = []
    d = next(iter(h_rep.values())).shape[0]
    for g in range(group.order):
        if rank(identity(d) - h_rep[g]) == 1:
            out.append(g)
    return out


def _group_v_action_cherednik(group: FiniteGroup, h_rep):
    """Block action on V = h* then h: inverse transpose on the dual block."""
    d = next(iter(h_rep.values())).shape[0]
    out = {}
    for g in range(group.order):
        m = zeros(2 * d, 2 * d)
        m[:d, :d] = _dual_action(h_rep[g])
        m[d:, d:] = h_rep[g]
        out[g] = m
    return out


def cherednik_finite(group: FiniteGroup, t, c, h_rep=None) -> HeckeAlgebra:
    """Rational Cherednik presentation for a finite group acting on h.

    [y_j, x_i] = t (y_j, x_i) + sum_s c_s (y_j, (1 - s) x_i) s over the
    reflections s.  ``c`` is a scalar (same coefficient on the whole
    reflection set) or a dict from element label to coefficient; the
    equivariance check enforces class invariance either way.
    """
    if h_rep is None:
        h_rep = group.rep
    d = next(iter(h_rep.values())).shape[0]
    t = Fraction(t)
    refl = reflections_on(group, h_rep)
    if isinstance(c, dict):
        cmap = {group.index_of(k): Fraction(v) for k, v in c.items()}
    else:
        cmap = {s: Fraction(c) for s in refl}
    labels = [f"x{i+1}" for i in range(d)] + [f"y{i+1}" for i in range(d)]
    roles = ["x"] * d + ["y"] * d
    kappa = {}
    for i in range(d):
        for j in range(d):
            entry: dict[int, Fraction] = {}
            if t != 0 and i == j:
                entry[group.identity_index] = -t
            for s, cs in cmap.items():
                sinv = inverse(h_rep[s])
                val = (Fraction(1) if i == j else Fraction(0)) - sinv[i, j]
                if cs != 0 and val != 0:
                    entry[s] = entry.get(s, Fraction(0)) - cs * val
            entry = {k: v for k, v in entry.items() if v != 0}
            if entry:
                # kappa(x_i, y_j) = -[y_j, x_i]
                kappa[(i, d + j)] = entry
    H = HeckeAlgebra("group", group, labels, _group_v_action_cherednik(group, h_rep),
                     kappa, roles=roles)
    H.t_scalar = t
    H.c_base = dict(cmap)
    return H


def symplectic_finite(group: FiniteGroup, jform: np.ndarray, t, c) -> HeckeAlgebra:
    """Symplectic reflection presentation: [v_a, v_b] = omega(a,b) t + sum_s c_s omega((1-s)a, (1-s)b) s."""
    d = jform.shape[0]
    t = Fraction(t)
    srefl = [g for g in range(group.order)
             if g != group.identity_index and rank(identity(d) - group.rep[g]) <= 2]
    if isinstance(c, dict):
        cmap = {group.index_of(k): Fraction(v) for k, v in c.items()}
    else:
        cmap = {s: Fraction(c) for s in srefl}
    for g in range(group.order):
        m = group.rep[g]
        if not matrices_equal(m.T @ jform @ m, jform):
            raise ValueError("representation is not symplectic for the given form")
    labels = [f"v{i+1}" for i in range(d)]
    kappa = {}
    for a in range(d):
        for b in range(a + 1, d):
            entry: dict[int, Fraction] = {}
            if t != 0 and jform[a, b] != 0:
                entry[group.identity_index] = jform[a, b] * t
            for s, cs in cmap.items():
                one_minus = identity(d) - group.rep[s]
                w = (one_minus.T @ jform @ one_minus)[a, b]
                if cs != 0 and w != 0:
                    entry[s] = entry.get(s, Fraction(0)) + cs * w
            entry = {k: v for k, v in entry.items() if v != 0}
            if entry:
                kappa[(a, b)] = entry
    return HeckeAlgebra("group", group, labels, dict(group.rep), kappa)


def infinitesimal_gl(n: int, beta: BetaParameter) -> HeckeAlgebra:
    """H_beta over U(gl_n): [y_j, x_i] = sum_m beta_m r_m(x_i, y_j)."""
    spec = LieAlgebraSpec.gl(n)
    table = kappa_env_table_gl(n, beta, spec)
    labels = [f"x{i+1}" for i in range(n)] + [f"y{i+1}" for i in range(n)]
    roles = ["x"] * n + ["y"] * n
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
            entry = -table[(i, j)]
            if not entry.is_zero():
                kappa[(i, n + j)] = entry
    H = HeckeAlgebra("env", spec, labels, v_action, kappa, roles=roles)
    from .genfun import beta_to_tc
    H.t_scalar, H.euler_derivs, H.c_base = beta_to_tc(n, beta, spec)
    return H


def infinitesimal_sp(n: int, beta: BetaParameter) -> HeckeAlgebra:
    """H_beta over U(sp_{2n}) on the Darboux generators x1, y1, x2, y2, ..."""
    spec = LieAlgebraSpec.sp(n)
    table = kappa_env_table_sp(n, beta, spec)
    labels = []
    for i in range(n):
        labels += [f"x{i+1}", f"y{i+1}"]
    kappa = {k: v for k, v in table.items() if not v.is_zero()}
    return HeckeAlgebra("env", spec, labels, list(spec.basis_matrices), kappa)


def trivial_deformation(base_kind: str, base, v_dim: int, v_action=None) -> HeckeAlgebra:
    """H_0 = SV (semidirect) base, kappa = 0."""
    labels = [f"v{i+1}" for i in range(v_dim)]
    if v_action is None:
        if base_kind == "group":
            v_action = {g: identity(v_dim) for g in range(base.order)}
        else:
            v_action = [zeros(v_dim, v_dim) for _ in range(base.dim)]
    return HeckeAlgebra(base_kind, base, labels, v_action, {})


def sra_cherednik_bridge(group: FiniteGroup, h_rep=None) -> bool:
    """Check omega((1-g)x, (1-g)y) = Tr(1-g)|_h (y, (1-g)x) on every reflection.

    Both sides are evaluated on all basis pairs x in h*, y in h; elements
    with rank(1 - g) = 0 satisfy it trivially (both sides vanish).
    """
    if h_rep is None:
        h_rep = group.rep
    d = next(iter(h_rep.values())).shape[0]
    eye = identity(d)
    for g in range(group.order):
        m = h_rep[g]
        if rank(eye - m) > 1:
            continue
        phi = sum(eye[i, i] - m[i, i] for i in range(d))
        dualm = _dual_action(m)
        lhs_mat = (eye - dualm).T @ (eye - m)     # entry (i, j): pairing of (1-g)x_i with (1-g)y_j
        rhs_mat = (eye - dualm).T * Fraction(1)
        for i in range(d):
            for j in range(d):
                if lhs_mat[i, j] != phi * rhs_mat[i, j]:
                    return False
    return True


# ---- ready-made finite groups -------------------------------------------------


def cyclic_two_group() -> FiniteGroup:
    """Z/2 acting on a 1-dimensional h by the sign representation."""
    from .linalg import fmat
    return FiniteGroup.from_matrix_generators({"s": fmat([[-1]])})


def dihedral_order6_group() -> FiniteGroup:
    """The dihedral group of order 6 on its rational 2-dimensional reflection module."""
    from .linalg import fmat
    s1 = fmat([[-1, 1], [0, 1]])
    s2 = fmat([[1, 0], [1, -1]])
    return FiniteGroup.from_matrix_generators({"s1": s1, "s2": s2})
