"""Concrete Lie algebras and exact universal enveloping arithmetic.

A ``LieAlgebraSpec`` fixes an ordered basis, structure constants, and the
matrices of the defining representation.  Built-in families:

* gl(n): basis E_ij in lexicographic (i, j) order, acting on C^n;
* sl(n): lower matrix units, then the diagonal differences H_k, then upper
  units (for n = 2 this is the classical f < h < e order);
* so(d): skew units A_ij = E_ij - E_ji (i < j), symmetric form = identity;
* sp(n), meaning sp_{2n}: the chart A = J^{-1} S with S symmetric, J the
  blockwise Darboux form, basis B_kl indexed by k <= l.

``EnvElement`` is an element of U(g) held in PBW normal form over the fixed
basis order; multiplication straightens words through the structure
constants (results are cached per spec).  ``function_to_element`` converts
a polynomial function on g (in the coefficient coordinates of the basis)
into an element of S(g) via trace duality, and ``symmetrize`` maps S(g)
into U(g) by averaging ordered products over permutations.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .exact import SparsePoly, parse_scalar
from .linalg import fmat, identity, inverse, is_zero_matrix, matrices_equal, rank, zeros

__all__ = [
    "LieAlgebraSpec",
    "EnvElement",
    "symmetrize",
    "function_to_element",
    "symmetrize_function",
    "killing_form",
    "ClosureReport",
    "lie_closure_check",
    "phi_iso_check",
    "coadjoint_derivation",
]


class SpecMismatch(ValueError):
    """Operands built over different Lie algebra specs."""


def _bracket_matrix(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return a @ b - b @ a


class LieAlgebraSpec:
    """Ordered basis + structure constants + defining representation."""

    def __init__(self, family: str, n: int, labels: tuple[str, ...],
                 basis_matrices: list[np.ndarray] | None,
                 structure: dict[tuple[int, int], dict[int, Fraction]] | None = None,
                 check: bool = True):
        self.family = family
        self.n = n
        self.labels = tuple(labels)
        self.dim = len(labels)
        self.basis_matrices = basis_matrices
        if structure is None:
            if basis_matrices is None:
                raise ValueError("need structure constants or representation matrices")
            structure = self._structure_from_matrices()
        self.structure = structure
        self._straighten_cache: dict[tuple[int, ...], dict[tuple[int, ...], Fraction]] = {}
        self._gram_inv = None
        if check:
            self._check_jacobi()
            if basis_matrices is not None:
                self._check_representation()

    # ---- construction helpers -------------------------------------------

    def _coords(self, m: np.ndarray) -> list[Fraction]:
        """Coefficients of a matrix in the span of the basis matrices."""
        from .linalg import solve
        cols = np.empty((m.size, self.dim), dtype=object)
        for k, b in enumerate(self.basis_matrices):
            cols[:, k] = b.reshape(-1)
        x = solve(cols, m.reshape(-1))
        if x is None:
            raise ValueError("matrix is not in the span of the basis")
        return list(x)

    def _structure_from_matrices(self):
        structure: dict[tuple[int, int], dict[int, Fraction]] = {}
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                br = _bracket_matrix(self.basis_matrices[i], self.basis_matrices[j])
                coords = self._coords(br)
                entry = {k: c for k, c in enumerate(coords) if c != 0}
                if entry:
                    structure[(i, j)] = entry
        return structure

    def bracket_coords(self, i: int, j: int) -> dict[int, Fraction]:
        """[B_i, B_j] expanded over the basis, any index order."""
        if i == j:
            return {}
        if i < j:
            return self.structure.get((i, j), {})
        return {k: -c for k, c in self.structure.get((j, i), {}).items()}

    def bracket_vectors(self, u: list[Fraction], v: list[Fraction]) -> list[Fraction]:
        out = [Fraction(0)] * self.dim
        for i, a in enumerate(u):
            if a == 0:
                continue
            for j, b in enumerate(v):
                if b == 0:
                    continue
                for k, c in self.bracket_coords(i, j).items():
                    out[k] += a * b * c
        return out

    def _check_jacobi(self) -> None:
        d = self.dim
        for i in range(d):
            for j in range(i + 1, d):
                for k in range(j + 1, d):
                    acc = [Fraction(0)] * d
                    for (a, b, c) in ((i, j, k), (j, k, i), (k, i, j)):
                        inner = self.bracket_coords(a, b)
                        for m, cm in inner.items():
                            for p, cp in self.bracket_coords(m, c).items():
                                acc[p] += cm * cp
                    if any(x != 0 for x in acc):
                        raise ValueError(f"structure constants fail the Jacobi identity at triple {(i, j, k)}")

    def _check_representation(self) -> None:
        for (i, j), entry in self.structure.items():
            br = _bracket_matrix(self.basis_matrices[i], self.basis_matrices[j])
            expect = zeros(*br.shape)
            for k, c in entry.items():
                expect = expect + c * self.basis_matrices[k]
            if not matrices_equal(br, expect):
                raise ValueError(f"representation does not satisfy the bracket at {(i, j)}")

    # ---- families ---------------------------------------------------------

    @classmethod
    def gl(cls, n: int) -> "LieAlgebraSpec":
        labels, mats = [], []
        for i in range(n):
            for j in range(n):
                labels.append(f"E{i+1}{j+1}")
                m = zeros(n, n)
                m[i, j] = Fraction(1)
                mats.append(m)
        return cls("gl", n, tuple(labels), mats)

    @classmethod
    def sl(cls, n: int) -> "LieAlgebraSpec":
        labels, mats = [], []
        for i in range(n):
            for j in range(n):
                if i > j:
                    m = zeros(n, n)
                    m[i, j] = Fraction(1)
                    labels.append(f"E{i+1}{j+1}")
                    mats.append(m)
        for k in range(n - 1):
            m = zeros(n, n)
            m[k, k] = Fraction(1)
            m[k + 1, k + 1] = Fraction(-1)
            labels.append(f"H{k+1}")
            mats.append(m)
        for i in range(n):
            for j in range(n):
                if i < j:
                    m = zeros(n, n)
                    m[i, j] = Fraction(1)
                    labels.append(f"E{i+1}{j+1}")
                    mats.append(m)
        if n == 2:
            labels = ["f", "h", "e"]
        return cls("sl", n, tuple(labels), mats)

    @classmethod
    def so(cls, d: int) -> "LieAlgebraSpec":
        labels, mats = [], []
        for i in range(d):
            for j in range(i + 1, d):
                m = zeros(d, d)
                m[i, j] = Fraction(1)
                m[j, i] = Fraction(-1)
                labels.append(f"A{i+1}{j+1}")
                mats.append(m)
        return cls("so", d, tuple(labels), mats)

    @staticmethod
    def symplectic_form(n: int) -> np.ndarray:
        """Block Darboux form J on C^{2n}: pairs (x_i, y_i) with omega(x_i, y_i) = 1."""
        j = zeros(2 * n, 2 * n)
        for i in range(n):
            j[2 * i, 2 * i + 1] = Fraction(1)
            j[2 * i + 1, 2 * i] = Fraction(-1)
        return j

    @classmethod
    def sp(cls, n: int) -> "LieAlgebraSpec":
        """sp_{2n} in the chart A = J^{-1} S, S symmetric (free coordinates)."""
        d = 2 * n
        jform = cls.symplectic_form(n)
        jinv = inverse(jform)
        labels, mats = [], []
        for k in range(d):
            for l in range(k, d):
                s = zeros(d, d)
                s[k, l] = Fraction(1)
                if l != k:
                    s[l, k] = Fraction(1)
                labels.append(f"B{k+1}{l+1}")
                mats.append(jinv @ s)
        return cls("sp", n, tuple(labels), mats)

    @classmethod
    def custom(cls, labels, structure_json: dict, basis_matrices=None) -> "LieAlgebraSpec":
        labels = tuple(labels)
        index = {lab: i for i, lab in enumerate(labels)}
        structure: dict[tuple[int, int], dict[int, Fraction]] = {}
        for key, entry in structure_json.items():
            a, b = key.split(",")
            i, j = index[a.strip()], index[b.strip()]
            if i >= j:
                raise ValueError("structure keys must name pairs in basis order")
            structure[(i, j)] = {index[k]: parse_scalar(v) for k, v in entry.items()}
        return cls("custom", len(labels), labels, basis_matrices, structure)

    @classmethod
    def from_json_obj(cls, obj: dict) -> "LieAlgebraSpec":
        fam = obj["family"]
        if fam == "custom":
            return cls.custom(obj["labels"], obj.get("constants", {}),
                              [fmat(m) for m in obj["rep"]] if "rep" in obj else None)
        n = int(obj["n"])
        return {"gl": cls.gl, "sl": cls.sl, "so": cls.so, "sp": cls.sp}[fam](n)

    # ---- representation bookkeeping ----------------------------------------

    @property
    def rep_dim(self) -> int:
        return self.basis_matrices[0].shape[0]

    def generic_matrix(self) -> tuple[tuple[str, ...], np.ndarray]:
        """Generic element A = sum_k t_k B_k with SparsePoly entries.

        The coordinates t_k are named by the basis labels; a polynomial in
        them is a polynomial function on g.
        """
        vars = self.labels
        d = self.rep_dim
        a = np.empty((d, d), dtype=object)
        for i in range(d):
            for j in range(d):
                p = SparsePoly.zero(vars)
                for k, b in enumerate(self.basis_matrices):
                    if b[i, j] != 0:
                        p = p + b[i, j] * SparsePoly.variable(vars, self.labels[k])
                a[i, j] = p
        return vars, a

    def gram_inverse(self) -> np.ndarray:
        """Inverse Gram matrix of the trace form Tr(B_k B_l) on the basis."""
        if self._gram_inv is None:
            g = zeros(self.dim, self.dim)
            for k in range(self.dim):
                for l in range(self.dim):
                    g[k, l] = np.trace(self.basis_matrices[k] @ self.basis_matrices[l])
            self._gram_inv = inverse(g)
        return self._gram_inv

    # ---- PBW straightening ---------------------------------------------------

    def straighten(self, word: tuple[int, ...]) -> dict[tuple[int, ...], Fraction]:
        """PBW normal form of a product of basis letters.

        Returns exponent-tuple -> coefficient.  Deterministic: always
        resolves the first adjacent inversion, and the result is cached.
        """
        cached = self._straighten_cache.get(word)
        if cached is not None:
            return cached
        pos = next((i for i in range(len(word) - 1) if word[i] > word[i + 1]), None)
        if pos is None:
            exp = [0] * self.dim
            for w in word:
                exp[w] += 1
            result = {tuple(exp): Fraction(1)}
        else:
            swapped = word[:pos] + (word[pos + 1], word[pos]) + word[pos + 2:]
            result = dict(self.straighten(swapped))
            for k, c in self.bracket_coords(word[pos], word[pos + 1]).items():
                sub = self.straighten(word[:pos] + (k,) + word[pos + 2:])
                for exp, c2 in sub.items():
                    s = result.get(exp, Fraction(0)) + c * c2
                    if s == 0:
                        result.pop(exp, None)
                    else:
                        result[exp] = s
        self._straighten_cache[word] = result
        return result

    def word_of(self, exp: tuple[int, ...]) -> tuple[int, ...]:
        out: list[int] = []
        for i, k in enumerate(exp):
            out.extend([i] * k)
        return tuple(out)


@dataclass
class EnvElement:
    """Element of U(g) in PBW normal form over the spec's basis order."""

    spec: LieAlgebraSpec
    terms: dict[tuple[int, ...], Fraction] = field(default_factory=dict)

    def __post_init__(self):
        self.terms = {tuple(e): Fraction(c) for e, c in self.terms.items() if c != 0}

    @classmethod
    def zero(cls, spec) -> "EnvElement":
        return cls(spec, {})

    @classmethod
    def one(cls, spec) -> "EnvElement":
        return cls(spec, {(0,) * spec.dim: Fraction(1)})

    @classmethod
    def generator(cls, spec, index: int) -> "EnvElement":
        exp = [0] * spec.dim
        exp[index] = 1
        return cls(spec, {tuple(exp): Fraction(1)})

    def _check(self, other: "EnvElement"):
        if self.spec is not other.spec:
            raise SpecMismatch("elements over different Lie algebra specs")

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def __add__(self, other):
        self._check(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            s = terms.get(e, Fraction(0)) + c
            if s == 0:
                terms.pop(e, None)
            else:
                terms[e] = s
        return EnvElement(self.spec, terms)

    def __sub__(self, other):
        return self + (-1) * other

    def __neg__(self):
        return Fraction(-1) * self

    def __rmul__(self, c):
        c = Fraction(c)
        return EnvElement(self.spec, {e: c * k for e, k in self.terms.items()})

    def scale(self, c) -> "EnvElement":
        return Fraction(c) * self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Fraction(other) * self
        self._check(other)
        spec = self.spec
        terms: dict[tuple[int, ...], Fraction] = {}
        for e1, c1 in self.terms.items():
            w1 = spec.word_of(e1)
            for e2, c2 in other.terms.items():
                for e, c in spec.straighten(w1 + spec.word_of(e2)).items():
                    s = terms.get(e, Fraction(0)) + c1 * c2 * c
                    if s == 0:
                        terms.pop(e, None)
                    else:
                        terms[e] = s
        return EnvElement(spec, terms)

    def bracket(self, other: "EnvElement") -> "EnvElement":
        return self * other - other * self

    def __eq__(self, other):
        if not isinstance(other, EnvElement):
            return NotImplemented
        return self.spec is other.spec and self.terms == other.terms

    def act(self, rep_mats: list[np.ndarray]) -> np.ndarray:
        """Matrix of this element in a representation given on the basis.

        A PBW monomial B_1^{e_1}...B_d^{e_d} acts by the matrix product in
        the same order.
        """
        dim = rep_mats[0].shape[0] if rep_mats else 1
        total = zeros(dim, dim)
        for exp, c in self.terms.items():
            m = identity(dim)
            for i, k in enumerate(exp):
                for _ in range(k):
                    m = m @ rep_mats[i]
            total = total + c * m
        return total

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        from .exact import format_scalar, _grlex_key
        parts = []
        for exp, c in sorted(self.terms.items(), key=lambda t: _grlex_key(t[0]), reverse=True):
            factors = [f"{lab}^{k}" if k > 1 else lab
                       for lab, k in zip(self.spec.labels, exp) if k]
            cs = format_scalar(c)
            if not factors:
                parts.append(cs)
                continue
            mono = "*".join(factors)
            parts.append(mono if c == 1 else (f"-{mono}" if c == -1 else f"{cs}*{mono}"))
        text = parts[0]
        for p in parts[1:]:
            text += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return text

    def __repr__(self):
        return f"EnvElement({self.to_text()!r})"


def symmetrize(spec: LieAlgebraSpec, sym: SparsePoly) -> EnvElement:
    """Symmetrization map S(g) -> U(g).

    The input is a polynomial in the basis labels read as commuting copies
    of the basis elements.  A monomial of degree m is sent to the average
    of its m! ordered products, straightened to PBW form.
    """
    if sym.vars != spec.labels:
        raise SpecMismatch("polynomial variables do not match the basis labels")
    out = EnvElement.zero(spec)
    for exp, coeff in sym.terms.items():
        word = spec.word_of(exp)
        m = len(word)
        if m == 0:
            out = out + coeff * EnvElement.one(spec)
            continue
        # distinct permutations, each standing for prod(multiplicities!) equal words
        weight = Fraction(1)
        for k in exp:
            for i in range(2, k + 1):
                weight *= i
        total: dict[tuple[int, ...], Fraction] = {}
        for perm in set(itertools.permutations(word)):
            for e, c in spec.straighten(perm).items():
                total[e] = total.get(e, Fraction(0)) + c
        fact = Fraction(1)
        for i in range(2, m + 1):
            fact *= i
        scale = coeff * weight / fact
        out = out + EnvElement(spec, {e: c * scale for e, c in total.items()})
    return out


def function_to_element(spec: LieAlgebraSpec, f: SparsePoly) -> SparsePoly:
    """Convert a polynomial function on g into an element of S(g).

    Functions are written in the coefficient coordinates t_k of the basis;
    the trace form Tr(AB) on the defining representation identifies t_k
    with the dual element sum_l (G^{-1})_{kl} B_l.  For gl_n this is the
    classical a_ij -> E_ji."""
    ginv = spec.gram_inverse()
    gens = SparsePoly.gens(spec.labels)
    images = {}
    for k, lab in enumerate(spec.labels):
        img = SparsePoly.zero(spec.labels)
        for l in range(spec.dim):
            if ginv[k, l] != 0:
                img = img + ginv[k, l] * gens[l]
        images[lab] = img
    return f.subs(images)


def symmetrize_function(spec: LieAlgebraSpec, f: SparsePoly) -> EnvElement:
    """Trace-dualize a polynomial function on g and symmetrize into U(g)."""
    return symmetrize(spec, function_to_element(spec, f))


def coadjoint_derivation(spec: LieAlgebraSpec, xi: int, f: SparsePoly) -> SparsePoly:
    """Action of a basis element on polynomial functions of g.

    (xi . F)(A) = -dF_A([B_xi, A]); as a derivation in the coordinates it
    sends t_m to -sum_k c_{xi,k}^m t_k.
    """
    gens = SparsePoly.gens(spec.labels)
    out = SparsePoly.zero(spec.labels)
    for m in range(spec.dim):
        df = f.partial(spec.labels[m])
        if df.is_zero():
            continue
        img = SparsePoly.zero(spec.labels)
        for k in range(spec.dim):
            c = spec.bracket_coords(xi, k).get(m, Fraction(0))
            if c != 0:
                img = img + c * gens[k]
        if not img.is_zero():
            out = out - df * img
    return out


def killing_form(spec: LieAlgebraSpec) -> np.ndarray:
    """Killing form B(a, b) = Tr(ad a . ad b) on the basis, exactly."""
    d = spec.dim
    ads = []
    for i in range(d):
        m = zeros(d, d)
        for k in range(d):
            for p, c in spec.bracket_coords(i, k).items():
                m[p, k] = c
        ads.append(m)
    b = zeros(d, d)
    for i in range(d):
        for j in range(i, d):
            t = np.trace(ads[i] @ ads[j])
            b[i, j] = t
            b[j, i] = t
    return b


class NotEquivariant(ValueError):
    """A pairing failed its equivariance check."""


@dataclass
class ClosureReport:
    is_lie_algebra: bool
    killing_rank: int | None
    semisimple: bool
    dim: int
    witness: tuple[int, int, int] | None = None


def lie_closure_check(k_spec: LieAlgebraSpec, e_action: list[np.ndarray],
                      kappa: dict[tuple[int, int], list[Fraction]]) -> ClosureReport:
    """Test whether k + E with bracket extended by a skew pairing closes.

    ``e_action[i]`` is the matrix of the i-th k-basis element on E, and
    ``kappa[(a, b)]`` (a < b over the E-basis) gives the k-coordinates of
    the bracket of two E-elements.  Equivariance of kappa is checked first;
    then the Jacobi identity on all basis triples of k + E.  When the
    bracket closes, the report carries the exact Killing rank and the
    semisimplicity flag (rank equal to the dimension).
    """
    dk = k_spec.dim
    de = e_action[0].shape[0]

    def kap(a: int, b: int) -> list[Fraction]:
        if a == b:
            return [Fraction(0)] * dk
        if a < b:
            return list(kappa.get((a, b), [Fraction(0)] * dk))
        return [-c for c in kappa.get((b, a), [Fraction(0)] * dk)]

    # equivariance: [xi, kappa(u, v)] = kappa(xi u, v) + kappa(u, xi v)
    for xi in range(dk):
        m = e_action[xi]
        for a in range(de):
            for b in range(a + 1, de):
                lhs = k_spec.bracket_vectors(
                    [Fraction(1) if i == xi else Fraction(0) for i in range(dk)], kap(a, b))
                rhs = [Fraction(0)] * dk
                for c in range(de):
                    if m[c, a] != 0:
                        rhs = [r + m[c, a] * x for r, x in zip(rhs, kap(c, b))]
                    if m[c, b] != 0:
                        rhs = [r + m[c, b] * x for r, x in zip(rhs, kap(a, c))]
                if lhs != rhs:
                    raise NotEquivariant(f"kappa is not equivariant at (xi={xi}, pair=({a},{b}))")

    dim = dk + de
    structure: dict[tuple[int, int], dict[int, Fraction]] = {}

    def put(i, j, coords):
        entry = {k: c for k, c in enumerate(coords) if c != 0}
        if entry:
            structure[(i, j)] = entry

    for i in range(dk):
        for j in range(i + 1, dk):
            coords = [Fraction(0)] * dim
            for k, c in k_spec.bracket_coords(i, j).items():
                coords[k] = c
            put(i, j, coords)
        for b in range(de):
            coords = [Fraction(0)] * dim
            for c in range(de):
                coords[dk + c] = e_action[i][c, b]
            put(i, dk + b, coords)
    for a in range(de):
        for b in range(a + 1, de):
            coords = list(kap(a, b)) + [Fraction(0)] * de
            put(dk + a, dk + b, coords)

    try:
        g = LieAlgebraSpec("closure", 0,
                           tuple(f"g{i}" for i in range(dim)), None, structure)
    except ValueError as err:
        txt = str(err)
        witness = None
        if "triple" in txt:
            witness = tuple(int(x) for x in txt.split("(")[1].rstrip(")").split(","))
        return ClosureReport(False, None, False, dim, witness)
    kf = killing_form(g)
    r = rank(kf)
    return ClosureReport(True, r, r == dim, dim)


def phi_block_maps(n: int):
    """The embedding of h + h* + gl_n into sl_{n+1} by block matrices.

    y in h goes to the last column, x in h* to the last row, and A in gl_n
    to its upper block minus Tr(A)/(n+1) times the identity.
    """
    size = n + 1

    def phi_y(i: int) -> np.ndarray:
        m = zeros(size, size)
        m[i, n] = Fraction(1)
        return m

    def phi_x(i: int) -> np.ndarray:
        m = zeros(size, size)
        m[n, i] = Fraction(1)
        return m

    def phi_gl(a: np.ndarray) -> np.ndarray:
        m = zeros(size, size)
        m[:n, :n] = a
        t = np.trace(a) * Fraction(1, n + 1)
        for i in range(size):
            m[i, i] -= t
        return m

    return phi_y, phi_x, phi_gl


def phi_iso_check(n: int, flip_x_sign: bool = False) -> bool:
    """Verify bracket preservation of the block embedding on all basis pairs.

    The source bracket is [A, y] = Ay, [A, x] = -A^T x, [y, x] = y (x) x +
    (x, y) Id, with h and h* commuting among themselves.  Setting
    ``flip_x_sign`` negates the h* embedding and must break the check.
    """
    phi_y, phi_x, phi_gl = phi_block_maps(n)
    sx = Fraction(-1) if flip_x_sign else Fraction(1)

    def unit(i, j):
        m = zeros(n, n)
        m[i, j] = Fraction(1)
        return m

    # source basis: ("y", i), ("x", i), ("A", i, j)
    basis = [("y", i) for i in range(n)] + [("x", i) for i in range(n)] + \
            [("A", i, j) for i in range(n) for j in range(n)]

    def phi(elem) -> np.ndarray:
        kind = elem[0]
        if kind == "y":
            return phi_y(elem[1])
        if kind == "x":
            return sx * phi_x(elem[1])
        return phi_gl(unit(elem[1], elem[2]))

    def source_bracket(u, v) -> np.ndarray:
        """phi applied to [u, v] computed in the source algebra."""
        (ku, *au), (kv, *av) = u, v
        if ku == "y" and kv == "y":
            return zeros(n + 1, n + 1)
        if ku == "x" and kv == "x":
            return zeros(n + 1, n + 1)
        if ku == "y" and kv == "x":
            i, j = au[0], av[0]
            res = unit(i, j)
            if i == j:
                res = res + identity(n)
            return phi_gl(res)
        if ku == "x" and kv == "y":
            return -source_bracket(v, u)
        if ku == "A" and kv == "y":
            a = unit(au[0], au[1])
            col = a @ fmat([[1 if t == av[0] else 0] for t in range(n)])
            m = zeros(n + 1, n + 1)
            for t in range(n):
                m[t, n] = col[t, 0]
            return m
        if ku == "y" and kv == "A":
            return -source_bracket(v, u)
        if ku == "A" and kv == "x":
            a = unit(au[0], au[1])
            row = -(a.T @ fmat([[1 if t == av[0] else 0] for t in range(n)]))
            m = zeros(n + 1, n + 1)
            for t in range(n):
                m[n, t] = sx * row[t, 0]
            return m
        if ku == "x" and kv == "A":
            return -source_bracket(v, u)
        # gl with gl
        a = unit(au[0], au[1])
        b = unit(av[0], av[1])
        return phi_gl(a @ b - b @ a)

    for u in basis:
        for v in basis:
            if not matrices_equal(source_bracket(u, v), _bracket_matrix(phi(u), phi(v))):
                return False
    return True


def spec_to_json_obj(spec: LieAlgebraSpec) -> dict:
    if spec.family in ("gl", "sl", "so", "sp"):
        return {"family": spec.family, "n": spec.n}
    return {
        "family": "custom",
        "labels": list(spec.labels),
        "constants": {
            f"{spec.labels[i]},{spec.labels[j]}": {spec.labels[k]: str(c) for k, c in entry.items()}
            for (i, j), entry in spec.structure.items()
        },
    }
