"""McKay graphs and the finite-dimensionality checker for wreath products.

For a reductive subgroup of SL_2 the McKay graph has one vertex per
irreducible and joins i to j with the multiplicity of Y_i inside L (x) Y_j,
L the tautological two-dimensional module.  Built-in subgroups: cyclic
groups and binary dihedral groups (exact character tables over a
cyclotomic field), the torus GL_1 (weight arithmetic, the A-infinity
chain), and the graph-level conventions for the normalizer of the torus
(D-infinity) and SL_2 itself (the half chain A_inf/2).

A representation datum (occupation numbers n_i, Young diagrams W_i, a
coupling k on the permutation class, and a class distribution c on the
subgroup) extends to the wreath-product algebra exactly when

  (1) every W_i is a rectangle a_i x b_i,
  (2) occupied vertices are pairwise non-adjacent in the McKay graph,
  (3) dim Y_i + 2 k (b_i - a_i) + (c, chi_{Y_i}(g) det(1 - g|_L)) = 0
      for every occupied vertex i,

and the checker reports precisely which condition fails.  For g in SL_2
the pairing uses det(1 - g|_L) = 2 - chi_L(g); for GL_1 it pairs the
distribution data on the class parameter against lambda^i (2 - lambda -
lambda^{-1}).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .category_o import DistributionData
from .cyclotomic import Cyclotomic

__all__ = [
    "NotRectangular",
    "GammaDescriptor",
    "cyclic_gamma",
    "binary_dihedral_gamma",
    "gl1_gamma",
    "McKayGraph",
    "mckay_graph",
    "rectangular_check",
    "condition3_pairing",
    "WreathSpec",
    "montarani_check",
]


class NotRectangular(ValueError):
    pass


@dataclass
class GammaDescriptor:
    """A finite subgroup of SL_2 through its exact character table.

    ``table[i][c]`` is the value of the i-th irreducible on the c-th
    conjugacy class as a Cyclotomic; ``chi_l`` is the character of the
    tautological 2-dimensional module, and class 0 is the identity.
    """

    name: str
    order: int
    field_order: int
    class_labels: list[str]
    class_sizes: list[int]
    irrep_labels: list[str]
    dims: list[int]
    table: list[list[Cyclotomic]]
    chi_l: list[Cyclotomic]

    def character_orthogonality_check(self) -> bool:
        n = len(self.irrep_labels)
        for i in range(n):
            for j in range(n):
                acc = Cyclotomic.rational(self.field_order, 0)
                for c, size in enumerate(self.class_sizes):
                    acc = acc + size * self.table[i][c] * self.table[j][c].conjugate()
                val = acc.as_rational()
                if val != (self.order if i == j else 0):
                    return False
        return True


def cyclic_gamma(l: int) -> GammaDescriptor:
    """Z/l embedded as diag(zeta, zeta^{-1}); irreducibles are the weights."""
    z = lambda p: Cyclotomic.zeta(l, p)
    classes = [f"a^{k}" for k in range(l)]
    table = [[z(i * k) for k in range(l)] for i in range(l)]
    chi_l = [z(k) + z(-k) for k in range(l)]
    return GammaDescriptor(f"Z/{l}", l, l, classes, [1] * l,
                           [f"Y{i}" for i in range(l)], [1] * l, table, chi_l)


def binary_dihedral_gamma(m: int) -> GammaDescriptor:
    """Binary dihedral group of order 4m (m >= 2): a^{2m} = 1, b^2 = a^m.

    Classes: 1, a^m, the pairs {a^k, a^{-k}} for 0 < k < m, and the two
    b-cosets.  The tautological module is the 2-dimensional V_1.
    """
    if m < 2:
        raise ValueError("binary dihedral needs m >= 2 (order at least 8)")
    nfield = 4 * m
    w = lambda p: Cyclotomic.zeta(nfield, p)       # primitive 4m-th root; zeta_{2m} = w^2
    class_labels = ["e", f"a^{m}"] + [f"a^{k}" for k in range(1, m)] + ["b", "ab"]
    class_sizes = [1, 1] + [2] * (m - 1) + [m, m]
    one = Cyclotomic.rational(nfield, 1)

    def _pow(x, p):
        out = one
        for _ in range(p):
            out = out * x
        return out

    def row_1dim(a_val, b_val):
        # character values on the classes, from the values on the generators
        row = [one, _pow(a_val, m)]
        for k in range(1, m):
            row.append(_pow(a_val, k))
        row.append(b_val)
        row.append(a_val * b_val)
        return row

    rows = []
    labels = ["triv", "sgn"]
    rows.append(row_1dim(one, one))
    rows.append(row_1dim(one, -one))
    # the two characters with a -> -1; b maps to a square root of (-1)^m
    bval = w(m) if m % 2 == 1 else one
    labels += ["chi+", "chi-"]
    rows.append(row_1dim(-one, bval))
    rows.append(row_1dim(-one, -bval))
    dims = [1, 1, 1, 1]
    for j in range(1, m):
        row = [Cyclotomic.rational(nfield, 2), Cyclotomic.rational(nfield, 2 * (-1) ** j)]
        for k in range(1, m):
            row.append(w(2 * j * k) + w(-2 * j * k))
        row += [Cyclotomic.rational(nfield, 0), Cyclotomic.rational(nfield, 0)]
        rows.append(row)
        labels.append(f"V{j}")
        dims.append(2)
    chi_l = rows[4] if m > 1 else None     # L = V_1
    g = GammaDescriptor(f"BD{4*m}", 4 * m, nfield, class_labels, class_sizes,
                        labels, dims, rows, chi_l)
    if not g.character_orthogonality_check():
        raise AssertionError("binary dihedral character table failed orthogonality")
    return g


@dataclass
class McKayGraph:
    """Vertex labels, dimensions, and exact adjacency multiplicities."""

    kind: str                       # "finite" | "A_inf" | "D_inf" | "A_half_inf"
    labels: list[str]
    dims: list[int]
    adjacency: np.ndarray | None    # finite case only

    def mult(self, i, j) -> int:
        if self.kind == "finite":
            return int(self.adjacency[i, j])
        if self.kind == "A_inf":
            return 1 if abs(i - j) == 1 else 0
        if self.kind == "A_half_inf":
            return 1 if abs(i - j) == 1 else 0
        # D_inf with labels: 0 = triv, 1 = det, j >= 2 = rho_{j-1}
        a, b = sorted((i, j))
        if a in (0, 1) and b == 2:
            return 1
        if a >= 2 and b == a + 1:
            return 1
        return 0

    def dimension_identity_holds(self) -> bool:
        """sum_j mult(i, j) dim Y_j = 2 dim Y_i for the finite graphs."""
        if self.kind != "finite":
            raise ValueError("dimension identity needs a finite graph")
        n = len(self.labels)
        return all(sum(self.mult(i, j) * self.dims[j] for j in range(n)) == 2 * self.dims[i]
                   for i in range(n))

    def to_adjacency_json(self):
        if self.kind != "finite":
            return {"kind": self.kind, "labels": self.labels}
        return {
            "kind": "finite",
            "labels": self.labels,
            "dims": self.dims,
            "adjacency": [[int(self.adjacency[i, j]) for j in range(len(self.labels))]
                          for i in range(len(self.labels))],
        }

    def to_dot(self) -> str:
        lines = ["graph mckay {"]
        for lab in self.labels:
            lines.append(f'  "{lab}";')
        n = len(self.labels)
        for i in range(n):
            for j in range(i, n):
                for _ in range(self.mult(i, j)):
                    lines.append(f'  "{self.labels[i]}" -- "{self.labels[j]}";')
        lines.append("}")
        return "\n".join(lines)


def gl1_gamma() -> str:
    return "GL1"


def mckay_graph(gamma, window: int = 6) -> McKayGraph:
    """McKay graph of a subgroup descriptor.

    Finite descriptors give exact multiplicities through character inner
    products; the infinite subgroups return their chain conventions with
    ``window`` vertices (A_inf windows are centered at weight 0).
    """
    if isinstance(gamma, GammaDescriptor):
        n = len(gamma.irrep_labels)
        from .linalg import zeros
        adj = zeros(n, n)
        for i in range(n):
            for j in range(n):
                acc = Cyclotomic.rational(gamma.field_order, 0)
                for c, size in enumerate(gamma.class_sizes):
                    acc = acc + size * gamma.chi_l[c] * gamma.table[j][c] * gamma.table[i][c].conjugate()
                val = acc.as_rational() / gamma.order
                if val.denominator != 1 or val < 0:
                    raise AssertionError("multiplicity must be a nonnegative integer")
                adj[i, j] = val
        for i in range(n):
            for j in range(n):
                if adj[i, j] != adj[j, i]:
                    raise AssertionError("McKay adjacency must be symmetric for SL_2 subgroups")
        return McKayGraph("finite", list(gamma.irrep_labels), list(gamma.dims), adj)
    if gamma == "GL1":
        lo = -(window // 2)
        return McKayGraph("A_inf", [f"Y{i}" for i in range(lo, lo + window)], [1] * window, None)
    if gamma == "O2~":
        labels = ["triv", "det"] + [f"rho{j}" for j in range(1, window - 1)]
        return McKayGraph("D_inf", labels, [1, 1] + [2] * (window - 2), None)
    if gamma == "SL2":
        return McKayGraph("A_half_inf", [f"V{j}" for j in range(window)],
                          [j + 1 for j in range(window)], None)
    raise ValueError(f"unknown subgroup descriptor {gamma!r}")


def rectangular_check(partition) -> tuple[int, int]:
    """(rows, columns) of a rectangular Young diagram; NotRectangular otherwise."""
    parts = list(partition)
    if not parts or any(p <= 0 for p in parts) or any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise NotRectangular(f"{partition} is not a partition")
    if any(p != parts[0] for p in parts):
        raise NotRectangular(f"{partition} is not rectangular")
    return len(parts), parts[0]


def condition3_pairing(gamma, c, i) -> Fraction:
    """(c, chi_{Y_i}(g) det(1 - g|_L)), exactly.

    Finite gamma: c maps class labels to coefficients and the sum runs over
    nontrivial classes (the identity contributes det(1 - 1) = 0 anyway).
    GL_1: c is DistributionData on the class parameter and the test
    function is lambda^i (2 - lambda - lambda^{-1}).
    """
    if isinstance(gamma, GammaDescriptor):
        total = Cyclotomic.rational(gamma.field_order, 0)
        for label, coeff in c.items():
            cl = gamma.class_labels.index(label)
            det_term = Cyclotomic.rational(gamma.field_order, 2) - gamma.chi_l[cl]
            total = total + Fraction(coeff) * gamma.table[i][cl] * det_term
        return total.as_rational()
    if gamma == "GL1":
        if not isinstance(c, DistributionData):
            raise TypeError("GL_1 pairing needs DistributionData on the class parameter")
        i = int(i)
        return c.pair({i: Fraction(2), i + 1: Fraction(-1), i - 1: Fraction(-1)})
    raise ValueError("condition (3) pairing is supported for finite subgroups and GL_1")


@dataclass
class WreathSpec:
    """Data of a candidate finite-dimensional representation."""

    gamma: object                                  # GammaDescriptor or "GL1"
    n: int
    occupation: dict                               # vertex -> n_i > 0
    diagrams: dict                                 # vertex -> partition tuple
    k: Fraction
    c: object                                      # class coefficients / DistributionData

    def __post_init__(self):
        self.k = Fraction(self.k)
        occ = {v: int(m) for v, m in self.occupation.items() if int(m) != 0}
        if any(m < 0 for m in occ.values()) or sum(occ.values()) != self.n:
            raise ValueError("occupation numbers must be nonnegative and sum to n")
        self.occupation = occ
        for v, m in occ.items():
            if v not in self.diagrams or sum(self.diagrams[v]) != m:
                raise ValueError(f"vertex {v} needs a diagram with {m} boxes")


def montarani_check(spec: WreathSpec, window: int = 12) -> dict:
    """Evaluate the three extension conditions; admissible iff all pass."""
    failures = []
    graph = mckay_graph(spec.gamma, window=window)
    if isinstance(spec.gamma, GammaDescriptor):
        def vertex_index(v):
            return spec.gamma.irrep_labels.index(v) if isinstance(v, str) else int(v)
        def dim_of(v):
            return spec.gamma.dims[vertex_index(v)]
        def adjacent(v, w):
            return graph.mult(vertex_index(v), vertex_index(w)) > 0
    else:
        def vertex_index(v):
            return int(v)
        def dim_of(v):
            return 1
        def adjacent(v, w):
            return graph.mult(int(v), int(w)) > 0

    shapes = {}
    for v in spec.occupation:
        try:
            shapes[v] = rectangular_check(spec.diagrams[v])
        except NotRectangular:
            failures.append(("condition1", v, f"diagram {spec.diagrams[v]} is not rectangular"))

    occupied = sorted(spec.occupation, key=str)
    for a in range(len(occupied)):
        for b in range(a + 1, len(occupied)):
            if adjacent(occupied[a], occupied[b]):
                failures.append(("condition2", (occupied[a], occupied[b]),
                                 "occupied vertices are adjacent"))

    for v in occupied:
        if v not in shapes:
            continue
        rows_a, cols_b = shapes[v]
        pairing = condition3_pairing(spec.gamma, spec.c,
                                     vertex_index(v) if isinstance(spec.gamma, GammaDescriptor) else v)
        value = dim_of(v) + 2 * spec.k * (cols_b - rows_a) + pairing
        if value != 0:
            failures.append(("condition3", v, f"value {value} is nonzero"))

    return {"admissible": not failures, "failures": failures}
