"""Exact sparse multivariate polynomials and truncated formal power series.

Every coefficient in this package is an arbitrary-precision rational
(``fractions.Fraction``); no floating point appears anywhere.  A polynomial
is a finite dict mapping exponent tuples to nonzero rationals over a fixed,
ordered variable table:

    SparsePoly(("u", "w"), {(2, 0): Fraction(1), (0, 2): Fraction(-1)})

represents u^2 - w^2.  Exponent tuples are dense (one slot per variable);
variable counts stay small here so simplicity beats packed encodings.
The canonical term order is graded lexicographic over the variable table,
which makes printed forms and golden values deterministic.

``TruncatedSeries`` holds a power series in a distinguished formal variable
truncated at a fixed order M: a list of M+1 ``SparsePoly`` coefficients.
All series arithmetic is exact through order M and discards higher orders
consistently.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Iterable, Iterator, Mapping

Scalar = Fraction

__all__ = [
    "Scalar",
    "NotDivisible",
    "OrderMismatch",
    "NonzeroConstantTerm",
    "SparsePoly",
    "TruncatedSeries",
    "poly_divide_exact",
    "parse_scalar",
    "format_scalar",
]


class NotDivisible(ArithmeticError):
    """Exact polynomial division failed; an upstream divisibility invariant broke."""


class OrderMismatch(ValueError):
    """Series operands with different truncation orders or variable tables."""


class NonzeroConstantTerm(ValueError):
    """Series exponential/logarithm applied outside its domain."""


def parse_scalar(s: str | int | Fraction) -> Fraction:
    """Parse "p/q" (or "p") into an exact rational."""
    if isinstance(s, Fraction):
        return s
    if isinstance(s, int):
        return Fraction(s)
    return Fraction(s)


def format_scalar(c: Fraction) -> str:
    """Render a rational as "p/q" ("p" when q == 1)."""
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def _grlex_key(exp: tuple[int, ...]) -> tuple:
    # graded lexicographic: total degree first, then lex on the exponents
    return (sum(exp), exp)


class SparsePoly:
    """Sparse multivariate polynomial over the rationals.

    Immutable by convention: arithmetic returns fresh objects and nothing
    mutates ``terms`` after construction, so values are safe to share
    between threads.
    """

    __slots__ = ("vars", "terms")

    def __init__(self, vars: tuple[str, ...], terms: Mapping[tuple[int, ...], Fraction] | None = None):
        self.vars = tuple(vars)
        clean: dict[tuple[int, ...], Fraction] = {}
        if terms:
            nv = len(self.vars)
            for exp, c in terms.items():
                c = Fraction(c)
                if c == 0:
                    continue
                exp = tuple(exp)
                if len(exp) != nv:
                    raise ValueError(f"exponent {exp} does not match {nv} variables")
                clean[exp] = clean.get(exp, Fraction(0)) + c
                if clean[exp] == 0:
                    del clean[exp]
        self.terms = clean

    # ---- constructors -------------------------------------------------

    @classmethod
    def zero(cls, vars: Iterable[str]) -> "SparsePoly":
        return cls(tuple(vars), {})

    @classmethod
    def const(cls, vars: Iterable[str], c) -> "SparsePoly":
        vars = tuple(vars)
        return cls(vars, {(0,) * len(vars): Fraction(c)})

    @classmethod
    def variable(cls, vars: Iterable[str], name: str) -> "SparsePoly":
        vars = tuple(vars)
        i = vars.index(name)
        exp = [0] * len(vars)
        exp[i] = 1
        return cls(vars, {tuple(exp): Fraction(1)})

    @classmethod
    def gens(cls, vars: Iterable[str]) -> list["SparsePoly"]:
        vars = tuple(vars)
        return [cls.variable(vars, v) for v in vars]

    # ---- queries -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def constant_term(self) -> Fraction:
        return self.terms.get((0,) * len(self.vars), Fraction(0))

    def coefficient(self, exp: tuple[int, ...]) -> Fraction:
        return self.terms.get(tuple(exp), Fraction(0))

    def leading(self) -> tuple[tuple[int, ...], Fraction]:
        """Leading (exponent, coefficient) in graded lex order."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        exp = max(self.terms, key=_grlex_key)
        return exp, self.terms[exp]

    def sorted_terms(self) -> list[tuple[tuple[int, ...], Fraction]]:
        return sorted(self.terms.items(), key=lambda t: _grlex_key(t[0]), reverse=True)

    def is_homogeneous(self) -> bool:
        degs = {sum(e) for e in self.terms}
        return len(degs) <= 1

    # ---- ring operations ------------------------------------------------

    def _check(self, other: "SparsePoly") -> None:
        if self.vars != other.vars:
            raise ValueError(f"variable tables differ: {self.vars} vs {other.vars}")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = SparsePoly.const(self.vars, other)
        self._check(other)
        terms = dict(self.terms)
        for exp, c in other.terms.items():
            s = terms.get(exp, Fraction(0)) + c
            if s == 0:
                terms.pop(exp, None)
            else:
                terms[exp] = s
        out = SparsePoly.zero(self.vars)
        out.terms = terms
        return out

    __radd__ = __add__

    def __neg__(self):
        out = SparsePoly.zero(self.vars)
        out.terms = {e: -c for e, c in self.terms.items()}
        return out

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = SparsePoly.const(self.vars, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            out = SparsePoly.zero(self.vars)
            if c != 0:
                out.terms = {e: k * c for e, k in self.terms.items()}
            return out
        self._check(other)
        terms: dict[tuple[int, ...], Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = terms.get(e, Fraction(0)) + c1 * c2
                if s == 0:
                    terms.pop(e, None)
                else:
                    terms[e] = s
        out = SparsePoly.zero(self.vars)
        out.terms = terms
        return out

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        out = SparsePoly.const(self.vars, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = SparsePoly.const(self.vars, other)
        if not isinstance(other, SparsePoly):
            return NotImplemented
        return self.vars == other.vars and self.terms == other.terms

    def __hash__(self):
        return hash((self.vars, frozenset(self.terms.items())))

    # ---- calculus and substitution --------------------------------------

    def partial(self, name: str) -> "SparsePoly":
        """Exact partial derivative with respect to one variable."""
        i = self.vars.index(name)
        terms: dict[tuple[int, ...], Fraction] = {}
        for exp, c in self.terms.items():
            if exp[i] == 0:
                continue
            e = list(exp)
            k = e[i]
            e[i] = k - 1
            e = tuple(e)
            terms[e] = terms.get(e, Fraction(0)) + c * k
        out = SparsePoly.zero(self.vars)
        out.terms = {e: c for e, c in terms.items() if c != 0}
        return out

    def subs(self, images: Mapping[str, "SparsePoly"]) -> "SparsePoly":
        """Substitute polynomials for variables.

        Every variable must be given an image; all images must share one
        variable table, which becomes the table of the result.
        """
        imgs = [images[v] for v in self.vars]
        tgt = imgs[0].vars if imgs else self.vars
        out = SparsePoly.zero(tgt)
        for exp, c in self.terms.items():
            term = SparsePoly.const(tgt, c)
            for img, k in zip(imgs, exp):
                if k:
                    term = term * img ** k
            out = out + term
        return out

    def subs_linear(self, matrix) -> "SparsePoly":
        """Substitute v_i -> sum_j matrix[i][j) * v_j (same variable table).

        Used for f(gu): the matrix rows give the images of the variables.
        """
        gens = SparsePoly.gens(self.vars)
        images = {}
        for i, v in enumerate(self.vars):
            img = SparsePoly.zero(self.vars)
            for j, g in enumerate(gens):
                c = Fraction(matrix[i][j]) if not isinstance(matrix[i][j], Fraction) else matrix[i][j]
                if c != 0:
                    img = img + c * g
            images[v] = img
        return self.subs(images)

    def eval(self, point: Mapping[str, Fraction]) -> Fraction:
        val = Fraction(0)
        for exp, c in self.terms.items():
            t = c
            for v, k in zip(self.vars, exp):
                if k:
                    t *= Fraction(point[v]) ** k
            val += t
        return val

    def extend_vars(self, vars: tuple[str, ...]) -> "SparsePoly":
        """Re-express over a larger variable table containing the current one."""
        pos = [vars.index(v) for v in self.vars]
        out = SparsePoly.zero(vars)
        terms = {}
        for exp, c in self.terms.items():
            e = [0] * len(vars)
            for p, k in zip(pos, exp):
                e[p] = k
            terms[tuple(e)] = c
        out.terms = terms
        return out

    # ---- serialization ---------------------------------------------------

    def to_text(self) -> str:
        """Canonical text form: terms sorted in descending graded lex order."""
        if not self.terms:
            return "0"
        parts = []
        for exp, c in self.sorted_terms():
            factors = [f"{v}^{k}" if k > 1 else v for v, k in zip(self.vars, exp) if k]
            mono = "*".join(factors)
            cs = format_scalar(c)
            if mono:
                if c == 1:
                    parts.append(mono)
                elif c == -1:
                    parts.append(f"-{mono}")
                else:
                    parts.append(f"{cs}*{mono}")
            else:
                parts.append(cs)
        text = parts[0]
        for p in parts[1:]:
            text += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return text

    def to_json_obj(self) -> dict:
        return {
            "vars": list(self.vars),
            "terms": [
                {"exp": list(exp), "num": str(c.numerator), "den": str(c.denominator)}
                for exp, c in self.sorted_terms()
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), sort_keys=True)

    @classmethod
    def from_json_obj(cls, obj: dict) -> "SparsePoly":
        vars = tuple(obj["vars"])
        terms = {
            tuple(t["exp"]): Fraction(int(t["num"]), int(t["den"]))
            for t in obj["terms"]
        }
        return cls(vars, terms)

    @classmethod
    def from_json(cls, text: str) -> "SparsePoly":
        return cls.from_json_obj(json.loads(text))

    def __repr__(self):
        return f"SparsePoly({self.to_text()!r})"


def poly_divide_exact(p: SparsePoly, q: SparsePoly) -> SparsePoly:
    """Exact quotient r with q*r == p.

    Raises NotDivisible when no exact quotient exists.  Leading-term
    division in graded lex order suffices for a single divisor: if p is a
    multiple of q then lt(p) = lt(q)*lt(p/q).
    """
    if q.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    p._check(q)
    lq, cq = q.leading()
    quot = SparsePoly.zero(p.vars)
    rem = p
    while not rem.is_zero():
        lr, cr = rem.leading()
        exp = tuple(a - b for a, b in zip(lr, lq))
        if any(e < 0 for e in exp):
            raise NotDivisible(f"{p.to_text()} is not divisible by {q.to_text()}")
        t = SparsePoly(p.vars, {exp: cr / cq})
        quot = quot + t
        rem = rem - t * q
    return quot


class TruncatedSeries:
    """Power series in one formal variable, exact through order M.

    ``coeffs[m]`` is the SparsePoly coefficient of the m-th power of the
    series variable; all slots share a single variable table.
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs: list[SparsePoly]):
        if len(coeffs) != order + 1:
            raise ValueError("need exactly order+1 coefficients")
        self.order = order
        self.coeffs = list(coeffs)

    @classmethod
    def zero(cls, vars: tuple[str, ...], order: int) -> "TruncatedSeries":
        return cls(order, [SparsePoly.zero(vars) for _ in range(order + 1)])

    @classmethod
    def one(cls, vars: tuple[str, ...], order: int) -> "TruncatedSeries":
        s = cls.zero(vars, order)
        s.coeffs[0] = SparsePoly.const(vars, 1)
        return s

    @classmethod
    def from_scalars(cls, scalars: list, vars: tuple[str, ...], order: int) -> "TruncatedSeries":
        s = cls.zero(vars, order)
        for m, c in enumerate(scalars[: order + 1]):
            s.coeffs[m] = SparsePoly.const(vars, c)
        return s

    @property
    def vars(self) -> tuple[str, ...]:
        return self.coeffs[0].vars

    def _check(self, other: "TruncatedSeries") -> None:
        if self.order != other.order or self.vars != other.vars:
            raise OrderMismatch("series orders or variable tables differ")

    def __add__(self, other):
        self._check(other)
        return TruncatedSeries(self.order, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        self._check(other)
        return TruncatedSeries(self.order, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        return TruncatedSeries(self.order, [-a for a in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, SparsePoly)):
            return TruncatedSeries(self.order, [a * other for a in self.coeffs])
        self._check(other)
        out = [SparsePoly.zero(self.vars) for _ in range(self.order + 1)]
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j in range(self.order + 1 - i):
                b = other.coeffs[j]
                if not b.is_zero():
                    out[i + j] = out[i + j] + a * b
        return TruncatedSeries(self.order, out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    def exp(self) -> "TruncatedSeries":
        """Exponential of a series with zero constant term.

        exp(s) = sum s^k / k!, computed via the recursion
        (exp s)' = s' * exp s, i.e. m*E_m = sum_{j>=1} j*s_j*E_{m-j}.
        """
        if not self.coeffs[0].is_zero():
            raise NonzeroConstantTerm("series exponential needs zero constant term")
        out = TruncatedSeries.one(self.vars, self.order)
        for m in range(1, self.order + 1):
            acc = SparsePoly.zero(self.vars)
            for j in range(1, m + 1):
                if not self.coeffs[j].is_zero():
                    acc = acc + Fraction(j) * self.coeffs[j] * out.coeffs[m - j]
            out.coeffs[m] = acc * Fraction(1, m)
        return out

    def log(self) -> "TruncatedSeries":
        """Logarithm of a series with constant term 1 (inverse of exp)."""
        if self.coeffs[0] != SparsePoly.const(self.vars, 1):
            raise NonzeroConstantTerm("series logarithm needs constant term 1")
        out = TruncatedSeries.zero(self.vars, self.order)
        for m in range(1, self.order + 1):
            acc = self.coeffs[m] * Fraction(m)
            for j in range(1, m):
                acc = acc - Fraction(j) * out.coeffs[j] * self.coeffs[m - j]
            out.coeffs[m] = acc * Fraction(1, m)
        return out

    def inverse(self) -> "TruncatedSeries":
        """Multiplicative inverse of a series with constant term 1."""
        if self.coeffs[0] != SparsePoly.const(self.vars, 1):
            raise NonzeroConstantTerm("series inverse needs constant term 1")
        out = TruncatedSeries.one(self.vars, self.order)
        for m in range(1, self.order + 1):
            acc = SparsePoly.zero(self.vars)
            for k in range(1, m + 1):
                if not self.coeffs[k].is_zero():
                    acc = acc + self.coeffs[k] * out.coeffs[m - k]
            out.coeffs[m] = -acc
        return out

    def to_text(self, var: str = "tau") -> str:
        parts = [f"({c.to_text()})*{var}^{m}" for m, c in enumerate(self.coeffs) if not c.is_zero()]
        return " + ".join(parts) if parts else "0"

    def __repr__(self):
        return f"TruncatedSeries({self.to_text()!r})"
