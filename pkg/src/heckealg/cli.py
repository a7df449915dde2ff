"""Command line front end: exact reports over JSON job documents.

Verbs mirror the library modules: genfun, build, nf, flatness, census,
lie-closure, dunkl {apply, commute, matrices}, verma, singular, shapovalov,
lc, character, criterion, wreath {graph, check}.  Reports are deterministic
given (input, seed); every rational is serialized as "p/q".

Exit codes: 0 success, 2 input/schema problem, 3 a verification failed
(the report carries the witnesses), 4 internal invariant breach.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import category_o as cato
from . import dunkl as dk
from . import genfun as gf
from . import hecke as hk
from . import wreath as wr
from .exact import NotDivisible, SparsePoly, format_scalar, parse_scalar
from .liealg import LieAlgebraSpec, NotEquivariant
from .linalg import fmat

EXIT_OK = 0
EXIT_SCHEMA = 2
EXIT_CHECK = 3
EXIT_INTERNAL = 4


class SchemaError(ValueError):
    pass


class CheckFailed(RuntimeError):
    def __init__(self, message, witnesses=None):
        super().__init__(message)
        self.witnesses = witnesses or []


def _fr(x) -> str:
    return format_scalar(Fraction(x))


def _load_doc(path_or_json: str) -> dict:
    if path_or_json.strip().startswith("{"):
        return json.loads(path_or_json)
    with open(path_or_json) as fh:
        return json.load(fh)


def _moment_table() -> dk.MomentTable:
    table = dk.MomentTable()
    cachedir = os.environ.get("HECKEALG_MOMENT_CACHE")
    if cachedir:
        path = os.path.join(cachedir, "moments.json")
        if os.path.exists(path):
            table.load(path)
    return table


def _save_moments(table: dk.MomentTable) -> None:
    cachedir = os.environ.get("HECKEALG_MOMENT_CACHE")
    if cachedir:
        os.makedirs(cachedir, exist_ok=True)
        table.save(os.path.join(cachedir, "moments.json"))


def _group_by_name(name: str) -> hk.FiniteGroup:
    if name in ("Z2", "Z/2"):
        return hk.cyclic_two_group()
    if name in ("S3", "D6"):
        return hk.dihedral_order6_group()
    raise SchemaError(f"unknown built-in group {name!r} (use Z2 or S3, or give matrices)")


def build_algebra_from_doc(doc: dict) -> hk.HeckeAlgebra:
    base = doc.get("base")
    kap = doc.get("kappa")
    if not isinstance(base, dict) or not isinstance(kap, dict):
        raise SchemaError("algebra document needs 'base' and 'kappa' objects")
    family = kap.get("family")
    if base.get("type") == "group":
        if "name" in base:
            group = _group_by_name(base["name"])
        else:
            gens = {k: fmat(v) for k, v in base["generators"].items()}
            group = hk.FiniteGroup.from_matrix_generators(gens)
        t = parse_scalar(kap.get("t", "0"))
        c = kap.get("c", "0")
        c = {k: parse_scalar(v) for k, v in c.items()} if isinstance(c, dict) else parse_scalar(c)
        if family == "maineqc":
            return hk.cherednik_finite(group, t, c)
        if family == "maineq":
            if "omega" not in kap:
                raise SchemaError("maineq needs the symplectic form 'omega'")
            return hk.symplectic_finite(group, fmat(kap["omega"]), t, c)
        raise SchemaError("finite-group kappa family must be maineqc or maineq")
    if base.get("type") in ("gl", "sp"):
        n = int(base["n"])
        if family != "beta":
            raise SchemaError("enveloping bases use the beta kappa family")
        beta = gf.BetaParameter([parse_scalar(b) for b in kap.get("beta", [])])
        if base["type"] == "gl":
            return hk.infinitesimal_gl(n, beta)
        return hk.infinitesimal_sp(n, beta)
    raise SchemaError("base.type must be 'group', 'gl', or 'sp'")


def _parse_word(H: hk.HeckeAlgebra, word: str):
    tokens = []
    for tok in word.split():
        if tok in H.v_labels:
            tokens.append(("v", H.v_labels.index(tok)))
        elif H.base_kind == "group" and tok in H.base.labels:
            tokens.append(("b", {H.base.labels.index(tok): Fraction(1)}))
        elif H.base_kind == "env" and tok in H.base.labels:
            from .liealg import EnvElement
            tokens.append(("b", EnvElement.generator(H.base, H.base.labels.index(tok))))
        else:
            raise SchemaError(f"unknown generator {tok!r}")
    return tokens


def _dunkl_params_from_doc(doc: dict, table) -> dk.DunklParams:
    t = parse_scalar(doc.get("t", "1"))
    if doc.get("variant") == "orthogonal":
        return dk.DunklParams.orthogonal(t, int(doc["d"]), parse_scalar(doc["k"]), moments=table)
    if doc.get("variant") == "finite":
        data = [dk.ReflectionDatum(fmat(r["s"]), [parse_scalar(b) for b in r["beta"]],
                                   parse_scalar(r["c"]))
                for r in doc.get("reflections", [])]
        return dk.DunklParams.finite(t, data)
    raise SchemaError("dunkl document needs variant 'orthogonal' or 'finite'")


def _gamma_from_arg(arg: str):
    if arg.startswith("cyclic:"):
        return wr.cyclic_gamma(int(arg.split(":")[1]))
    if arg.startswith("bd:"):
        order = int(arg.split(":")[1])
        if order % 4:
            raise SchemaError("binary dihedral order must be a multiple of 4")
        return wr.binary_dihedral_gamma(order // 4)
    if arg in ("GL1", "O2~", "SL2"):
        return arg
    raise SchemaError(f"unknown subgroup descriptor {arg!r}")


def _distribution_from_doc(doc) -> cato.DistributionData:
    return cato.DistributionData.from_json_obj(doc)


# ---- verb handlers ------------------------------------------------------------


def run_genfun(args) -> dict:
    n, order = args.n, args.order
    if args.family == "gl":
        coeffs = gf.r_coefficients(n, order)
        label = "r"
    elif args.family == "sp":
        coeffs = gf.ell_coefficients(n, order)
        label = "l"
    else:
        raise SchemaError("family must be gl or sp")
    tables = []
    for c in coeffs:
        tables.append({
            "index": c.index,
            "entries": {f"{i},{j}": p.to_text() for (i, j), p in sorted(c.entries.items())},
        })
    return {"family": args.family, "n": n, "order": order, "coefficient": label,
            "tables": tables}


def run_build(args) -> dict:
    H = build_algebra_from_doc(_load_doc(args.spec))
    return {
        "base_kind": H.base_kind,
        "v_labels": list(H.v_labels),
        "kappa_pairs": [f"{H.v_labels[a]},{H.v_labels[b]}" for (a, b) in sorted(H.kappa)],
    }


def run_nf(args) -> dict:
    H = build_algebra_from_doc(_load_doc(args.spec))
    elem = H.normal_form(_parse_word(H, args.word))
    return {"word": args.word, "normal_form": elem.to_text()}


def run_flatness(args) -> dict:
    H = build_algebra_from_doc(_load_doc(args.spec))
    rep = H.flatness_check()
    result = {"flat": rep.flat_at_degree3, "witnesses": [list(w) for w in rep.witnesses]}
    if not rep.flat_at_degree3:
        raise CheckFailed("algebra is not flat at degree 3", result)
    return result


def run_census(args) -> dict:
    H = build_algebra_from_doc(_load_doc(args.spec))
    counts = H.pbw_dimension_census(args.depth)
    expected = H.h0_census(args.depth)
    result = {"counts": counts, "h0_counts": expected, "match": counts == expected}
    if counts != expected:
        raise CheckFailed("census does not match the undeformed algebra", result)
    return result


def run_lie_closure(args) -> dict:
    doc = _load_doc(args.spec)
    n = int(doc["n"])
    from .liealg import lie_closure_check
    spec = LieAlgebraSpec.gl(n)
    rs = gf.r_coefficients(n, 1, spec)
    drop_trace = doc.get("kappa") == "r1-notrace"
    kappa = {}
    for i in range(n):
        for j in range(n):
            # E-basis: x_1..x_n then y_1..y_n; [x_i, y_j] = -r_1(x_i, y_j)
            from .liealg import function_to_element, symmetrize
            f = rs[1].entries[(i, j)]
            elem = function_to_element(spec, f)
            coords = [Fraction(0)] * spec.dim
            for exp, c in elem.terms.items():
                k = next(t for t, e in enumerate(exp) if e)
                coords[k] = c
            if drop_trace:
                # keep only the matrix part y (x) x, i.e. E_{ji}
                coords = [Fraction(0)] * spec.dim
                coords[spec.labels.index(f"E{j+1}{i+1}")] = Fraction(1)
            kappa[(i, n + j)] = [-c for c in coords]
    e_action = []
    for k in range(spec.dim):
        from .linalg import zeros
        m = zeros(2 * n, 2 * n)
        r = spec.basis_matrices[k]
        m[:n, :n] = -r.T
        m[n:, n:] = r
        e_action.append(m)
    try:
        report = lie_closure_check(spec, e_action, kappa)
    except NotEquivariant as err:
        raise CheckFailed(str(err))
    result = {"is_lie_algebra": report.is_lie_algebra, "dim": report.dim,
              "killing_rank": report.killing_rank, "semisimple": report.semisimple,
              "witness": list(report.witness) if report.witness else None}
    if not report.is_lie_algebra:
        raise CheckFailed("bracket does not close to a Lie algebra", result)
    return result


def run_dunkl(args) -> dict:
    table = _moment_table()
    params = _dunkl_params_from_doc(_load_doc(args.spec), table)
    try:
        if args.action == "apply":
            vars = dk.u_vars(params.d)
            poly = SparsePoly.from_json_obj(_load_doc(args.poly)) if args.poly.strip().startswith("{") \
                else _parse_u_poly(args.poly, vars)
            y = [parse_scalar(c) for c in args.y.split(",")]
            out = dk.dunkl_apply(params, y, poly)
            return {"result": out.to_text(), "json": out.to_json_obj()}
        if args.action == "commute":
            rep = dk.commutator_test(params, args.degree)
            result = {"zero": rep["zero"],
                      "witness": list(map(str, rep["witness"])) if rep["witness"] else None}
            if not rep["zero"]:
                raise CheckFailed("Dunkl operators do not commute", result)
            return result
        ys, xs = dk.dunkl_rep_matrices(params, args.degree)
        return {
            "degree": args.degree,
            "y_matrices": [[[_fr(x) for x in row] for row in m] for m in ys],
            "x_matrices": [[[_fr(x) for x in row] for row in m] for m in xs],
        }
    finally:
        _save_moments(table)


def _parse_u_poly(text: str, vars) -> SparsePoly:
    # tiny monomial-sum syntax: "u1^2*u2 + 3/2*u2" over the given table
    out = SparsePoly.zero(vars)
    for chunk in text.replace("-", "+-").split("+"):
        chunk = chunk.strip()
        if not chunk:
            continue
        coeff = Fraction(1)
        if chunk.startswith("-"):
            coeff, chunk = Fraction(-1), chunk[1:]
        exp = [0] * len(vars)
        for factor in chunk.split("*"):
            factor = factor.strip()
            if not factor:
                continue
            if "^" in factor:
                name, power = factor.split("^")
            else:
                name, power = factor, "1"
            if name in vars:
                exp[vars.index(name)] += int(power)
            else:
                coeff *= Fraction(name)
        out = out + SparsePoly(vars, {tuple(exp): coeff})
    return out


def _module_from_doc(doc: dict, depth: int, table):
    if doc.get("variant") == "orthogonal":
        return cato.verma_orthogonal(int(doc["d"]), parse_scalar(doc["k"]), depth,
                                     parse_scalar(doc.get("t", "1")), moments=table)
    H = build_algebra_from_doc(doc)
    if H.base_kind == "group":
        y_rep = cato.trivial_module_group(H.base)
    else:
        y_rep = cato.trivial_module_env(H.base)
    return cato.verma_build(H, y_rep, depth)


def run_verma(args) -> dict:
    table = _moment_table()
    mod = _module_from_doc(_load_doc(args.spec), args.depth, table)
    return {
        "depth": args.depth,
        "dims": [mod.dim_at(n) for n in range(args.depth + 1)],
        "offset": _fr(mod.offset),
        "euler_identities": cato.euler_check(mod),
    }


def run_singular(args) -> dict:
    table = _moment_table()
    mod = _module_from_doc(_load_doc(args.spec), args.degree, table)
    vecs = cato.singular_vectors(mod, args.degree)
    return {"degree": args.degree,
            "count": len(vecs),
            "vectors": [[_fr(x) for x in v] for v in vecs]}


def run_shapovalov(args) -> dict:
    table = _moment_table()
    mod = _module_from_doc(_load_doc(args.spec), args.degree, table)
    grams: dict = {}
    rows = []
    for n in range(args.degree + 1):
        rep = cato.shapovalov(mod, n, grams)
        rows.append({"degree": n, "dim": mod.dim_at(n), "rank": rep.rank,
                     "kernel": rep.kernel_dim})
    return {"rows": rows}


def run_lc(args) -> dict:
    table = _moment_table()
    rep = cato.lc_structure(args.d, args.m, moments=table)
    result = {
        "k": _fr(rep["k"]),
        "dimension": rep["dimension"],
        "expected_dimension": rep["expected_dimension"],
        "ranks": rep["ranks"],
        "profile_matches": rep["profile_matches"],
        "decomposition": [{"sl2_highest_weight": a, "harmonic_degree": b}
                          for a, b in rep["decomposition"]],
    }
    if not rep["profile_matches"] or rep["dimension"] != rep["expected_dimension"]:
        raise CheckFailed("quotient profile does not match the predicted decomposition", result)
    return result


def run_character(args) -> dict:
    eigs = [parse_scalar(e) for e in args.eigenvalues.split(",")]
    cs = cato.character_series(parse_scalar(args.cy), args.d, eigs, args.depth)
    return {
        "offset": _fr(cs.offset),
        "coefficients": [c.to_text() for c in cs.series.coeffs],
    }


def run_criterion(args) -> dict:
    if args.beta:
        beta = gf.BetaParameter([parse_scalar(b) for b in args.beta.split(",")])
        t, a, _ = gf.beta_to_tc(args.n, beta)
        c = cato.DistributionData.from_euler_derivatives(a)
    else:
        c = _distribution_from_doc(_load_doc(args.c))
    out = cato.gl_criterion(c, args.n, args.degree)
    return {"n": args.n, "degree": args.degree, "holds": out["holds"], "lhs": _fr(out["lhs"])}


def run_wreath(args) -> dict:
    gamma = _gamma_from_arg(args.gamma)
    if args.action == "graph":
        graph = wr.mckay_graph(gamma, window=args.window)
        return {"graph": graph.to_adjacency_json(), "dot": graph.to_dot()}
    doc = _load_doc(args.spec)
    if isinstance(gamma, wr.GammaDescriptor):
        c = {k: parse_scalar(v) for k, v in doc["c"].items()}
    else:
        c = _distribution_from_doc(doc["c"])
    occupation = {_vertex_key(k): v for k, v in doc["occupation"].items()}
    diagrams = {_vertex_key(k): tuple(v) for k, v in doc["diagrams"].items()}
    spec = wr.WreathSpec(gamma, int(doc["n"]), occupation, diagrams,
                         parse_scalar(doc.get("k", "0")), c)
    rep = wr.montarani_check(spec, window=args.window)
    result = {"admissible": rep["admissible"],
              "failures": [[str(x) for x in f] for f in rep["failures"]]}
    if not rep["admissible"]:
        raise CheckFailed("representation datum fails the extension conditions", result)
    return result


def _vertex_key(k):
    try:
        return int(k)
    except (TypeError, ValueError):
        return k


# ---- dispatch -------------------------------------------------------------------


def make_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="heckealg",
                                description="exact computations with deformed semidirect products")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--seed", type=int, default=0, help="recorded in the report for reproducibility")
    sub = p.add_subparsers(dest="verb", required=True)

    g = sub.add_parser("genfun", help="deformation coefficient tables")
    g.add_argument("--family", required=True)
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--order", type=int, required=True)

    for name, extra in (("build", ()), ("nf", ("word",)), ("flatness", ()),):
        q = sub.add_parser(name)
        q.add_argument("--spec", required=True, help="algebra document (path or inline JSON)")
        if "word" in extra:
            q.add_argument("--word", required=True)

    q = sub.add_parser("census")
    q.add_argument("--spec", required=True)
    q.add_argument("--depth", type=int, default=3)

    q = sub.add_parser("lie-closure")
    q.add_argument("--spec", required=True)

    q = sub.add_parser("dunkl")
    q.add_argument("action", choices=("apply", "commute", "matrices"))
    q.add_argument("--spec", required=True)
    q.add_argument("--poly", default="")
    q.add_argument("--y", default="1")
    q.add_argument("--degree", type=int, default=4)

    q = sub.add_parser("verma")
    q.add_argument("--spec", required=True)
    q.add_argument("--depth", type=int, default=4)

    q = sub.add_parser("singular")
    q.add_argument("--spec", required=True)
    q.add_argument("--degree", type=int, required=True)

    q = sub.add_parser("shapovalov")
    q.add_argument("--spec", required=True)
    q.add_argument("--degree", type=int, required=True)

    q = sub.add_parser("lc")
    q.add_argument("--d", type=int, required=True)
    q.add_argument("--m", type=int, required=True)

    q = sub.add_parser("character")
    q.add_argument("--cy", default="0")
    q.add_argument("--d", type=int, required=True)
    q.add_argument("--eigenvalues", required=True)
    q.add_argument("--depth", type=int, default=8)

    q = sub.add_parser("criterion")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--degree", type=int, required=True)
    q.add_argument("--beta", default="")
    q.add_argument("--c", default="")

    q = sub.add_parser("wreath")
    q.add_argument("action", choices=("graph", "check"))
    q.add_argument("--gamma", required=True)
    q.add_argument("--spec", default="")
    q.add_argument("--window", type=int, default=8)

    return p


_HANDLERS = {
    "genfun": run_genfun,
    "build": run_build,
    "nf": run_nf,
    "flatness": run_flatness,
    "census": run_census,
    "lie-closure": run_lie_closure,
    "dunkl": run_dunkl,
    "verma": run_verma,
    "singular": run_singular,
    "shapovalov": run_shapovalov,
    "lc": run_lc,
    "character": run_character,
    "criterion": run_criterion,
    "wreath": run_wreath,
}


def _emit(report: dict, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(report, indent=2, sort_keys=True))
        return
    def walk(obj, indent=0):
        pad = "  " * indent
        if isinstance(obj, dict):
            for k, v in obj.items():
                if isinstance(v, (dict, list)):
                    print(f"{pad}{k}:")
                    walk(v, indent + 1)
                else:
                    print(f"{pad}{k}: {v}")
        elif isinstance(obj, list):
            for v in obj:
                if isinstance(v, (dict, list)):
                    walk(v, indent + 1)
                else:
                    print(f"{pad}- {v}")
    walk(report)


def main(argv=None) -> int:
    args = make_parser().parse_args(argv)
    report = {"verb": args.verb, "seed": args.seed}
    try:
        result = _HANDLERS[args.verb](args)
        report["status"] = "ok"
        report["result"] = result
        _emit(report, args.format)
        return EXIT_OK
    except (SchemaError, FileNotFoundError, json.JSONDecodeError, KeyError) as err:
        report["status"] = "schema-error"
        report["error"] = str(err)
        _emit(report, args.format)
        return EXIT_SCHEMA
    except CheckFailed as err:
        report["status"] = "check-failed"
        report["error"] = str(err)
        report["result"] = err.witnesses
        _emit(report, args.format)
        return EXIT_CHECK
    except (NotDivisible, NotEquivariant, hk.NotFlat, AssertionError, cato.NonTerminating,
            wr.NotRectangular, ValueError) as err:
        report["status"] = "internal-invariant"
        report["error"] = str(err)
        _emit(report, args.format)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
