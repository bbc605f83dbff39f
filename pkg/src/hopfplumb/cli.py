"""Command line interface.

Tree input is a family token (``A5``, ``D7``, ``E6``, ``~D4``, ``~E8``, ...)
or ``--edges FILE`` in the edge-list format.  Exit status: 0 on success,
1 on bad input, 2 when the tree does not meet the command's precondition.
"""
from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from typing import Optional

from .enumeration import affine_family, enumerate_norm_one
from .exact_algebra import as_lists
from .orbits import (
    ESCAPE_FACTOR,
    affine_orbit_signature,
    basis_vector,
    coverage_check,
    default_generators,
    growth_classify,
    jordan_unit_circle_check,
    orbit_count_in_ball,
    orbit_partition,
    sign_normal,
    standard_hopf_bands,
)
from .plumbing import (
    PlumbingData,
    alexander_polynomial,
    boundary_components,
    build_plumbing,
    signature_profile,
    surface_genus,
    zero_signature_identity_check,
)
from .trees import (
    Kind,
    TreeClass,
    TreeError,
    canonical_numbering,
    classify_tree,
    family_token,
    find_affine_subtree,
    named_tree,
    parse_family_token,
    parse_tree,
)

SAFE_INT = 2 ** 53


class InputError(Exception):
    pass


class PreconditionError(Exception):
    pass


def thread_count() -> int:
    raw = os.environ.get("HOPF_THREADS")
    if raw:
        try:
            return max(1, int(raw))
        except ValueError:
            raise InputError(f"HOPF_THREADS must be an integer, got {raw!r}")
    return os.cpu_count() or 1


def jsonable(obj):
    """Lists for tuples, decimal strings for integers beyond 53 bits."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, (str, float)):
        return obj
    if isinstance(obj, int):
        return obj if abs(obj) < SAFE_INT else str(obj)
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(x) for x in obj]
    if hasattr(obj, "tolist"):
        return jsonable(obj.tolist())
    return str(obj)


def dumps(obj) -> str:
    return json.dumps(jsonable(obj), indent=2, sort_keys=True)


class Loaded:
    """A tree from the command line, renumbered to its family convention if it has one."""

    def __init__(self, tree, source: str, relabel: Optional[dict] = None):
        self.tree = tree
        self.source = source
        self.relabel = relabel
        self.cls: TreeClass = classify_tree(tree)
        self.plumbing: PlumbingData = build_plumbing(tree)


def load_tree(args) -> Loaded:
    if args.edges and args.family:
        raise InputError("give either a family token or --edges, not both")
    if args.edges:
        try:
            with open(args.edges, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise InputError(f"cannot read {args.edges}: {exc.strerror}")
        tree = parse_tree(text)
        canon = canonical_numbering(tree)
        if canon is not None:
            named, perm = canon
            identity = all(k == v for k, v in perm.items())
            return Loaded(named, args.edges, None if identity else perm)
        return Loaded(tree, args.edges)
    if not args.family:
        raise InputError("missing tree: give a family token or --edges FILE")
    family, n = parse_family_token(args.family)
    return Loaded(named_tree(family, n), args.family)


def parse_vector(text: str, n: int) -> tuple[int, ...]:
    try:
        v = tuple(int(x) for x in text.replace(" ", "").split(","))
    except ValueError:
        raise InputError(f"bad integer vector {text!r}")
    if len(v) != n:
        raise InputError(f"vector has {len(v)} entries, tree has {n} vertices")
    if not any(v):
        raise InputError("vector must be nonzero")
    return v


def fmt_vec(v) -> str:
    return "(" + ",".join(str(c) for c in v) + ")"


def tree_info(ld: Loaded) -> dict:
    info = {"n": ld.tree.n, "edges": [list(e) for e in ld.tree.sorted_edges()], "source": ld.source}
    if ld.cls.family:
        info["family"] = family_token(ld.cls.family, ld.cls.param)
    if ld.relabel:
        info["relabel"] = {str(k): v for k, v in sorted(ld.relabel.items())}
    return info


def classification_info(cls: TreeClass) -> dict:
    return {"kind": cls.kind.value, "family": cls.family, "param": cls.param, "text": str(cls)}


# Commands ------------------------------------------------------------------

def cmd_classify(args, out):
    ld = load_tree(args)
    if ld.relabel:
        print(f"renumbered to {family_token(ld.cls.family, ld.cls.param)} convention: "
              + " ".join(f"{k}->{v}" for k, v in sorted(ld.relabel.items())), file=sys.stderr)
    print(str(ld.cls), file=out)


def matrices_info(p: PlumbingData) -> dict:
    return {"A": as_lists(p.A), "V": as_lists(p.V), "M": as_lists(p.M)}


def cmd_matrices(args, out):
    ld = load_tree(args)
    mats = matrices_info(ld.plumbing)
    if args.json:
        print(dumps(mats), file=out)
        return
    for name in ("A", "V", "M"):
        print(f"{name} =", file=out)
        rows = mats[name]
        width = max(len(str(x)) for row in rows for x in row)
        for row in rows:
            print("  " + " ".join(str(x).rjust(width) for x in row), file=out)


def _require(ld: Loaded, kinds, what: str):
    if ld.cls.kind not in kinds:
        if ld.cls.kind == Kind.HYPERBOLIC:
            raise PreconditionError("hyperbolic tree: q⁻¹(1) is infinite")
        raise PreconditionError(f"{ld.cls.kind.value} tree: {what}")


def cmd_enumerate(args, out):
    ld = load_tree(args)
    _require(ld, (Kind.SPHERICAL, Kind.AFFINE), "")
    p = ld.plumbing
    if ld.cls.kind == Kind.SPHERICAL:
        sols = enumerate_norm_one(p)
        if args.mod_sign:
            sols = sorted(set(sign_normal(x) for x in sols))
        if args.count_only:
            print(len(sols), file=out)
            return
        for x in sols:
            print(fmt_vec(x), file=out)
        print(f"count: {len(sols)}", file=out)
        return
    fam = affine_family(p)
    base = fam.base_solutions
    if args.mod_sign:
        base = tuple(sorted(set(sign_normal(x) for x in base)))
    if args.count_only:
        print(f"infinite: {len(base)} families w + k*u", file=out)
        return
    print(f"u = {fmt_vec(fam.u)}", file=out)
    print(f"removed vertex: {fam.removed_vertex}", file=out)
    print(f"q^-1(1) = {{ w + k*u : k in Z }} over {len(base)} base solutions w:", file=out)
    for w in base:
        print(fmt_vec(w), file=out)


def resolve_generators(spec: str, ld: Loaded):
    p = ld.plumbing
    if spec == "auto":
        return default_generators(p, ld.cls.family)
    if spec == "standard":
        return standard_hopf_bands(p)
    return [parse_vector(chunk, p.n) for chunk in spec.split(";") if chunk.strip()]


def orbit_info(ld: Loaded, generators: str = "auto", mod_sign: bool = True) -> dict:
    p = ld.plumbing
    if ld.cls.kind == Kind.SPHERICAL:
        sols = enumerate_norm_one(p)
        part = orbit_partition(sols, p, mod_sign)
        gens = resolve_generators(generators, ld)
        cov = coverage_check(sols, gens, p, mod_sign, max_power=60)
        return {
            "modulo_sign": mod_sign,
            "class_count": len(part),
            "classes": [{"representative": list(r), "size": len(c)}
                        for r, c in zip(part.representatives, part.classes)],
            "generators": [list(g) for g in gens],
            "covered": cov.covered,
            "missing": [list(x) for x in cov.missing],
            "witness": [{"solution": list(s), "generator": list(g), "power": j, "sign": sg}
                        for s, (g, j, sg) in sorted(cov.witness.items())],
        }
    fam = affine_family(p)
    rels = []
    for w in sorted(set(sign_normal(x) for x in fam.base_solutions)):
        sig = affine_orbit_signature(w, fam, p, max_d=64)
        rels.append({"w": list(w), "relation": None if sig is None else sig._asdict()})
    return {"u": list(fam.u), "M_u_equals_minus_u": p.apply(fam.u) == tuple(-c for c in fam.u),
            "base_relations": rels}


def cmd_orbits(args, out):
    ld = load_tree(args)
    if ld.cls.kind == Kind.HYPERBOLIC:
        info = hyperbolic_info(ld)
        sub = info["affine_subtree"]
        print(f"affine subtree {sub['family']} on vertices {fmt_vec(sub['vertices'])}", file=out)
        print(f"family w + k*u, w = {fmt_vec(info['family_w'])}, u = {fmt_vec(info['family_u'])}", file=out)
        for K, count in info["orbit_counts"].items():
            print(f"  |k| <= {K}: {count} orbit classes (mod sign)", file=out)
        g = info["growth"]
        rate = "" if g["rate"] is None else f", rate {g['rate']:.6f}"
        print(f"growth of w: {g['verdict']}{rate}", file=out)
        return
    info = orbit_info(ld, args.generators, not args.with_sign)
    if ld.cls.kind == Kind.SPHERICAL:
        print(f"orbit classes: {info['class_count']} ({'mod sign' if info['modulo_sign'] else 'signed'})", file=out)
        for c in info["classes"]:
            print(f"  {fmt_vec(c['representative'])}  size {c['size']}", file=out)
        print(f"covered by {len(info['generators'])} generators: {'yes' if info['covered'] else 'no'}", file=out)
        for x in info["missing"]:
            print(f"  missing {fmt_vec(x)}", file=out)
        for w in info["witness"]:
            sign = "-" if w["sign"] < 0 else ""
            print(f"  {fmt_vec(w['solution'])} = {sign}M^{w['power']} {fmt_vec(w['generator'])}", file=out)
        return
    print(f"u = {fmt_vec(info['u'])}, Mu = -u: {info['M_u_equals_minus_u']}", file=out)
    for r in info["base_relations"]:
        rel = r["relation"]
        if rel is None:
            print(f"  {fmt_vec(r['w'])}: no relation up to d=64", file=out)
        else:
            sign = "" if rel["sign"] > 0 else "-"
            print(f"  M^{rel['d']} w = {sign}({shift_text(rel['k'])})   w = {fmt_vec(r['w'])}", file=out)


def shift_text(k: int) -> str:
    if k == 0:
        return "w"
    coeff = "" if abs(k) == 1 else f"{abs(k)}"
    return f"w {'+' if k > 0 else '-'} {coeff}u"


def spectral_info(ld: Loaded, samples: int = 64) -> dict:
    p = ld.plumbing
    with ThreadPoolExecutor(max_workers=thread_count()) as pool:
        prof = signature_profile(p, samples, executor=pool)
    delta = alexander_polynomial(p)
    jc = jordan_unit_circle_check(p)
    zc = zero_signature_identity_check(p)
    return {
        "alexander_polynomial": {"coefficients": list(delta.coeffs), "text": str(delta)},
        "sigma_K": prof.sigma_K,
        "nullity_K": prof.nullity_K,
        "jordan": {"ok": jc.ok, "repeated_part": str(jc.repeated_part)},
        "zero_signature": zc._asdict(),
        "profile": [{"t": t, "re": w.real, "im": w.imag, "sigma": s, "flagged": f}
                    for t, w, s, f in prof.samples],
    }


def cmd_spectral(args, out):
    ld = load_tree(args)
    if args.samples < 1:
        raise InputError("--samples must be at least 1")
    info = spectral_info(ld, args.samples)
    print(f"Alexander polynomial: {info['alexander_polynomial']['text']}", file=out)
    print(f"sigma(K) = {info['sigma_K']}, nul(K) = {info['nullity_K']}", file=out)
    zs = info["zero_signature"]
    print(f"unit-circle zeros = {zs['zeros']}, |sigma|+nul = {zs['sigma_plus_nul']}, "
          f"identity holds: {zs['holds']}", file=out)
    jc = info["jordan"]
    print(f"no Jordan block >1 on |z|=1: {jc['ok']} (repeated part {jc['repeated_part']})", file=out)
    if args.csv:
        with open(args.csv, "w", newline="", encoding="utf-8") as fh:
            writer = csv.writer(fh, lineterminator="\n")
            writer.writerow(["t", "re_omega", "im_omega", "sigma", "flagged"])
            for row in info["profile"]:
                writer.writerow([repr(row["t"]), repr(row["re"]), repr(row["im"]), row["sigma"],
                                 str(row["flagged"]).lower()])
        print(f"profile written to {args.csv}", file=out)


def cmd_growth(args, out):
    ld = load_tree(args)
    p = ld.plumbing
    v = parse_vector(args.vector, p.n) if args.vector else basis_vector(p.n, 1)
    rep = growth_classify(v, p, args.steps)
    print(f"verdict: {rep.verdict.value}", file=out)
    if rep.period is not None:
        print(f"period: {rep.period}", file=out)
    if rep.growth_rate_estimate is not None:
        print(f"growth rate estimate: {rep.growth_rate_estimate:.6f}", file=out)
    print(f"steps used: {rep.steps_used}", file=out)
    if rep.verdict.value == "exponential":
        jc = jordan_unit_circle_check(p)
        print(f"jordan check (exact dichotomy applies when true): {jc.ok}", file=out)


def hyperbolic_info(ld: Loaded) -> dict:
    p = ld.plumbing
    sub, vm = find_affine_subtree(ld.tree)
    sub_cls = classify_tree(sub)
    ps = build_plumbing(sub)
    fam = affine_family(ps)
    w, u = vm.push(basis_vector(sub.n, 1)), vm.push(fam.u)
    growth = growth_classify(w, p, 200)
    return {
        "affine_subtree": {"family": family_token(sub_cls.family, sub_cls.param),
                           "vertices": list(vm.images)},
        "family_w": list(w),
        "family_u": list(u),
        "orbit_counts": {str(K): orbit_count_in_ball(w, u, p, K) for K in (5, 10, 20, 40)},
        "escape_factor": ESCAPE_FACTOR,
        "growth": {"verdict": growth.verdict.value, "period": growth.period,
                   "rate": growth.growth_rate_estimate, "steps": growth.steps_used},
    }


def build_report(ld: Loaded, samples: int = 32) -> dict:
    p = ld.plumbing
    report = {
        "tree": tree_info(ld),
        "classification": classification_info(ld.cls),
        "matrices": matrices_info(p),
        "invariants": {
            "boundary_components": boundary_components(p),
            "genus": surface_genus(p),
        },
    }
    spec = spectral_info(ld, samples)
    report["invariants"].update({
        "alexander_polynomial": spec["alexander_polynomial"],
        "sigma_K": spec["sigma_K"],
        "nullity_K": spec["nullity_K"],
    })
    report["spectral"] = {k: spec[k] for k in ("jordan", "zero_signature", "profile")}
    if ld.cls.kind == Kind.SPHERICAL:
        sols = enumerate_norm_one(p)
        report["enumeration"] = {"count": len(sols), "solutions": [list(x) for x in sols]}
        report["orbits"] = orbit_info(ld)
    elif ld.cls.kind == Kind.AFFINE:
        fam = affine_family(p)
        report["enumeration"] = {"u": list(fam.u), "removed_vertex": fam.removed_vertex,
                                 "base_count": len(fam.base_solutions),
                                 "base_solutions": [list(x) for x in fam.base_solutions]}
        report["orbits"] = orbit_info(ld)
    else:
        report["enumeration"] = {"infinite": True}
        report["orbits"] = hyperbolic_info(ld)
    return jsonable(report)


def cmd_report(args, out):
    ld = load_tree(args)
    text = dumps(build_report(ld, args.samples))
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
        print(f"report written to {args.json}", file=out)
    else:
        print(text, file=out)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hopfplumb", description="Hopf bands in positive tree plumbings")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        sp = sub.add_parser(name, help=help_text)
        sp.add_argument("family", nargs="?", help="family token, e.g. A5, D7, E8, ~D4, ~E6")
        sp.add_argument("--edges", metavar="FILE", help="edge-list file")
        sp.set_defaults(func=func)
        return sp

    add("classify", cmd_classify, "spherical / affine / hyperbolic verdict")
    sp = add("matrices", cmd_matrices, "Cartan form A, Seifert matrix V, monodromy M")
    sp.add_argument("--json", action="store_true")
    sp = add("enumerate", cmd_enumerate, "solutions of q(x) = 1")
    sp.add_argument("--mod-sign", action="store_true", help="one vector per +- pair")
    sp.add_argument("--count-only", action="store_true")
    sp = add("orbits", cmd_orbits, "monodromy orbit partition and coverage")
    sp.add_argument("--generators", default="auto", help="auto | standard | 'x1,...,xn;y1,...,yn'")
    sp.add_argument("--with-sign", action="store_true", help="do not identify x with -x")
    sp = add("spectral", cmd_spectral, "Alexander polynomial, signatures, Jordan check")
    sp.add_argument("--samples", type=int, default=64)
    sp.add_argument("--csv", metavar="PATH")
    sp = add("growth", cmd_growth, "bounded vs exponential growth of M^k v")
    sp.add_argument("--vector", help="comma-separated integers (default v1)")
    sp.add_argument("--steps", type=int, default=200)
    sp = add("report", cmd_report, "full JSON report")
    sp.add_argument("--json", metavar="PATH")
    sp.add_argument("--samples", type=int, default=32)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 1 if exc.code else 0
    try:
        args.func(args, out)
    except (InputError, TreeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except PreconditionError as exc:
        print(str(exc), file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
