"""Command-line front end: validate, compute, morphism, homotopy, laws, fixtures."""
from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from . import __version__
from .documents import DocumentError, Report, digest, fixture_names, fixture_text, parse_document, read_input
from .homology import TruncationError, betti_from_omega, build_omega, induced_homology_map
from .homotopy import CapExceeded, MORPHISM_CAP, homotopic
from .hypergraph import Digraph, InvalidInput, NotAMorphism, as_directed, check_dh_morphism
from .labels import render, render_path
from .laws import LAWS
from .linalg import parse_field
from .pathcomplex import NotAMorphism as NotAPCMorphism, PCMorphism, pc_violation
from .theories import KINDS, TheorySpec, hypergraph_view, theory_vertex_map, theory_view

EXIT_OK, EXIT_INPUT, EXIT_CAP = 0, 2, 3

# theory settings used when a morphism's induced maps are printed for every theory
FUNCTORIAL = (("connective", 1), ("bold", 1), ("nondirected", 2), ("natural", 1))


class UsageError(ValueError):
    pass


def _scalar(x):
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _matrix(M):
    return [[_scalar(x) for x in row] for row in M.tolist()]


def _load(ref, kinds):
    doc, _ = read_input(ref)
    if doc.kind not in kinds:
        raise UsageError(f"{ref}: expected a {' or '.join(kinds)} document, got {doc.kind}")
    return doc.value


def _hypergraph(ref):
    value = _load(ref, ("directed-hypergraph", "digraph"))
    return as_directed(value) if isinstance(value, Digraph) else value


def _spec(args):
    field = parse_field(args.field)
    return TheorySpec(args.theory, args.density, args.max_dim, field)


# ---------------------------------------------------------------- commands

def cmd_validate(args):
    doc, _ = read_input(args.input)
    v = doc.value
    if isinstance(v, dict):
        summary = {"kind": doc.kind, "vertices_mapped": len(v)}
    else:
        size = len(v.arrows) if isinstance(v, Digraph) else len(v.edges)
        summary = {"kind": doc.kind, "vertices": len(v.vertices), "edges": size}
    text = f"valid {doc.kind}" + "".join(f", {k} {n}" for k, n in summary.items() if k != "kind")
    return {"valid": True, **summary}, text, {args.input: digest(v)}, None, None


def cmd_compute(args):
    doc, _ = read_input(args.input)
    spec = _spec(args)
    if doc.kind == "hypergraph":
        if spec.kind != "nondirected":
            raise UsageError("undirected hypergraph inputs only support --theory nondirected")
        view = hypergraph_view(doc.value, spec.density, spec.max_dim + 1)
    elif doc.kind in ("directed-hypergraph", "digraph"):
        G = as_directed(doc.value) if isinstance(doc.value, Digraph) else doc.value
        if spec.kind in ("bold", "natural") and args.density != 1:
            raise UsageError(f"--density does not apply to the {spec.kind} theory")
        view = theory_view(G, spec)
    else:
        raise UsageError("compute needs a hypergraph or digraph document")
    om = build_omega(view, spec.max_dim, spec.field)
    table = betti_from_omega(om, spec.max_dim)
    result = {"theory": spec.kind, "density": spec.density, **table.as_dict()}
    lines = [f"theory {spec.kind}" + (f" (density {spec.density})" if spec.kind in ("connective", "nondirected") else "")
             + f", field {table.field}, paths up to length {table.max_length}",
             " n  allowed  dim_omega  rank_boundary  betti"]
    for n, b in enumerate(table.betti):
        lines.append(f"{n:>2}  {len(om.allowed_basis[n]):>7}  {table.dim_omega[n]:>9}  "
                     f"{table.rank_boundary[n]:>13}  {b:>5}")
    lines.append(f"betti = ({', '.join(map(str, table.betti))})")
    if spec.kind == "connective" and spec.density >= 2:
        result["note"] = "connective homology with density >= 2 is not functorial"
        lines.append(f"note: {result['note']}")
    if args.emit == "basis":
        emitted = []
        for n in range(om.top + 1):
            emitted.append({
                "n": n,
                "allowed": [render_path(p) for p in om.allowed_basis[n]],
                "omega": _matrix(om.omega_matrix(n).T),
                "boundary": _matrix(om.boundary_matrix(n)),
            })
            lines.append(f"-- dimension {n}")
            lines.append("allowed: " + " ".join(render_path(p) for p in om.allowed_basis[n]))
            for i, row in enumerate(emitted[-1]["omega"]):
                lines.append(f"omega[{i}]: " + " ".join(row))
            lines.append(f"boundary ({om.dim(n - 1) if n else 0}x{om.dim(n)}):")
            lines.extend("  " + " ".join(row) for row in emitted[-1]["boundary"])
        result["basis"] = emitted
    return result, "\n".join(lines), {args.input: digest(doc.value)}, table.field, table.max_length


def _induced(morph, kind, density, dims, field):
    """Induced homology matrices of one theory, or a non-functoriality witness."""
    spec_src = TheorySpec(kind, density, max(dims), field)
    L = max(dims) + 1
    src = theory_view(morph.source, spec_src, L)
    tgt = theory_view(morph.target, spec_src, L)
    vmap = theory_vertex_map(kind, morph.source, morph.vertex_map)
    bad = pc_violation(src, tgt, vmap)
    if bad is not None:
        return {"functorial": False, "witness": render_path(bad),
                "image": render_path(tuple(vmap[v] for v in bad))}
    m = PCMorphism(src, tgt, vmap)
    om_s = build_omega(src, max(dims), field)
    om_t = build_omega(tgt, max(dims), field)
    return {"functorial": True,
            "induced": {str(n): _matrix(induced_homology_map(m, n, field, om_s, om_t)) for n in dims}}


def cmd_morphism(args):
    G, H = _hypergraph(args.source), _hypergraph(args.target)
    vm = _load(args.map, ("morphism",))
    inputs = {args.source: digest(G), args.target: digest(H), args.map: digest(vm)}
    try:
        f = check_dh_morphism(G, H, vm)
    except (NotAMorphism, ValueError) as exc:
        raise InvalidInput([f"not a morphism: {exc}"]) from None
    result = {"valid": True, "vertex_map": {render(v): render(f(v)) for v in G.vertices},
              "edge_map": list(f.edge_map)}
    lines = ["valid morphism"]
    field = parse_field(args.field)
    if args.theory:
        plan = [(args.theory, args.density)]
    elif args.induced_dim is not None:
        plan = list(FUNCTORIAL)
    else:
        plan = []
    dims = list(range((args.induced_dim if args.induced_dim is not None else 0) + 1))
    theories = {}
    for kind, density in plan:
        key = f"{kind}(density={density})" if kind in ("connective", "nondirected") else kind
        out = _induced(f, kind, density, dims, field)
        theories[key] = out
        if not out["functorial"]:
            lines.append(f"warning: {key} is not functorial here: path {out['witness']} "
                         f"maps to {out['image']}, which is not allowed")
            continue
        for n, M in out["induced"].items():
            lines.append(f"{key} H_{n}: " + ("; ".join(" ".join(r) for r in M) if M else "[]"))
    if theories:
        result["theories"] = theories
    return result, "\n".join(lines), inputs, field.name if plan else None, (max(dims) + 1) if plan else None


def _witness_dict(w):
    return {"steps": len(w), "chain": [
        {"from": [render(x) for x in s.f0.images], "to": [render(x) for x in s.f1.images],
         "orientation": "0->1" if s.forward else "1->0"} for s in w.steps]}


def cmd_homotopy(args):
    G, H = _hypergraph(args.source), _hypergraph(args.target)
    fm, gm = _load(args.f, ("morphism",)), _load(args.g, ("morphism",))
    inputs = {args.source: digest(G), args.target: digest(H), args.f: digest(fm), args.g: digest(gm)}
    try:
        f, g = check_dh_morphism(G, H, fm), check_dh_morphism(G, H, gm)
    except (NotAMorphism, ValueError) as exc:
        raise InvalidInput([f"not a morphism: {exc}"]) from None
    w = homotopic(f, g, args.max_steps, args.cap)
    if w is None:
        return ({"found": False, "max_steps": args.max_steps},
                f"none within bound ({args.max_steps} steps)", inputs, None, None)
    lines = [f"homotopic in {len(w)} step{'s' if len(w) != 1 else ''}",
             "vertices: " + " ".join(render(v) for v in G.vertices)]
    for s in w.steps:
        lines.append(f"  {' '.join(render(x) for x in s.f0.images)}  ~  "
                     f"{' '.join(render(x) for x in s.f1.images)}  (I1 oriented "
                     f"{'0->1' if s.forward else '1->0'})")
    return {"found": True, "max_steps": args.max_steps, **_witness_dict(w)}, "\n".join(lines), inputs, None, None


def cmd_laws(args):
    G = _hypergraph(args.input)
    names = [args.law] if args.law else list(LAWS)
    reports = [LAWS[name](G, args.max_length).as_dict() for name in names]
    lines = []
    for r in reports:
        lines.append(f"{r['law']}: {'holds' if r['holds'] else 'FAILS'} - {r['detail']}")
    return ({"laws": reports}, "\n".join(lines), {args.input: digest(G)}, None, args.max_length)


def cmd_fixtures(args):
    rows = []
    for name in fixture_names():
        doc = parse_document(fixture_text(name))
        rows.append({"name": name, "kind": doc.kind, "description": doc.description})
    text = "\n".join(f"{r['name']:<14} {r['kind']:<20} {r['description']}" for r in rows)
    return {"fixtures": rows}, text, {}, None, None


# ---------------------------------------------------------------- parser

def build_parser():
    p = argparse.ArgumentParser(prog="dhpath", description=__doc__)
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--json", action="store_true", help="print the JSON report")

    sp = sub.add_parser("validate", help="parse and validate a document")
    sp.add_argument("input", help="file path or bundled fixture name")
    common(sp)
    sp.set_defaults(run=cmd_validate)

    sp = sub.add_parser("compute", help="Betti numbers of one theory")
    sp.add_argument("input")
    sp.add_argument("--theory", choices=KINDS, required=True)
    sp.add_argument("--density", type=int, default=1)
    sp.add_argument("--max-dim", type=int, default=2)
    sp.add_argument("--field", default="Q", help='"Q" or "Fp:<prime>"')
    sp.add_argument("--emit", choices=["basis"])
    common(sp)
    sp.set_defaults(run=cmd_compute)

    sp = sub.add_parser("morphism", help="check a vertex map and its induced homology maps")
    sp.add_argument("source")
    sp.add_argument("target")
    sp.add_argument("map")
    sp.add_argument("--theory", choices=KINDS)
    sp.add_argument("--density", type=int, default=1)
    sp.add_argument("--induced-dim", type=int)
    sp.add_argument("--field", default="Q")
    common(sp)
    sp.set_defaults(run=cmd_morphism)

    sp = sub.add_parser("homotopy", help="search for a chain of one-step homotopies")
    sp.add_argument("source")
    sp.add_argument("target")
    sp.add_argument("f")
    sp.add_argument("g")
    sp.add_argument("--max-steps", type=int, default=2)
    sp.add_argument("--cap", type=int, default=MORPHISM_CAP, help="largest vertex-map search space")
    common(sp)
    sp.set_defaults(run=cmd_homotopy)

    sp = sub.add_parser("laws", help="check structural laws on an input")
    sp.add_argument("input")
    sp.add_argument("--law", choices=list(LAWS))
    sp.add_argument("--max-length", type=int, default=3)
    common(sp)
    sp.set_defaults(run=cmd_laws)

    sp = sub.add_parser("fixtures", help="list bundled inputs")
    common(sp)
    sp.set_defaults(run=cmd_fixtures)
    return p


def _echo(args):
    skip = {"run", "json"}
    return {k: v for k, v in sorted(vars(args).items()) if k not in skip}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        result, text, inputs, field, L = args.run(args)
    except (CapExceeded, TruncationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (DocumentError, InvalidInput, UsageError, NotAPCMorphism, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if args.json:
        sys.stdout.write(Report(_echo(args), inputs, result, __version__, field, L).to_json())
    else:
        print(text)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
