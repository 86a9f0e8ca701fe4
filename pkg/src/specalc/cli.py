"""Command-line entry point: ``specalc <verb> [input] [options]``.

Exit codes: 0 success, 2 invalid input, 1 internal check failure.
"""
from __future__ import annotations

import argparse
import json
import sys
import warnings

from . import io
from .dimforms import bounded_dim, extract_species, hereditary_dim, saturate
from .errors import SpecalcError
from .homalg import (bongartz_ext_pairwise, global_dim_upper, is_hereditary,
                     resolution_ext_table)
from .mixedtate import RATIONALS, FieldParams, mtm_report
from .motives import generic_period_dim, one_motive_dims, one_motive_to_species
from .pathalg import AlgebraPresentation, dims_by_pair, full_algebra
from .quiver import is_acyclic


def _emit(args, payload: dict, lines: list):
    if args.format == "json":
        out = {"format": io.FORMAT_VERSION, **payload}
        print(json.dumps(out, indent=2, sort_keys=True))
    else:
        print("\n".join(lines))


def _matrix_lines(title: str, mat, names) -> list:
    lines = [title]
    width = max([len(str(x)) for r in mat for x in r] + [len(n) for n in names] + [1])
    lines.append(" " * (width + 2) + " ".join(n.rjust(width) for n in names))
    for name, row in zip(names, mat):
        lines.append(name.rjust(width) + "  " + " ".join(str(x).rjust(width) for x in row))
    return lines


def _names(p: AlgebraPresentation) -> list:
    return [p.quiver.vertex_name(v) for v in range(p.n_vertices)]


def _load_presentation(path: str) -> AlgebraPresentation:
    d = io.read_json(path)
    if io.detect_kind(d) != "presentation":
        raise SpecalcError("expected a presentation (with a 'quiver' entry)")
    return io.presentation_from_dict(d)


def cmd_dims(args):
    d = io.read_json(args.input)
    kind = io.detect_kind(d)
    if kind == "species":
        s = io.species_from_dict(d)
        rep = bounded_dim(s)
        names = list(s.names) if s.names else [str(i) for i in range(s.n_vertices)]
        lines = [f"dimension bound = {rep.bound_total}",
                 f"exact: {str(rep.exact).lower()} ({rep.reason})",
                 f"hereditary dimension = {hereditary_dim(s).delta_total}"]
        lines += [f"Ext^{k} correction = {v}" for k, v in rep.ext_corrections.items()]
        lines += _matrix_lines("delta(ij):", rep.delta_pairs, names)
        _emit(args, {"kind": "species", "report": rep.to_dict()}, lines)
        return 0
    if kind != "presentation":
        raise SpecalcError("dims expects a presentation or a species")
    p = io.presentation_from_dict(d)
    table = bongartz_ext_pairwise(p)
    her = is_hereditary(p)
    species = extract_species(p)
    est = bounded_dim(species)
    pairs = p.dims_by_pair()
    payload = {
        "kind": "presentation",
        "dim_kQ": len(p.basis),
        "dim_A": p.dim(),
        "dim_I": p.ideal.dim,
        "pairs": pairs,
        "hereditary": her,
        "ext_totals": {str(k): table.total(k) for k in range(1, table.max_degree + 1)},
        "estimate": est.to_dict(),
    }
    lines = [f"dim kQ = {len(p.basis)}", f"dim A = {p.dim()}", f"dim I = {p.ideal.dim}",
             f"hereditary: {str(her).lower()}"]
    lines += [f"Ext^{k} total = {table.total(k)}" for k in range(1, table.max_degree + 1)]
    lines.append(f"estimate from species = {est.bound_total} (exact: {str(est.exact).lower()}, {est.reason})")
    lines += _matrix_lines("dim e_j A e_i (row i = source, column j = target):", pairs, _names(p))
    _emit(args, payload, lines)
    return 0


def cmd_ext(args):
    p = _load_presentation(args.input)
    table = (resolution_ext_table if args.oracle else bongartz_ext_pairwise)(p, args.max_degree)
    lines = [f"method: {'minimal projective resolutions' if args.oracle else 'ideal formulas'}"]
    for k in range(table.max_degree + 1):
        lines += _matrix_lines(f"Ext^{k} (total {table.total(k)}):", table.matrix(k), _names(p))
    _emit(args, {"ext": table.to_dict()}, lines)
    return 0


def cmd_saturate(args):
    p = _load_presentation(args.input)
    sat = saturate(p)
    lines = [f"dim A = {p.dim()}", f"dim saturation = {sat.dim()}",
             f"edges: {len(sat.quiver.edges)}", "relations: none (hereditary)"]
    _emit(args, {"presentation": io.presentation_to_dict(sat)}, lines)
    return 0


def cmd_species(args):
    p = _load_presentation(args.input)
    s = extract_species(p)
    lines = _matrix_lines("Ext^1:", s.ext1, _names(p))
    for k, mat in (s.ext_higher or {}).items():
        lines += _matrix_lines(f"Ext^{k}:", mat, _names(p))
    _emit(args, {"species": io.species_to_dict(s)}, lines)
    return 0


def cmd_mtm(args):
    if args.field is not None:
        if args.field.upper() != "Z":
            raise SpecalcError("only --field Z is a known shortcut; use --r1/--r2/--s otherwise")
        fp = RATIONALS
    else:
        if args.r1 is None or args.r2 is None:
            raise SpecalcError("mtm needs --field Z or both --r1 and --r2")
        fp = FieldParams(args.r1, args.r2, args.s)
    rep = mtm_report(fp, args.n)
    cols = ["m", "e", "p", "dimB"] + (["ev", "odd", "d"] if rep.ev is not None else [])
    lines = [f"r1 = {fp.r1}, r2 = {fp.r2}, |S| = {fp.s}; {rep.note}", "  ".join(c.rjust(5) for c in cols)]
    for m in range(rep.n + 1):
        row = [m, rep.e[m - 1] if m >= 1 else "", rep.p[m], rep.dimB[m]]
        if rep.ev is not None:
            row += [rep.ev[m], rep.odd[m], rep.d[m]]
        lines.append("  ".join(str(x).rjust(5) for x in row))
    lines.append(f"dim B_{rep.n} = {rep.dimB[rep.n]}")
    if rep.ev is not None:
        lines.append(f"ev = {rep.ev[rep.n]}")
        lines.append(f"odd = {rep.odd[rep.n]}")
    _emit(args, {"mtm": rep.to_dict(), "field": {"r1": fp.r1, "r2": fp.r2, "s": fp.s}}, lines)
    return 0


def cmd_one_motive(args):
    inp = io.one_motive_from_dict(io.read_json(args.input))
    rep = one_motive_dims(inp)
    generic = generic_period_dim(one_motive_to_species(inp))
    if generic.total != rep.total:
        raise AssertionError("species formula disagrees with the one-motive formula")
    lines = [f"{k} = {v}" for k, v in rep.to_dict().items() if k != "total"]
    lines.append(f"total = {rep.total}")
    _emit(args, {"report": rep.to_dict()}, lines)
    return 0


def run_checks(p: AlgebraPresentation) -> list:
    """(name, ok, detail) rows for one presentation."""
    rows = [("admissible", True, "all relations lie in rad^2"),
            ("acyclic", is_acyclic(p.quiver), f"longest path {p.basis.longest}")]
    b = bongartz_ext_pairwise(p)
    o = resolution_ext_table(p)
    for k in range(b.max_degree + 1):
        ok = b.matrix(k) == o.matrix(k)
        rows.append((f"Ext^{k} formulas = resolutions", ok, f"total {b.total(k)} vs {o.total(k)}"))
    _, full = dims_by_pair(full_algebra(p.basis))
    rows.append(("dim A = dim kQ - dim I", p.dim() == full - p.ideal.dim,
                 f"{p.dim()} = {full} - {p.ideal.dim}"))
    her = p.ideal.is_zero()
    three_way = her == (b.total(2) == 0 if b.max_degree >= 2 else True)
    rows.append(("hereditary <=> Ext^2 = 0 <=> I = 0", three_way, f"hereditary: {str(her).lower()}"))
    gd = global_dim_upper(p)
    rows.append(("gldim <= longest path", gd.exact <= gd.bound, f"gldim {gd.exact}, bound {gd.bound}"))
    return rows


def cmd_check(args):
    p = _load_presentation(args.input)
    rows = run_checks(p)
    lines = [f"[{'PASS' if ok else 'FAIL'}] {name}: {detail}" for name, ok, detail in rows]
    lines.append(f"hereditary: {str(p.ideal.is_zero()).lower()}")
    payload = {"checks": [{"name": n, "ok": ok, "detail": d} for n, ok, d in rows],
               "hereditary": p.ideal.is_zero()}
    _emit(args, payload, lines)
    return 0 if all(ok for _, ok, _ in rows) else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["table", "json"], default="table")
    parser = argparse.ArgumentParser(prog="specalc", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="verb", required=True)

    def with_input(name, func, help_):
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.add_argument("input", help="JSON file, or - for standard input")
        sp.set_defaults(func=func)
        return sp

    with_input("dims", cmd_dims, "dimensions of a presentation or species")
    sp = with_input("ext", cmd_ext, "Ext tables between simples")
    sp.add_argument("--max-degree", type=int, default=None)
    sp.add_argument("--oracle", action="store_true", help="use minimal projective resolutions")
    with_input("saturate", cmd_saturate, "hereditary closure (relations dropped)")
    with_input("species", cmd_species, "species data extracted from a presentation")
    with_input("one-motive", cmd_one_motive, "period dimension of a 1-motive")
    with_input("check", cmd_check, "run all consistency checks on a presentation")
    sp = sub.add_parser("mtm", parents=[common], help="Mixed Tate dimension table")
    sp.add_argument("--field", default=None, help="Z for the rational integers")
    sp.add_argument("--r1", type=int)
    sp.add_argument("--r2", type=int)
    sp.add_argument("--s", type=int, default=0)
    sp.add_argument("--n", type=int, required=True)
    sp.set_defaults(func=cmd_mtm)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        with warnings.catch_warnings():
            warnings.simplefilter("always")
            return args.func(args)
    except (SpecalcError, FileNotFoundError) as err:
        print(f"specalc: {type(err).__name__}: {err}", file=sys.stderr)
        return 2
    except AssertionError as err:
        print(f"specalc: internal check failed: {err}", file=sys.stderr)
        return 1


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
