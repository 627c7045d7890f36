"""``balpha`` command line: spectra, PSD threshold, sweeps, bound reports, Sachs checks, verification.

Exit codes: 0 ok, 1 property violation, 2 graph/argument parse failure,
3 invalid alpha, 4 isolated vertex, 5 exact solver budget exceeded,
6 Sachs expansion over budget.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from dataclasses import fields
from fractions import Fraction
from typing import Sequence

from . import bounds as bd
from . import corpus, linalg, sachs, verify
from . import family as fam
from . import graph as gr
from .errors import BudgetExceededError, GraphFormatError, IsolatedVertexError
from .formats import encode_graph6, load_graph, parse_graph6
from .graph import Graph
from .tolerances import DEFAULT, Tolerances

EXIT_OK, EXIT_VIOLATION, EXIT_PARSE, EXIT_ALPHA, EXIT_ISOLATED, EXIT_BUDGET, EXIT_SACHS = range(7)

STAR_REFERENCE_GRID = ["0", "0.1", "0.2", "0.3", "0.4", "0.6", "0.7", "0.8", "0.9", "1"]
JSON_SCHEMA = 1


class CliError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


# -- argument helpers ----------------------------------------------------------

def resolve_graph(source: str) -> Graph:
    """File path, generator spec (``K4``, ``K1,24``, ``C6``, ``petersen``, ``T3,3,3``) or inline graph6."""
    try:
        if os.path.isfile(source):
            return load_graph(source)
        try:
            return corpus.from_spec(source)
        except GraphFormatError:
            return parse_graph6(source)
    except (GraphFormatError, ValueError, OSError) as exc:
        raise CliError(EXIT_PARSE, f"cannot read graph {source!r}: {exc}") from None


def parse_alpha(text: str) -> Fraction:
    try:
        return fam.as_alpha(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise CliError(EXIT_ALPHA, f"invalid alpha {text!r}: {exc}") from None


def parse_grid(text: str | None, default: Sequence[str]) -> list[Fraction]:
    """Comma list (``0,0.1,2/3``) or ``start:stop:step``."""
    if text is None:
        items = [parse_alpha(a) for a in default]
    elif text.count(":") == 2:
        start, stop, step = (parse_alpha(t) if i < 2 else Fraction(t) for i, t in enumerate(text.split(":")))
        if step <= 0:
            raise CliError(EXIT_ALPHA, f"grid step must be positive in {text!r}")
        count = int((stop - start) / step)
        items = [start + i * step for i in range(count + 1)]
    else:
        items = [parse_alpha(t) for t in text.split(",") if t.strip()]
    return sorted(set(items))


def parse_tol(overrides: Sequence[str]) -> Tolerances:
    known = {f.name: f.type for f in fields(Tolerances)}
    values = {}
    for item in overrides:
        name, _, raw = item.partition("=")
        if name not in known or not raw:
            raise CliError(EXIT_PARSE, f"bad --tol {item!r}; known names: {', '.join(sorted(known))}")
        try:
            values[name] = int(raw) if name == "jacobi_max_sweeps" else float(raw)
        except ValueError:
            raise CliError(EXIT_PARSE, f"bad --tol value {item!r}") from None
    return DEFAULT.with_overrides(**values)


def fmt12(x: float) -> str:
    s = f"{x:.12g}"
    return "0" if s == "-0" else s


def _emit_csv(header: Sequence[str], rows: Sequence[Sequence], out) -> None:
    w = csv.writer(out, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)


def _emit_json(obj, out) -> None:
    out.write(json.dumps(obj, indent=2) + "\n")


def _emit_table(header: Sequence[str], rows: Sequence[Sequence[str]], out) -> None:
    widths = [max(len(str(h)), *(len(str(r[i])) for r in rows)) if rows else len(str(h))
              for i, h in enumerate(header)]
    out.write("  ".join(str(h).rjust(w) for h, w in zip(header, widths)) + "\n")
    for r in rows:
        out.write("  ".join(str(c).rjust(w) for c, w in zip(r, widths)) + "\n")


# -- subcommands ---------------------------------------------------------------

def cmd_spectrum(args, out) -> int:
    g = resolve_graph(args.graph)
    a = parse_alpha(args.alpha)
    tol = parse_tol(args.tol)
    lam = linalg.sym_eigenvalues(fam.b_alpha(g, a), method=args.method, tol=tol)
    if args.format == "json":
        _emit_json({"schema": JSON_SCHEMA, "graph_id": args.graph, "alpha": float(a),
                    "eigenvalues": [float(x) for x in lam]}, out)
    elif args.format == "table":
        _emit_table(["k", "lambda"], [[k + 1, fmt12(x)] for k, x in enumerate(lam)], out)
    else:
        _emit_csv(["k", "lambda"], [[k + 1, fmt12(x)] for k, x in enumerate(lam)], out)
    return EXIT_OK


def cmd_beta0(args, out) -> int:
    g = resolve_graph(args.graph)
    tol = parse_tol(args.tol)
    try:
        res = fam.beta_o(g, tol=tol)
    except IsolatedVertexError as exc:
        raise CliError(EXIT_ISOLATED, f"beta0 undefined: {exc}") from None
    reg = fam.beta_o_regular(g) if g.is_regular() else None
    b = f"{res.value:.10f}"
    ranges = {
        "positive_semidefinite_singular": f"alpha = 0 and alpha = {b}",
        "positive_definite": f"0 < alpha < {b}",
        "indefinite": f"{b} < alpha <= 1",
    }
    if args.format == "json":
        _emit_json({"schema": JSON_SCHEMA, "graph_id": args.graph, "beta0": res.value,
                    "bracket_width": res.bracket_width, "regular_formula": reg, "ranges": ranges}, out)
        return EXIT_OK
    out.write(f"graph: {args.graph} (n={g.n}, m={g.m})\n")
    out.write(f"beta0: {b}\n")
    out.write(f"regular formula: {'n/a (not regular)' if reg is None else f'{reg:.10f}'}\n")
    for name, text in ranges.items():
        out.write(f"{name}: {text}\n")
    return EXIT_OK


def cmd_sweep(args, out) -> int:
    g = resolve_graph(args.graph)
    if g.m == 0:
        raise CliError(EXIT_PARSE, "sweep needs a graph with at least one edge")
    grid = parse_grid(args.grid, STAR_REFERENCE_GRID)
    lam1 = fam.spectra(g, grid)[:, 0]
    rows = []
    for a, l1 in zip(grid, lam1):
        yz = None if a == fam.HALF else bd.lower_lambda1_yz(g, a)
        rows.append((a, float(l1), yz))
    if args.format == "json":
        _emit_json({"schema": JSON_SCHEMA, "graph_id": args.graph,
                    "rows": [{"alpha": float(a), "lambda1": l1, "yz_bound": "undefined" if yz is None else yz}
                             for a, l1, yz in rows]}, out)
    elif args.format == "table":
        _emit_table(["alpha", "lambda1", "yz_bound"],
                    [[f"{float(a):.3f}", f"{l1:.3f}", "undefined" if yz is None else f"{yz:.3f}"]
                     for a, l1, yz in rows], out)
    else:
        _emit_csv(["alpha", "lambda1", "yz_bound"],
                  [[repr(float(a)), repr(l1), "undefined" if yz is None else repr(yz)] for a, l1, yz in rows], out)
    return EXIT_OK


def _entry(name: str, target: str, direction: str, value: float, actual: float, tol: float) -> dict:
    holds = actual >= value - tol if direction == ">=" else actual <= value + tol
    return {"name": name, "target": target, "direction": direction, "value": value,
            "holds": bool(holds), "gap": abs(value - actual)}


def bound_report(g: Graph, alpha: Fraction, graph_id: str, chi: int | None = None,
                 tol: Tolerances = DEFAULT) -> dict:
    """Every bound applicable to ``(g, alpha)``, with the inapplicable ones and the reason."""
    if g.m == 0:
        raise CliError(EXIT_PARSE, "bounds need a graph with at least one edge")
    lam = fam.spectrum(g, alpha)
    l1, ln = float(lam[0]), float(lam[-1])
    t = tol.bound
    connected = gr.is_connected(g)
    parts = gr.bipartition(g)
    entries, skipped = [], []

    def skip(name, reason):
        skipped.append({"name": name, "reason": reason})

    if connected:
        entries.append(_entry("lower_lambda1_alpha_delta", "lambda1", ">=", bd.lower_lambda1_alpha_delta(g, alpha), l1, t))
        entries.append(_entry("upper_lambda1_piecewise", "lambda1", "<=", bd.upper_lambda1_piecewise(g, alpha), l1, t))
    else:
        skip("lower_lambda1_alpha_delta", "not connected")
        skip("upper_lambda1_piecewise", "not connected")
    if alpha == fam.HALF:
        skip("lower_lambda1_yz", "undefined at alpha=1/2")
    else:
        entries.append(_entry("lower_lambda1_yz", "lambda1", ">=", bd.lower_lambda1_yz(g, alpha), l1, t))
    if parts is not None and connected:
        p, q = len(parts[0]), len(parts[1])
        entries.append(_entry("upper_lambda1_f_alpha", "lambda1", "<=", bd.f_alpha(p, q, alpha), l1, t))
        e = _entry("upper_lambda_n_bipartite", "lambda_n", "<=", bd.upper_lambda_n_chromatic(g, alpha, 2), ln, t)
        e["equality_case"] = bd.bipartite_lambda_n_equality_case(g, alpha).value
        entries.append(e)
    else:
        reason = "not bipartite" if parts is None else "not connected"
        skip("upper_lambda1_f_alpha", reason)
        skip("upper_lambda_n_bipartite", reason)
    if chi is None:
        try:
            chi = bd.chromatic_number(g).chi
        except BudgetExceededError as exc:
            raise CliError(EXIT_BUDGET, f"{exc}; supply --chi") from None
    entries.append(_entry("upper_lambda_n_chromatic", "lambda_n", "<=", bd.upper_lambda_n_chromatic(g, alpha, chi), ln, t))

    sb = bd.specialized_lower_bounds(g)
    rho1 = float(linalg.sym_eigenvalues(gr.adjacency_matrix(g))[0])
    mu1 = float(linalg.sym_eigenvalues(gr.laplacian(g))[0])
    q1 = float(linalg.sym_eigenvalues(gr.signless_laplacian(g))[0])
    entries.append(_entry("lower_rho1_average_degree", "rho1", ">=", sb.adjacency, rho1, t))
    entries.append(_entry("lower_mu1_max_degree", "mu1", ">=", sb.laplacian, mu1, t))
    entries.append(_entry("lower_q1_average_degree", "q1", ">=", sb.signless, q1, t))

    if g.has_isolated_vertex():
        skip("lower_chi_from_beta0", "isolated vertex")
        skip("upper_independence_from_beta0", "isolated vertex")
    else:
        beta = fam.beta_o(g, tol=tol).value
        entries.append(_entry("lower_chi_from_beta0", "chi", ">=", beta / (1 - beta), float(chi), t))
        if g.is_regular():
            try:
                ind = bd.independence_number(g).alpha_g
            except BudgetExceededError as exc:
                raise CliError(EXIT_BUDGET, str(exc)) from None
            entries.append(_entry("upper_independence_from_beta0", "independence_number", "<=",
                                  g.n * (1 - beta) / beta, float(ind), t))
        else:
            skip("upper_independence_from_beta0", "not regular")
    return {
        "schema": JSON_SCHEMA,
        "graph_id": graph_id,
        "graph6": encode_graph6(g),
        "alpha": float(alpha),
        "lambda1": l1,
        "lambda_n": ln,
        "chi": chi,
        "bounds": entries,
        "nonapplicable": skipped,
    }


def cmd_bounds(args, out) -> int:
    g = resolve_graph(args.graph)
    a = parse_alpha(args.alpha)
    report = bound_report(g, a, args.graph, chi=args.chi, tol=parse_tol(args.tol))
    if args.format == "json":
        _emit_json(report, out)
    else:
        rows = [[e["name"], e["target"], e["direction"], f"{e['value']:.6f}", str(e["holds"]).lower(),
                 f"{e['gap']:.3e}"] for e in report["bounds"]]
        rows += [[s["name"], "-", "-", "-", "n/a", s["reason"]] for s in report["nonapplicable"]]
        if args.format == "csv":
            _emit_csv(["name", "target", "direction", "value", "holds", "gap"], rows, out)
        else:
            out.write(f"graph: {args.graph}  alpha={float(a):.6g}  lambda1={report['lambda1']:.6f}  "
                      f"lambda_n={report['lambda_n']:.6f}\n")
            _emit_table(["name", "target", "dir", "value", "holds", "gap"], rows, out)
    return EXIT_OK if all(e["holds"] for e in report["bounds"]) else EXIT_VIOLATION


def cmd_detpoly(args, out) -> int:
    g = resolve_graph(args.graph)
    a = parse_alpha(args.alpha)
    tol = parse_tol(args.tol)
    if g.n > sachs.SACHS_MAX_N:
        raise CliError(EXIT_SACHS, f"Sachs expansion limited to n <= {sachs.SACHS_MAX_N}, got n={g.n}")
    exp = sachs.SachsExpansion(g)
    det_s = exp.determinant(a)
    det_l = linalg.determinant(fam.b_alpha(g, a), tol=tol)
    cs = exp.coefficients(a)
    cl = linalg.char_poly(fam.b_alpha_exact(g, a)).coeffs
    harary = sachs.det_adjacency_harary(g) if a == 1 else None
    if args.format == "json":
        _emit_json({"schema": JSON_SCHEMA, "graph_id": args.graph, "alpha": float(a),
                    "det_sachs": float(det_s), "det_sachs_exact": str(det_s), "det_linalg": det_l,
                    "difference": float(det_s) - det_l, "harary": harary,
                    "coefficients": [{"k": k, "sachs": str(x), "leverrier": str(y)}
                                     for k, (x, y) in enumerate(zip(cs, cl))]}, out)
        return EXIT_OK
    out.write(f"graph: {args.graph} (n={g.n}, m={g.m})  alpha={a}\n")
    out.write(f"det (Sachs):      {fmt12(float(det_s))}  [{det_s}]\n")
    out.write(f"det (elimination): {fmt12(det_l)}\n")
    out.write(f"difference:       {float(det_s) - det_l:.3e}\n")
    if harary is not None:
        out.write(f"det A (Harary):   {harary}\n")
    rows = [[k, str(x), str(y), "yes" if x == y else "no"] for k, (x, y) in enumerate(zip(cs, cl))]
    out.write("characteristic polynomial det(xI - B) = sum_k a_k x^(n-k):\n")
    _emit_table(["k", "a_k (Sachs)", "a_k (Leverrier)", "equal"], rows, out)
    return EXIT_OK


def cmd_verify(args, out) -> int:
    graphs = corpus.atlas_graphs(args.max_n, min_n=args.min_n) if args.max_n >= args.min_n else []
    if args.random:
        graphs += corpus.random_graphs(args.random, args.random_min_n, args.random_max_n, seed=args.seed,
                                       connected=True)
    grid = parse_grid(args.grid, [str(a) for a in verify.alpha_grid()])
    report = verify.run(graphs, grid, seed=args.seed, sachs_max_n=args.sachs_max_n)
    out.write(f"corpus: {len(graphs)} graphs, {len(grid)} alpha values, seed {args.seed}\n")
    for line in report.lines(max_failures=args.max_failures):
        out.write(line + "\n")
    return EXIT_OK if report.ok else EXIT_VIOLATION


# -- parser --------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="balpha", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, alpha=False, fmt="table", graph=True):
        if graph:
            sp.add_argument("-g", "--graph", required=True,
                            help="file path, inline graph6, or generator spec (K4, K1,24, C6, P5, S5, T3,3,3, petersen)")
        if alpha:
            sp.add_argument("-a", "--alpha", required=True, help="decimal or rational, e.g. 0.3 or 2/3")
        sp.add_argument("--format", choices=["csv", "json", "table"], default=fmt)
        sp.add_argument("--tol", action="append", default=[], metavar="NAME=VALUE",
                        help="override a numerical tolerance (repeatable)")

    sp = sub.add_parser("spectrum", help="eigenvalues of B_alpha, descending")
    common(sp, alpha=True, fmt="csv")
    sp.add_argument("--method", choices=["lapack", "jacobi"], default="lapack")
    sp.set_defaults(func=cmd_spectrum)

    sp = sub.add_parser("beta0", help="PSD threshold and definiteness ranges")
    common(sp)
    sp.set_defaults(func=cmd_beta0)

    sp = sub.add_parser("sweep", help="lambda1 and the Y/Z lower bound across an alpha grid")
    common(sp, fmt="csv")
    sp.add_argument("--grid", help="comma list or start:stop:step (default 0,0.1,...,0.4,0.6,...,1)")
    sp.set_defaults(func=cmd_sweep)

    sp = sub.add_parser("bounds", help="evaluate every applicable eigenvalue bound")
    common(sp, alpha=True, fmt="json")
    sp.add_argument("--chi", type=int, help="chromatic number, skips the exact colouring solver")
    sp.set_defaults(func=cmd_bounds)

    sp = sub.add_parser("detpoly", help="determinant and characteristic polynomial, Sachs vs linear algebra")
    common(sp, alpha=True)
    sp.set_defaults(func=cmd_detpoly)

    sp = sub.add_parser("verify", help="run the property suite over a graph corpus")
    common(sp, graph=False)
    sp.add_argument("--max-n", type=int, default=7, help="exhaustive connected graphs up to this order (<= 7)")
    sp.add_argument("--min-n", type=int, default=2)
    sp.add_argument("--random", type=int, default=20, help="number of extra seeded random connected graphs")
    sp.add_argument("--random-min-n", type=int, default=8)
    sp.add_argument("--random-max-n", type=int, default=10)
    sp.add_argument("--sachs-max-n", type=int, default=10)
    sp.add_argument("--seed", type=int, default=42)
    sp.add_argument("--grid", help="alpha grid, comma list or start:stop:step (default step 0.05)")
    sp.add_argument("--max-failures", type=int, default=5, help="counterexamples shown per property")
    sp.set_defaults(func=cmd_verify)
    return p


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if getattr(args, "max_n", 0) > corpus.ATLAS_MAX_N:
            raise CliError(EXIT_PARSE, f"--max-n is limited to {corpus.ATLAS_MAX_N}")
        return args.func(args, out)
    except CliError as exc:
        print(f"balpha: error: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
