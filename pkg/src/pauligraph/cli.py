"""Command-line front door: ``pauligraph <subcommand> ...``.

Exit codes: 0 success, 1 verification failure, 2 budget refusal.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from .config import Config
from .errors import BudgetExceeded, VerificationError
from .graphs import Graph, aut_order, spectrum
from .numtheory import jordan_j2, psi, sigma
from .polar import find_spread, polar_space, puncture
from .report import AnalysisReport, analyze, discrepancy_ledger, export, table1
from .zq import admissible_vectors, isotropic_lines, projective_line

log = logging.getLogger("pauligraph")

EXIT_OK, EXIT_VERIFY, EXIT_BUDGET = 0, 1, 2


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        print(text)


def cmd_analyze(args, config: Config) -> int:
    rep = analyze(args.spec, config)
    if args.output:
        Path(args.output).write_bytes(export(rep, args.format))
    if args.json:
        print(rep.to_json())
        return EXIT_OK
    pg, c = rep.pauli_graph, rep.cliques
    lines = [
        f"system {rep.factorization} (q={rep.q}): {rep.observables} observables, {pg['edges']} commuting pairs",
        f"  Pauli graph spectrum {pg['spectrum']}" + (f", srg{tuple(pg['srg'])}" if pg["srg"] else ""),
        f"  maximal commuting sets: {c['total']}  split {'+'.join(map(str, c['split']['main'] + ([c['split']['isolated']] if c['split']['isolated'] else [])))}",
        f"  dual graph spectrum {rep.dual['spectrum']}",
        f"  intersection sizes {rep.intersection_profile}",
    ]
    for k, kg in rep.k_graphs.items():
        parts = ", ".join(f"{cl['count']} x (n={cl['size']}, {cl['spectrum']})" for cl in kg["classes"])
        lines.append(f"  G^({k}) on {kg['on']} sets: {parts}")
    if rep.ring:
        r = rep.ring
        lines.append(f"  ring: sigma={r['sigma']} psi={r['psi']} sigma-psi={r['sigma_minus_psi']}")
    if rep.aut:
        lines.append(f"  automorphism orders {rep.aut}")
    print("\n".join(lines))
    return EXIT_OK


def cmd_table1(args, config: Config) -> int:
    res = table1(config, rows=args.rows or None)
    if args.output:
        Path(args.output).write_bytes(export(res, args.format))
    payload = res.to_dict()
    if args.discrepancies:
        payload["discrepancies"] = discrepancy_ledger(config)
    text = res.summary()
    if args.discrepancies:
        text += "\n\ninconsistencies in the published census:\n" + "\n".join(
            f"  {d['id']}: published {d['published']}; computed {d['computed']}" for d in payload["discrepancies"]
        )
    _emit(args, payload, text)
    return EXIT_OK if res.passed else EXIT_VERIFY


def cmd_isotropic(args, config: Config) -> int:
    q = args.q
    lines = isotropic_lines(q, budget=config.vertex_budget)
    pl = projective_line(q)
    adm = admissible_vectors(q)
    payload = {
        "q": q,
        "isotropic_lines": len(lines),
        "free_lines": sum(l.free for l in lines),
        "sigma": sigma(q),
        "projective_line": len(pl),
        "psi": psi(q),
        "admissible_vectors": len(adm),
        "J2": jordan_j2(q),
    }
    if args.list:
        payload["lines"] = [sorted(l.points) for l in lines]
    ok = (payload["isotropic_lines"], payload["projective_line"], payload["admissible_vectors"]) == (
        sigma(q), psi(q), jordan_j2(q))
    text = (f"Z_{q}^2: {len(lines)} isotropic lines (sigma={sigma(q)}), "
            f"{len(pl)} projective points (psi={psi(q)}), {len(adm)} admissible vectors (J2={jordan_j2(q)})")
    if args.list:
        text += "\n" + "\n".join(("free     " if l.free else "non-free ") + " ".join(f"{b}{c}" if q < 10 else f"({b},{c})" for b, c in sorted(l.points)) for l in lines)
    _emit(args, payload, text)
    return EXIT_OK if ok else EXIT_VERIFY


def cmd_polar(args, config: Config) -> int:
    ps = polar_space(args.p, args.n, budget=config.vertex_budget)
    pun = puncture(ps)
    payload = {
        "p": ps.p,
        "n": ps.n,
        "points": len(ps.points),
        "generators": len(ps.generators),
        "punctured_points": pun.point_count,
        "psi": psi(ps.p ** (2 * ps.n - 1)),
        "punctured_dual": {"vertices": pun.dual.n, "spectrum": str(spectrum(pun.dual, max_n=config.spectrum_budget))},
    }
    if config.compute_aut:
        try:
            payload["punctured_dual"]["aut_order"] = aut_order(pun.dual, budget=config.aut_budget)
        except BudgetExceeded as exc:
            payload["punctured_dual"]["aut_order"] = None
            log.warning("aut_order skipped: %s", exc)
    text = (f"{ps.symbol}: {payload['points']} points, {payload['generators']} generators; "
            f"punctured: {pun.point_count} points (psi={payload['psi']}), "
            f"dual on {pun.dual.n} generators with spectrum {payload['punctured_dual']['spectrum']}")
    if "aut_order" in payload["punctured_dual"]:
        text += f", |Aut| = {payload['punctured_dual']['aut_order']}"
    _emit(args, payload, text)
    return EXIT_OK if pun.point_count == payload["psi"] else EXIT_VERIFY


def cmd_spread(args, config: Config) -> int:
    ps = polar_space(args.p, args.n, budget=config.vertex_budget)
    sp = find_spread(ps)
    gens = [[str(ps.points[i]) for i in g] for g in sp.generators]
    payload = {"p": ps.p, "n": ps.n, "size": len(sp.generators), "generators": gens}
    text = f"spread of {ps.symbol} with {len(gens)} generators\n" + "\n".join(" ".join(g) for g in gens)
    _emit(args, payload, text)
    return EXIT_OK


def cmd_aut(args, config: Config) -> int:
    g = Graph.from_edgelist(Path(args.graph_file).read_text())
    order = aut_order(g, budget=max(config.aut_budget, g.n))
    _emit(args, {"vertices": g.n, "edges": g.num_edges, "aut_order": order},
          f"{g.n} vertices, {g.num_edges} edges, |Aut| = {order}")
    return EXIT_OK


def cmd_export(args, config: Config) -> int:
    if args.report:
        obj = AnalysisReport.from_dict(json.loads(Path(args.report).read_text()))
    elif args.graph in ("pauli", "dual"):
        if not args.spec:
            raise SystemExit("export --graph needs --spec")
        from .graphs import maximal_cliques
        from .pauli import build_pauli_graph, parse_factorization
        from .polar import dual_graph

        f = parse_factorization(args.spec)
        obj = build_pauli_graph(f, vertex_budget=config.vertex_budget)
        if args.graph == "dual":
            cf = maximal_cliques(obj)
            obj = dual_graph(cf.of_size(f.q - 1) if config.clique_filter == "q-1" else cf)
    elif args.spec:
        obj = analyze(args.spec, config)
    else:
        obj = table1(config)
    data = export(obj, args.format)
    if args.output:
        Path(args.output).write_bytes(data)
    else:
        sys.stdout.write(data.decode())
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print machine-readable JSON")
    common.add_argument("--vertex-budget", type=int)
    common.add_argument("--clique-budget", type=int)
    common.add_argument("--aut-budget", type=int)
    common.add_argument("--spectrum-budget", type=int)
    common.add_argument("--all-cliques", dest="clique_filter", action="store_const", const="all",
                        help="use every maximal clique, not only those of size q-1")
    common.add_argument("--oracle-cap", type=int)
    common.add_argument("--threads", type=int)
    common.add_argument("--aut", dest="compute_aut", action="store_const", const=True,
                        help="also compute automorphism group orders")
    common.add_argument("-v", "--verbose", action="store_true")

    p = argparse.ArgumentParser(prog="pauligraph", description="Pauli-graph census and finite-geometry checks.")
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", parents=[common], help="full pipeline for one system, e.g. 2x3x4")
    a.add_argument("spec")
    a.add_argument("-o", "--output")
    a.add_argument("--format", default="json", choices=["json", "csv"])
    a.set_defaults(func=cmd_analyze)

    t = sub.add_parser("table1", parents=[common], help="recompute the stored census rows")
    t.add_argument("rows", nargs="*", help="row ids or factorizations (default: all)")
    t.add_argument("--discrepancies", action="store_true", help="append the inconsistency ledger")
    t.add_argument("-o", "--output")
    t.add_argument("--format", default="csv", choices=["json", "csv"])
    t.set_defaults(func=cmd_table1)

    i = sub.add_parser("isotropic", parents=[common], help="isotropic lines of Z_q^2")
    i.add_argument("q", type=int)
    i.add_argument("--list", action="store_true")
    i.set_defaults(func=cmd_isotropic)

    for name, fn, hlp in (("polar", cmd_polar, "symplectic polar space W(2n-1,p)"),
                          ("spread", cmd_spread, "find a spread of W(2n-1,p)")):
        s = sub.add_parser(name, parents=[common], help=hlp)
        s.add_argument("p", type=int)
        s.add_argument("n", type=int)
        s.set_defaults(func=fn)

    g = sub.add_parser("aut", parents=[common], help="automorphism group order of an edge-list graph")
    g.add_argument("graph_file")
    g.set_defaults(func=cmd_aut)

    e = sub.add_parser("export", parents=[common], help="serialize a report, the census or a graph")
    e.add_argument("--spec")
    e.add_argument("--report", help="re-serialize a saved JSON report")
    e.add_argument("--graph", choices=["pauli", "dual"])
    e.add_argument("--format", default="json", choices=["json", "csv", "dot", "edgelist"])
    e.add_argument("-o", "--output")
    e.set_defaults(func=cmd_export)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        config = Config.from_env(
            vertex_budget=args.vertex_budget,
            clique_budget=args.clique_budget,
            aut_budget=args.aut_budget,
            spectrum_budget=args.spectrum_budget,
            clique_filter=args.clique_filter,
            oracle_cap=args.oracle_cap,
            threads=args.threads,
            compute_aut=args.compute_aut,
        )
        return args.func(args, config)
    except BudgetExceeded as exc:
        print(f"budget refused: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except VerificationError as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VERIFY


if __name__ == "__main__":
    sys.exit(main())
