"""Command-line surface: one subcommand per capability, deterministic output.

Re-running any command on identical inputs and flags produces byte-identical
output: iteration orders are fixed, JSON keys are sorted, and all randomness
would have to come through --seed (which is recorded in JSON metadata).

Exit codes: 0 success, 1 validation or input-format error, 2 resource limit.
"""

import argparse
import io
import json
import sys
from pathlib import Path

import numpy as np

from . import audit as audit_mod
from . import construct as construct_mod
from . import extract as extract_mod
from . import ograph, patterns, sidon
from .errors import ResourceLimitError

__all__ = ["main", "fit_loglog", "scaling_rows"]

CSV_HEADER = "k,N,set_size,edges,log_fit_exponent"


def _parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", type=Path, default=None, help="output path (default: stdout)")
    common.add_argument("--format", choices=["text", "json", "csv"], default="text")
    common.add_argument("--seed", type=int, default=None, help="seed recorded in metadata")
    common.add_argument("--max-cycle-len", type=int, default=patterns.MAX_PATTERN_LENGTH)
    common.add_argument("--budget-edges", type=int, default=2_000_000)

    p = argparse.ArgumentParser(prog="ordturan", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("sidon", parents=[common], help="emit a B_k set")
    sp.add_argument("n", type=int)
    sp.add_argument("k", type=int)
    sp.add_argument("--method", choices=["bose-chowla", "greedy", "best"], default="best")

    cp = sub.add_parser("construct", parents=[common], help="build the 4n-vertex graph and certify it")
    cp.add_argument("n", type=int)
    cp.add_argument("k", type=int)
    cp.add_argument("--method", choices=["bose-chowla", "greedy", "best"], default="best")
    cp.add_argument("--cert", type=Path, default=None, help="certificate path (default: <out>.cert.jsonl)")

    dp = sub.add_parser("detect", parents=[common], help="find embedded ordered cycles")
    dp.add_argument("graph", type=Path)
    dp.add_argument("--length", type=int, required=True, help="even cycle length 2l")
    dp.add_argument(
        "--class",
        dest="border_class",
        choices=["bordered", "inbordered", "outbordered", "unbordered", "any"],
        default="bordered",
    )
    dp.add_argument("--limit", type=int, default=None)

    zp = sub.add_parser("zigzag", parents=[common], help="zigzag path audit")
    zp.add_argument("graph", type=Path)
    zp.add_argument("-k", type=int, required=True)

    ep = sub.add_parser("extract", parents=[common], help="extract a bordered-cycle-free subgraph")
    ep.add_argument("graph", type=Path)
    ep.add_argument("-k", type=int, default=None)
    ep.add_argument("-l", type=int, default=None)
    ep.add_argument("--iterated", type=int, default=None, metavar="M")
    ep.add_argument("--ko", type=int, default=None, metavar="K")
    ep.add_argument("--classes", type=str, default=None, help="comma list of first-class vertices for --ko")
    ep.add_argument("--report", type=Path, default=None, help="report path (default: <out>.report.json)")

    np_ = sub.add_parser("enumerate-patterns", parents=[common], help="census of two-interval cycles")
    np_.add_argument("two_k", type=int)
    np_.add_argument("--out-dir", type=Path, default=None, help="write one pattern file per pattern")

    xp = sub.add_parser("exact-tiny", parents=[common], help="exhaustive extremal number, n <= 7")
    xp.add_argument("n", type=int)
    xp.add_argument("patterns", nargs="+", help="pattern names, e.g. CB4 C6_2 S1")

    scp = sub.add_parser("scale", parents=[common], help="edge-count scaling fit over construction sizes")
    scp.add_argument("-k", type=int, required=True)
    scp.add_argument("--n", type=str, required=True, help="comma-separated construction sizes")
    scp.add_argument("--method", choices=["bose-chowla", "greedy", "best"], default="best")
    return p


def _emit(text: str, out: Path | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        out.write_text(text)


def _jdump(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _meta(args) -> dict:
    return {} if args.seed is None else {"seed": args.seed}


def _make_set(n: int, k: int, method: str) -> sidon.BkSet:
    if method == "greedy":
        return sidon.greedy_bk(n, k)
    if method == "bose-chowla":
        q = sidon.largest_prime_power_for(n, k)
        if q is None:
            raise ValueError(f"no prime power q with q^{k} - 1 <= {n}")
        s = sidon.bose_chowla(q, k)
        return sidon.BkSet(s.elements, k, n, provenance=s.provenance)
    return sidon.best_bk_for_budget(n, k)


def _cmd_sidon(args) -> int:
    s = _make_set(args.n, args.k, args.method)
    if args.format == "json":
        _emit(
            _jdump(
                {
                    "k": s.k,
                    "n": s.universe_bound,
                    "size": len(s),
                    "elements": list(s.elements),
                    "provenance": s.provenance,
                    **_meta(args),
                }
            ),
            args.out,
        )
    else:
        buf = io.StringIO()
        sidon.write_bk_set(s, buf)
        _emit(buf.getvalue(), args.out)
    return 0


def _cmd_construct(args) -> int:
    s = _make_set(args.n, args.k, args.method)
    rec = construct_mod.build(args.n, args.k, s)
    cert = construct_mod.certify_freeness(rec)
    gbuf = io.StringIO()
    ograph.write_graph(rec.graph, gbuf)
    cbuf = io.StringIO()
    construct_mod.write_certificate(cert, cbuf)
    if args.out is None:
        # keep stdout parseable as a graph file: certificate rides as comments
        text = gbuf.getvalue() + "".join(
            f"# {line}\n" for line in cbuf.getvalue().splitlines()
        )
        _emit(text, None)
    else:
        _emit(gbuf.getvalue(), args.out)
        cert_path = args.cert or args.out.with_name(args.out.name + ".cert.jsonl")
        cert_path.write_text(cbuf.getvalue())
    return 0


def _read_graph(path: Path, budget_edges: int) -> ograph.OrderedGraph:
    with open(path) as f:
        g = ograph.read_graph(f)
    if g.m > budget_edges:
        raise ResourceLimitError(f"{g.m} edges exceeds --budget-edges {budget_edges}")
    return g


def _witness_row(w: patterns.CycleWitness) -> dict:
    return {
        "vertices": list(w.vertices),
        "pattern": patterns.pattern_name(w.pattern) or "-".join(map(str, w.pattern.key)),
        "class": w.pattern.border_class,
        "outer": list(w.outer_border()),
        "inner": list(w.inner_border()),
    }


def _cmd_detect(args) -> int:
    g = _read_graph(args.graph, args.budget_edges)
    if g.n > 10_000:
        raise ResourceLimitError("detection capped at 10^4 vertices")
    two_l = args.length
    if args.border_class == "bordered":
        wits = patterns.find_bordered_cycles(g, two_l, limit=args.limit)
    else:
        wanted = (
            {args.border_class}
            if args.border_class != "any"
            else {patterns.BORDERED, patterns.INBORDERED, patterns.OUTBORDERED, patterns.UNBORDERED}
        )
        wits = []
        for p in patterns.enumerate_ordered_cycles(two_l, args.max_cycle_len):
            if patterns.classify(p) not in wanted:
                continue
            for emb in patterns.find_pattern_embeddings(g, p, limit=args.limit):
                traversal = tuple(emb[v - 1] for v in p.key)
                wits.append(patterns.CycleWitness(traversal, p))
        wits.sort(key=lambda w: w.vertices)
        if args.limit is not None:
            wits = wits[: args.limit]
    rows = [_witness_row(w) for w in wits]
    if args.format == "json":
        _emit(_jdump({"count": len(rows), "witnesses": rows, **_meta(args)}), args.out)
    elif args.format == "csv":
        lines = ["vertices,pattern,class,outer,inner"]
        for r in rows:
            lines.append(
                "{},{},{},{},{}".format(
                    "-".join(map(str, r["vertices"])),
                    r["pattern"],
                    r["class"],
                    "-".join(map(str, r["outer"])),
                    "-".join(map(str, r["inner"])),
                )
            )
        _emit("\n".join(lines) + "\n", args.out)
    else:
        lines = [
            "witness vertices={} pattern={} class={} outer={} inner={}".format(
                ",".join(map(str, r["vertices"])),
                r["pattern"],
                r["class"],
                tuple(r["outer"]),
                tuple(r["inner"]),
            )
            for r in rows
        ]
        lines.append(f"total {len(rows)}")
        _emit("\n".join(lines) + "\n", args.out)
    return 0


def _cmd_zigzag(args) -> int:
    g = _read_graph(args.graph, args.budget_edges)
    a = audit_mod.zigzag_audit(g, args.k)
    _emit(_jdump({**a.as_dict(), **_meta(args)}), args.out)
    return 0


def _infer_bipartition(g: ograph.OrderedGraph) -> tuple[list[int], list[int]]:
    color: dict[int, int] = {}
    for start in range(1, g.n + 1):
        if start in color:
            continue
        color[start] = 0
        queue = [start]
        while queue:
            v = queue.pop()
            for w in g.neighbors(v):
                if w not in color:
                    color[w] = 1 - color[v]
                    queue.append(w)
                elif color[w] == color[v]:
                    raise ValueError("graph is not bipartite (odd cycle found)")
    return (
        sorted(v for v, c in color.items() if c == 0),
        sorted(v for v, c in color.items() if c == 1),
    )


def _cmd_extract(args) -> int:
    g = _read_graph(args.graph, args.budget_edges)
    modes = sum(x is not None for x in (args.iterated, args.ko))
    if modes > 1:
        raise ValueError("choose one of --iterated / --ko")
    if args.ko is not None:
        if args.classes:
            a = sorted(int(t) for t in args.classes.split(","))
            b = sorted(set(range(1, g.n + 1)) - set(a))
        else:
            a, b = _infer_bipartition(g)
        kept, report = extract_mod.ko_reduction(a, b, g.edges, args.ko)
    elif args.iterated is not None:
        kept, report = extract_mod.iterated_extract(g, args.iterated)
    else:
        if args.k is None or args.l is None:
            raise ValueError("plain extraction needs both -k and -l")
        kept, report = extract_mod.extract_c2l_free(g, args.k, args.l)
    sub = ograph.from_edge_list(g.n, kept)
    gbuf = io.StringIO()
    ograph.write_graph(sub, gbuf)
    rep_text = _jdump({**report, **_meta(args)})
    if args.out is None:
        text = gbuf.getvalue() + "".join(
            f"# {line}\n" for line in rep_text.splitlines()
        )
        _emit(text, None)
    else:
        _emit(gbuf.getvalue(), args.out)
        rep_path = args.report or args.out.with_name(args.out.name + ".report.json")
        rep_path.write_text(rep_text)
    return 0


def _cmd_enumerate_patterns(args) -> int:
    ps = patterns.enumerate_ordered_cycles(args.two_k, args.max_cycle_len)
    rows = []
    for idx, p in enumerate(ps):
        name = patterns.pattern_name(p) or f"P{args.two_k}_{idx}"
        rows.append(
            {
                "index": idx,
                "name": name,
                "class": patterns.classify(p),
                "traversal": list(p.key),
                "edges": [list(e) for e in p.edges],
            }
        )
    if args.out_dir is not None:
        args.out_dir.mkdir(parents=True, exist_ok=True)
        for row, p in zip(rows, ps):
            with open(args.out_dir / f"{row['name']}.pat", "w") as f:
                patterns.write_pattern(p, f)
    if args.format == "json":
        _emit(_jdump({"two_k": args.two_k, "count": len(rows), "patterns": rows, **_meta(args)}), args.out)
    elif args.format == "csv":
        lines = ["index,name,class,traversal,edges"]
        for r in rows:
            lines.append(
                "{},{},{},{},{}".format(
                    r["index"],
                    r["name"],
                    r["class"],
                    "-".join(map(str, r["traversal"])),
                    ";".join("-".join(map(str, e)) for e in r["edges"]),
                )
            )
        _emit("\n".join(lines) + "\n", args.out)
    else:
        lines = [f"ordered {args.two_k}-cycles with two intervals: {len(rows)}"]
        for r in rows:
            lines.append(
                "{name:<8} {cls:<12} traversal {trav}".format(
                    name=r["name"],
                    cls=r["class"],
                    trav=",".join(map(str, r["traversal"])),
                )
            )
        counts: dict[str, int] = {}
        for r in rows:
            counts[r["class"]] = counts.get(r["class"], 0) + 1
        lines.append(
            "census: "
            + " ".join(f"{c}={counts.get(c, 0)}" for c in ["bordered", "inbordered", "outbordered", "unbordered"])
        )
        _emit("\n".join(lines) + "\n", args.out)
    return 0


def _cmd_exact_tiny(args) -> int:
    forbidden = patterns.resolve_pattern_names(args.patterns)
    value, witness = audit_mod.exact_extremal_tiny(args.n, forbidden)
    if args.format == "json":
        _emit(
            _jdump(
                {
                    "n": args.n,
                    "forbidden": args.patterns,
                    "max_edges": value,
                    "witness_edges": [list(e) for e in witness.edges],
                    **_meta(args),
                }
            ),
            args.out,
        )
    else:
        lines = [f"max_edges {value}"]
        lines += [f"{i} {j}" for i, j in witness.edges]
        _emit("\n".join(lines) + "\n", args.out)
    return 0


def fit_loglog(points: list[tuple[float, float]]) -> float:
    """Least-squares slope of log10(y) against log10(x)."""
    if len(points) < 3:
        raise ValueError("fit needs at least 3 points")
    xs = np.log10([p[0] for p in points])
    ys = np.log10([p[1] for p in points])
    slope, _ = np.polyfit(xs, ys, 1)
    return float(slope)


def scaling_rows(k: int, sizes: list[int], method: str = "best") -> list[dict]:
    """One construction per size: (N_total, |S|, edges) plus provenance."""
    rows = []
    for n in sorted(sizes):
        s = _make_set(n, k, method)
        rec = construct_mod.build(n, k, s)
        rows.append(
            {
                "n": n,
                "N": 4 * n,
                "set_size": len(s),
                "edges": rec.edge_count,
                "provenance": s.provenance,
            }
        )
    return rows


def _cmd_scale(args) -> int:
    sizes = [int(t) for t in args.n.split(",") if t.strip()]
    rows = scaling_rows(args.k, sizes, args.method)
    exponent = fit_loglog([(r["N"], r["edges"]) for r in rows])
    target = 1 + 1 / args.k
    if args.format == "json":
        _emit(
            _jdump(
                {
                    "k": args.k,
                    "rows": rows,
                    "fit_exponent": exponent,
                    "target_exponent": target,
                    "fit_window": [rows[0]["N"], rows[-1]["N"]],
                    "method": args.method,
                    **_meta(args),
                }
            ),
            args.out,
        )
    else:
        lines = [CSV_HEADER]
        for r in rows:
            lines.append(f"{args.k},{r['N']},{r['set_size']},{r['edges']},{exponent!r}")
        _emit("\n".join(lines) + "\n", args.out)
    return 0


_COMMANDS = {
    "sidon": _cmd_sidon,
    "construct": _cmd_construct,
    "detect": _cmd_detect,
    "zigzag": _cmd_zigzag,
    "extract": _cmd_extract,
    "enumerate-patterns": _cmd_enumerate_patterns,
    "exact-tiny": _cmd_exact_tiny,
    "scale": _cmd_scale,
}


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
