"""`isolate`: compute, approximate, bound, generate and verify isolation numbers.

Results go to stdout (or --out) and are byte-identical for identical inputs and
seeds; log records go to stderr. Exit codes: 0 success, 1 violation or invalid
certificate, 2 usage, file or parse errors.
"""

import argparse
import logging
import sys
from collections.abc import Callable, Sequence
from fractions import Fraction
from pathlib import Path

from src.utils.file_tools import write_output

from ..bounds import bound_report, family_bound, format_value, render_rows
from ..constructive import (
    double_dominating,
    equal_degree_tree_isolating,
    greedy_pattern_removal,
    greedy_star_removal,
    grid_isolating,
    isolating_components,
    isolating_third,
    isolating_with_seed_set,
    max_degree_half,
    one_isolation_via_partition,
    product_isolating,
    randomized_bipartite_isolating,
    randomized_isolating,
    tree_k_isolating,
)
from ..errors import IsolationError, ParameterError
from ..families import FAMILIES, complete, generate, grid, parse_params
from ..graph_core import (
    Graph,
    VertexSet,
    bipartite_double,
    cartesian_product,
    emit_edge_list,
    emit_graph6,
    read_graph,
)
from ..patterns import Certificate, PatternFamily, StarFamily, check_certificate, parse_family
from ..solvers import exact_isolation
from ..verify import CHECKS, SAMPLERS, open_problem_probe, sample_verify, sweep_theorems
from .config import CliConfig, load_config

logger = logging.getLogger(__name__)

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2

APPROX_ALGOS = (
    "third",
    "components",
    "greedy",
    "greedy-pattern",
    "random",
    "random-bipartite",
    "tree",
    "equal-degree-tree",
    "grid",
    "seed-set",
    "max-degree-half",
    "one-partition",
    "product",
    "double",
)


def parse_vertices(text: str, n: int) -> VertexSet:
    """'0,2' or '{0,2}'; an empty string is the empty set."""
    body = text.strip().removeprefix("{").removesuffix("}")
    try:
        items = [int(tok) for tok in body.split(",") if tok.strip()]
    except ValueError as exc:
        raise ParameterError(f"bad vertex list {text!r}") from exc
    bad = [v for v in items if not 0 <= v < n]
    if bad:
        raise ParameterError(f"vertices {bad} outside 0..{n - 1}")
    return VertexSet.of(n, items)


def _graph(args: argparse.Namespace) -> Graph:
    if args.graph is None:
        raise ParameterError("--graph is required")
    return read_graph(args.graph)


def _require_seed(cfg: CliConfig) -> int:
    if cfg.seed is None:
        raise ParameterError("this path is randomized: pass --seed")
    return cfg.seed


def cmd_compute(args: argparse.Namespace, cfg: CliConfig) -> int:
    g = _graph(args)
    family = parse_family(args.family)
    value, cert = exact_isolation(g, family)
    write_output(f"{value} {cert.vertices}\n", cfg.out)
    return EXIT_OK


def _star(args: argparse.Namespace) -> StarFamily:
    return StarFamily(k=args.k)


def _approx(args: argparse.Namespace, cfg: CliConfig) -> tuple[Graph, Certificate]:
    """Run the chosen algorithm; returns the graph the certificate refers to."""
    algo = args.algo
    if algo == "grid":
        if None in (args.kind, args.s, args.t):
            raise ParameterError("grid needs --kind, --s and --t")
        return grid(args.kind, args.s, args.t), grid_isolating(args.kind, args.s, args.t)
    g = _graph(args)
    match algo:
        case "third":
            return g, isolating_third(g)
        case "components":
            return g, isolating_components(g)
        case "greedy":
            return g, greedy_star_removal(g, args.k)
        case "greedy-pattern":
            if args.pattern is None or args.pattern_set is None:
                raise ParameterError("greedy-pattern needs --pattern and --pattern-set")
            h = read_graph(args.pattern)
            return g, greedy_pattern_removal(g, h, parse_vertices(args.pattern_set, h.n))
        case "random":
            return g, randomized_isolating(g, _require_seed(cfg))
        case "random-bipartite":
            return g, randomized_bipartite_isolating(g, _require_seed(cfg))
        case "tree":
            return g, tree_k_isolating(g, args.k)
        case "equal-degree-tree":
            if args.r is None:
                raise ParameterError("equal-degree-tree needs --r")
            return g, equal_degree_tree_isolating(g, args.k, args.r)
        case "seed-set":
            if args.seed_set is None:
                raise ParameterError("seed-set needs --seed-set")
            return g, isolating_with_seed_set(g, parse_vertices(args.seed_set, g.n), args.mode)
        case "max-degree-half":
            return g, max_degree_half(g)
        case "one-partition":
            return g, one_isolation_via_partition(g)
        case "product":
            r = args.r if args.r is not None else args.k + 2
            family: PatternFamily = parse_family(args.family) if args.family else _star(args)
            return cartesian_product(g, complete(r)), product_isolating(g, r, family)
        case "double":
            return bipartite_double(g), double_dominating(g)
    raise ParameterError(f"unknown algorithm {algo!r}")


def cmd_approx(args: argparse.Namespace, cfg: CliConfig) -> int:
    host, cert = _approx(args, cfg)
    valid = check_certificate(host, cert)
    bound = format_value(cert.promised_bound)
    line = f"{cert.size} {cert.vertices} bound={bound} valid={str(valid).lower()} producer={cert.producer}"
    if cert.note:
        line += f" note={cert.note}"
    write_output(line + "\n", cfg.out)
    return EXIT_OK if valid else EXIT_VIOLATION


def cmd_bounds(args: argparse.Namespace, cfg: CliConfig) -> int:
    g = _graph(args)
    seed_set = parse_vertices(args.seed_set, g.n) if args.seed_set is not None else None
    report = bound_report(g, args.k, with_exact_aux=cfg.exact_aux, seed_set=seed_set)
    rows = render_rows(report)
    if args.family:
        e = family_bound(g, parse_family(args.family))
        rows.append(f"{e.name}\t{e.side}\t{format_value(e.value)}\t{str(e.applicable).lower()}\t{e.reason}")
    write_output("\n".join(rows) + "\n", cfg.out)
    return EXIT_OK


def cmd_generate(args: argparse.Namespace, cfg: CliConfig) -> int:
    inputs = [read_graph(p) for p in args.graph or ()]
    g = generate(args.name, parse_params(args.params), inputs)
    text = emit_graph6(g) + "\n" if args.g6 else emit_edge_list(g)
    write_output(text, cfg.out)
    return EXIT_OK


def _check_names(text: str | None) -> list[str] | None:
    if text is None or text == "all":
        return None
    return [name.strip() for name in text.split(",") if name.strip()]


def cmd_sweep(args: argparse.Namespace, cfg: CliConfig) -> int:
    checks = _check_names(args.checks)
    if args.sample:
        if args.trials is None:
            raise ParameterError("--sample needs --trials")
        result = sample_verify(
            args.sample,
            args.trials,
            _require_seed(cfg),
            checks=checks,
            max_n=args.n,
            exact_aux=cfg.exact_aux,
            progress=args.progress,
        )
    else:
        if args.n is None:
            raise ParameterError("sweep needs --n")
        result = sweep_theorems(
            args.n,
            checks=checks,
            jobs=cfg.jobs,
            connected_only=args.connected,
            dedup=args.dedup,
            exact_aux=cfg.exact_aux,
            chunk_bits=cfg.chunk_bits,
            progress=args.progress,
        )
    text = result.model_dump_json(indent=2) + "\n" if args.json else result.to_tsv()
    write_output(text, cfg.out)
    for v in result.violations:
        print(f"violation\t{v.check}\t{v.graph6}\t{v.detail}", file=sys.stderr)
    if cfg.strict and result.violation_count:
        return EXIT_VIOLATION
    return EXIT_OK


def cmd_probe(args: argparse.Namespace, cfg: CliConfig) -> int:
    table = open_problem_probe(args.delta, args.n_max)
    write_output(table.to_tsv(), cfg.out)
    return EXIT_OK


def cmd_check_cert(args: argparse.Namespace, cfg: CliConfig) -> int:
    g = _graph(args)
    cert = Certificate(
        vertices=parse_vertices(args.set, g.n),
        family=parse_family(args.family),
        producer="user",
        promised_bound=Fraction(args.bound) if args.bound is not None else None,
    )
    valid = check_certificate(g, cert)
    write_output(("valid" if valid else "invalid") + "\n", cfg.out)
    return EXIT_OK if valid else EXIT_VIOLATION


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--config", type=Path, help="TOML file with default settings")
    p.add_argument("--out", type=Path, default=None, help="write results here instead of stdout")
    p.add_argument("--log-level", dest="log_level", type=str.upper, default=None)
    p.add_argument("--seed", type=int, default=None, help="seed for randomized paths")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="isolate", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="exact isolation number and a minimum witness")
    _common(p)
    p.add_argument("--graph", type=Path)
    p.add_argument("--family", default="star:0", help="star:k, clique:k, cycles, trees:k or file:<path>")
    p.add_argument("--exact", action="store_true", help="accepted for symmetry with approx; compute is exact")
    p.set_defaults(handler=cmd_compute)

    p = sub.add_parser("approx", help="constructive isolating set with its promised bound")
    _common(p)
    p.add_argument("--algo", required=True, choices=APPROX_ALGOS)
    p.add_argument("--graph", type=Path)
    p.add_argument("--k", type=int, default=0)
    p.add_argument("--r", type=int, default=None)
    p.add_argument("--family", default=None, help="pattern family for product")
    p.add_argument("--pattern", type=Path, default=None, help="pattern graph for greedy-pattern")
    p.add_argument("--pattern-set", dest="pattern_set", default=None, help="dominating set of the pattern")
    p.add_argument("--seed-set", dest="seed_set", default=None)
    p.add_argument("--mode", choices=("half", "two_fifths", "third"), default="half")
    p.add_argument("--kind", choices=("torus", "cylinder", "grid"), default=None)
    p.add_argument("--s", type=int, default=None)
    p.add_argument("--t", type=int, default=None)
    p.set_defaults(handler=cmd_approx)

    p = sub.add_parser("bounds", help="every closed-form bound, as TSV rows")
    _common(p)
    p.add_argument("--graph", type=Path)
    p.add_argument("--k", type=int, default=0)
    p.add_argument("--exact-aux", dest="exact_aux", action="store_true", default=None)
    p.add_argument("--seed-set", dest="seed_set", default=None)
    p.add_argument("--family", default=None, help="also report the quotient bound for this family")
    p.set_defaults(handler=cmd_bounds)

    p = sub.add_parser("generate", help="build a named graph family")
    _common(p)
    p.add_argument("name", choices=sorted(FAMILIES))
    p.add_argument("params", nargs="*", help="key=value parameters")
    p.add_argument("--graph", type=Path, action="append", help="input graph (repeatable)")
    p.add_argument("--g6", action="store_true", help="emit graph6 instead of an edge list")
    p.set_defaults(handler=cmd_generate)

    p = sub.add_parser("sweep", help="exhaustive or sampled theorem checks")
    _common(p)
    p.add_argument("--n", type=int, default=None, help="largest order (sampled: largest size parameter)")
    p.add_argument("--connected", action="store_true")
    p.add_argument("--dedup", action="store_true", help="one graph per isomorphism class")
    p.add_argument("--checks", default=None, help=f"all, or a comma list of: {', '.join(sorted(CHECKS))}")
    p.add_argument("--jobs", type=int, default=None)
    p.add_argument("--chunk-bits", dest="chunk_bits", type=int, default=None)
    p.add_argument("--strict", action="store_true", default=None, help="exit 1 on any violation")
    p.add_argument("--exact-aux", dest="exact_aux", action="store_true", default=None)
    p.add_argument("--sample", choices=sorted(SAMPLERS), default=None)
    p.add_argument("--trials", type=int, default=None)
    p.add_argument("--json", action="store_true", help="full result with run id instead of TSV")
    p.add_argument("--progress", action="store_true", help="progress bar on stderr")
    p.set_defaults(handler=cmd_sweep)

    p = sub.add_parser("probe", help="largest iota/n at minimum degree 3 or 4")
    _common(p)
    p.add_argument("--delta", type=int, required=True)
    p.add_argument("--n-max", dest="n_max", type=int, default=7)
    p.set_defaults(handler=cmd_probe)

    p = sub.add_parser("check-cert", help="check an isolating set")
    _common(p)
    p.add_argument("--graph", type=Path)
    p.add_argument("--family", default="star:0")
    p.add_argument("--set", required=True, help="vertices, e.g. 0,2")
    p.add_argument("--bound", default=None, help="promised bound, e.g. 5/2")
    p.set_defaults(handler=cmd_check_cert)
    return parser


_FLAG_KEYS = ("jobs", "seed", "log_level", "out", "exact_aux", "strict", "chunk_bits")


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    handler: Callable[[argparse.Namespace, CliConfig], int] = args.handler
    try:
        flags = {key: getattr(args, key, None) for key in _FLAG_KEYS}
        cfg = load_config(args.config, flags)
        logging.basicConfig(
            level=cfg.log_level,
            stream=sys.stderr,
            format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        )
        logger.debug("isolate %s with %s", args.command, cfg)
        return handler(args, cfg)
    except (IsolationError, FileNotFoundError, ValueError) as exc:
        print(f"isolate {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
