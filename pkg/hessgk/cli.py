"""Command-line entry point: hessgk {csf,gk,graph,verify,delta-table,llt-face}.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 resource
guard exceeded.
"""

import sys
import json
import argparse

from dataclasses import dataclass
from pathlib import Path
from typing import Any, Callable, Final, Literal, TypeAlias, cast, get_args

from hessgk.gfuncs import csf_from_g, g_def, g_extended, g_tree
from hessgk.graphx import RootedGraph, csf_general_from_g
from hessgk.hessenberg import (
    HessFunc,
    csf_coloring,
    csf_rho,
    csf_stanley_p,
)
from hessgk.positivity import check_delta_injective, render_delta_table
from hessgk.symring import (
    BASES,
    Basis,
    SymFunc,
    load_transition_cache,
    render_expansion,
    save_transition_cache,
    to_json,
)
from hessgk.toric import frob_C_sigma1, llt_path
from hessgk.utils import (
    get_guards,
    get_logger,
    load_default_config,
    override_guards,
)
from hessgk.utils.errors import (
    DeltaNotWellDefined,
    ResourceGuardError,
)
from hessgk.verify import SUITES, SuiteReport, run_suites

logger = get_logger(__package__)

OutputFormat: TypeAlias = Literal["text", "json", "latex"]
OUTPUT_FORMATS: Final[tuple[OutputFormat, ...]] = get_args(OutputFormat)

EXIT_OK: Final[int] = 0
EXIT_FAILED: Final[int] = 1
EXIT_USAGE: Final[int] = 2
EXIT_GUARD: Final[int] = 3


@dataclass(frozen=True)
class RunConfig:
    """Settings for one invocation: config.json, then env, then flags."""

    max_perm_n: int
    max_degree: int
    max_edges: int
    max_toric_n: int
    output_format: OutputFormat
    cache_path: Path | None

    def __post_init__(self) -> None:
        for name in ("max_perm_n", "max_degree", "max_edges", "max_toric_n"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")
        if self.output_format not in OUTPUT_FORMATS:
            raise ValueError(f"Unknown output format: {self.output_format}")

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "RunConfig":
        guards = cast(dict[str, int], get_guards())

        def _limit(name: str) -> int:
            value = getattr(args, name)
            return guards[name] if value is None else int(value)

        return cls(
            max_perm_n=_limit("max_perm_n"),
            max_degree=_limit("max_degree"),
            max_edges=_limit("max_edges"),
            max_toric_n=_limit("max_toric_n"),
            output_format=args.format,
            cache_path=Path(args.cache) if args.cache else None,
        )

    def apply(self) -> None:
        override_guards(
            max_perm_n=self.max_perm_n,
            max_degree=self.max_degree,
            max_edges=self.max_edges,
            max_toric_n=self.max_toric_n,
        )


def _render(f: SymFunc, basis: Basis, fmt: OutputFormat) -> str:
    if fmt == "json":
        return json.dumps(to_json(f, basis))
    return render_expansion(f, basis, "latex" if fmt == "latex" else "text")


_CSF_METHODS: Final[dict[str, Callable[[HessFunc], SymFunc]]] = {
    "rho": csf_rho,
    "coloring": csf_coloring,
    "stanley": csf_stanley_p,
    "from-g": csf_from_g,
}


def cmd_csf(args: argparse.Namespace, config: RunConfig) -> int:
    m = HessFunc.from_string(args.hess)
    csf = _CSF_METHODS[args.method](m)
    print(_render(csf, args.basis, config.output_format))
    return EXIT_OK


def cmd_gk(args: argparse.Namespace, config: RunConfig) -> int:
    m = HessFunc.from_string(args.hess)
    if args.method == "def":
        g = g_def(m, args.k)
    elif args.method == "tree":
        g = g_tree(m, args.k)
    else:
        g = g_extended(m, args.k)

    print(_render(g, args.basis, config.output_format))
    return EXIT_OK


def cmd_graph(args: argparse.Namespace, config: RunConfig) -> int:
    G = RootedGraph.parse(args.graph)
    print(_render(csf_general_from_g(G), args.basis, config.output_format))
    return EXIT_OK


def _render_suites(reports: list[SuiteReport]) -> str:
    lines = []
    for report in reports:
        for check in report["checks"]:
            verdict = "PASS" if check["passed"] else "FAIL"
            line = f"{verdict} {report['suite']}: {check['identity']}"
            line += f" ({check['range']})"
            if check["detail"]:
                line += f" [{check['detail']}]"
            lines.append(line)

    return "\n".join(lines)


def cmd_verify(args: argparse.Namespace, config: RunConfig) -> int:
    suites = list(SUITES) if args.suite == "all" else [args.suite]
    passed, reports = run_suites(suites, args.max_n)
    if config.output_format == "json":
        print(json.dumps({"passed": passed, "suites": reports}, indent=2))
    else:
        print(_render_suites(reports))

    return EXIT_OK if passed else EXIT_FAILED


def cmd_delta_table(args: argparse.Namespace, config: RunConfig) -> int:
    m = HessFunc.from_string(args.hess)
    report = check_delta_injective(m, args.k)
    if config.output_format == "json":
        print(json.dumps(report, indent=2))
    else:
        print(render_delta_table(report))

    if report["injective"] and report["counts_match"]:
        return EXIT_OK
    return EXIT_FAILED


def cmd_llt_face(args: argparse.Namespace, config: RunConfig) -> int:
    frob = frob_C_sigma1(args.n)
    llt = llt_path(args.n, shifted=True).omega()
    matches = frob == llt
    if config.output_format == "json":
        out: dict[str, Any] = {
            "n": args.n,
            "frob_C": to_json(frob, "h"),
            "omega_llt": to_json(llt, "h"),
            "matches": matches,
        }
        print(json.dumps(out, indent=2))
    else:
        lhs = _render(frob, "h", config.output_format)
        rhs = _render(llt, "h", config.output_format)
        print(f"ch(C_Sigma1) = {lhs}")
        print(f"omega(LLT(P_{args.n}; q+1)) = {rhs}")
        print(f"match: {matches}")

    return EXIT_OK if matches else EXIT_FAILED


def build_parser() -> argparse.ArgumentParser:
    default_format = load_default_config()["output"]["format"]
    parser = argparse.ArgumentParser(
        prog="hessgk",
        description="Chromatic quasisymmetric functions and g_k(m; x, q).",
    )
    parser.add_argument(
        "--format", choices=OUTPUT_FORMATS, default=default_format
    )
    parser.add_argument(
        "--cache", default=None, help="Transition-matrix cache file"
    )
    for name in ("max-perm-n", "max-degree", "max-edges", "max-toric-n"):
        parser.add_argument(f"--{name}", type=int, default=None)

    subparsers = parser.add_subparsers(dest="command", required=True)

    p_csf = subparsers.add_parser("csf", help="csf_q(m) in a basis")
    p_csf.add_argument("--hess", required=True, help='e.g. "2,4,4,5,6,6"')
    p_csf.add_argument("--basis", choices=BASES, default="e")
    p_csf.add_argument("--method", choices=list(_CSF_METHODS), default="rho")
    p_csf.set_defaults(fn=cmd_csf)

    p_gk = subparsers.add_parser("gk", help="g_k(m) in a basis")
    p_gk.add_argument("--hess", required=True)
    p_gk.add_argument("--k", type=int, required=True)
    p_gk.add_argument("--basis", choices=BASES, default="e")
    p_gk.add_argument(
        "--method", choices=["def", "tree", "extended"], default="def"
    )
    p_gk.set_defaults(fn=cmd_gk)

    p_graph = subparsers.add_parser(
        "graph", help="csf of a rooted graph via sum_k (n-k) e_{n-k} g_k"
    )
    p_graph.add_argument(
        "--graph", required=True, help='e.g. "3; 1-2,2-3; root=1"'
    )
    p_graph.add_argument("--basis", choices=BASES, default="e")
    p_graph.set_defaults(fn=cmd_graph)

    p_verify = subparsers.add_parser("verify", help="Run identity suites")
    p_verify.add_argument(
        "--suite", choices=list(SUITES) + ["all"], default="all"
    )
    p_verify.add_argument("--max-n", type=int, default=None)
    p_verify.set_defaults(fn=cmd_verify)

    p_delta = subparsers.add_parser("delta-table", help="Tabulate Delta")
    p_delta.add_argument("--hess", required=True)
    p_delta.add_argument("--k", type=int, required=True)
    p_delta.set_defaults(fn=cmd_delta_table)

    p_llt = subparsers.add_parser(
        "llt-face", help="Barycentric fan character vs path LLT"
    )
    p_llt.add_argument("--n", type=int, required=True)
    p_llt.set_defaults(fn=cmd_llt_face)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        config = RunConfig.from_args(args)
    except ValueError as e:
        logger.error(str(e))
        return EXIT_USAGE

    config.apply()
    try:
        if config.cache_path is not None and config.cache_path.exists():
            loaded = load_transition_cache(config.cache_path)
            logger.debug(f"Loaded {loaded} degrees from {config.cache_path}")
        status = args.fn(args, config)
        if config.cache_path is not None:
            save_transition_cache(config.cache_path)
    except ResourceGuardError as e:
        logger.error(str(e))
        return EXIT_GUARD
    except DeltaNotWellDefined as e:
        logger.error(str(e))
        return EXIT_FAILED
    except ValueError as e:
        logger.error(str(e))
        return EXIT_USAGE
    finally:
        override_guards(
            max_perm_n=None, max_degree=None, max_edges=None, max_toric_n=None
        )

    return int(status)


if __name__ == "__main__":
    sys.exit(main())
