"""
Command-line front end.

Exit codes: 0 success, 1 identity mismatch or failed check, 2 invalid
arguments or configuration, 3 module above the size limit.
"""

from __future__ import annotations

import argparse
import logging
import sys
from typing import Any, Callable, Dict, Optional, Sequence

from . import __version__
from .braid import coxeter_operator
from .config import RunConfig, resolve_config
from .converters import canonical_dumps
from .errors import (
    ConfigError,
    EtaTraceError,
    InvalidLieTypeError,
    InvalidWeightError,
    SizeLimitExceeded,
    TraceShapeError,
)
from .identities import (
    KOSTANT,
    MAIN,
    TWO_VARIABLE,
    default_cutoff,
    quantum_trace_term,
    run_selftest,
    summarize,
    two_variable_series,
    verify_kostant_classical,
    verify_main_identity,
    verify_theta_scalars,
)
from .qmodule import ModuleRegistry
from .qseries import (
    QSeries,
    euler_phi,
    jacobi_cube_series,
    partition_series,
    pentagonal_series,
)
from .rootdata import RootDatum, build_root_datum

logger = logging.getLogger("etatrace")

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_SIZE_LIMIT = 3

SERIES_KINDS = ("pentagonal", "jacobi", "euler", "partition")
DEFAULT_SERIES_CUTOFF = 10


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--type", dest="lie_type", help="Lie type such as A1, B2 or G2")
    common.add_argument("--weight", help="highest weight as comma-separated coordinates, e.g. 1,1")
    common.add_argument("--cutoff", help="exponent cutoff, an integer, decimal or p/q")
    common.add_argument("--format", dest="output_format", choices=("text", "json"))
    common.add_argument("--cache-dir", help="module cache directory (env: ETATRACE_CACHE)")
    common.add_argument("--no-cache", action="store_true", help="keep modules in memory only")
    common.add_argument("--size-limit", help="largest module dimension to construct")
    common.add_argument("--threads", help="worker threads for per-weight work, or 'auto'")
    common.add_argument("--config", help="JSON or YAML file with default settings")
    common.add_argument(
        "-v", "--verbose", action="count", default=0, help="-v for INFO, -vv for DEBUG"
    )
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_options()
    parser = argparse.ArgumentParser(
        prog="etatrace",
        description="Exact Coxeter-element traces on quantum group modules and eta identities.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True

    verify = sub.add_parser("verify", parents=[common], help="compare both sides of an identity")
    verify.add_argument("identity", choices=(MAIN, KOSTANT, TWO_VARIABLE))

    trace = sub.add_parser("trace", parents=[common], help="trace of the Coxeter operator")
    trace.add_argument(
        "--dump-operator", action="store_true", help="print the Coxeter operator as JSON"
    )

    sub.add_parser("theta", parents=[common], help="scalars of theta on each weight space")

    module = sub.add_parser("module", parents=[common], help="build or dump V(lambda)")
    module.add_argument("--dump", action="store_true", help="print the module as JSON")
    module.add_argument(
        "--classical", action="store_true", help="the q = 1 module over the rationals"
    )

    series = sub.add_parser("series", parents=[common], help="print a truncated q-series")
    series.add_argument("kind", choices=SERIES_KINDS)
    series.add_argument("--scale", default="1", help="x -> x^scale for the euler series")

    selftest = sub.add_parser("selftest", parents=[common], help="run the acceptance matrix")
    selftest.add_argument("--types", nargs="+", help="restrict to these types, e.g. A1 G2")

    sub.add_parser("rootdata", parents=[common], help="print the root datum as JSON")
    return parser


def configure_logging(verbosity: int) -> None:
    level = logging.WARNING
    if verbosity == 1:
        level = logging.INFO
    elif verbosity >= 2:
        level = logging.DEBUG
    logging.basicConfig(
        stream=sys.stderr,
        level=level,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )
    logging.captureWarnings(True)


def config_from_args(args: argparse.Namespace) -> RunConfig:
    flags = {
        "command": args.command,
        "lie_type": args.lie_type,
        "weight": args.weight,
        "cutoff": args.cutoff,
        "output_format": args.output_format,
        "cache_dir": args.cache_dir,
        "use_cache": False if args.no_cache else None,
        "size_limit": args.size_limit,
        "threads": args.threads,
    }
    return resolve_config(flags, args.config)


def make_registry(cfg: RunConfig) -> ModuleRegistry:
    return ModuleRegistry(
        cache_dir=cfg.cache_dir if cfg.use_cache else None, size_limit=cfg.size_limit
    )


def _emit(cfg: RunConfig, text: str, data: Any) -> None:
    if cfg.output_format == "json":
        print(canonical_dumps(data))
    else:
        print(text)


def _datum(cfg: RunConfig) -> RootDatum:
    if cfg.lie_type is None:
        raise ConfigError("a Lie type is required for this command", "type")
    return build_root_datum(cfg.lie_type)


def _require_weight(cfg: RunConfig) -> Any:
    if cfg.weight is None:
        raise ConfigError("a highest weight is required for this command", "weight")
    return cfg.weight


def cmd_verify(cfg: RunConfig, args: argparse.Namespace) -> int:
    datum = _datum(cfg)
    registry = make_registry(cfg)
    cutoff = cfg.cutoff if cfg.cutoff is not None else default_cutoff(datum)
    if args.identity == MAIN:
        report = verify_main_identity(datum, cutoff, registry, cfg.worker_count)
    elif args.identity == KOSTANT:
        report = verify_kostant_classical(datum, cutoff, registry)
    else:
        report = two_variable_series(datum, cutoff, registry, cfg.worker_count)
    _emit(cfg, str(report), report.to_dict())
    return EXIT_OK if report.match else EXIT_FAILED


def cmd_trace(cfg: RunConfig, args: argparse.Namespace) -> int:
    datum = _datum(cfg)
    lam = _require_weight(cfg)
    registry = make_registry(cfg)
    if args.dump_operator:
        operator = coxeter_operator(registry.quantum(datum, lam))
        print(canonical_dumps(operator.to_dict()))
        return EXIT_OK

    term = quantum_trace_term(datum, lam, registry)
    zero_scalar = None
    if term.epsilon:
        theta = verify_theta_scalars(datum, term.lam, registry)
        zero_scalar = next(ws.scalar for ws in theta.weight_scalars if ws.weight.is_zero())

    data: Dict[str, Any] = {
        "type": datum.lie_type.name,
        **term.to_dict(),
        "trace": str(term.trace),
        "theta_zero_scalar": None if zero_scalar is None else str(zero_scalar),
    }
    lines = [
        f"V({term.lam}) of {datum.lie_type}: dim {term.dim}",
        f"  epsilon = {term.epsilon}",
        f"  exponent (lambda, lambda + 2 rho)/h = {term.exponent}",
        f"  Tr(Pi, V) = {term.trace}",
    ]
    if zero_scalar is not None:
        lines.append(f"  theta on V_0 = {zero_scalar}")
    _emit(cfg, "\n".join(lines), data)
    return EXIT_OK


def cmd_theta(cfg: RunConfig, args: argparse.Namespace) -> int:
    datum = _datum(cfg)
    report = verify_theta_scalars(datum, _require_weight(cfg), make_registry(cfg))
    _emit(cfg, str(report), report.to_dict())
    return EXIT_OK if report.passed else EXIT_FAILED


def cmd_module(cfg: RunConfig, args: argparse.Namespace) -> int:
    datum = _datum(cfg)
    registry = make_registry(cfg)
    kind = "classical" if args.classical else "quantum"
    m = registry.get(datum, _require_weight(cfg), kind)
    if args.dump:
        print(canonical_dumps(m.to_dict()))
        return EXIT_OK
    multiplicities = m.weight_multiplicities()
    lines = [f"{kind} V({m.lam}) of {datum.lie_type}: dim {m.dim}, {len(multiplicities)} weights"]
    lines.extend(f"  ({mu}) x{n}" for mu, n in multiplicities.items())
    data = {
        "type": datum.lie_type.name,
        "lambda": list(m.lam.coords),
        "kind": kind,
        "dim": m.dim,
        "multiplicities": [[list(mu.coords), n] for mu, n in multiplicities.items()],
    }
    _emit(cfg, "\n".join(lines), data)
    return EXIT_OK


def _series(kind: str, cutoff: Any, scale: str) -> QSeries:
    if kind == "pentagonal":
        return pentagonal_series(cutoff)
    if kind == "jacobi":
        return jacobi_cube_series(cutoff)
    if kind == "euler":
        try:
            return euler_phi(scale, cutoff)
        except ValueError as exc:
            raise ConfigError(str(exc), "scale") from exc
    return partition_series(cutoff)


def cmd_series(cfg: RunConfig, args: argparse.Namespace) -> int:
    cutoff = cfg.cutoff if cfg.cutoff is not None else DEFAULT_SERIES_CUTOFF
    s = _series(args.kind, cutoff, args.scale)
    _emit(cfg, str(s), {"series": args.kind, **s.to_dict()})
    return EXIT_OK


def cmd_selftest(cfg: RunConfig, args: argparse.Namespace) -> int:
    try:
        report = run_selftest(args.types, make_registry(cfg))
    except InvalidLieTypeError:
        raise
    except ValueError as exc:
        raise ConfigError(str(exc), "types") from exc
    _emit(cfg, f"{report}\n{summarize(report)}", report.to_dict())
    if not report.passed:
        first = report.first_failure
        print(f"self-test failed: {first.name if first else ''}", file=sys.stderr)
        return EXIT_FAILED
    return EXIT_OK


def cmd_rootdata(cfg: RunConfig, args: argparse.Namespace) -> int:
    datum = _datum(cfg)
    print(canonical_dumps(datum.to_dict(), pretty=cfg.output_format == "text"))
    return EXIT_OK


COMMANDS: Dict[str, Callable[[RunConfig, argparse.Namespace], int]] = {
    "verify": cmd_verify,
    "trace": cmd_trace,
    "theta": cmd_theta,
    "module": cmd_module,
    "series": cmd_series,
    "selftest": cmd_selftest,
    "rootdata": cmd_rootdata,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Run one command and return its exit code.

    Example:
        >>> main(["series", "pentagonal", "--cutoff", "6"])
        1 - x - x^2 + x^5
        0
    """
    parser = build_parser()
    args = parser.parse_args(list(argv) if argv is not None else None)
    configure_logging(args.verbose)
    try:
        cfg = config_from_args(args)
        logger.debug("configuration: %s", cfg.to_dict())
        return COMMANDS[args.command](cfg, args)
    except SizeLimitExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SIZE_LIMIT
    except (ConfigError, InvalidLieTypeError, InvalidWeightError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except TraceShapeError as exc:
        print(f"trace check failed: {exc}", file=sys.stderr)
        return EXIT_FAILED
    except EtaTraceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAILED
