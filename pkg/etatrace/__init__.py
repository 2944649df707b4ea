"""
etatrace - Exact Coxeter-element traces on quantum group modules.

Builds finite-dimensional irreducible modules V(lambda) of U_q(g) over the
field QQ(q), lets the braid group act on them through the operators S_i, and
checks the eta-function identities obtained by tracing the Coxeter element.

Features:
    - Laurent polynomials, rational functions in q and truncated q-series
    - Root data for every simple type, Weyl dimensions and weight multiplicities
    - Exact construction of V(lambda) and of the classical module at q = 1
    - Braid operators S_i, the Coxeter operator Pi and theta = Pi^h
    - Lusztig's automorphisms T_i checked against conjugation by S_i
    - The main, Kostant and two-variable identities to any cutoff
    - On-disk module cache and a command-line front end

Quick Start:
    >>> from etatrace import build_root_datum, default_registry, quantum_trace_term
    >>>
    >>> A2 = build_root_datum("A2")
    >>> term = quantum_trace_term(A2, (1, 1))
    >>> term.epsilon, term.dim, str(term.trace)
    (-1, 8, '-q^2')
    >>>
    >>> from etatrace import verify_main_identity
    >>> verify_main_identity(build_root_datum("A1"), 12).match
    True

Command line:
    etatrace verify main --type A1 --cutoff 30
    etatrace trace --type A2 --weight 1,1
    etatrace series pentagonal --cutoff 6

License:
    MIT
"""

from .braid import (
    BraidOperator,
    coxeter_operator,
    epsilon_classical,
    s_operator,
    theta_operator,
    trace,
)
from .checks import CheckReport, CheckResult
from .config import RunConfig
from .errors import EtaTraceError, SizeLimitExceeded
from .identities import (
    IdentityReport,
    ThetaReport,
    TraceTerm,
    lhs_series,
    quantum_trace_term,
    rhs_series,
    run_selftest,
    two_variable_series,
    verify_kostant_classical,
    verify_main_identity,
    verify_theta_scalars,
)
from .qmodule import IrrModule, ModuleRegistry, build_module, default_registry
from .qseries import LaurentPoly, QSeries, RatFunc
from .rootdata import LieType, RootDatum, Weight, build_root_datum
from . import braid, identities, qmodule, qseries, rootdata

__author__ = "etatrace developers"

__all__ = [
    # Scalars and series
    "LaurentPoly",
    "RatFunc",
    "QSeries",
    # Root data
    "LieType",
    "RootDatum",
    "Weight",
    "build_root_datum",
    # Modules
    "IrrModule",
    "ModuleRegistry",
    "build_module",
    "default_registry",
    # Braid operators
    "BraidOperator",
    "s_operator",
    "coxeter_operator",
    "theta_operator",
    "trace",
    "epsilon_classical",
    # Identities
    "TraceTerm",
    "IdentityReport",
    "ThetaReport",
    "quantum_trace_term",
    "lhs_series",
    "rhs_series",
    "verify_main_identity",
    "verify_kostant_classical",
    "two_variable_series",
    "verify_theta_scalars",
    "run_selftest",
    # Plumbing
    "CheckReport",
    "CheckResult",
    "RunConfig",
    "EtaTraceError",
    "SizeLimitExceeded",
    # Subpackages
    "qseries",
    "rootdata",
    "qmodule",
    "braid",
    "identities",
]

# Version is read from package metadata (defined in pyproject.toml)
try:
    from importlib.metadata import PackageNotFoundError, version
except ImportError:
    from importlib_metadata import PackageNotFoundError, version  # type: ignore[no-redef]

try:
    __version__ = version("etatrace")
except PackageNotFoundError:
    # running from a source checkout
    __version__ = "0.0.0+unknown"
