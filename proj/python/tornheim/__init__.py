"""Tornheim double zeta T(s,t,u) and the symmetric functions S1..S4."""

from ._core import (
    ConvergenceError,
    DomainError,
    MethodUnavailableError,
    NotAPoleError,
    OracleResult,
    ParseError,
    PoleCandidate,
    PoleError,
    PrefactorZeroError,
    ResidueEstimate,
    SeriesValue,
    SingularityReport,
    SingularPointError,
    TornheimError,
    classify,
    eval_T_diag,
    evaluate,
    format_complex,
    oracle_T,
    parse_complex,
    residue_diag,
    scan_poles,
    selftest,
)


def T(s, t, u, **kwargs):
    """T(s,t,u); keyword arguments as for evaluate()."""
    return evaluate("T", s, t, u, **kwargs).value


__all__ = [name for name in dir() if not name.startswith("_")]
