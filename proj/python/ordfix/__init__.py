"""Order-theoretic fixed-point toolkit.

Thin wrappers over the native core: reports come back as parsed JSON, and
problem configs may be given as dicts.
"""

import json as _json

from . import _ordfix
from ._ordfix import (
    OrdfixError,
    build_grid,
    counterexample_names,
    poset_example_names,
    solve_fixture_names,
)

__all__ = [
    "OrdfixError",
    "apply_F",
    "audit_conditions",
    "build_grid",
    "compute_lambda",
    "counterexample_names",
    "monotone_solve",
    "poset_example_names",
    "ramp_at_zero",
    "run_cli",
    "solve_fixture_names",
    "verify_counterexample",
]


def _config_text(config):
    return config if isinstance(config, str) else _json.dumps(config)


def verify_counterexample(name, n_max=64, lambda1="9/10", ratio="49/100", truncation=256):
    """Claim list of a builtin counterexample."""
    return _json.loads(_ordfix.verify_counterexample(name, n_max, str(lambda1), str(ratio), truncation))


def ramp_at_zero(n):
    return _json.loads(_ordfix.ramp_at_zero(n))


def compute_lambda(config):
    return _ordfix.compute_lambda(_config_text(config))


def apply_F(config, x):
    return _ordfix.apply_F(_config_text(config), list(x))


def audit_conditions(config, ball_samples=200, seed=0):
    return _json.loads(_ordfix.audit_conditions(_config_text(config), ball_samples, seed))


def monotone_solve(config, eps=1e-12, max_iter=1000, override_audit=False, seed=0):
    return _json.loads(_ordfix.monotone_solve(_config_text(config), eps, max_iter, override_audit, seed))


def run_cli(args):
    """Returns (exit_code, report, stderr) with the report parsed when present."""
    code, out, err = _ordfix.run_cli([str(a) for a in args])
    report = _json.loads(out) if out.startswith(("{", "[")) else out
    return code, report, err
