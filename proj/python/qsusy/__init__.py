"""Exact verification of q-deformed supersymmetric quantum mechanics."""

import json

from . import _core
from ._core import DomainError, classify_normalizability, pq_exp, td_energy, td_exp_value, zero_mode, zero_mode_at

__all__ = [
    "DomainError",
    "classify_normalizability",
    "cli",
    "find_degeneracy",
    "heisenberg_checks",
    "pq_exp",
    "scan_degeneracies",
    "susy_checks",
    "td_energy",
    "td_exp_value",
    "zero_mode",
    "zero_mode_at",
]


def cli(*args):
    """Run the command-line tool in-process; returns (exit_code, document or None, stderr)."""
    code, out, err = _core.run_cli([str(a) for a in args])
    return code, (json.loads(out) if out else None), err


def susy_checks(kind, w="-x", q=()):
    return json.loads(_core.susy_checks(kind, w, [str(x) for x in q]))


def heisenberg_checks(q, m_max=50):
    return json.loads(_core.heisenberg_checks(str(q), m_max))


def find_degeneracy(n, m, lo=0.0, hi=1.0):
    r = _core.find_degeneracy(n, m, lo, hi)
    return None if r is None else json.loads(r)


def scan_degeneracies(n_max=5, lo=0.0, hi=1.0):
    return json.loads(_core.scan_degeneracies(n_max, lo, hi))
