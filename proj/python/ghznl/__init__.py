"""Exact PPT-discrimination toolkit for maximally entangled lattice bases.

Thin wrapper over the compiled core: inputs and outputs are plain dicts and
lists matching the JSON file formats of the command-line tool.
"""

import json as _json

try:
    from . import _core as _core  # installed wheel layout
except ImportError:  # running against a CMake build tree
    import os as _os
    import sys as _sys

    _dir = _os.environ.get("GHZNL_MODULE_DIR")
    if not _dir:
        raise
    _sys.path.insert(0, _dir)
    import _core

__all__ = [
    "certify",
    "beta",
    "verify_certificate",
    "bound",
    "lattice_protocol",
    "search_min_subsets",
    "fixture",
    "fixture_names",
    "cardinality_bound",
    "run_suite",
]


def certify(state_set):
    """Exact discrimination values at all three cuts, plus the verdict."""
    return _json.loads(_core.certify_json(_json.dumps(state_set)))


def beta(state_set, cut):
    """Exact discrimination value at one cut, as a rational string."""
    return _core.beta_json(_json.dumps(state_set), cut)


def verify_certificate(state_set, certificate):
    """Feasibility check of a certificate against a state set."""
    return _json.loads(_core.verify_json(_json.dumps(state_set), _json.dumps(certificate)))


def bound(family):
    """Counting certificate: family size against d^3/w."""
    return _json.loads(_core.bound_json(_json.dumps(family)))


def lattice_protocol(state_set):
    """One-way parity/identify protocol transcripts, one attempt per cut."""
    return _json.loads(_core.protocol_json(_json.dumps(state_set)))


def search_min_subsets(state_set, target_size=None, budget=100000, exhaustive=False,
                       prefilter=True):
    """Minimal certified subsets of a candidate set."""
    return _json.loads(
        _core.search_json(_json.dumps(state_set), target_size, budget, exhaustive, prefilter))


def fixture(name):
    """One bundled fixture document by name (e.g. "s5", "s8_cert_a")."""
    return _json.loads(_core.fixture_json(name))


def fixture_names():
    """Names of all bundled fixtures."""
    return list(_core.fixture_names())


def cardinality_bound(d, w):
    """d^3/w as a rational string."""
    return _core.cardinality_bound(d, w)


def run_suite():
    """Run the full acceptance suite (slow); returns the deterministic report."""
    return _json.loads(_core.suite_json())
