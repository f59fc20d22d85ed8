"""Exact pentagon-equation solutions and the finite Hopf algebras they generate.

The heavy lifting happens in the C++ extension; every function speaks JSON
strings so that exact rational/cyclotomic scalars survive the language
boundary.  The helpers here add dict-level convenience.
"""

import json as _json

from ._core import (  # noqa: F401
    PentagonError,
    catalog,
    catalog_group_names,
    coefficient_hopf,
    enumerate_solutions,
    enumerate_splittings,
    fourier_basis,
    hopf_check,
    phi_set_theoretic,
    recognize_basis,
    verify_set,
)


def catalog_dict(name):
    """Catalog object as a dict (groups, solutions, Hopf algebras)."""
    return _json.loads(catalog(name))


def verify(solution, equation="rpe"):
    """Verify a solution dict against "rpe" or "pe"; returns the report dict."""
    return _json.loads(verify_set(_json.dumps(solution), equation))


def coefficient(solution, side="right"):
    """Coefficient Hopf algebra of a bijective RPE solution dict."""
    return _json.loads(coefficient_hopf(_json.dumps(solution), side))


def recognize(group, basis):
    """Classification-pipeline report for a basis dict of k[G]."""
    return _json.loads(recognize_basis(_json.dumps(group), _json.dumps(basis)))
