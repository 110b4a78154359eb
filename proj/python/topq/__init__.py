"""Exact rational (co)homology, Poincare duality and Lefschetz coincidence numbers."""

import json
from fractions import Fraction

from . import _topq
from ._topq import TopqError, complex_names, map_names, suite_names

__version__ = _topq.__version__

__all__ = [
    "TopqError",
    "betti",
    "cobetti",
    "coincidence",
    "complex_names",
    "degree",
    "duality",
    "map_names",
    "suite_names",
    "verify",
]


def rational(text):
    """Parse a "p/q" string from a report."""
    return Fraction(text)


def betti(complex_):
    """Betti numbers of H_* for a catalog name or complex file."""
    return json.loads(_topq.homology_json(complex_))["betti"]


def cobetti(complex_):
    return json.loads(_topq.cohomology_json(complex_))["betti"]


def duality(complex_):
    return json.loads(_topq.duality_json(complex_))


def degree(map_):
    return rational(json.loads(_topq.degree_json(map_))["degree"])


def coincidence(f, g, witness=False, max_subdiv=3):
    """Full coincidence report as a dict; rationals stay as "p/q" strings."""
    return json.loads(_topq.coincidence_json(f, g, witness, max_subdiv))


def verify(suite, seed=1):
    return json.loads(_topq.verify_json(suite, seed))
