"""Deficiency, bad primes and universal secondary invariants of permutation groups."""

import json

from ._core import (
    CmprimeError,
    analyze_json,
    oracle_json,
    roundtrip_json,
    secondary_degrees,
    verify_json,
)

__all__ = ["CmprimeError", "analyze", "oracle", "roundtrip", "secondary_degrees", "verify"]


def analyze(group, ambient=None, point=None, verify=False, max_degree=0):
    """Full pipeline; returns the report as a dict."""
    return json.loads(analyze_json(group, ambient, point, verify, max_degree))


def verify(group, prime, ambient=None):
    """Mod-p verdict for the universal secondaries."""
    return json.loads(verify_json(group, prime, ambient))


def oracle(group, ambient=None):
    """Evaluated and symbolic deficiency side by side."""
    return json.loads(oracle_json(group, ambient))


def roundtrip(report):
    """Parse and re-serialize a report through the C++ schema."""
    return json.loads(roundtrip_json(json.dumps(report)))
