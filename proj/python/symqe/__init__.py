"""Exact nonnegativity decisions for symmetric quartic forms.

Coefficients and points may be given as ints, fractions.Fraction or
strings like "3/4"; results use Fraction.
"""

import json
from fractions import Fraction

from . import _symqe as _core
from ._symqe import InputError

__all__ = ["InputError", "decide", "reference_decision", "from_monomial", "eval_point", "quartic_nonneg_real"]


def _text(values):
    return [str(Fraction(v)) for v in values]


def decide(n, coeffs, domain="orthant", basis="power-sum", trace=False):
    """Decide f >= 0 on the orthant or on R^n.

    Returns a dict with "decision", "witness" (point and value as Fractions,
    present only when the decision is False) and, if requested, "trace".
    """
    out = json.loads(_core.decide_json(n, _text(coeffs), domain, basis, trace))
    out.pop("timing_ms", None)
    if "witness" in out:
        w = out["witness"]
        out["witness"] = {"point": [Fraction(x) for x in w["point"]], "value": Fraction(w["value"])}
    return out


def reference_decision(n, coeffs, domain="orthant"):
    """Quadratic-time reference decision, for cross-checking."""
    return _core.reference_decision(n, _text(coeffs), domain)


def from_monomial(n, coeffs):
    return [Fraction(c) for c in _core.from_monomial(n, _text(coeffs))]


def eval_point(coeffs, point):
    return Fraction(_core.eval_point(_text(coeffs), _text(point)))


def quartic_nonneg_real(coeffs):
    return _core.quartic_nonneg_real(_text(coeffs))
