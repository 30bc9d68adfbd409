"""Exact A-classification of plane-to-plane map-germs up to A-codimension 6."""

import json
from fractions import Fraction

from . import _core

__all__ = [
    "germ", "monge", "viewpoint", "classify", "normalize", "central_projection_germ",
    "classify_view", "parallel_projection", "constraint_check", "focal_scan",
    "normal_form_table", "fixtures_check", "labels", "OUT_OF_SCOPE",
]

OUT_OF_SCOPE = "out_of_scope"


def _rat(v):
    return str(Fraction(v)) if not isinstance(v, str) else v


def _jet(order, terms):
    return {"order": order, "terms": [{"i": i, "j": j, "c": _rat(c)} for (i, j), c in terms.items()]}


def germ(f1, f2, order=12):
    """Germ JSON from two {(i, j): coefficient} dicts."""
    return {"f1": _jet(order, f1), "f2": _jet(order, f2)}


def monge(coeffs, order=12):
    """Monge form z = sum c_ij x^i y^j from a {(i, j): c_ij} dict."""
    return {"order": order, "c": [{"i": i, "j": j, "v": _rat(c)} for (i, j), c in coeffs.items()]}


def viewpoint(a=0, b=0, c=0):
    return {"a": _rat(a), "b": _rat(b), "c": _rat(c)}


def _s(obj):
    return obj if isinstance(obj, str) else json.dumps(obj)


def classify(g, order=12):
    return json.loads(_core.classify(_s(g), order))


def normalize(g, order=12):
    return json.loads(_core.normalize(_s(g), order))


def central_projection_germ(m, p):
    return json.loads(_core.central_projection_germ(_s(m), _s(p)))


def classify_view(m, p):
    return json.loads(_core.classify_view(_s(m), _s(p)))


def parallel_projection(m, p=1, q=0):
    return json.loads(_core.parallel_projection(_s(m), _rat(p), _rat(q)))


def constraint_check(m, p, row):
    return json.loads(_core.constraint_check(_s(m), _s(p), row))


def focal_scan(m):
    return json.loads(_core.focal_scan(_s(m)))


def normal_form_table(order=12):
    return json.loads(_core.normal_form_table(order))


def fixtures_check():
    return _core.fixtures_check()


def labels():
    return list(_core.labels())
