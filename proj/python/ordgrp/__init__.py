"""Coset enumeration, non-abelian tensor squares, and orderability verdicts
for finitely presented groups.

Presentations are plain strings in the grammar the ``grp`` CLI accepts,
e.g. ``"< x, y | x y x = y x y >"``. Structured results come back as the
same JSON objects the CLI prints, decoded into dicts.
"""

import json as _json

from ordgrp._core import (
    abelianization,
    canonical,
    carry_check,
    enumerate_cosets,
    green_ids,
    green_presentation,
    maeda,
    schur,
    wirtinger,
)
from ordgrp import _core

__all__ = [
    "abelianization",
    "canonical",
    "carry_check",
    "classify",
    "classify_id",
    "enumerate_cosets",
    "exterior_square",
    "fingerprint",
    "green_ids",
    "green_presentation",
    "maeda",
    "schur",
    "tensor_square",
    "wirtinger",
]


def fingerprint(presentation, max_cosets=500000):
    """Order, abelianization, derived series, center, class, exponent and
    element-order histogram of the finite group the presentation defines."""
    return _json.loads(_core.fingerprint_json(presentation, max_cosets))


def tensor_square(presentation, max_cosets=500000):
    """The non-abelian tensor square G (x) G of the finite group G."""
    return _json.loads(_core.tensor_json(presentation, max_cosets))


def exterior_square(presentation, max_cosets=500000):
    """The exterior square G ^ G of the finite group G."""
    return _json.loads(_core.exterior_json(presentation, max_cosets))


def classify(presentation, max_cosets=500000):
    """Orderability verdict with its deduction trace."""
    return _json.loads(_core.classify_json(presentation, max_cosets))


def classify_id(green_id, max_cosets=500000):
    """Orderability verdict for a bundled table id (Z, G1..G9)."""
    return _json.loads(_core.classify_id_json(green_id, max_cosets))
