"""Finite Rees quotients of free monoids by tau-congruences."""

import json as _json

from ._mtau import (
    Error,
    SyntaxError,
    NotReducedError,
    IllegalSegmentError,
    UnsupportedKindError,
    CapExceededError,
    Monoid,
    monoid,
    build,
    closure,
    normal_form,
    related,
    check_identity,
    family,
    isomorphic,
    anti_isomorphic,
    direct_product,
    dual,
    submonoid,
    quotient_identify,
    merge_identify,
    from_presentation,
    monogenic,
    is_tau_term_bounded,
    equationally_equivalent_bounded,
)
from . import _mtau


def to_dict(m: Monoid) -> dict:
    """The JSON form of a monoid: elements, table, identity, zero, ..."""
    return _json.loads(m._json())


def verify(section: str = "all", seed: int = 0, jobs: int = 1) -> dict:
    """Runs the built-in fixtures and returns the report."""
    return _json.loads(_mtau._verify(section, seed, jobs))


__all__ = [name for name in dir() if not name.startswith("_")]
