"""Exact constructions and recognition for modules of the anticommutator
spin algebra.

Every function takes and returns plain dicts (or lists of dicts) whose
scalar entries are exact strings such as ``"3/2"`` or ``"1/2*sqrt(-1)"``;
nothing is ever converted to floating point.
"""

import json as _json

from _acsa import (
    Error,
    ParseError,
    PreconditionError,
    UnsupportedExtension,
)
import _acsa

__all__ = [
    "Error",
    "ParseError",
    "PreconditionError",
    "UnsupportedExtension",
    "construct",
    "verify",
    "classify",
    "twist",
    "eig",
    "rep",
    "analyze_pair",
    "fit_aw",
    "analyze_triple",
    "recognize_pair",
    "pair_choices",
    "recognize_triple",
    "extend",
    "iso_pair",
    "iso_triple",
    "counterexample_d2",
]


def construct(kind, d, n="0"):
    """Generator matrices of B(d) or AB(d, n) in the defining basis."""
    return _json.loads(_acsa.construct(kind, d, n))


def verify(module):
    """Relation and irreducibility checks on a module or operator triple."""
    return _json.loads(_acsa.verify(_json.dumps(module)))


def classify(module):
    """Module type determined by the trace triple."""
    return _json.loads(_acsa.classify(_json.dumps(module)))


def twist(module, perm):
    """Precompose a module with the automorphism of an index permutation."""
    return _json.loads(_acsa.twist(_json.dumps(module), perm))


def eig(kind, d, n="0"):
    """Ordered generator spectra of one type."""
    return _json.loads(_acsa.eig(kind, d, n))


def rep(kind, d, n, a, b):
    """Closed-form generator matrices in the (a, b) eigenbasis."""
    return _json.loads(_acsa.rep(kind, d, n, a, b))


def analyze_pair(pair):
    """Leonard pair analysis of two operators."""
    return _json.loads(_acsa.analyze_pair(_json.dumps(pair)))


def fit_aw(pair):
    """Askey-Wilson parameters fitted to a pair."""
    return _json.loads(_acsa.fit_aw(_json.dumps(pair)))


def analyze_triple(triple):
    """Leonard triple analysis of three operators."""
    return _json.loads(_acsa.analyze_triple(_json.dumps(triple)))


def recognize_pair(pair):
    """Module structure carried by a pair."""
    return _json.loads(_acsa.recognize_pair(_json.dumps(pair)))


def pair_choices(pair):
    """The four sign choices of a recognized pair."""
    return _json.loads(_acsa.pair_choices(_json.dumps(pair)))


def recognize_triple(triple):
    """Module structure carried by a triple, or a refusal certificate."""
    return _json.loads(_acsa.recognize_triple(_json.dumps(triple)))


def extend(pair, xi_eps):
    """Complete a recognized pair to a triple with the given third scale."""
    return _json.loads(_acsa.extend(_json.dumps(pair), xi_eps))


def iso_pair(first, second):
    """Pair isomorphism decision with an exact intertwiner."""
    return _json.loads(_acsa.iso_pair(_json.dumps(first), _json.dumps(second)))


def iso_triple(first, second):
    """Triple isomorphism decision with an exact intertwiner."""
    return _json.loads(
        _acsa.iso_triple(_json.dumps(first), _json.dumps(second))
    )


def counterexample_d2():
    """The diameter-two triple that carries no module structure."""
    return _json.loads(_acsa.counterexample_d2())
