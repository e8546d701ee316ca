#  Copyright 2026 The trunclat Authors
#
#  Licensed under the Apache License, Version 2.0 (the "License");
#  you may not use this file except in compliance with the License.
#  You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
#  Unless required by applicable law or agreed to in writing, software
#  distributed under the License is distributed on an "AS IS" BASIS,
#  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
#  See the License for the specific language governing permissions and
#  limitations under the License.

"""Exact truncated vector lattices.

Elements are passed as JSON-compatible values: a list of rationals for
``finite_pointwise:<n>`` and ``identity_line``/``lex_plane``, a dict of
index -> rational for ``sparse_seq``, and ``{"e": ..., "lambda": ...}`` for
unitized elements. Rationals are strings like ``"3/4"`` or integers.
"""

import json

from . import _trunclat
from ._trunclat import TrunclatError

__all__ = [
    "TrunclatError",
    "check",
    "evaluate",
    "holds",
    "laws",
    "render",
    "repro",
    "repro_ids",
]

DEFAULT_SEED = 42


def _space(space):
    return space if isinstance(space, str) else json.dumps(space)


def _trunc(trunc):
    if trunc is None:
        return ""
    return trunc if isinstance(trunc, str) else json.dumps(trunc)


def _bindings(bindings):
    return {name: json.dumps(value) for name, value in (bindings or {}).items()}


def check(space="sparse_seq", trunc=None, seed=DEFAULT_SEED, trials=1000):
    """Run the law suite and return one report dict per law."""
    return [json.loads(r) for r in _trunclat.check(_space(space), _trunc(trunc), seed, trials)]


def evaluate(expr, bindings=None, space="sparse_seq", trunc=None, unitize=False):
    out = _trunclat.evaluate(expr, _bindings(bindings), _space(space), _trunc(trunc), unitize)
    return json.loads(out)


def holds(assertion, bindings=None, space="sparse_seq", trunc=None, unitize=False):
    """Return (holds, lhs, rhs) for one assertion under the given bindings."""
    ok, lhs, rhs = _trunclat.holds(
        assertion, _bindings(bindings), _space(space), _trunc(trunc), unitize
    )
    return ok, json.loads(lhs), json.loads(rhs)


def laws(space="sparse_seq", trunc=None):
    return list(_trunclat.laws(_space(space), _trunc(trunc)))


def render(expr):
    """Canonical fully parenthesized form of an expression."""
    return _trunclat.render(expr)


def repro(example_id):
    return json.loads(_trunclat.repro(example_id))


def repro_ids():
    return list(_trunclat.repro_ids())
