# Copyright 2026 The icx Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Optimal incentive-compatible inspection schemes.

Instances and schemes may be given as dicts or JSON strings; results are
returned as dicts.
"""

import json as _json

from . import _icx
from ._icx import CostClassError, SizeLimitError, ValidationError

__version__ = _icx.__version__

__all__ = [
    "CostClassError",
    "SizeLimitError",
    "ValidationError",
    "check_costfn",
    "compare",
    "eval_scheme",
    "gen",
    "query_experiment",
    "solve",
]


def _text(obj):
    return obj if isinstance(obj, str) else _json.dumps(obj)


def solve(instance, mode="det", tol=1e-9):
    return _json.loads(_icx.solve(_text(instance), mode, tol))


def eval_scheme(instance, scheme, tol=1e-9):
    return _json.loads(_icx.eval_scheme(_text(instance), _text(scheme), tol))


def compare(instance, mode="det", alpha_grid=1e-4):
    return _json.loads(_icx.compare(_text(instance), mode, alpha_grid))


def check_costfn(instance, seed=1, samples=20000):
    return _json.loads(_icx.check_costfn(_text(instance), seed, samples))


def gen(family, n=10, k=7, seed=1):
    return _json.loads(_icx.gen(family, n, k, seed))


def query_experiment(k=13, trials=500, seed=1, m=None):
    return _json.loads(_icx.query_experiment(k, trials, seed, m))
