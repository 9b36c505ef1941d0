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

import math

import pytest

import icx


def test_intro_deterministic_and_randomized():
    inst = icx.gen("intro")
    assert icx.solve(inst)["utility"] == pytest.approx(11 / 20, abs=1e-12)
    rand = icx.solve(inst, mode="rand")
    assert rand["utility"] == pytest.approx(71 / 120, abs=1e-9)
    assert rand["ic"]


def test_eval_nonic_scheme():
    inst = icx.gen("nonic")
    scheme = {
        "suggested": "bot",
        "alpha": 1,
        "distribution": [
            {"set": ["bot"], "prob": 0.5},
            {"set": ["1"], "prob": 0.25},
            {"set": [], "prob": 0.25},
        ],
    }
    report = icx.eval_scheme(inst, scheme)
    assert report["principal_favored_response"] == "2"
    assert report["principal_favored_utility"] == pytest.approx(0.425)
    rand = icx.solve(inst, mode="rand")
    assert rand["utility"] == pytest.approx(1.45 - 2 * math.sqrt(0.3), abs=1e-9)


def test_compare_passes():
    assert icx.compare(icx.gen("intro"), mode="rand")["pass"]


def test_errors_map_to_python_exceptions():
    with pytest.raises(icx.CostClassError):
        icx.solve(icx.gen("xos-hard", k=7), mode="rand")
    with pytest.raises(icx.SizeLimitError):
        icx.compare(icx.gen("gap", n=8), mode="rand")
    with pytest.raises(ValueError):
        icx.solve({"actions": [], "null_id": "bot", "cost_fn": {"type": "additive", "weights": []}})


def test_check_costfn_and_query_experiment():
    report = icx.check_costfn(icx.gen("xos-hard", k=7, seed=3))
    assert report["monotone"] and not report["submodular"]
    q = icx.query_experiment(k=13, trials=100, seed=2)
    assert q["rotation_classes"] == 6
    assert q["analytic_mean"] == 3.5
