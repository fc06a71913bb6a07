# Copyright 2026 The hcodes Authors
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

"""Two-point Hermitian codes: dual minimum distances and minimum-weight supports."""

import json

from . import _core

__all__ = [
    "points",
    "normalize",
    "predict",
    "generator",
    "dual_min_distance",
    "h1_oracle_distance",
    "certify",
    "verify",
    "h1",
]


def points(q):
    """Rational points of the curve over F_{q^2}, as text, P_inf first."""
    return list(_core.points(q))


def normalize(m, n, q):
    """(d, a, b) with L(m P_inf + n P_0) = C(d, a, b)."""
    return tuple(_core.normalize(m, n, q))


def predict(q, d, a, b):
    return json.loads(_core.predict_json(q, d, a, b))


def generator(q, d, a, b):
    """Generator matrix; entries are exponents of the field generator, -1 for zero."""
    return json.loads(_core.generator_json(q, d, a, b))


def dual_min_distance(q, d, a, b, max_weight=0, jobs=1):
    return _core.dual_min_distance(q, d, a, b, max_weight, jobs)


def h1_oracle_distance(q, d, a, b, max_weight=0, jobs=1):
    return _core.h1_oracle_distance(q, d, a, b, max_weight, jobs)


def certify(q, d, a, b, oracle=False, jobs=1):
    """Minimum supports with their geometric classification."""
    return json.loads(_core.certify_json(q, d, a, b, oracle, jobs))


def verify(q, d_lo=3, d_hi=None, oracle=False, jobs=1):
    return json.loads(_core.verify_json(q, d_lo, q - 1 if d_hi is None else d_hi, oracle, jobs))


def h1(q, scheme, t):
    """(h0, h1) of I_Z(t) for a scheme written like "2*inf + 1*(0, 0)"."""
    return tuple(_core.h1(q, scheme, t))
