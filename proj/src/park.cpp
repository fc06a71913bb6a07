/*
   Copyright 2026 The hcodes Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "hcodes/park.hpp"

#include <algorithm>

#include "hcodes/curve.hpp"

namespace hcodes {

namespace {

long floor_div(long a, long b) {
    long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

long canonical_degree(int q) { return static_cast<long>(q) * q - q - 2; }

}  // namespace

ParkDecomposition ceil_decompose(long v, int q) {
    const long c = q + 1;
    const long v0 = -floor_div(-v, c);
    return {v0, v0 * c - v};
}

ParkDecomposition floor_decompose(long v, int q) {
    const long c = q + 1;
    const long v0 = floor_div(v, c);
    return {v0, v - v0 * c};
}

std::optional<ParkValue> delta_ceiling(long m, long n, int q) {
    const auto [m0, m1] = ceil_decompose(m, q);
    const auto [n0, n1] = ceil_decompose(n, q);
    const long s = m0 + n0;
    const long dstar = m + n;
    if (m1 <= s && n1 <= s) return ParkValue{1, dstar};
    if (n1 <= s && s < m1) return ParkValue{2, dstar + m1 - s};
    if (m1 <= s && s < n1) return ParkValue{3, dstar + n1 - s};
    // Cases (4) and (5) share one formula with the roles of m1, n1 exchanged.
    if (s < m1 && s < n1 && m1 < q && n1 < q) return ParkValue{m1 <= n1 ? 4 : 5, dstar + m1 + n1 - 2 * s};
    if (s < m1 && s < n1 && m1 == q && n1 == q) return ParkValue{6, dstar + q - s};
    return std::nullopt;
}

long delta_floor(long m, long n, int q) {
    return floor_decompose(m, q).v0 + floor_decompose(n, q).v0 + 2;
}

Hypotheses ceiling_hypotheses(long m, long n, int q) {
    const long extra = m + n;  // deg G - deg K
    Hypotheses h;
    h.a = extra > q;
    h.b = extra >= 0 && extra <= q && !two_point_principal(n, q) && !two_point_principal(m, q);
    return h;
}

Hypotheses floor_hypotheses(long m, long n, int q) {
    const long deg = m + n;
    const long k = canonical_degree(q);
    Hypotheses h;
    h.a = deg < k;
    h.b = deg >= k && deg <= k + q && (two_point_principal(n, q) || two_point_principal(m, q));
    return h;
}

std::string to_string(Group g) {
    switch (g) {
        case Group::G1: return "G1";
        case Group::G2: return "G2";
        case Group::G3: return "G3";
        case Group::HighDegree: return "HighDegree";
        case Group::Degenerate: return "Degenerate";
    }
    return "unknown";
}

bool equivalent_to_one_point(int d, int a, int b, int q) {
    (void)d;
    // G ~ s P_inf iff b P_0 ~ b P_inf; G ~ t P_0 iff a P_inf ~ a P_0.
    return two_point_principal(b, q) || two_point_principal(a, q);
}

Group classify_group(int d, int a, int b, int q) {
    const int lo = std::min(a, b);
    const int hi = std::max(a, b);
    const long deg = static_cast<long>(d) * (q + 1) - lo - hi;
    const long k = canonical_degree(q);
    if (deg <= 0) return Group::Degenerate;
    if (deg < k) return Group::G1;
    if (deg <= k + q) return equivalent_to_one_point(d, lo, hi, q) ? Group::G3 : Group::G2;
    return Group::HighDegree;
}

Prediction predict(int d, int a, int b, int q) {
    Prediction p;
    p.swapped = a > b;
    p.a = std::min(a, b);
    p.b = std::max(a, b);
    p.group = classify_group(d, a, b, q);
    const long c = q + 1;
    switch (p.group) {
        case Group::G1:
        case Group::G3: {
            p.theorem = "park-floor";
            p.m = d * c - p.a;
            p.n = -p.b;
            p.hypotheses = floor_hypotheses(p.m, p.n, q);
            if (p.hypotheses.holds()) p.delta = delta_floor(p.m, p.n, q);
            break;
        }
        case Group::G2:
        case Group::HighDegree: {
            p.theorem = "park-ceiling";
            p.m = (d - q + 2) * c - p.a;
            p.n = -p.b;
            p.hypotheses = ceiling_hypotheses(p.m, p.n, q);
            if (p.hypotheses.holds()) {
                if (auto v = delta_ceiling(p.m, p.n, q)) {
                    p.park_case = v->park_case;
                    p.delta = v->delta;
                }
            }
            break;
        }
        case Group::Degenerate:
            p.theorem = "none";
            break;
    }
    return p;
}

std::optional<long> predicted_delta(int d, int a, int b, int q) { return predict(d, a, b, q).delta; }

}  // namespace hcodes
