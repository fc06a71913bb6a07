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

#ifndef HCODES_PARK_HPP
#define HCODES_PARK_HPP

#include <optional>
#include <string>

namespace hcodes {

// Closed-form dual minimum distances of two-point Hermitian codes (Park's
// formulas) and the grouping of C(d, a, b) by the degree of
// G = d(q+1) P_inf - a P_inf - b P_0 against deg K = q^2 - q - 2.

/// v = v0 (q+1) - v1 (ceiling variant) or v = v0 (q+1) + v1 (floor variant), 0 <= v1 <= q.
struct ParkDecomposition {
    long v0 = 0;
    long v1 = 0;
};

ParkDecomposition ceil_decompose(long v, int q);
ParkDecomposition floor_decompose(long v, int q);

struct ParkValue {
    int park_case = 0;  // 1..6 for the ceiling formula, 0 for the floor formula
    long delta = 0;
};

/// Dual distance of L(K + m P_inf + n P_0) by the six-case ceiling formula;
/// empty when (m, n) falls in none of the listed cases. The caller checks the
/// hypotheses (ceiling_hypotheses).
std::optional<ParkValue> delta_ceiling(long m, long n, int q);

/// Dual distance of L(m P_inf + n P_0) by the floor formula: m0 + n0 + 2.
long delta_floor(long m, long n, int q);

struct Hypotheses {
    bool a = false;
    bool b = false;
    bool holds() const { return a || b; }
};

/// (a) deg G > deg K + q; (b) deg K <= deg G <= deg K + q and G is not
/// equivalent to a multiple of P_inf or of P_0. Here G = K + m P_inf + n P_0.
Hypotheses ceiling_hypotheses(long m, long n, int q);

/// (a) deg G < deg K; (b) deg K <= deg G <= deg K + q and G equivalent to a
/// multiple of P_inf or of P_0. Here G = m P_inf + n P_0.
Hypotheses floor_hypotheses(long m, long n, int q);

enum class Group { G1, G2, G3, HighDegree, Degenerate };

std::string to_string(Group g);

/// Group of C(d, a, b). Roles of P_inf and P_0 are normalized so that a <= b.
Group classify_group(int d, int a, int b, int q);

/// Membership in G3 decided directly: G ~ s P_inf or G ~ t P_0 via two_point_principal.
bool equivalent_to_one_point(int d, int a, int b, int q);

struct Prediction {
    Group group = Group::Degenerate;
    bool swapped = false;  // a > b in the input
    int a = 0;  // role-normalized, a <= b
    int b = 0;
    std::string theorem;  // "park-ceiling", "park-floor" or "none"
    int park_case = 0;
    long m = 0;  // (m, n) handed to the formula
    long n = 0;
    Hypotheses hypotheses;
    std::optional<long> delta;
};

Prediction predict(int d, int a, int b, int q);

std::optional<long> predicted_delta(int d, int a, int b, int q);

}  // namespace hcodes

#endif  // HCODES_PARK_HPP
