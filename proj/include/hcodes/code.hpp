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

#ifndef HCODES_CODE_HPP
#define HCODES_CODE_HPP

#include <utility>
#include <vector>

#include "hcodes/curve.hpp"
#include "hcodes/linalg.hpp"

namespace hcodes {

/// C(d, a, b): H^0(O_X(d)(-a P_inf - b P_0)) evaluated on B.
struct CodeParams {
    int q = 0;
    int d = 0;
    int a = 0;
    int b = 0;

    /// d(q+1) - a - b, the degree of the evaluated divisor.
    long divisor_degree() const { return static_cast<long>(d) * (q + 1) - a - b; }
    /// b = 0 codes are one-point codes in disguise.
    bool of_interest() const { return b != 0; }

    friend bool operator==(const CodeParams&, const CodeParams&) = default;
};

struct Normalized {
    int d = 0;
    int a = 0;
    int b = 0;
    friend bool operator==(const Normalized&, const Normalized&) = default;
};

/// (m, n) -> (d, a, b) with m P_inf + n P_0 ~ (d(q+1) - a) P_inf - b P_0,
/// d > 0 and 0 <= a, b <= q. Throws Error("degenerate code") when m + n <= 0.
Normalized normalize_params(long m, long n, int q);

struct TwoPointCode {
    CodeParams params;
    std::vector<std::pair<int, int>> basis;  // exponents (i, j) of x^i y^j
    std::vector<CurvePoint> points;  // B in canonical order
    Matrix generator;  // |basis| x |B|

    int length() const { return generator.cols(); }
    int dimension() const { return generator.rows(); }
};

/// Rational points other than P_inf and P_0, in canonical order.
std::vector<CurvePoint> evaluation_set(const HermitianCurve& curve);

/// Evaluates x^i y^j at every point of B; throws Error("zero code") on an empty basis.
Matrix evaluation_matrix(const HermitianCurve& curve, const std::vector<std::pair<int, int>>& basis,
                         const std::vector<CurvePoint>& points);

TwoPointCode build_code(const HermitianCurve& curve, const CodeParams& params);

/// C_{m,n}: L(m P_inf + n P_0) evaluated on B directly. Its params hold the
/// normalized (d, a, b).
TwoPointCode build_code_mn(const HermitianCurve& curve, long m, long n);

/// h^0(O_X(d)) = C(d+2, 2) - C(d-q+1, 2) for a plane curve of degree q+1.
long plane_section_dimension(int d, int q);

/// Identical row spaces (same reduced row-echelon form).
bool codes_equal(const Field& f, const Matrix& g1, const Matrix& g2);

struct Reduction {
    int r = 2;
    int d = 0;   // d'
    int a = 0;   // multiplicity at P_inf after reduction
    int b = 0;   // multiplicity at P_0 after reduction
    bool swapped = false;  // input had a > b; (a, b) are reported in the input roles
};

/// Drops base multiplicities that force tangent-line components:
/// with a_1 <= a_2 the smaller and larger of (a, b), r is the largest i <= 2
/// with a_i <= d - 2 + i (else 0) and d' = d - 2 + r. Requires d > 2.
Reduction reduce_params(int d, int a, int b);

/// Builds the reduced code H^0(O_X(d')(-E')) on the same B.
TwoPointCode build_reduced_code(const HermitianCurve& curve, const CodeParams& params);

/// The reduced forms multiplied by the tangent lines that were split off, so
/// both constructions are degree-d forms read in the chart Z = 1. The tangent
/// at P_inf is Z (no effect); the tangent at P_0 is Y, which scales column P by y(P).
TwoPointCode build_reduced_code_lifted(const HermitianCurve& curve, const CodeParams& params);

}  // namespace hcodes

#endif  // HCODES_CODE_HPP
