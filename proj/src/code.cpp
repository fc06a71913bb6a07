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

#include "hcodes/code.hpp"

#include <algorithm>

namespace hcodes {

namespace {

long floor_div(long a, long b) {
    long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

}  // namespace

Normalized normalize_params(long m, long n, int q) {
    if (m + n <= 0) throw Error("degenerate code: m + n must be positive");
    const long c = q + 1;
    // n = n0 (q+1) + n1; move n0 (q+1) P_0 to infinity, and one more block when n1 != 0.
    const long n0 = floor_div(n, c);
    const long n1 = n - n0 * c;
    long at_inf = m + n0 * c;
    int b = 0;
    if (n1 != 0) {
        b = static_cast<int>(c - n1);
        at_inf += c;
    }
    const long d = -floor_div(-at_inf, c);
    const long a = d * c - at_inf;
    return {static_cast<int>(d), static_cast<int>(a), b};
}

std::vector<CurvePoint> evaluation_set(const HermitianCurve& curve) {
    std::vector<CurvePoint> out;
    for (const auto& p : curve.points())
        if (!p.at_infinity && p != CurvePoint::origin()) out.push_back(p);
    return out;
}

Matrix evaluation_matrix(const HermitianCurve& curve, const std::vector<std::pair<int, int>>& basis,
                         const std::vector<CurvePoint>& points) {
    if (basis.empty()) throw Error("zero code: empty monomial basis");
    const Field& f = curve.field();
    Matrix g(static_cast<int>(basis.size()), static_cast<int>(points.size()));
    for (std::size_t r = 0; r < basis.size(); ++r) {
        const auto [i, j] = basis[r];
        for (std::size_t c = 0; c < points.size(); ++c) {
            const auto& p = points[c];
            if (p.at_infinity || (j < 0 && p.y.is_zero())) throw Error("monomial has a pole on the evaluation set");
            g(static_cast<int>(r), static_cast<int>(c)) = f.mul(f.pow(p.x, i), f.pow(p.y, j));
        }
    }
    return g;
}

TwoPointCode build_code(const HermitianCurve& curve, const CodeParams& params) {
    if (params.q != curve.q()) throw Error("code parameters use a different q");
    if (params.d <= 0 || params.a < 0 || params.b < 0 || params.a > params.q || params.b > params.q)
        throw Error("code parameters out of range");
    TwoPointCode code;
    code.params = params;
    code.basis = monomial_basis(static_cast<long>(params.d) * (params.q + 1) - params.a, -params.b, params.q);
    code.points = evaluation_set(curve);
    code.generator = evaluation_matrix(curve, code.basis, code.points);
    if (rank(curve.field(), code.generator) != code.dimension())
        throw Error("monomial basis is dependent on the evaluation set");
    return code;
}

TwoPointCode build_code_mn(const HermitianCurve& curve, long m, long n) {
    const auto norm = normalize_params(m, n, curve.q());
    TwoPointCode code;
    code.params = {curve.q(), norm.d, norm.a, norm.b};
    code.basis = monomial_basis(m, n, curve.q());
    code.points = evaluation_set(curve);
    code.generator = evaluation_matrix(curve, code.basis, code.points);
    return code;
}

long plane_section_dimension(int d, int q) {
    const auto c2 = [](long n) { return n >= 2 ? n * (n - 1) / 2 : 0L; };
    return c2(d + 2) - c2(d - q + 1);
}

bool codes_equal(const Field& f, const Matrix& g1, const Matrix& g2) { return row_spaces_equal(f, g1, g2); }

Reduction reduce_params(int d, int a, int b) {
    if (d <= 2) throw Error("reduction needs d > 2");
    Reduction out;
    out.swapped = a > b;
    const int a1 = std::min(a, b);
    const int a2 = std::max(a, b);
    int r1 = 0, r2 = 0;
    if (a2 <= d) {
        out.r = 2;
        r1 = a1;
        r2 = a2;
    } else if (a1 <= d - 1) {
        out.r = 1;
        r1 = a1;
    } else {
        out.r = 0;
    }
    out.d = d - 2 + out.r;
    out.a = out.swapped ? r2 : r1;
    out.b = out.swapped ? r1 : r2;
    return out;
}

TwoPointCode build_reduced_code(const HermitianCurve& curve, const CodeParams& params) {
    const auto red = reduce_params(params.d, params.a, params.b);
    CodeParams reduced{params.q, red.d, red.a, red.b};
    return build_code(curve, reduced);
}

TwoPointCode build_reduced_code_lifted(const HermitianCurve& curve, const CodeParams& params) {
    const Field& f = curve.field();
    const auto red = reduce_params(params.d, params.a, params.b);
    TwoPointCode code = build_reduced_code(curve, params);
    std::vector<PlaneForm> removed;
    const bool inf_large = params.a > params.b;
    const CurvePoint large = inf_large ? CurvePoint::infinity() : CurvePoint::origin();
    const CurvePoint small = inf_large ? CurvePoint::origin() : CurvePoint::infinity();
    if (red.r <= 1) removed.push_back(curve.tangent_line(large));
    if (red.r == 0) removed.push_back(curve.tangent_line(small));
    for (int c = 0; c < code.length(); ++c) {
        const auto& p = code.points[c];
        Elem s = Field::one();
        for (const auto& t : removed) s = f.mul(s, t.evaluate(f, p.x, p.y, Field::one()));
        if (s.is_zero()) throw Error("tangent line meets the evaluation set");
        for (int r = 0; r < code.dimension(); ++r) code.generator(r, c) = f.mul(code.generator(r, c), s);
    }
    code.params = params;
    return code;
}

}  // namespace hcodes
