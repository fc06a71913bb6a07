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

#include <doctest.h>

#include "hcodes/code.hpp"
#include "hcodes/plane.hpp"

using namespace hcodes;

namespace {

std::vector<Elem> times(const Field& f, const Matrix& g, const std::vector<Elem>& c) {
    std::vector<Elem> out(g.rows(), Field::zero());
    for (int r = 0; r < g.rows(); ++r)
        for (int k = 0; k < g.cols(); ++k) out[r] = f.add(out[r], f.mul(g(r, k), c[k]));
    return out;
}

bool all_zero(const std::vector<Elem>& v) {
    return std::all_of(v.begin(), v.end(), [](Elem e) { return e.is_zero(); });
}

// The example codeword of the q=4 example, on the points (g^7,g^7), (g^11,g^11), (g^13,g^13), (g^14,g^14).
std::vector<Elem> example_word(const HermitianCurve& c, const std::vector<CurvePoint>& b,
                               const std::vector<int>& values) {
    const Field& f = c.field();
    std::vector<Elem> w(b.size(), Field::zero());
    const int xs[] = {7, 11, 13, 14};
    for (int i = 0; i < 4; ++i) {
        const CurvePoint p = CurvePoint::affine(f.gen_pow(xs[i]), f.gen_pow(xs[i]));
        const auto it = std::find(b.begin(), b.end(), p);
        REQUIRE(it != b.end());
        w[it - b.begin()] = f.gen_pow(values[i]);
    }
    return w;
}

}  // namespace

TEST_CASE("normalize_params") {
    CHECK(normalize_params(10, 3, 4) == Normalized{3, 0, 2});
    for (int q : {2, 3, 4, 5}) {
        CHECK(normalize_params(q + 1, 0, q) == Normalized{1, 0, 0});
        CHECK(normalize_params(0, 1, q) == Normalized{1, 0, q});
    }
    CHECK_THROWS_WITH_AS(normalize_params(3, -3, 4), doctest::Contains("degenerate code"), Error);
    for (int q : {3, 4, 5})
        for (long m = -20; m <= 40; ++m)
            for (long n = -20; n <= 40; ++n) {
                if (m + n <= 0) continue;
                const auto r = normalize_params(m, n, q);
                REQUIRE(r.d > 0);
                REQUIRE(r.a >= 0);
                REQUIRE(r.a <= q);
                REQUIRE(r.b >= 0);
                REQUIRE(r.b <= q);
                REQUIRE(static_cast<long>(r.d) * (q + 1) - r.a - r.b == m + n);
                // same divisor class: the P_0 parts differ by a multiple of q+1
                REQUIRE(two_point_principal(n + r.b, q));
            }
}

TEST_CASE("C(3,0,2) over F16") {
    const HermitianCurve c(make_field(4));
    const Field& f = c.field();
    const TwoPointCode code = build_code(c, {4, 3, 0, 2});
    CHECK(code.dimension() == 8);
    CHECK(code.length() == 63);
    CHECK(rank(f, code.generator) == 8);
    // x^i y^j with i + (q+1) j >= 2: the basis starts at y, and the y row holds the y-coordinates
    CHECK(code.basis.front() == std::pair{0, 1});
    for (int k = 0; k < code.length(); ++k) CHECK(code.generator(0, k) == code.points[k].y);
    CHECK(std::find(code.basis.begin(), code.basis.end(), std::pair{1, 0}) == code.basis.end());
}

TEST_CASE("the printed example codeword is dual to C(3,0,2)") {
    const HermitianCurve c(make_field(4));
    const Field& f = c.field();
    const TwoPointCode dab = build_code(c, {4, 3, 0, 2});
    const auto w = example_word(c, dab.points, {0, 3, 12, 9});
    CHECK(all_zero(times(f, dab.generator, w)));
    // L(10 P_inf + 3 P_0) is the same code with columns divided by y, so the word picks up a factor y
    const TwoPointCode mn = build_code_mn(c, 10, 3);
    CHECK(mn.params == CodeParams{4, 3, 0, 2});
    REQUIRE(mn.points == dab.points);
    auto scaled = w;
    for (std::size_t i = 0; i < scaled.size(); ++i)
        if (!scaled[i].is_zero()) scaled[i] = f.mul(scaled[i], mn.points[i].y);
    CHECK(all_zero(times(f, mn.generator, scaled)));
    CHECK_FALSE(all_zero(times(f, mn.generator, w)));
}

TEST_CASE("(m,n) and (d,a,b) constructions agree up to the y-scaling") {
    for (int q : {3, 4}) {
        const HermitianCurve c(make_field(q));
        const Field& f = c.field();
        for (long m = 1; m <= 3 * (q + 1); ++m)
            for (long n = -q; n <= q; ++n) {
                if (m + n <= 0) continue;
                const auto nn = normalize_params(m, n, q);
                if (nn.d >= q + 1 || monomial_basis(m, n, q).empty()) continue;
                TwoPointCode direct = build_code_mn(c, m, n);
                const TwoPointCode dab = build_code(c, {q, nn.d, nn.a, nn.b});
                // m P_inf + n P_0 = (d(q+1) - a) P_inf - b P_0 + div(y^s)
                const long s = (n + nn.b) / (q + 1);
                for (int col = 0; col < direct.length(); ++col) {
                    const Elem factor = f.pow(direct.points[col].y, s);
                    for (int r = 0; r < direct.dimension(); ++r)
                        direct.generator(r, col) = f.mul(direct.generator(r, col), factor);
                }
                CHECK(codes_equal(f, direct.generator, dab.generator));
            }
    }
}

TEST_CASE("dimension agrees with the plane-section count when E imposes independent conditions") {
    for (int q : {4, 5}) {
        const HermitianCurve c(make_field(q));
        for (int d = 1; d <= q - 1; ++d)
            for (int a = 0; a <= q; ++a)
                for (int b = 0; b <= q; ++b) {
                    SchemeOnCurve e;
                    e.add(CurvePoint::infinity(), a);
                    e.add(CurvePoint::origin(), b);
                    const auto h = h0_h1(c, e, d);
                    const int h1 = h.h1;
                    if (h.h0 == 0) {
                        CHECK_THROWS_AS(build_code(c, {q, d, a, b}), Error);
                        continue;
                    }
                    const TwoPointCode code = build_code(c, {q, d, a, b});
                    CHECK(code.dimension() == plane_section_dimension(d, q) - a - b + h1);
                    if (a + b <= d + 1) CHECK(h1 == 0);
                }
    }
}

TEST_CASE("reduce_params") {
    CHECK(reduce_params(3, 1, 2).r == 2);
    const auto r1 = reduce_params(3, 2, 5);
    CHECK(r1.r == 1);
    CHECK(r1.d == 2);
    CHECK(r1.a == 2);
    CHECK(r1.b == 0);
    const auto r0 = reduce_params(3, 4, 5);
    CHECK(r0.r == 0);
    CHECK(r0.d == 1);
    CHECK(r0.a == 0);
    CHECK(r0.b == 0);
    const auto sw = reduce_params(3, 5, 2);
    CHECK(sw.swapped);
    CHECK(sw.a == 0);
    CHECK(sw.b == 2);
    CHECK_THROWS_AS(reduce_params(2, 1, 1), Error);
}

TEST_CASE("reduced construction gives the same code") {
    for (int q : {4, 5}) {
        const HermitianCurve c(make_field(q));
        const Field& f = c.field();
        for (int d = 3; d <= q - 1; ++d)
            for (int a = 0; a <= q; ++a)
                for (int b = 0; b <= q; ++b) {
                    const CodeParams p{q, d, a, b};
                    const auto red = reduce_params(d, a, b);
                    const TwoPointCode orig = build_code(c, p);
                    const TwoPointCode lifted = build_reduced_code_lifted(c, p);
                    CHECK(codes_equal(f, orig.generator, lifted.generator));
                    // without the tangent factor Y the columns differ by y(P)
                    const bool p0_removed = red.r == 0 || (red.r == 1 && b > a);
                    const TwoPointCode raw = build_reduced_code(c, p);
                    CHECK(codes_equal(f, orig.generator, raw.generator) == !p0_removed);
                }
    }
}

TEST_CASE("errors") {
    const HermitianCurve c(make_field(4));
    CHECK_THROWS_AS(build_code(c, {5, 3, 0, 2}), Error);
    CHECK_THROWS_AS(build_code(c, {4, 3, 0, 7}), Error);
    CHECK_THROWS_WITH_AS(evaluation_matrix(c, {}, evaluation_set(c)), doctest::Contains("zero code"), Error);
    CHECK(plane_section_dimension(3, 4) == 10);
    CHECK(plane_section_dimension(6, 4) == 28 - 3);
}
