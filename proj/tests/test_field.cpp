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

#include <set>

#include "hcodes/field.hpp"

using namespace hcodes;

namespace {

// Schoolbook polynomial product modulo the registry modulus; independent of the tables.
std::vector<int> poly_mulmod(const std::vector<int>& a, const std::vector<int>& b, const FieldSpec& s) {
    const int n = s.degree();
    std::vector<int> prod(2 * n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % s.p;
    for (int k = 2 * n - 1; k >= n; --k) {
        const int c = prod[k];
        if (!c) continue;
        for (int i = 0; i <= n; ++i) prod[k - n + i] = ((prod[k - n + i] - c * s.modulus[i]) % s.p + s.p) % s.p;
    }
    prod.resize(n);
    return prod;
}

}  // namespace

TEST_CASE("registry moduli") {
    CHECK(field_spec(4).modulus == std::vector<int>{1, 1, 0, 0, 1});
    CHECK(field_spec(5).modulus == std::vector<int>{2, 4, 1});
    CHECK(field_spec(2).modulus == std::vector<int>{1, 1, 1});
    for (int q : {2, 3, 4, 5, 7, 8, 9}) {
        const auto s = field_spec(q);
        CHECK(s.q() == q);
        CHECK(is_irreducible(s.modulus, s.p));
    }
    CHECK_THROWS_WITH_AS(field_spec(6), doctest::Contains("unsupported field"), Error);
    CHECK_THROWS_AS(make_field(16), Error);
}

TEST_CASE("q=4 and q=5 generators are the defining roots") {
    // alpha and beta are the class of t, coefficient vector (0, 1, 0, ...).
    CHECK(make_field(4)->coeffs(make_field(4)->gen_pow(1)) == std::vector<int>{0, 1, 0, 0});
    CHECK(make_field(5)->coeffs(make_field(5)->gen_pow(1)) == std::vector<int>{0, 1});
}

TEST_CASE("F16 examples") {
    const auto f = make_field(4);
    const Elem a = f->gen_pow(1);
    CHECK(f->mul(f->gen_pow(14), f->gen_pow(7)) == f->gen_pow(6));
    CHECK(f->inv(f->gen_pow(3)) == f->gen_pow(12));
    CHECK(f->coeffs(f->gen_pow(4)) == std::vector<int>{1, 1, 0, 0});
    CHECK(f->frobenius(a) == f->add(a, f->one()));
    CHECK(f->frobenius(f->zero()) == f->zero());
    CHECK_THROWS_WITH_AS(f->inv(f->zero()), "division by zero", Error);
    CHECK(f->to_string(f->gen_pow(7)) == "g^7");
    CHECK(f->to_string(f->zero()) == "0");
    CHECK(f->parse("g^7") == f->gen_pow(7));
    CHECK(f->parse("1") == f->one());
    CHECK(f->parse("g") == a);
}

TEST_CASE("tables agree with polynomial arithmetic") {
    for (int q : {2, 3, 4, 5}) {
        const auto f = make_field(q);
        const auto& s = f->spec();
        for (Elem x : f->elements())
            for (Elem y : f->elements()) {
                const auto cx = f->coeffs(x), cy = f->coeffs(y);
                std::vector<int> sum(cx.size());
                for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = (cx[i] + cy[i]) % s.p;
                REQUIRE(f->coeffs(f->add(x, y)) == sum);
                REQUIRE(f->coeffs(f->mul(x, y)) == poly_mulmod(cx, cy, s));
            }
    }
}

TEST_CASE("field invariants") {
    for (int q : {2, 3, 4, 5, 7, 8, 9}) {
        const auto f = make_field(q);
        std::set<std::vector<int>> seen;
        for (Elem x : f->elements()) {
            CHECK(f->frobenius(f->frobenius(x)) == x);
            CHECK(f->from_coeffs(f->coeffs(x)) == x);
            seen.insert(f->coeffs(x));
            if (x.is_zero()) continue;
            CHECK(f->pow(x, f->mult_order()) == f->one());
            CHECK(f->mul(x, f->inv(x)) == f->one());
            CHECK(f->gen_pow(f->exponent(x)) == x);
        }
        CHECK(seen.size() == static_cast<std::size_t>(q * q));
        // fixed field of Frobenius is F_q
        int fixed = 0;
        for (Elem x : f->elements()) fixed += f->frobenius(x) == x;
        CHECK(fixed == q);
        // generator has full order
        for (int k = 1; k < f->mult_order(); ++k)
            if (f->mult_order() % k == 0) CHECK(f->gen_pow(k) != f->one());
    }
}
