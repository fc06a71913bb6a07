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

#include "hcodes/plane.hpp"
#include "hcodes/supports.hpp"

using namespace hcodes;

TEST_CASE("clause order") {
    using V = std::vector<Clause>;
    CHECK(clause_order({4, 3, 0, 2}) == V{Clause::CollinearWithP0});
    CHECK(clause_order({5, 4, 1, 1}) ==
          V{Clause::CollinearThroughBoth, Clause::CollinearWithPInf, Clause::CollinearWithP0});
    CHECK(clause_order({5, 3, 1, 2}) ==
          V{Clause::Collinear, Clause::LineUnionTangentConic, Clause::IrreducibleTangentCubic});
    CHECK(clause_order({5, 3, 1, 4}) == V{Clause::CollinearWithPInf});
    CHECK(clause_order({5, 3, 4, 1}) == V{Clause::CollinearWithP0});
    CHECK(clause_order({5, 3, 0, 1}) == V{Clause::CollinearWithP0});
    CHECK(clause_order({5, 3, 0, 4}) == V{Clause::Collinear});
    CHECK(clause_order({5, 4, 0, 5}) == V{Clause::Collinear});
    CHECK(to_string(Clause::CollinearThroughBoth) == "CollinearThroughBoth");
}

TEST_CASE("q=4 C(3,0,2): every minimum support is collinear through P_0") {
    const HermitianCurve c(make_field(4));
    const Field& f = c.field();
    const CodeCertificate cert = certify_code(c, {4, 3, 0, 2}, {});
    CHECK(cert.violations.empty());
    CHECK(cert.actual_delta == 4);
    CHECK(cert.dimension == 8);
    REQUIRE_FALSE(cert.supports.empty());
    const PlaneForm x_minus_y = PlaneForm::line(f.one(), f.neg(f.one()), f.zero());
    bool found = false;
    for (const auto& s : cert.supports) {
        CHECK(s.classification.clause == Clause::CollinearWithP0);
        REQUIRE(s.classification.witness.size() == 1);
        const PlaneForm& l = s.classification.witness[0];
        CHECK(passes_through(f, l, {CurvePoint::origin()}));
        CHECK(passes_through(f, l, s.points));
        CHECK(check_classification(c, s.points, s.classification).empty());
        if (l == x_minus_y) {
            found = true;
            CHECK(s.points.size() == 4);
        }
    }
    CHECK(found);
    CHECK(cert.clause_counts() == std::map<std::string, int>{{"CollinearWithP0", static_cast<int>(cert.supports.size())}});
}

TEST_CASE("q=5 C(4,1,1): supports on X = 0 through both base points") {
    const HermitianCurve c(make_field(5));
    const Field& f = c.field();
    CertifyOptions opts;
    opts.oracle = true;
    const CodeCertificate cert = certify_code(c, {5, 4, 1, 1}, opts);
    CHECK(cert.violations.empty());
    CHECK(cert.actual_delta == 4);
    CHECK(cert.oracle_delta == 4);
    REQUIRE(cert.supports.size() == 1);
    const auto& s = cert.supports[0];
    CHECK(s.classification.clause == Clause::CollinearThroughBoth);
    REQUIRE(s.classification.witness.size() == 1);
    CHECK(s.classification.witness[0] == PlaneForm::line(f.one(), f.zero(), f.zero()));
    for (const auto& p : s.points) CHECK(p.x.is_zero());
}

TEST_CASE("classification detects a broken witness") {
    const HermitianCurve c(make_field(4));
    const Field& f = c.field();
    const CodeCertificate cert = certify_code(c, {4, 3, 0, 2}, {});
    REQUIRE_FALSE(cert.supports.empty());
    auto cls = cert.supports[0].classification;
    cls.witness[0] = PlaneForm::line(f.zero(), f.zero(), f.one());
    CHECK_FALSE(check_classification(c, cert.supports[0].points, cls).empty());
    // a classification with no clause found is never consistent
    SupportClassification none;
    CHECK_FALSE(check_classification(c, cert.supports[0].points, none).empty());
}

TEST_CASE("G1 codes with a conic or cubic clause") {
    const HermitianCurve c(make_field(5));
    std::map<std::string, int> seen;
    for (int a = 1; a <= 5; ++a)
        for (int b = 1; b <= 5; ++b) {
            const CodeParams p{5, 3, a, b};
            if (predict(3, a, b, 5).group != Group::G1) continue;
            const CodeCertificate cert = certify_code(c, p, {});
            CHECK(cert.violations.empty());
            for (const auto& s : cert.supports) {
                CHECK(s.classification.clause != Clause::Unclassified);
                CHECK(check_classification(c, s.points, s.classification).empty());
                ++seen[to_string(s.classification.clause)];
            }
        }
    CHECK(seen.count("Unclassified") == 0);
    CHECK_FALSE(seen.empty());
}

TEST_CASE("a single certificate matches the sweep and runs are deterministic") {
    const HermitianCurve c(make_field(4));
    CertifyOptions opts;
    opts.jobs = 2;
    const VerifyReport rep = verify_theorems(c, 3, 3, opts);
    CHECK(rep.ok());
    CHECK(rep.unclassified == 0);
    CHECK(rep.mismatches == 0);
    CHECK(rep.codes.size() == 5 * 4);
    for (const auto& code : rep.codes) {
        if (code.params.a != 2 || code.params.b != 3) continue;
        const CodeCertificate one = certify_code(c, code.params, {});
        CHECK(one.actual_delta == code.actual_delta);
        REQUIRE(one.supports.size() == code.supports.size());
        for (std::size_t i = 0; i < one.supports.size(); ++i) {
            CHECK(one.supports[i].points == code.supports[i].points);
            CHECK(one.supports[i].circuit.codeword == code.supports[i].circuit.codeword);
            CHECK(one.supports[i].classification.clause == code.supports[i].classification.clause);
        }
    }
    const VerifyReport again = verify_theorems(c, 3, 3, opts);
    CHECK(again.clause_counts == rep.clause_counts);
}
