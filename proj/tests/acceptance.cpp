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

// Acceptance suite: one PASS/FAIL line per criterion.
//
// Criterion 11 checks the dimension formula k = (d+2)(d+1)/2 - a - b literally.
// It fails on every swept code where E = aP_inf + bP_0 does not impose
// independent conditions on degree-d forms. Those codes are listed, and the
// corrected identity k = (d+2)(d+1)/2 - a - b + h1(I_E(d)) is checked as 11b.
// The literal line is expected red; the exit status is nonzero when any other
// line fails, or when the literal failures are not exactly the h1 > 0 codes.

#include <chrono>
#include <cstdio>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "hcodes/code.hpp"
#include "hcodes/distance.hpp"
#include "hcodes/park.hpp"
#include "hcodes/plane.hpp"
#include "hcodes/supports.hpp"

using namespace hcodes;

namespace {

// Time limits in seconds.
constexpr double kCensusLimit = 1.0;
constexpr double kLinesLimit = 10.0;
constexpr double kParkSweepLimit = 600.0;
constexpr int kRandomRR = 200;
constexpr int kOracleQ5Codes = 5;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string label(const CodeParams& p) {
    return "q=" + std::to_string(p.q) + " C(" + std::to_string(p.d) + "," + std::to_string(p.a) + "," +
           std::to_string(p.b) + ")";
}

std::string join(const std::vector<std::string>& v, std::size_t limit = 12) {
    std::string out;
    for (std::size_t i = 0; i < v.size() && i < limit; ++i) out += (i ? "; " : "") + v[i];
    if (v.size() > limit) out += "; ... (" + std::to_string(v.size()) + " total)";
    return out;
}

struct Suite {
    int unexpected = 0;

    void report(const std::string& id, bool pass, const std::string& detail, bool expected_red = false) {
        std::printf("[%s] criterion %s: %s%s\n", pass ? "PASS" : "FAIL", id.c_str(), detail.c_str(),
                    !pass && expected_red ? " (expected: literal formula ignores h1)" : "");
        std::fflush(stdout);
        if (!pass && !expected_red) ++unexpected;
    }
};

std::vector<CurvePoint> affine_points(const Field& f, std::initializer_list<std::pair<int, int>> xy) {
    std::vector<CurvePoint> out;
    for (auto [x, y] : xy)
        out.push_back(CurvePoint::affine(x < 0 ? f.zero() : f.gen_pow(x), f.gen_pow(y)));
    return out;
}

}  // namespace

int main() {
    Suite s;

    {  // 1
        const auto t0 = Clock::now();
        bool ok = true;
        std::ostringstream counts;
        for (int q : {2, 3, 4, 5}) {
            const auto n = enumerate_points(*make_field(q)).size();
            counts << (q == 2 ? "" : ", ") << n;
            ok = ok && n == static_cast<std::size_t>(q * q * q + 1);
        }
        const double t = seconds_since(t0);
        s.report("1", ok && t < kCensusLimit, "point census q=2..5 -> " + counts.str() + " in " + std::to_string(t) + " s");
    }

    {  // 2
        const auto t0 = Clock::now();
        bool ok = true;
        std::size_t total = 0;
        for (int q : {2, 3, 4}) {
            const HermitianCurve c(make_field(q));
            const Field& f = c.field();
            const auto& lines = all_lines(f);
            ok = ok && lines.size() == static_cast<std::size_t>(q * q * q * q + q * q + 1);
            for (const auto& l : lines) {
                std::vector<CurvePoint> hit;
                for (const auto& p : c.points())
                    if (passes_through(f, l, {p})) hit.push_back(p);
                if (hit.size() == 1) ok = ok && c.tangent_line(hit[0]) == l;
                else ok = ok && hit.size() == static_cast<std::size_t>(q + 1);
            }
            total += lines.size();
        }
        const double t = seconds_since(t0);
        s.report("2", ok && t < kLinesLimit,
                 "line dichotomy over " + std::to_string(total) + " lines in " + std::to_string(t) + " s");
    }

    {  // 3
        std::mt19937 rng(2026);
        int checked = 0, bad = 0;
        for (int q : {4, 5}) {
            const int g = q * (q - 1) / 2;
            std::uniform_int_distribution<long> pick(-4L * q, 3L * q * q);
            int done = 0;
            while (done < kRandomRR) {
                const long m = pick(rng), n = pick(rng);
                if (m + n <= 2 * g - 2) continue;
                ++done;
                ++checked;
                bad += static_cast<long>(monomial_basis(m, n, q).size()) != m + n + 1 - g;
            }
        }
        s.report("3", bad == 0, "Riemann-Roch on " + std::to_string(checked) + " random (m,n), " +
                                    std::to_string(bad) + " mismatches");
    }

    {  // 4
        bool ok = true;
        for (int q : {3, 4, 5}) {
            for (int u = 1; u <= q; ++u) ok = ok && !two_point_principal(u, q);
            ok = ok && two_point_principal(q + 1, q);
        }
        s.report("4", ok, "u(P_inf - P_0) principal only for u = q+1 among 1..q+1, q=3,4,5");
    }

    // Sweeps shared by 5, 6, 9 and 11: every (d,a,b), 3 <= d <= q-1, 0 <= a <= q, 1 <= b <= q.
    std::vector<VerifyReport> sweeps;
    double sweep_time = 0;
    for (int q : {4, 5}) {
        const HermitianCurve c(make_field(q));
        CertifyOptions opts;
        opts.oracle = true;
        const auto t0 = Clock::now();
        sweeps.push_back(verify_theorems(c, 3, q - 1, opts));
        sweep_time += seconds_since(t0);
    }

    {  // 5
        int compared = 0, mismatches = 0;
        std::vector<std::string> uncovered, bad;
        for (const auto& rep : sweeps)
            for (const auto& code : rep.codes) {
                if (!code.prediction.delta) {
                    uncovered.push_back(label(code.params));
                    continue;
                }
                ++compared;
                if (*code.prediction.delta != code.actual_delta) {
                    ++mismatches;
                    bad.push_back(label(code.params));
                }
            }
        std::string detail = std::to_string(compared) + " covered codes, " + std::to_string(mismatches) +
                             " mismatches, sweep " + std::to_string(sweep_time) + " s";
        if (!bad.empty()) detail += "; mismatched: " + join(bad);
        detail += "; uncovered: " + (uncovered.empty() ? std::string("none") : join(uncovered));
        s.report("5", mismatches == 0 && sweep_time < kParkSweepLimit, detail);
    }

    {  // 6
        int q4 = 0, q5 = 0, direct = 0;
        std::vector<std::string> bad;
        const HermitianCurve c4(make_field(4));
        for (const auto& rep : sweeps)
            for (const auto& code : rep.codes) {
                if (!code.oracle_delta) {
                    bad.push_back(label(code.params) + " no oracle");
                    continue;
                }
                if (*code.oracle_delta != code.actual_delta) bad.push_back(label(code.params));
                (code.params.q == 4 ? q4 : q5)++;
                if (code.params.q != 4) continue;
                // subset-by-subset rank of [cond(E) | cond(S)], no shared search code
                const int d = h1_oracle_distance_direct(c4, build_code(c4, code.params), code.params.q + 2);
                if (d == code.actual_delta) ++direct;
                else bad.push_back(label(code.params) + " direct");
            }
        s.report("6", bad.empty() && q5 >= kOracleQ5Codes,
                 "exact = h1 oracle on " + std::to_string(q4) + " q=4 and " + std::to_string(q5) +
                     " q=5 codes; direct subset h1 route agrees on " + std::to_string(direct) + " q=4 codes" +
                     (bad.empty() ? "" : "; disagree: " + join(bad)));
    }

    {  // 7
        const HermitianCurve c(make_field(4));
        const Field& f = c.field();
        const CodeCertificate cert = certify_code(c, {4, 3, 0, 2}, {});
        const auto target = affine_points(f, {{7, 7}, {11, 11}, {13, 13}, {14, 14}});
        bool listed = false, all_ok = !cert.supports.empty();
        for (const auto& sup : cert.supports) {
            listed = listed || sup.points == target;
            const auto& w = sup.classification.witness;
            all_ok = all_ok && sup.classification.clause == Clause::CollinearWithP0 && w.size() == 1 &&
                     w[0].degree() == 1 && passes_through(f, w[0], sup.points) &&
                     passes_through(f, w[0], {CurvePoint::origin()});
        }
        s.report("7", cert.actual_delta == 4 && listed && all_ok && cert.violations.empty(),
                 "q=4 C(3,0,2): delta=" + std::to_string(cert.actual_delta) + ", listed support " +
                     (listed ? "found" : "missing") + ", " + std::to_string(cert.supports.size()) +
                     " supports all on a line through P_0: " + (all_ok ? "yes" : "no"));
    }

    {  // 8
        const HermitianCurve c(make_field(5));
        const Field& f = c.field();
        const CodeCertificate cert = certify_code(c, {5, 4, 1, 1}, {});
        const auto target = affine_points(f, {{-1, 3}, {-1, 9}, {-1, 15}, {-1, 21}});
        const PlaneForm x0 = PlaneForm::line(f.one(), f.zero(), f.zero());
        bool listed = false, all_ok = !cert.supports.empty();
        for (const auto& sup : cert.supports) {
            listed = listed || sup.points == target;
            const auto& w = sup.classification.witness;
            all_ok = all_ok && sup.classification.clause == Clause::CollinearThroughBoth && w.size() == 1 &&
                     w[0] == x0 && passes_through(f, x0, sup.points);
        }
        s.report("8", cert.actual_delta == 4 && listed && all_ok && cert.violations.empty(),
                 "q=5 C(4,1,1): delta=" + std::to_string(cert.actual_delta) + ", listed support " +
                     (listed ? "found" : "missing") + ", " + std::to_string(cert.supports.size()) +
                     " supports on X=0 through P_0 and P_inf: " + (all_ok ? "yes" : "no"));
    }

    {  // 9
        bool ok = true;
        std::ostringstream detail;
        std::vector<std::string> viol;
        for (const auto& rep : sweeps) {
            std::size_t supports = 0;
            for (const auto& code : rep.codes) supports += code.supports.size();
            detail << (rep.q == 4 ? "" : "; ") << "verify " << rep.q << ": " << rep.codes.size() << " codes, "
                   << supports << " supports, " << rep.unclassified << " unclassified, " << rep.violations.size()
                   << " violations";
            ok = ok && rep.unclassified == 0 && rep.violations.empty() && supports > 0;
            viol.insert(viol.end(), rep.violations.begin(), rep.violations.end());
        }
        if (!viol.empty()) detail << "; " << join(viol, 5);
        s.report("9", ok, detail.str());
    }

    {  // 10
        const HermitianCurve c(make_field(5));
        const Field& f = c.field();
        int total = 0, lifted_equal = 0, raw_equal = 0;
        std::vector<std::string> bad;
        for (int a = 0; a <= 5; ++a)
            for (int b = 0; b <= 5; ++b) {
                if (!(b > 3 || a > 2)) continue;
                const CodeParams p{5, 3, a, b};
                const TwoPointCode orig = build_code(c, p);
                ++total;
                if (codes_equal(f, orig.generator, build_reduced_code_lifted(c, p).generator)) ++lifted_equal;
                else bad.push_back(label(p));
                raw_equal += codes_equal(f, orig.generator, build_reduced_code(c, p).generator);
            }
        s.report("10", lifted_equal == total,
                 "q=5 d=3 reduction: " + std::to_string(lifted_equal) + "/" + std::to_string(total) +
                     " codes_equal after multiplying back the removed tangent lines (" + std::to_string(raw_equal) +
                     "/" + std::to_string(total) + " without)" + (bad.empty() ? "" : "; " + join(bad)));
    }

    {  // 11
        int total = 0, literal_ok = 0, corrected_ok = 0;
        std::vector<std::string> literal_bad, corrected_bad;
        std::set<std::string> h1_positive;
        for (const auto& rep : sweeps) {
            const HermitianCurve c(make_field(rep.q));
            for (const auto& code : rep.codes) {
                const auto& p = code.params;
                const int k = rank(c.field(), build_code(c, p).generator);
                const int literal = (p.d + 2) * (p.d + 1) / 2 - p.a - p.b;
                const int h1 = h0_h1(c, base_scheme(p), p.d).h1;
                ++total;
                if (h1 > 0) h1_positive.insert(label(p));
                if (k == literal) ++literal_ok;
                else literal_bad.push_back(label(p) + " k=" + std::to_string(k) + " vs " + std::to_string(literal));
                if (k == literal + h1 && k == code.dimension) ++corrected_ok;
                else corrected_bad.push_back(label(p));
            }
        }
        // the literal failures must be exactly the codes with h1 > 0
        std::set<std::string> literal_fail_labels;
        for (const auto& x : literal_bad) literal_fail_labels.insert(x.substr(0, x.find(" k=")));
        const bool explained = literal_fail_labels == h1_positive;
        s.report("11", literal_ok == total,
                 "k = (d+2)(d+1)/2 - a - b on " + std::to_string(literal_ok) + "/" + std::to_string(total) +
                     " swept codes" + (literal_bad.empty() ? "" : "; differs: " + join(literal_bad)),
                 explained);
        s.report("11b", corrected_ok == total && explained,
                 "k = (d+2)(d+1)/2 - a - b + h1(I_E(d)) on " + std::to_string(corrected_ok) + "/" +
                     std::to_string(total) + " swept codes; literal failures are exactly the " +
                     std::to_string(h1_positive.size()) + " codes with h1 > 0: " + (explained ? "yes" : "no"));
    }

    std::printf("%s\n", s.unexpected == 0 ? "acceptance: OK" : "acceptance: FAILED");
    return s.unexpected == 0 ? 0 : 1;
}
