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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hcodes/code.hpp"
#include "hcodes/distance.hpp"
#include "hcodes/park.hpp"
#include "hcodes/plane.hpp"
#include "hcodes/report.hpp"
#include "hcodes/supports.hpp"

namespace py = pybind11;
using namespace hcodes;

namespace {

int search_cap(const CodeParams& p, int max_weight) {
    if (max_weight > 0) return max_weight;
    const auto pred = predicted_delta(p.d, p.a, p.b, p.q);
    return pred ? std::min<int>(static_cast<int>(*pred) + 1, p.q + 2) : p.q + 2;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "hcodes C++ core";
    py::register_exception<Error>(m, "HcodesError", PyExc_ValueError);

    m.def("points", [](int q) {
        const auto f = make_field(q);
        std::vector<std::string> out;
        for (const auto& p : enumerate_points(*f)) out.push_back(to_string(*f, p));
        return out;
    });
    m.def("normalize", [](long mm, long n, int q) {
        const auto r = normalize_params(mm, n, q);
        return std::tuple{r.d, r.a, r.b};
    });
    m.def("predict_json", [](int q, int d, int a, int b) { return to_json(predict(d, a, b, q)).dump(); });
    m.def("generator_json", [](int q, int d, int a, int b) {
        const HermitianCurve c(make_field(q));
        return generator_json(c.field(), build_code(c, {q, d, a, b})).dump();
    });
    m.def("dual_min_distance", [](int q, int d, int a, int b, int max_weight, int jobs) {
        py::gil_scoped_release release;
        const HermitianCurve c(make_field(q));
        const CodeParams p{q, d, a, b};
        return dual_min_distance(c.field(), build_code(c, p), search_cap(p, max_weight), jobs);
    });
    m.def("h1_oracle_distance", [](int q, int d, int a, int b, int max_weight, int jobs) {
        py::gil_scoped_release release;
        const HermitianCurve c(make_field(q));
        const CodeParams p{q, d, a, b};
        return h1_oracle_distance(c, build_code(c, p), search_cap(p, max_weight), jobs);
    });
    m.def("certify_json", [](int q, int d, int a, int b, bool oracle, int jobs) {
        py::gil_scoped_release release;
        const HermitianCurve c(make_field(q));
        CertifyOptions opts;
        opts.oracle = oracle;
        opts.jobs = jobs;
        return to_json(c.field(), certify_code(c, {q, d, a, b}, opts)).dump();
    });
    m.def("verify_json", [](int q, int d_lo, int d_hi, bool oracle, int jobs) {
        py::gil_scoped_release release;
        const HermitianCurve c(make_field(q));
        CertifyOptions opts;
        opts.oracle = oracle;
        opts.jobs = jobs;
        return to_json(c.field(), verify_theorems(c, d_lo, d_hi, opts)).dump();
    });
    m.def("h1", [](int q, const std::string& scheme, int t) {
        const HermitianCurve c(make_field(q));
        const auto h = h0_h1(c, parse_divisor(c.field(), scheme), t);
        return std::tuple{h.h0, h.h1};
    });
}
