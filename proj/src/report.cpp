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

#include "hcodes/report.hpp"

#include <sstream>

namespace hcodes {

Json to_json(const FieldSpec& spec) { return Json{{"p", spec.p}, {"e", spec.e}, {"modulus", spec.modulus}}; }

std::string generator_text(const Field& f, const TwoPointCode& code) {
    const auto& p = code.params;
    std::ostringstream os;
    os << p.q << ' ' << p.d << ' ' << p.a << ' ' << p.b << ' ' << code.dimension() << ' ' << code.length() << '\n';
    for (int r = 0; r < code.generator.rows(); ++r) {
        for (int c = 0; c < code.generator.cols(); ++c) {
            if (c) os << ' ';
            os << f.to_string(code.generator(r, c));
        }
        os << '\n';
    }
    return os.str();
}

Json generator_json(const Field& f, const TwoPointCode& code) {
    const auto& p = code.params;
    Json rows = Json::array();
    for (int r = 0; r < code.generator.rows(); ++r) {
        Json row = Json::array();
        for (int c = 0; c < code.generator.cols(); ++c) row.push_back(f.exponent(code.generator(r, c)));
        rows.push_back(std::move(row));
    }
    Json basis = Json::array();
    for (const auto& [i, j] : code.basis) basis.push_back({i, j});
    return Json{{"q", p.q}, {"d", p.d}, {"a", p.a}, {"b", p.b}, {"k", code.dimension()},
                {"n", code.length()}, {"basis", basis}, {"rows", rows}};
}

Json to_json(const Prediction& p) {
    Json out{{"group", to_string(p.group)},
             {"swapped", p.swapped},
             {"theorem", p.theorem},
             {"case", p.park_case},
             {"m", p.m},
             {"n", p.n},
             {"hypothesis_a", p.hypotheses.a},
             {"hypothesis_b", p.hypotheses.b}};
    out["predicted_delta"] = p.delta ? Json(*p.delta) : Json(nullptr);
    return out;
}

namespace {

Json points_json(const Field& f, const std::vector<CurvePoint>& pts) {
    Json out = Json::array();
    for (const auto& p : pts) out.push_back(to_string(f, p));
    return out;
}

Json elems_json(const Field& f, const std::vector<Elem>& v) {
    Json out = Json::array();
    for (Elem e : v) out.push_back(f.to_string(e));
    return out;
}

}  // namespace

Json circuits_json(const Field& f, const TwoPointCode& code, int delta, const std::vector<Circuit>& circuits) {
    Json list = Json::array();
    for (const auto& c : circuits) {
        std::vector<CurvePoint> pts;
        for (int i : c.support) pts.push_back(code.points[i]);
        list.push_back(Json{{"support_indices", c.support},
                            {"support_points", points_json(f, pts)},
                            {"codeword", elems_json(f, c.codeword)}});
    }
    return Json{{"delta", delta}, {"circuits", list}};
}

Json to_json(const Field& f, const SupportClassification& c) {
    Json w = Json::array();
    for (const auto& form : c.witness) w.push_back(form.to_string(f));
    return Json{{"clause", to_string(c.clause)}, {"witness", w}};
}

Json to_json(const Field& f, const CodeCertificate& cert) {
    const auto& p = cert.params;
    Json supports = Json::array();
    for (const auto& s : cert.supports) {
        Json entry{{"points", points_json(f, s.points)}, {"codeword", elems_json(f, s.circuit.codeword)}};
        const Json cls = to_json(f, s.classification);
        entry["clause"] = cls["clause"];
        entry["witness"] = cls["witness"];
        supports.push_back(std::move(entry));
    }
    Json out{{"q", p.q}, {"d", p.d}, {"a", p.a}, {"b", p.b}, {"group", to_string(cert.prediction.group)}};
    out["predicted_delta"] = cert.prediction.delta ? Json(*cert.prediction.delta) : Json(nullptr);
    out["actual_delta"] = cert.actual_delta;
    out["park_case"] = cert.prediction.park_case;
    if (cert.oracle_delta) out["oracle_delta"] = *cert.oracle_delta;
    out["dimension"] = cert.dimension;
    out["supports"] = supports;
    out["violations"] = cert.violations;
    return out;
}

Json to_json(const Field& f, const VerifyReport& rep) {
    Json codes = Json::array();
    for (const auto& c : rep.codes) codes.push_back(to_json(f, c));
    Json uncovered = Json::array();
    for (const auto& p : rep.uncovered) uncovered.push_back({p.d, p.a, p.b});
    return Json{{"q", rep.q},
                {"codes", codes},
                {"clause_counts", rep.clause_counts},
                {"mismatches", rep.mismatches},
                {"unclassified", rep.unclassified},
                {"uncovered", uncovered},
                {"violations", rep.violations}};
}

std::string csv_header() { return "q,d,a,b,group,park_case,predicted,actual,num_min_supports,clauses"; }

std::string csv_row(const CodeCertificate& cert) {
    const auto& p = cert.params;
    std::ostringstream os;
    os << p.q << ',' << p.d << ',' << p.a << ',' << p.b << ',' << to_string(cert.prediction.group) << ','
       << cert.prediction.park_case << ',';
    if (cert.prediction.delta) os << *cert.prediction.delta;
    os << ',' << cert.actual_delta << ',' << cert.supports.size() << ',';
    bool first = true;
    for (const auto& [name, count] : cert.clause_counts()) {
        if (!first) os << ';';
        first = false;
        os << name << ':' << count;
    }
    return os.str();
}

}  // namespace hcodes
