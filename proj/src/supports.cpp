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

#include "hcodes/supports.hpp"

#include <algorithm>

#include "hcodes/plane.hpp"

namespace hcodes {

namespace {

std::string label(const CodeParams& p) {
    return "C(" + std::to_string(p.d) + "," + std::to_string(p.a) + "," + std::to_string(p.b) + ")";
}

// The point carrying min(a, b) in the theorems' role assignment, and the other one.
CurvePoint small_point(const CodeParams& p) { return p.a <= p.b ? CurvePoint::infinity() : CurvePoint::origin(); }
CurvePoint large_point(const CodeParams& p) { return p.a <= p.b ? CurvePoint::origin() : CurvePoint::infinity(); }

Clause collinear_with(const CurvePoint& p) {
    return p.at_infinity ? Clause::CollinearWithPInf : Clause::CollinearWithP0;
}

// X = 0, the line through P_0 and P_inf.
PlaneForm axis_line() { return PlaneForm::line(Field::one(), Field::zero(), Field::zero()); }

std::optional<PlaneForm> common_line(const HermitianCurve& curve, std::vector<CurvePoint> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.empty()) return std::nullopt;
    if (pts.size() == 1) {
        const CurvePoint other = pts[0].at_infinity ? CurvePoint::origin() : CurvePoint::infinity();
        return curve.line_through(pts[0], other);
    }
    const PlaneForm line = curve.line_through(pts[0], pts[1]);
    if (!passes_through(curve.field(), line, pts)) return std::nullopt;
    return line;
}

std::optional<PlaneForm> least_form_without_line(const HermitianCurve& curve, const SchemeOnCurve& z, int t) {
    const Field& f = curve.field();
    for (const auto& form : projective_forms(f, forms_through(curve, z, t))) {
        if (curve.vanishes_on_curve(form)) continue;
        if (!linear_factor(f, form)) return form;
    }
    return std::nullopt;
}

SchemeOnCurve tangency_scheme() {
    SchemeOnCurve z;
    z.add(CurvePoint::infinity(), 2);
    z.add(CurvePoint::origin(), 2);
    return z;
}

std::optional<SupportClassification> try_clause(const HermitianCurve& curve, const std::vector<CurvePoint>& s,
                                                const CodeParams& params, Clause c) {
    const Field& f = curve.field();
    SupportClassification out;
    out.clause = c;
    switch (c) {
        case Clause::Collinear: {
            auto line = common_line(curve, s);
            if (!line) return std::nullopt;
            out.witness = {*line};
            return out;
        }
        case Clause::CollinearWithPInf:
        case Clause::CollinearWithP0: {
            const CurvePoint p = c == Clause::CollinearWithPInf ? CurvePoint::infinity() : CurvePoint::origin();
            auto pts = s;
            pts.push_back(p);
            auto line = common_line(curve, pts);
            if (!line) return std::nullopt;
            out.witness = {*line};
            out.named_points = {p};
            return out;
        }
        case Clause::CollinearThroughBoth: {
            const PlaneForm line = axis_line();
            if (!passes_through(f, line, s)) return std::nullopt;
            out.witness = {line};
            out.named_points = {CurvePoint::infinity(), CurvePoint::origin()};
            return out;
        }
        case Clause::LineUnionTangentConic: {
            const PlaneForm line = axis_line();
            SchemeOnCurve z = tangency_scheme();
            for (const auto& p : s)
                if (!passes_through(f, line, {p})) z.add(p, 1);
            auto conic = least_form_without_line(curve, z, 2);
            if (!conic) return std::nullopt;
            out.witness = {line, *conic};
            out.named_points = {CurvePoint::infinity(), CurvePoint::origin()};
            out.tangency_points = out.named_points;
            return out;
        }
        case Clause::IrreducibleTangentCubic: {
            SchemeOnCurve z = tangency_scheme();
            for (const auto& p : s) z.add(p, 1);
            auto cubic = least_form_without_line(curve, z, 3);
            if (!cubic) return std::nullopt;
            out.witness = {*cubic};
            out.named_points = {CurvePoint::infinity(), CurvePoint::origin()};
            out.tangency_points = out.named_points;
            return out;
        }
        case Clause::Unclassified:
            break;
    }
    (void)params;
    return std::nullopt;
}

}  // namespace

std::string to_string(Clause c) {
    switch (c) {
        case Clause::Collinear: return "Collinear";
        case Clause::CollinearWithPInf: return "CollinearWithPInf";
        case Clause::CollinearWithP0: return "CollinearWithP0";
        case Clause::CollinearThroughBoth: return "CollinearThroughBoth";
        case Clause::LineUnionTangentConic: return "LineUnionTangentConic";
        case Clause::IrreducibleTangentCubic: return "IrreducibleTangentCubic";
        case Clause::Unclassified: return "Unclassified";
    }
    return "Unclassified";
}

std::vector<Clause> clause_order(const CodeParams& params) {
    const int q = params.q;
    const int d = params.d;
    const int lo = std::min(params.a, params.b);
    const int hi = std::max(params.a, params.b);
    if (hi == 0 || d <= 2) return {};
    const Group g = classify_group(d, params.a, params.b, q);
    switch (g) {
        case Group::G1: {
            const int r = reduce_params(d, params.a, params.b).r;
            if (lo != 0) {
                if (r == 1) return {collinear_with(small_point(params))};
                if (r == 2 && d == 3)
                    return {Clause::Collinear, Clause::LineUnionTangentConic, Clause::IrreducibleTangentCubic};
                return {Clause::Collinear};
            }
            if (r == 2) return {collinear_with(large_point(params))};
            return {Clause::Collinear};
        }
        case Group::G2:
            return {Clause::CollinearThroughBoth, collinear_with(small_point(params)),
                    collinear_with(large_point(params))};
        case Group::G3:
            if (hi <= q - 1) return {collinear_with(large_point(params))};
            return {Clause::Collinear};
        case Group::HighDegree:
        case Group::Degenerate:
            break;
    }
    return {};
}

SupportClassification classify_support(const HermitianCurve& curve, const std::vector<CurvePoint>& support,
                                       const CodeParams& params) {
    for (Clause c : clause_order(params))
        if (auto cls = try_clause(curve, support, params, c)) return *cls;
    return {};
}

std::string check_classification(const HermitianCurve& curve, const std::vector<CurvePoint>& support,
                                 const SupportClassification& cls) {
    const Field& f = curve.field();
    if (cls.clause == Clause::Unclassified) return "unclassified";
    if (cls.witness.empty()) return "missing witness";
    for (const auto& w : cls.witness)
        if (!passes_through(f, w, cls.named_points)) return "witness misses a named base point";
    for (const auto& p : support) {
        bool on = false;
        for (const auto& w : cls.witness) on = on || passes_through(f, w, {p});
        if (!on) return "witness misses support point " + to_string(f, p);
    }
    if (cls.tangency_points.empty()) return {};
    const PlaneForm& curved = cls.witness.back();
    if (linear_factor(f, curved)) return "witness component has a linear factor";
    for (const auto& p : cls.tangency_points)
        if (curve.valuation(curved, p) < 2) return "witness not tangent at " + to_string(f, p);
    return {};
}

std::map<std::string, int> CodeCertificate::clause_counts() const {
    std::map<std::string, int> out;
    for (const auto& s : supports) ++out[to_string(s.classification.clause)];
    return out;
}

CodeCertificate certify_code(const HermitianCurve& curve, const CodeParams& params, const CertifyOptions& opts) {
    const Field& f = curve.field();
    CodeCertificate cert;
    cert.params = params;
    cert.prediction = predict(params.d, params.a, params.b, params.q);
    const int cap = params.q + 2;
    int w_max = opts.max_weight;
    if (w_max <= 0) w_max = cert.prediction.delta ? std::min<int>(static_cast<int>(*cert.prediction.delta) + 1, cap) : cap;
    const TwoPointCode code = build_code(curve, params);
    cert.dimension = code.dimension();
    try {
        cert.actual_delta = dual_min_distance(f, code, w_max, opts.jobs);
    } catch (const Error& e) {
        cert.violations.push_back(label(params) + ": " + e.what());
        return cert;
    }
    if (cert.prediction.delta && *cert.prediction.delta != cert.actual_delta)
        cert.violations.push_back(label(params) + ": predicted delta " + std::to_string(*cert.prediction.delta) +
                                  " but exact delta " + std::to_string(cert.actual_delta));
    if (opts.oracle) {
        try {
            cert.oracle_delta = h1_oracle_distance(curve, code, w_max, opts.jobs);
            if (*cert.oracle_delta != cert.actual_delta)
                cert.violations.push_back(label(params) + ": h1 oracle gives " + std::to_string(*cert.oracle_delta));
        } catch (const Error& e) {
            cert.violations.push_back(label(params) + ": h1 oracle " + e.what());
        }
    }
    const bool classify = opts.classify && !clause_order(params).empty();
    for (auto& circuit : enumerate_min_supports(f, code, cert.actual_delta, opts.jobs)) {
        SupportRecord rec;
        for (int i : circuit.support) rec.points.push_back(code.points[i]);
        rec.circuit = std::move(circuit);
        if (classify) {
            rec.classification = classify_support(curve, rec.points, params);
            const std::string why = check_classification(curve, rec.points, rec.classification);
            if (!why.empty()) {
                std::string pts;
                for (const auto& p : rec.points) pts += (pts.empty() ? "" : " ") + to_string(f, p);
                cert.violations.push_back(label(params) + ": support {" + pts + "} " + why);
            }
        }
        cert.supports.push_back(std::move(rec));
    }
    return cert;
}

VerifyReport verify_theorems(const HermitianCurve& curve, int d_lo, int d_hi, const CertifyOptions& opts) {
    VerifyReport rep;
    rep.q = curve.q();
    const int q = curve.q();
    for (int d = d_lo; d <= d_hi; ++d) {
        for (int a = 0; a <= q; ++a) {
            for (int b = 1; b <= q; ++b) {
                const CodeParams params{q, d, a, b};
                CodeCertificate cert = certify_code(curve, params, opts);
                if (!cert.prediction.delta) rep.uncovered.push_back(params);
                else if (cert.actual_delta != 0 && *cert.prediction.delta != cert.actual_delta) ++rep.mismatches;
                for (const auto& s : cert.supports) {
                    if (!opts.classify || clause_order(params).empty()) continue;
                    ++rep.clause_counts[to_string(s.classification.clause)];
                    if (s.classification.clause == Clause::Unclassified) ++rep.unclassified;
                }
                if (opts.classify && clause_order(params).empty())
                    cert.violations.push_back(label(params) + ": no classification theorem applies");
                rep.violations.insert(rep.violations.end(), cert.violations.begin(), cert.violations.end());
                rep.codes.push_back(std::move(cert));
            }
        }
    }
    return rep;
}

}  // namespace hcodes
