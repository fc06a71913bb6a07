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

#ifndef HCODES_SUPPORTS_HPP
#define HCODES_SUPPORTS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hcodes/code.hpp"
#include "hcodes/curve.hpp"
#include "hcodes/distance.hpp"
#include "hcodes/form.hpp"
#include "hcodes/park.hpp"

namespace hcodes {

enum class Clause {
    Collinear,
    CollinearWithPInf,
    CollinearWithP0,
    CollinearThroughBoth,
    LineUnionTangentConic,
    IrreducibleTangentCubic,
    Unclassified,
};

std::string to_string(Clause c);

struct SupportClassification {
    Clause clause = Clause::Unclassified;
    /// The line; or the line X = 0 followed by the conic; or the cubic.
    std::vector<PlaneForm> witness;
    /// Base points the clause puts on the witness.
    std::vector<CurvePoint> named_points;
    /// Points where the clause requires tangency to X.
    std::vector<CurvePoint> tangency_points;
};

/// Clauses tried for a code, in order. Point names are physical: when a > b the
/// theorem's roles of P_inf and P_0 are exchanged before naming the clause.
std::vector<Clause> clause_order(const CodeParams& params);

/// First clause of clause_order(params) with a witness; Unclassified otherwise.
SupportClassification classify_support(const HermitianCurve& curve, const std::vector<CurvePoint>& support,
                                       const CodeParams& params);

/// Re-evaluates the witness on the support and named points and checks tangency
/// valuations; empty string when consistent, else a description.
std::string check_classification(const HermitianCurve& curve, const std::vector<CurvePoint>& support,
                                 const SupportClassification& cls);

struct SupportRecord {
    Circuit circuit;
    std::vector<CurvePoint> points;
    SupportClassification classification;
};

struct CodeCertificate {
    CodeParams params;
    Prediction prediction;
    int actual_delta = 0;
    std::optional<int> oracle_delta;
    int dimension = 0;
    std::vector<SupportRecord> supports;
    std::vector<std::string> violations;

    /// Clause name -> number of supports.
    std::map<std::string, int> clause_counts() const;
};

struct CertifyOptions {
    int jobs = 1;
    bool oracle = false;  // also run h1_oracle_distance
    bool classify = true;
    int max_weight = 0;  // 0: predicted delta + 1, capped at q + 2
};

CodeCertificate certify_code(const HermitianCurve& curve, const CodeParams& params, const CertifyOptions& opts);

struct VerifyReport {
    int q = 0;
    std::vector<CodeCertificate> codes;
    std::vector<std::string> violations;
    /// Codes whose prediction had no covered formula case.
    std::vector<CodeParams> uncovered;
    std::map<std::string, int> clause_counts;
    int mismatches = 0;
    int unclassified = 0;

    bool ok() const { return violations.empty(); }
};

/// Every (d, a, b) with d in [d_lo, d_hi], 0 <= a <= q, 1 <= b <= q.
VerifyReport verify_theorems(const HermitianCurve& curve, int d_lo, int d_hi, const CertifyOptions& opts);

}  // namespace hcodes

#endif  // HCODES_SUPPORTS_HPP
