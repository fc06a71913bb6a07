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

#ifndef HCODES_REPORT_HPP
#define HCODES_REPORT_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "hcodes/code.hpp"
#include "hcodes/distance.hpp"
#include "hcodes/park.hpp"
#include "hcodes/supports.hpp"

namespace hcodes {

using Json = nlohmann::ordered_json;

Json to_json(const FieldSpec& spec);

/// Header "q d a b k n", then one row per basis element.
std::string generator_text(const Field& f, const TwoPointCode& code);
/// Same content with exponent integers (-1 for zero).
Json generator_json(const Field& f, const TwoPointCode& code);

Json to_json(const Prediction& p);
Json circuits_json(const Field& f, const TwoPointCode& code, int delta, const std::vector<Circuit>& circuits);
Json to_json(const Field& f, const SupportClassification& c);
Json to_json(const Field& f, const CodeCertificate& cert);
Json to_json(const Field& f, const VerifyReport& rep);

/// Header q,d,a,b,group,park_case,predicted,actual,num_min_supports,clauses.
std::string csv_header();
std::string csv_row(const CodeCertificate& cert);

}  // namespace hcodes

#endif  // HCODES_REPORT_HPP
