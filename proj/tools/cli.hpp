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

#ifndef HCODES_TOOLS_CLI_HPP
#define HCODES_TOOLS_CLI_HPP

#include <optional>
#include <ostream>
#include <string>

namespace hcodes::cli {

struct RunConfig {
    std::string command;
    int q = 0;
    std::optional<int> d, a, b;
    std::optional<long> m, n;
    std::string out;  // empty: standard output
    std::string format;  // json | csv | text; empty picks the command default
    int jobs = 1;
    int max_weight = 0;
    bool exact = false;
    bool oracle = false;
    bool classify_geometry = false;
    std::string d_range;  // verify: "3", "3..4" or "3-4"
    std::string scheme;  // h1
    int t = 0;  // h1 form degree
};

/// Parses argv; throws std::invalid_argument with a usage message on error.
/// Returns std::nullopt when help was requested (text already written to `out`).
std::optional<RunConfig> parse_args(int argc, const char* const* argv, std::ostream& out);

/// Executes one command. Data goes to `out` (or the --out file), progress to `err`.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// parse_args + run with error reporting; the process entry point.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hcodes::cli

#endif  // HCODES_TOOLS_CLI_HPP
