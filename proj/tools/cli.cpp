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

#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "hcodes/code.hpp"
#include "hcodes/distance.hpp"
#include "hcodes/park.hpp"
#include "hcodes/plane.hpp"
#include "hcodes/report.hpp"
#include "hcodes/supports.hpp"

namespace hcodes::cli {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitError = 2;

void add_param_flags(CLI::App* sub, RunConfig& cfg) {
    sub->add_option("--q", cfg.q, "Field parameter q (F_{q^2})");
    sub->add_option("--d", cfg.d, "Degree of the plane forms");
    sub->add_option("--a", cfg.a, "Multiplicity at P_inf");
    sub->add_option("--b", cfg.b, "Multiplicity at P_0");
    sub->add_option("--m", cfg.m, "Coefficient of P_inf in L(m P_inf + n P_0)");
    sub->add_option("--n", cfg.n, "Coefficient of P_0 in L(m P_inf + n P_0)");
}

void add_common_flags(CLI::App* sub, RunConfig& cfg) {
    sub->add_option("--out", cfg.out, "Write the report to PATH");
    sub->add_option("--format", cfg.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--jobs", cfg.jobs, "Worker threads for the circuit search")->check(CLI::PositiveNumber);
    sub->add_option("--max-weight", cfg.max_weight, "Override the circuit search cap")->check(CLI::NonNegativeNumber);
}

CodeParams code_params(const RunConfig& cfg) {
    const bool dab = cfg.d.has_value();
    const bool mn = cfg.m.has_value() || cfg.n.has_value();
    if (dab == mn) throw std::invalid_argument("give exactly one of --d/--a/--b or --m/--n");
    if (dab) return {cfg.q, *cfg.d, cfg.a.value_or(0), cfg.b.value_or(0)};
    if (cfg.a || cfg.b) throw std::invalid_argument("give exactly one of --d/--a/--b or --m/--n");
    const auto norm = normalize_params(cfg.m.value_or(0), cfg.n.value_or(0), cfg.q);
    return {cfg.q, norm.d, norm.a, norm.b};
}

int search_cap(const RunConfig& cfg, const Prediction& p) {
    if (cfg.max_weight > 0) return cfg.max_weight;
    const int cap = cfg.q + 2;
    return p.delta ? std::min<int>(static_cast<int>(*p.delta) + 1, cap) : cap;
}

std::pair<int, int> parse_range(const std::string& s, int q) {
    if (s.empty()) return {3, q - 1};
    std::string lo = s, hi = s;
    for (const std::string sep : {"..", "-", ":"}) {
        const auto pos = s.find(sep);
        if (pos != std::string::npos) {
            lo = s.substr(0, pos);
            hi = s.substr(pos + sep.size());
            break;
        }
    }
    try {
        return {std::stoi(lo), std::stoi(hi)};
    } catch (const std::exception&) {
        throw std::invalid_argument("bad --d range: " + s);
    }
}

std::string code_label(const CodeParams& p) {
    return "C(" + std::to_string(p.d) + "," + std::to_string(p.a) + "," + std::to_string(p.b) + ")";
}

struct Output {
    std::ostream& stream;
    std::ofstream file;
    explicit Output(const RunConfig& cfg, std::ostream& fallback) : stream(cfg.out.empty() ? fallback : file) {
        if (!cfg.out.empty()) {
            file.open(cfg.out, std::ios::binary);
            if (!file) throw Error("cannot open output file " + cfg.out);
        }
    }
};

void emit(std::ostream& os, const Json& j) { os << j.dump(2) << '\n'; }

int cmd_points(const RunConfig& cfg, std::ostream& os) {
    const HermitianCurve curve(make_field(cfg.q));
    const Field& f = curve.field();
    if (cfg.format == "json") {
        Json pts = Json::array();
        for (const auto& p : curve.points()) pts.push_back(to_string(f, p));
        emit(os, Json{{"q", cfg.q}, {"field", to_json(f.spec())}, {"count", curve.points().size()}, {"points", pts}});
    } else {
        os << curve.points().size() << '\n';
    }
    return kExitOk;
}

int cmd_normalize(const RunConfig& cfg, std::ostream& os) {
    if (!cfg.m || !cfg.n) throw std::invalid_argument("normalize needs m and n");
    const auto norm = normalize_params(*cfg.m, *cfg.n, cfg.q);
    if (cfg.format == "json")
        emit(os, Json{{"q", cfg.q}, {"m", *cfg.m}, {"n", *cfg.n}, {"d", norm.d}, {"a", norm.a}, {"b", norm.b}});
    else
        os << "(d,a,b)=(" << norm.d << ',' << norm.a << ',' << norm.b << ")\n";
    return kExitOk;
}

int cmd_construct(const RunConfig& cfg, std::ostream& os) {
    const HermitianCurve curve(make_field(cfg.q));
    TwoPointCode code;
    if (cfg.m || cfg.n) {
        if (cfg.d) throw std::invalid_argument("give exactly one of --d/--a/--b or --m/--n");
        code = build_code_mn(curve, cfg.m.value_or(0), cfg.n.value_or(0));
    } else {
        code = build_code(curve, code_params(cfg));
    }
    if (cfg.format == "json")
        emit(os, generator_json(curve.field(), code));
    else
        os << generator_text(curve.field(), code);
    return kExitOk;
}

int cmd_classify(const RunConfig& cfg, std::ostream& os) {
    const CodeParams p = code_params(cfg);
    const Prediction pred = predict(p.d, p.a, p.b, p.q);
    Json j{{"q", p.q}, {"d", p.d}, {"a", p.a}, {"b", p.b}, {"divisor_degree", p.divisor_degree()}};
    j["prediction"] = to_json(pred);
    if (p.d > 2) {
        const Reduction red = reduce_params(p.d, p.a, p.b);
        j["reduction"] = Json{{"r", red.r}, {"d", red.d}, {"a", red.a}, {"b", red.b}};
    }
    Json clauses = Json::array();
    for (Clause c : clause_order(p)) clauses.push_back(to_string(c));
    j["clauses"] = clauses;
    if (cfg.format == "text") {
        os << code_label(p) << " group=" << to_string(pred.group) << " theorem=" << pred.theorem
           << " case=" << pred.park_case << " predicted=";
        if (pred.delta) os << *pred.delta; else os << "none";
        os << '\n';
    } else {
        emit(os, j);
    }
    return kExitOk;
}

int cmd_delta(const RunConfig& cfg, std::ostream& os) {
    const CodeParams p = code_params(cfg);
    const Prediction pred = predict(p.d, p.a, p.b, p.q);
    Json j{{"q", p.q}, {"d", p.d}, {"a", p.a}, {"b", p.b}};
    j["prediction"] = to_json(pred);
    int status = kExitOk;
    std::optional<int> exact, oracle;
    if (cfg.exact || cfg.oracle) {
        const HermitianCurve curve(make_field(p.q));
        const TwoPointCode code = build_code(curve, p);
        const int cap = search_cap(cfg, pred);
        if (cfg.exact) exact = dual_min_distance(curve.field(), code, cap, cfg.jobs);
        if (cfg.oracle) oracle = h1_oracle_distance(curve, code, cap, cfg.jobs);
    }
    bool agree = true;
    if (exact) {
        j["exact_delta"] = *exact;
        if (pred.delta && *pred.delta != *exact) agree = false;
    }
    if (oracle) {
        j["oracle_delta"] = *oracle;
        if (exact && *exact != *oracle) agree = false;
        if (pred.delta && *pred.delta != *oracle) agree = false;
    }
    j["agree"] = agree;
    if (!agree) status = kExitViolation;
    if (cfg.format == "text") {
        os << code_label(p) << " predicted=";
        if (pred.delta) os << *pred.delta; else os << "none";
        if (exact) os << " exact=" << *exact;
        if (oracle) os << " oracle=" << *oracle;
        os << '\n';
    } else {
        emit(os, j);
    }
    return status;
}

int cmd_minwords(const RunConfig& cfg, std::ostream& os) {
    const CodeParams p = code_params(cfg);
    const HermitianCurve curve(make_field(p.q));
    const Field& f = curve.field();
    if (cfg.classify_geometry) {
        CertifyOptions opts;
        opts.jobs = cfg.jobs;
        opts.max_weight = cfg.max_weight;
        const CodeCertificate cert = certify_code(curve, p, opts);
        if (cfg.format == "text") {
            for (const auto& s : cert.supports) {
                for (std::size_t i = 0; i < s.points.size(); ++i) os << (i ? " " : "") << to_string(f, s.points[i]);
                os << " | " << to_string(s.classification.clause);
                for (const auto& w : s.classification.witness) os << " | " << w.to_string(f);
                os << '\n';
            }
        } else {
            emit(os, to_json(f, cert));
        }
        return cert.violations.empty() ? kExitOk : kExitViolation;
    }
    const TwoPointCode code = build_code(curve, p);
    const int delta = dual_min_distance(f, code, search_cap(cfg, predict(p.d, p.a, p.b, p.q)), cfg.jobs);
    const auto circuits = enumerate_min_supports(f, code, delta, cfg.jobs);
    if (cfg.format == "text") {
        os << "delta " << delta << " circuits " << circuits.size() << '\n';
        for (const auto& c : circuits) {
            for (std::size_t i = 0; i < c.support.size(); ++i)
                os << (i ? " " : "") << to_string(f, code.points[c.support[i]]);
            os << " |";
            for (Elem e : c.codeword) os << ' ' << f.to_string(e);
            os << '\n';
        }
    } else {
        emit(os, circuits_json(f, code, delta, circuits));
    }
    return kExitOk;
}

int cmd_reduce(const RunConfig& cfg, std::ostream& os) {
    const CodeParams p = code_params(cfg);
    const HermitianCurve curve(make_field(p.q));
    const Reduction red = reduce_params(p.d, p.a, p.b);
    const TwoPointCode original = build_code(curve, p);
    const TwoPointCode reduced = build_reduced_code(curve, p);
    const TwoPointCode lifted = build_reduced_code_lifted(curve, p);
    const bool same = codes_equal(curve.field(), original.generator, lifted.generator);
    const bool same_raw = codes_equal(curve.field(), original.generator, reduced.generator);
    if (cfg.format == "text") {
        os << code_label(p) << " r=" << red.r << " reduced=" << code_label({p.q, red.d, red.a, red.b})
           << " equal=" << (same ? "yes" : "no") << " equal_unscaled=" << (same_raw ? "yes" : "no") << '\n';
    } else {
        emit(os, Json{{"q", p.q}, {"d", p.d}, {"a", p.a}, {"b", p.b}, {"r", red.r},
                      {"reduced", Json{{"d", red.d}, {"a", red.a}, {"b", red.b}}},
                      {"dimension", original.dimension()}, {"codes_equal", same},
                      {"codes_equal_unscaled", same_raw}});
    }
    return same ? kExitOk : kExitViolation;
}

int cmd_verify(const RunConfig& cfg, std::ostream& os, std::ostream& err) {
    const auto [lo, hi] = parse_range(cfg.d_range, cfg.q);
    if (lo < 3 || hi > cfg.q - 1 || lo > hi)
        throw std::invalid_argument("verify needs 3 <= d <= q-1; got " + std::to_string(lo) + ".." + std::to_string(hi));
    const HermitianCurve curve(make_field(cfg.q));
    CertifyOptions opts;
    opts.jobs = cfg.jobs;
    opts.oracle = cfg.oracle;
    opts.max_weight = cfg.max_weight;
    err << "verify q=" << cfg.q << " d=" << lo << ".." << hi << '\n';
    const VerifyReport rep = verify_theorems(curve, lo, hi, opts);
    err << "codes=" << rep.codes.size() << " mismatches=" << rep.mismatches << " unclassified=" << rep.unclassified
        << " violations=" << rep.violations.size() << '\n';
    if (cfg.format == "csv") {
        os << csv_header() << '\n';
        for (const auto& c : rep.codes) os << csv_row(c) << '\n';
    } else if (cfg.format == "text") {
        for (const auto& c : rep.codes) {
            os << code_label(c.params) << ' ' << to_string(c.prediction.group) << " predicted=";
            if (c.prediction.delta) os << *c.prediction.delta; else os << "none";
            os << " actual=" << c.actual_delta << " supports=" << c.supports.size() << '\n';
        }
        for (const auto& v : rep.violations) os << "violation: " << v << '\n';
    } else {
        emit(os, to_json(curve.field(), rep));
    }
    return rep.ok() ? kExitOk : kExitViolation;
}

int cmd_h1(const RunConfig& cfg, std::ostream& os) {
    if (cfg.t < 1) throw std::invalid_argument("h1 needs --t >= 1");
    const HermitianCurve curve(make_field(cfg.q));
    const Field& f = curve.field();
    const SchemeOnCurve z = parse_divisor(f, cfg.scheme);
    for (const auto& [p, e] : z.terms()) {
        if (e < 0) throw std::invalid_argument("scheme multiplicities must be nonnegative");
        if (!curve.contains(p)) throw std::invalid_argument("point not on the curve: " + to_string(f, p));
    }
    const Cohomology c = h0_h1(curve, z, cfg.t);
    if (cfg.format == "json")
        emit(os, Json{{"q", cfg.q}, {"scheme", z.to_string(f)}, {"t", cfg.t}, {"degree", z.degree()},
                      {"h0", c.h0}, {"h1", c.h1}});
    else
        os << "h0=" << c.h0 << " h1=" << c.h1 << '\n';
    return kExitOk;
}

}  // namespace

std::optional<RunConfig> parse_args(int argc, const char* const* argv, std::ostream& out) {
    RunConfig cfg;
    CLI::App app{"Two-point Hermitian codes: dual distances and minimum-weight supports", "hcodes"};
    app.require_subcommand(1);

    auto* points = app.add_subcommand("points", "Count the rational points of the curve");
    points->add_option("q,--q", cfg.q, "Field parameter q");
    add_common_flags(points, cfg);

    auto* normalize = app.add_subcommand("normalize", "Rewrite L(m P_inf + n P_0) as C(d,a,b)");
    normalize->add_option("q,--q", cfg.q, "Field parameter q");
    normalize->add_option("m,--m", cfg.m);
    normalize->add_option("n,--n", cfg.n);
    add_common_flags(normalize, cfg);

    auto* construct = app.add_subcommand("construct", "Emit the generator matrix");
    auto* classify = app.add_subcommand("classify", "Group, applicable formula and clause order");
    auto* delta = app.add_subcommand("delta", "Predicted dual distance, optionally checked");
    delta->add_flag("--exact", cfg.exact, "Run the exact circuit search");
    delta->add_flag("--oracle", cfg.oracle, "Run the h^1-jump oracle");
    auto* minwords = app.add_subcommand("minwords", "Enumerate minimum-weight dual codewords");
    minwords->add_flag("--classify-geometry", cfg.classify_geometry, "Classify every support");
    auto* reduce = app.add_subcommand("reduce", "Compare with the reduced construction");
    for (auto* sub : {construct, classify, delta, minwords, reduce}) {
        add_param_flags(sub, cfg);
        add_common_flags(sub, cfg);
    }

    auto* verify = app.add_subcommand("verify", "Sweep every code in range and certify it");
    verify->add_option("q,--q", cfg.q, "Field parameter q");
    verify->add_option("--d", cfg.d_range, "Degree or range lo..hi (default 3..q-1)");
    verify->add_flag("--oracle", cfg.oracle, "Also cross-check with the h^1-jump oracle");
    add_common_flags(verify, cfg);

    auto* h1 = app.add_subcommand("h1", "h^0 and h^1 of I_Z(t) for a scheme on the curve");
    h1->add_option("scheme", cfg.scheme, "e.g. \"2*inf + 1*(0, 0)\"")->required();
    h1->add_option("--q", cfg.q);
    h1->add_option("--t", cfg.t, "Form degree")->required();
    add_common_flags(h1, cfg);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return std::nullopt;
    } catch (const CLI::ParseError& e) {
        throw std::invalid_argument(std::string(e.what()) + "\n" + app.help());
    }
    for (auto* sub : app.get_subcommands()) cfg.command = sub->get_name();
    if (cfg.q == 0) throw std::invalid_argument("missing q");
    if (cfg.format.empty()) {
        const bool texty = cfg.command == "points" || cfg.command == "normalize" || cfg.command == "construct" ||
                           cfg.command == "h1";
        cfg.format = texty ? "text" : "json";
    }
    return cfg;
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    field_spec(cfg.q);  // rejects unsupported q before any work
    Output o(cfg, out);
    std::ostream& os = o.stream;
    if (cfg.command == "points") return cmd_points(cfg, os);
    if (cfg.command == "normalize") return cmd_normalize(cfg, os);
    if (cfg.command == "construct") return cmd_construct(cfg, os);
    if (cfg.command == "classify") return cmd_classify(cfg, os);
    if (cfg.command == "delta") return cmd_delta(cfg, os);
    if (cfg.command == "minwords") return cmd_minwords(cfg, os);
    if (cfg.command == "reduce") return cmd_reduce(cfg, os);
    if (cfg.command == "verify") return cmd_verify(cfg, os, err);
    if (cfg.command == "h1") return cmd_h1(cfg, os);
    throw std::invalid_argument("unknown command " + cfg.command);
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    try {
        auto cfg = parse_args(argc, argv, out);
        if (!cfg) return kExitOk;
        return run(*cfg, out, err);
    } catch (const std::invalid_argument& e) {
        err << "hcodes: " << e.what() << '\n';
        return kExitError;
    } catch (const std::exception& e) {
        err << "hcodes: " << e.what() << '\n';
        return kExitError;
    }
}

}  // namespace hcodes::cli
