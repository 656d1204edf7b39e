// Copyright 2026 The qbound developers

// Licensed under the Apache License, Version 2.0 (the License);
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

// http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an AS IS BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "qbound/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace qbound::io {

using ordered_json = nlohmann::ordered_json;

std::string format_double(double value) {
    if (!std::isfinite(value)) {
        throw ConsistencyError("format_double: non-finite value in a report");
    }
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

namespace {

void dump_canonical(const ordered_json& j, std::string& out, int indent) {
    const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    const std::string pad_in(static_cast<std::size_t>(indent + 1) * 2, ' ');
    switch (j.type()) {
        case ordered_json::value_t::object: {
            if (j.empty()) {
                out += "{}";
                return;
            }
            out += "{\n";
            std::size_t k = 0;
            for (auto it = j.begin(); it != j.end(); ++it, ++k) {
                out += pad_in;
                out += ordered_json(it.key()).dump(); // escaped key
                out += ": ";
                dump_canonical(it.value(), out, indent + 1);
                if (k + 1 < j.size()) out += ",";
                out += "\n";
            }
            out += pad + "}";
            return;
        }
        case ordered_json::value_t::array: {
            if (j.empty()) {
                out += "[]";
                return;
            }
            out += "[\n";
            for (std::size_t k = 0; k < j.size(); ++k) {
                out += pad_in;
                dump_canonical(j[k], out, indent + 1);
                if (k + 1 < j.size()) out += ",";
                out += "\n";
            }
            out += pad + "]";
            return;
        }
        case ordered_json::value_t::number_float:
            out += format_double(j.get<double>());
            return;
        default:
            out += j.dump(); // integers, booleans, strings, null
            return;
    }
}

std::string dump_document(const ordered_json& j) {
    std::string out;
    dump_canonical(j, out, 0);
    out += "\n";
    return out;
}

ordered_json suite_to_ojson(const bounds::BoundSuiteReport& r) {
    ordered_json j;
    j["dim"] = r.dim;
    j["lhs_sum"] = r.lhs_sum;
    j["hr"] = ordered_json{{"lhs_product", r.hr.lhs_product}, {"rhs", r.hr.rhs},
                           {"slack", r.hr.slack}};
    j["mp1_plus"] = r.mp1_plus;
    j["mp1_minus"] = r.mp1_minus;
    j["mp1_best"] = r.mp1_best;
    j["mp2"] = r.mp2;
    j["m12a"] = r.m12a;
    j["max_bound"] = r.max_bound;
    j["self_referential"] = r.self_referential;
    j["slacks"] = ordered_json{{"mp1_plus", r.slacks.mp1_plus},
                               {"mp1_minus", r.slacks.mp1_minus},
                               {"mp1_best", r.slacks.mp1_best},
                               {"mp2", r.slacks.mp2},
                               {"m12a", r.slacks.m12a}};
    return j;
}

ordered_json quantiles_to_ojson(const sampler::Quantiles& q) {
    return ordered_json{{"min", q.min}, {"median", q.median}, {"max", q.max}};
}

const char* kScanCsvHeader =
    "sample_index,dim,lhs_sum,hr_lhs,hr_rhs,hr_slack,mp1_plus,mp1_minus,mp1_best,mp2,m12a,"
    "max_bound,slack_mp1_plus,slack_mp1_minus,slack_mp1_best,slack_mp2,slack_m12a,"
    "self_referential";

void append_suite_csv_fields(std::string& out, const bounds::BoundSuiteReport& r) {
    out += std::to_string(r.dim);
    out += ',';
    for (double v : {r.lhs_sum, r.hr.lhs_product, r.hr.rhs, r.hr.slack, r.mp1_plus, r.mp1_minus,
                     r.mp1_best, r.mp2, r.m12a, r.max_bound, r.slacks.mp1_plus,
                     r.slacks.mp1_minus, r.slacks.mp1_best, r.slacks.mp2, r.slacks.m12a}) {
        out += format_double(v);
        out += ',';
    }
    out += r.self_referential ? '1' : '0';
}

}  // namespace

std::string to_json(const bounds::BoundSuiteReport& report) {
    return dump_document(suite_to_ojson(report));
}

bounds::BoundSuiteReport suite_report_from_json(const std::string& text) {
    const ordered_json j = ordered_json::parse(text);
    bounds::BoundSuiteReport r;
    r.dim = j.at("dim").get<std::size_t>();
    r.lhs_sum = j.at("lhs_sum").get<double>();
    const auto& hr = j.at("hr");
    r.hr = {hr.at("lhs_product").get<double>(), hr.at("rhs").get<double>(),
            hr.at("slack").get<double>()};
    r.mp1_plus = j.at("mp1_plus").get<double>();
    r.mp1_minus = j.at("mp1_minus").get<double>();
    r.mp1_best = j.at("mp1_best").get<double>();
    r.mp2 = j.at("mp2").get<double>();
    r.m12a = j.at("m12a").get<double>();
    r.max_bound = j.at("max_bound").get<double>();
    r.self_referential = j.at("self_referential").get<bool>();
    const auto& s = j.at("slacks");
    r.slacks = {s.at("mp1_plus").get<double>(), s.at("mp1_minus").get<double>(),
                s.at("mp1_best").get<double>(), s.at("mp2").get<double>(),
                s.at("m12a").get<double>()};
    return r;
}

std::string to_json(const quantum::StateVector& state) {
    ordered_json j;
    j["dim"] = state.dim();
    ordered_json entries = ordered_json::array();
    for (std::size_t i = 0; i < state.dim(); ++i) {
        entries.push_back(ordered_json::array(
            {state.vec()[i].real(), state.vec()[i].imag()}));
    }
    j["vector"] = entries;
    return dump_document(j);
}

std::string to_json(const scenarios::ScenarioResult& result) {
    ordered_json j;
    j["name"] = result.name;
    j["verdict"] = result.verdict;
    ordered_json checks = ordered_json::array();
    for (const auto& c : result.checks) {
        checks.push_back(ordered_json{{"label", c.label},
                                      {"computed", c.computed},
                                      {"relation", c.relation},
                                      {"expected", c.expected},
                                      {"tolerance", c.tolerance},
                                      {"pass", c.pass}});
    }
    j["checks"] = checks;
    j["warnings"] = result.warnings;
    j["summary"] = result.summary;
    return dump_document(j);
}

std::string to_json(const sampler::TightnessStats& stats) {
    ordered_json j;
    j["kind"] = "haar";
    j["config"] = ordered_json{{"dim", stats.config.dim},
                               {"n_samples", stats.config.n_samples},
                               {"seed", stats.config.seed}};
    j["quantiles"] = ordered_json{
        {"hr", quantiles_to_ojson(stats.q_hr)},
        {"mp1_plus", quantiles_to_ojson(stats.q_mp1_plus)},
        {"mp1_minus", quantiles_to_ojson(stats.q_mp1_minus)},
        {"mp1_best", quantiles_to_ojson(stats.q_mp1_best)},
        {"mp2", quantiles_to_ojson(stats.q_mp2)},
        {"m12a", quantiles_to_ojson(stats.q_m12a)}};
    j["hr_zero_m12a_positive_count"] = stats.hr_zero_m12a_positive_count;
    j["validity_violations"] = stats.validity_violations;
    return dump_document(j);
}

std::string approach_summary_json(const ApproachMeta& meta,
                                  const std::vector<sampler::ApproachStep>& steps) {
    const auto& first = steps.front();
    const auto& last = steps.back();
    ordered_json j;
    j["kind"] = "approach";
    j["config"] = ordered_json{{"dim", meta.dim},
                               {"eig_index", meta.eig_index},
                               {"n_steps", meta.n_steps},
                               {"seed", meta.seed}};
    j["start"] = ordered_json{{"t", first.t},
                              {"self_referential", first.report.self_referential},
                              {"mp2_over_lhs", first.report.mp2 / first.report.lhs_sum}};
    j["endpoint"] = ordered_json{{"t", last.t},
                                 {"hr_rhs", last.report.hr.rhs},
                                 {"mp2_over_lhs", last.report.mp2 / last.report.lhs_sum},
                                 {"self_referential", last.report.self_referential}};
    return dump_document(j);
}

std::string canonical_json_reemit(const std::string& text) {
    return dump_document(ordered_json::parse(text));
}

std::string to_text(const bounds::BoundSuiteReport& r) {
    std::ostringstream out;
    out << "dim              " << r.dim << "\n"
        << "lhs_sum          " << format_double(r.lhs_sum) << "\n"
        << "hr: lhs_product  " << format_double(r.hr.lhs_product) << "\n"
        << "hr: rhs          " << format_double(r.hr.rhs) << "\n"
        << "hr: slack        " << format_double(r.hr.slack) << "\n"
        << "mp1_plus         " << format_double(r.mp1_plus) << "\n"
        << "mp1_minus        " << format_double(r.mp1_minus) << "\n"
        << "mp1_best         " << format_double(r.mp1_best) << "\n"
        << "mp2              " << format_double(r.mp2) << "\n"
        << "m12a             " << format_double(r.m12a) << "\n"
        << "max_bound        " << format_double(r.max_bound) << "\n"
        << "self_referential " << (r.self_referential ? "true" : "false") << "\n";
    return out.str();
}

std::string to_text(const scenarios::ScenarioResult& r) {
    std::ostringstream out;
    out << "scenario: " << r.name << "\n";
    for (const auto& c : r.checks) {
        out << (c.pass ? "  [pass] " : "  [FAIL] ") << c.label << ": " << format_double(c.computed)
            << " " << c.relation << " " << format_double(c.expected) << " (tol "
            << format_double(c.tolerance) << ")\n";
    }
    for (const auto& w : r.warnings) out << "  [warn] " << w << "\n";
    out << "  summary: " << r.summary << "\n";
    out << "verdict: " << (r.verdict ? "pass" : "fail") << "\n";
    return out.str();
}

std::string check_csv(const bounds::BoundSuiteReport& report) {
    std::string out = "# qbound check csv v1\n";
    out += "dim,lhs_sum,hr_lhs,hr_rhs,hr_slack,mp1_plus,mp1_minus,mp1_best,mp2,m12a,max_bound,"
           "slack_mp1_plus,slack_mp1_minus,slack_mp1_best,slack_mp2,slack_m12a,self_referential\n";
    append_suite_csv_fields(out, report);
    out += '\n';
    return out;
}

std::string scan_csv(const std::vector<bounds::BoundSuiteReport>& reports) {
    std::string out = "# qbound scan csv v1\n";
    out += kScanCsvHeader;
    out += '\n';
    for (std::size_t i = 0; i < reports.size(); ++i) {
        out += std::to_string(i);
        out += ',';
        append_suite_csv_fields(out, reports[i]);
        out += '\n';
    }
    return out;
}

std::string approach_csv(const std::vector<sampler::ApproachStep>& steps) {
    std::string out = "# qbound approach csv v1\n";
    out += "step_index,t,dim,lhs_sum,hr_lhs,hr_rhs,hr_slack,mp1_plus,mp1_minus,mp1_best,mp2,m12a,"
           "max_bound,slack_mp1_plus,slack_mp1_minus,slack_mp1_best,slack_mp2,slack_m12a,"
           "self_referential,mp2_over_lhs\n";
    for (std::size_t i = 0; i < steps.size(); ++i) {
        out += std::to_string(i);
        out += ',';
        out += format_double(steps[i].t);
        out += ',';
        append_suite_csv_fields(out, steps[i].report);
        out += ',';
        const auto& r = steps[i].report;
        out += format_double(r.lhs_sum > 0.0 ? r.mp2 / r.lhs_sum : 0.0);
        out += '\n';
    }
    return out;
}

}  // namespace qbound::io
