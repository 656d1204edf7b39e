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

// qbound CLI. Exit codes are a stable contract:
//   0  success
//   1  input error (flags, files, schema validation)
//   2  invariant violation (a bound or identity failed beyond tolerance)
//   3  counterexample search exhausted its starts

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "qbound/problem.hpp"
#include "qbound/serialize.hpp"
#include "selftest.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kInvariantViolation = 2;
constexpr int kNotFound = 3;

constexpr std::uint64_t kDefaultSeed = 42;

using qbound::io::ProblemSpec;

std::uint64_t default_seed() {
    const char* env = std::getenv("QBOUND_SEED");
    if (env == nullptr || *env == '\0') return kDefaultSeed;
    char* end = nullptr;
    const unsigned long long value = std::strtoull(env, &end, 10);
    if (end == nullptr || *end != '\0') {
        throw qbound::ValidationError(std::string("QBOUND_SEED is not an integer: ") + env);
    }
    return value;
}

ProblemSpec resolve_problem(const std::string& arg) {
    for (const auto& name : qbound::io::builtin_problem_names()) {
        if (arg == name) return qbound::io::builtin_problem(arg);
    }
    return qbound::io::load_problem_file(arg);
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw qbound::ValidationError("cannot open output file: " + out_path);
    out << text;
}

void write_file(const std::string& text, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw qbound::ValidationError("cannot open output file: " + path);
    out << text;
}

std::size_t approach_index(const ProblemSpec& problem, std::optional<std::size_t> index_flag) {
    if (index_flag) return *index_flag;
    if (problem.state &&
        std::holds_alternative<qbound::io::EigenstateSelector>(*problem.state)) {
        const auto& sel = std::get<qbound::io::EigenstateSelector>(*problem.state);
        if (sel.of == 'B') return sel.index;
        throw qbound::ValidationError(
            "the approach/eigenstate scans walk toward an eigenstate of B; "
            "use a selector on B or pass --index");
    }
    throw qbound::ValidationError("an eigenstate index is required (state selector or --index)");
}

int run_check(const std::string& problem_arg, const std::string& format,
              const std::string& out_path) {
    const ProblemSpec problem = resolve_problem(problem_arg);
    const auto phi = qbound::io::resolve_state(problem);
    const double eps = problem.tolerances.eps_eigen.value_or(qbound::tol::kEpsEigen);
    const auto report = qbound::bounds::bound_suite(problem.A, problem.B, phi, eps);

    if (format == "json") {
        write_output(qbound::io::to_json(report), out_path);
    } else if (format == "csv") {
        write_output(qbound::io::check_csv(report), out_path);
    } else {
        write_output(qbound::io::to_text(report), out_path);
    }
    const double scale = qbound::quantum::scale_of(problem.A, problem.B);
    return qbound::bounds::suite_within_validity(report, scale) ? kOk : kInvariantViolation;
}

int run_scenario(const std::string& name, const std::string& problem_arg,
                 std::optional<std::size_t> index_flag, std::uint64_t seed, int starts,
                 std::optional<double> tol, const std::string& format,
                 const std::string& out_path) {
    const ProblemSpec problem = resolve_problem(problem_arg);
    if (!tol) tol = problem.tolerances.commutator_tol;

    if (name == "search") {
        const auto state =
            qbound::scenarios::counterexample_search(problem.A, problem.B, seed, starts, tol);
        if (!state) {
            std::cerr << "no counterexample state found in " << starts << " starts\n";
            return kNotFound;
        }
        const auto result =
            qbound::scenarios::counterexample_scenario(problem.A, problem.B, *state, tol);
        if (format == "json") {
            write_output(qbound::io::to_json(*state), out_path);
        } else {
            write_output("found state:\n" + qbound::io::to_json(*state) +
                             qbound::io::to_text(result),
                         out_path);
        }
        return result.verdict ? kOk : kInvariantViolation;
    }

    qbound::scenarios::ScenarioResult result;
    if (name == "eigenstate") {
        result = qbound::scenarios::eigenstate_scenario(problem.A, problem.B,
                                                        approach_index(problem, index_flag));
    } else {
        result = qbound::scenarios::counterexample_scenario(
            problem.A, problem.B, qbound::io::resolve_state(problem), tol);
    }
    write_output(format == "json" ? qbound::io::to_json(result) : qbound::io::to_text(result),
                 out_path);
    return result.verdict ? kOk : kInvariantViolation;
}

int run_scan_haar(std::size_t dim, std::size_t samples, std::uint64_t seed,
                  const std::string& out_prefix) {
    const qbound::sampler::SampleConfig cfg{dim, samples, seed};
    const auto stats = qbound::sampler::tightness_scan(cfg);
    write_file(qbound::io::scan_csv(stats.reports), out_prefix + ".csv");
    write_file(qbound::io::to_json(stats), out_prefix + ".json");
    std::cout << "wrote " << out_prefix << ".csv and " << out_prefix << ".json ("
              << stats.reports.size() << " samples, " << stats.validity_violations
              << " validity violations, " << stats.hr_zero_m12a_positive_count
              << " hr-degenerate/m12a-positive events)\n";
    return stats.validity_violations == 0 ? kOk : kInvariantViolation;
}

int run_scan_approach(const std::string& problem_arg, std::optional<std::size_t> index_flag,
                      std::size_t steps, std::uint64_t seed, const std::string& out_prefix) {
    const ProblemSpec problem = resolve_problem(problem_arg);
    const std::size_t index = approach_index(problem, index_flag);
    auto stream = qbound::sampler::RandomStream::substream(seed, 0);
    const auto trajectory =
        qbound::sampler::eigenstate_approach_scan(problem.A, problem.B, index, steps, stream);

    write_file(qbound::io::approach_csv(trajectory), out_prefix + ".csv");
    write_file(qbound::io::approach_summary_json({problem.A.dim(), index, steps, seed},
                                                 trajectory),
               out_prefix + ".json");

    const double scale = qbound::quantum::scale_of(problem.A, problem.B);
    std::size_t violations = 0;
    for (const auto& step : trajectory) {
        if (!qbound::bounds::suite_within_validity(step.report, scale)) ++violations;
    }
    const auto& end = trajectory.back().report;
    std::cout << "wrote " << out_prefix << ".csv and " << out_prefix << ".json (" << steps
              << " steps; endpoint hr rhs = " << qbound::io::format_double(end.hr.rhs)
              << ", mp2/lhs = " << qbound::io::format_double(end.mp2 / end.lhs_sum) << ")\n";
    return violations == 0 ? kOk : kInvariantViolation;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"variance uncertainty bounds: Heisenberg-Robertson and "
                 "Maccone-Pati sum-of-variances relations"};
    app.require_subcommand(1);

    std::string problem_arg;
    std::string format = "json";
    std::string out_path;
    std::string scenario_name;
    std::optional<std::size_t> index_flag;
    std::optional<double> tol_flag;
    std::uint64_t seed = 0;
    bool seed_given = false;
    int starts = 32;
    std::size_t dim = 2;
    std::size_t samples = 1000;
    std::size_t steps = 21;
    std::string out_prefix;

    auto* check = app.add_subcommand("check", "evaluate the bound suite on a problem");
    check->add_option("problem", problem_arg, "problem file or builtin name")->required();
    check->add_option("--format", format, "json|text|csv")
        ->check(CLI::IsMember({"json", "text", "csv"}));
    check->add_option("--out", out_path, "write the report here instead of stdout");

    auto* scenario = app.add_subcommand("scenario", "run a named analysis scenario");
    scenario->add_option("name", scenario_name, "eigenstate|counterexample|search")
        ->required()
        ->check(CLI::IsMember({"eigenstate", "counterexample", "search"}));
    scenario->add_option("problem", problem_arg, "problem file or builtin name")->required();
    scenario->add_option("--index", index_flag, "eigenvalue index (ascending order)");
    scenario->add_option("--seed", seed, "search seed")->each([&](const std::string&) {
        seed_given = true;
    });
    scenario->add_option("--starts", starts, "search restarts")->check(CLI::PositiveNumber);
    scenario->add_option("--tol", tol_flag, "commutator tolerance override");
    scenario->add_option("--format", format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));
    scenario->add_option("--out", out_path, "write the report here instead of stdout");
    scenario->parse_complete_callback([&] {
        if (scenario->count("--format") == 0) format = "text";
    });

    auto* scan = app.add_subcommand("scan", "batch scans over sampled states");
    scan->require_subcommand(1);

    auto* haar = scan->add_subcommand("haar", "GUE pairs + Haar states tightness scan");
    haar->add_option("--dim", dim, "state-space dimension")->check(CLI::Range(2, 64));
    haar->add_option("--samples", samples, "number of samples")
        ->check(CLI::Range(std::size_t{1}, std::size_t{10000000}));
    haar->add_option("--seed", seed, "scan seed")->each([&](const std::string&) {
        seed_given = true;
    });
    haar->add_option("--out", out_prefix, "output prefix (.csv/.json appended)")->required();

    auto* approach = scan->add_subcommand("approach", "walk a state into a B-eigenstate");
    approach->add_option("problem", problem_arg, "problem file or builtin name")->required();
    approach->add_option("--index", index_flag, "B eigenvalue index (ascending order)");
    approach->add_option("--steps", steps, "interpolation steps")
        ->check(CLI::Range(std::size_t{2}, std::size_t{100000}));
    approach->add_option("--seed", seed, "seed for the random far state")
        ->each([&](const std::string&) { seed_given = true; });
    approach->add_option("--out", out_prefix, "output prefix (.csv/.json appended)")->required();

    auto* selftest = app.add_subcommand("selftest", "run the invariant suite (reduced sizes)");
    selftest->add_option("--seed", seed, "suite seed")->each([&](const std::string&) {
        seed_given = true;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (!seed_given) seed = default_seed();

        if (check->parsed()) return run_check(problem_arg, format, out_path);
        if (scenario->parsed()) {
            return run_scenario(scenario_name, problem_arg, index_flag, seed, starts, tol_flag,
                                format, out_path);
        }
        if (haar->parsed()) return run_scan_haar(dim, samples, seed, out_prefix);
        if (approach->parsed()) {
            return run_scan_approach(problem_arg, index_flag, steps, seed, out_prefix);
        }
        if (selftest->parsed()) {
            return qbound::cli::run_selftest(std::cout, seed) == 0 ? kOk : kInvariantViolation;
        }
    } catch (const qbound::ConsistencyError& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return kInvariantViolation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
    return kInputError;
}
