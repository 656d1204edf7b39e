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

// Acceptance suite: every shipped claim, one pass/fail line each.
// Usage: qbound_acceptance <path-to-qbound-cli>
// The CLI path is needed by the scan-determinism criterion.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "qbound/problem.hpp"
#include "qbound/serialize.hpp"

using namespace qbound;
using linalg::Complex;
using linalg::CVector;
using quantum::Observable;
using quantum::StateVector;

namespace {

using Clock = std::chrono::steady_clock;

std::string g_cli_path;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct Sample {
    Observable a;
    Observable b;
    StateVector phi;
};

Sample draw_sample(std::size_t dim, std::uint64_t seed, std::size_t index) {
    auto stream = sampler::RandomStream::substream(seed, index);
    Observable a = sampler::gue_observable(dim, stream);
    Observable b = sampler::gue_observable(dim, stream);
    StateVector phi = sampler::haar_state(dim, stream);
    return {std::move(a), std::move(b), std::move(phi)};
}

#define REQUIRE_NEAR(value, expected, tolerance, label)                                   \
    do {                                                                                  \
        const double v_ = (value);                                                        \
        const double e_ = (expected);                                                     \
        if (!(std::abs(v_ - e_) <= (tolerance))) {                                        \
            return std::string(label) + ": got " + io::format_double(v_) + ", expected " + \
                   io::format_double(e_);                                                 \
        }                                                                                 \
    } while (0)

#define REQUIRE_TRUE(cond, label)                          \
    do {                                                   \
        if (!(cond)) return std::string(label) + " failed"; \
    } while (0)

// 1. Eigenstate trivialization for sigma_x / sigma_z at |0>, tolerance 1e-12,
//    under one second.
std::optional<std::string> criterion_eigenstate_trivialization() {
    const auto start = Clock::now();
    const Observable a = Observable::pauli_x();
    const Observable b = Observable::pauli_z();
    const StateVector psi{CVector{1.0, 0.0}};
    const double tol = 1e-12;

    REQUIRE_NEAR(quantum::moments(b, psi).std_dev, 0.0, tol, "DeltaB");
    const auto corr = quantum::correlation(a, b, psi);
    REQUIRE_NEAR(std::abs(corr.commutator_expectation), 0.0, tol, "<[A,B]>");

    const Observable sum(a.mat() + b.mat());
    REQUIRE_NEAR(quantum::moments(sum, psi).std_dev, 1.0, tol, "Delta(A+B)");
    REQUIRE_NEAR(quantum::moments(a, psi).std_dev, 1.0, tol, "DeltaA");

    const auto suite = bounds::bound_suite(a, b, psi);
    REQUIRE_NEAR(suite.mp2, 0.5, tol, "mp2");
    REQUIRE_NEAR(suite.lhs_sum, 1.0, tol, "lhs_sum");
    REQUIRE_NEAR(suite.mp2 / suite.lhs_sum, 0.5, tol, "mp2/lhs_sum");
    REQUIRE_NEAR(bounds::mp1_optimal(a, b, psi, +1).rhs, 1.0, tol, "mp1_optimal(+)");
    REQUIRE_NEAR(bounds::mp1_optimal(a, b, psi, -1).rhs, 1.0, tol, "mp1_optimal(-)");
    REQUIRE_NEAR(suite.hr.rhs, 0.0, tol, "hr rhs");
    REQUIRE_TRUE(suite.self_referential, "self_referential flag");

    REQUIRE_TRUE(seconds_since(start) < 1.0, "runtime under 1 s");
    return std::nullopt;
}

// 2. The vanishing-commutator counterexample state, tolerance 1e-12.
std::optional<std::string> criterion_counterexample_state() {
    const Observable a = Observable::pauli_x();
    const Observable b = Observable::pauli_y();
    const double inv_sqrt2 = std::sqrt(0.5);
    const StateVector phi = StateVector::normalized(
        CVector{Complex{inv_sqrt2, 0.0}, std::polar(inv_sqrt2, std::numbers::pi / 4.0)});
    const double tol = 1e-12;

    const auto corr = quantum::correlation(a, b, phi);
    REQUIRE_NEAR(std::abs(corr.commutator_expectation), 0.0, tol, "<[A,B]>");
    const auto suite = bounds::bound_suite(a, b, phi);
    REQUIRE_NEAR(suite.hr.rhs, 0.0, tol, "hr rhs");
    REQUIRE_NEAR(suite.m12a, 1.0, tol, "m12a");
    REQUIRE_NEAR(suite.lhs_sum, 1.0, tol, "lhs_sum");
    return std::nullopt;
}

// Shared sample pass for criteria 3-5: 1000 GUE/Haar triples per dim in
// {2,3,4,8}.
struct SamplePassResults {
    bool ran = false;
    std::optional<std::string> validity_failure;
    std::optional<std::string> equivalence_failure;
    std::optional<std::string> commutator_failure;
    double elapsed_seconds = 0.0;
};
SamplePassResults g_pass;

void run_sample_pass() {
    if (g_pass.ran) return;
    g_pass.ran = true;
    const auto start = Clock::now();
    constexpr std::uint64_t kSeed = 2026;

    for (const std::size_t dim : {2, 3, 4, 8}) {
        for (std::size_t index = 0; index < 1000; ++index) {
            const Sample s = draw_sample(dim, kSeed + dim, index);
            const double scale = quantum::scale_of(s.a, s.b);
            const auto suite = bounds::bound_suite(s.a, s.b, s.phi);

            if (!bounds::suite_within_validity(suite, scale) && !g_pass.validity_failure) {
                g_pass.validity_failure = "dim " + std::to_string(dim) + " sample " +
                                          std::to_string(index) + " breached the slack floor";
            }

            const Observable sum(s.a.mat() + s.b.mat());
            if (quantum::moments(sum, s.phi).std_dev > 1e-8) {
                const auto via_av = bounds::mp2_bound_av_form(s.a, s.b, s.phi);
                if ((!via_av || std::abs(*via_av - suite.mp2) > 1e-10 * scale) &&
                    !g_pass.equivalence_failure) {
                    g_pass.equivalence_failure = "dim " + std::to_string(dim) + " sample " +
                                                 std::to_string(index) + ": mp2 paths disagree";
                }
            }

            const auto corr = quantum::correlation(s.a, s.b, s.phi);
            if (std::abs(corr.commutator_expectation - Complex{0.0, 2.0 * corr.im_part}) >
                    1e-10 * scale &&
                !g_pass.commutator_failure) {
                g_pass.commutator_failure = "dim " + std::to_string(dim) + " sample " +
                                            std::to_string(index) + ": identity violated";
            }
        }
    }
    g_pass.elapsed_seconds = seconds_since(start);
}

// 3. Validity of every bound on 4000 random triples within 10 s.
std::optional<std::string> criterion_validity_suite() {
    run_sample_pass();
    if (g_pass.validity_failure) return g_pass.validity_failure;
    if (g_pass.elapsed_seconds >= 10.0) {
        return "sample pass took " + std::to_string(g_pass.elapsed_seconds) + " s (limit 10)";
    }
    return std::nullopt;
}

// 4. The two mp2 computation paths agree on every sample with
//    Delta(A+B) > 1e-8.
std::optional<std::string> criterion_mp2_equivalence() {
    run_sample_pass();
    return g_pass.equivalence_failure;
}

// 5. <[A,B]> = 2i Im<deltaA deltaB> on every sample.
std::optional<std::string> criterion_commutator_identity() {
    run_sample_pass();
    return g_pass.commutator_failure;
}

// 6. mp1_optimal dominates 100 random orthogonal states on 50 instances.
std::optional<std::string> criterion_mp1_maximality() {
    for (std::size_t instance = 0; instance < 50; ++instance) {
        const std::size_t dims[] = {2, 3, 4, 8};
        const std::size_t dim = dims[instance % 4];
        auto stream = sampler::RandomStream::substream(5050, instance);
        const Observable a = sampler::gue_observable(dim, stream);
        const Observable b = sampler::gue_observable(dim, stream);
        const StateVector phi = sampler::haar_state(dim, stream);
        for (const int sign : {+1, -1}) {
            const auto best = bounds::mp1_optimal(a, b, phi, sign);
            for (std::size_t k = 0; k < 100; ++k) {
                CVector projected(0);
                while (true) {
                    const auto raw = sampler::haar_state(dim, stream);
                    projected = linalg::project_orthogonal(raw.vec(), phi.vec());
                    if (linalg::norm(projected) > 1e-6) break;
                }
                const StateVector perp = StateVector::normalized(projected);
                const auto candidate = bounds::mp1_bound(a, b, phi, perp, sign);
                if (candidate.rhs > best.rhs + 1e-10) {
                    return "instance " + std::to_string(instance) + ": random perp exceeded " +
                           "the maximizer by " + io::format_double(candidate.rhs - best.rhs);
                }
            }
        }
    }
    return std::nullopt;
}

// 7. Interpolating into a B-eigenstate lands on hr rhs <= 1e-9 and
//    mp2/lhs_sum = 1/2 +- 1e-9.
std::optional<std::string> criterion_approach_limit() {
    auto stream = sampler::RandomStream::substream(6060, 0);
    const auto steps = sampler::eigenstate_approach_scan(Observable::pauli_x(),
                                                         Observable::pauli_z(), 1, 21, stream);
    const auto& end = steps.back().report;
    REQUIRE_NEAR(end.hr.rhs, 0.0, 1e-9, "endpoint hr rhs");
    REQUIRE_NEAR(end.mp2 / end.lhs_sum, 0.5, 1e-9, "endpoint mp2/lhs_sum");

    auto stream2 = sampler::RandomStream::substream(6060, 1);
    const Observable a = sampler::gue_observable(5, stream2);
    const Observable b = sampler::gue_observable(5, stream2);
    const auto generic = sampler::eigenstate_approach_scan(a, b, 3, 21, stream2);
    const auto& gend = generic.back().report;
    REQUIRE_NEAR(gend.hr.rhs, 0.0, 1e-9 * quantum::scale_of(a, b), "generic endpoint hr rhs");
    REQUIRE_NEAR(gend.mp2 / gend.lhs_sum, 0.5, 1e-9, "generic endpoint mp2/lhs_sum");
    return std::nullopt;
}

// 8. Re-running a scan command with identical flags produces byte-identical
//    CSV and JSON.
std::optional<std::string> criterion_scan_determinism() {
    if (g_cli_path.empty()) return "no CLI path given (pass it as argv[1])";

    const std::string quiet = " > /dev/null 2>&1";
    const auto run = [&](const std::string& args) {
        return std::system((g_cli_path + " " + args + quiet).c_str());
    };

    if (run("scan haar --dim 2 --samples 300 --seed 7 --out acc_haar_1") != 0 ||
        run("scan haar --dim 2 --samples 300 --seed 7 --out acc_haar_2") != 0) {
        return "scan haar command failed";
    }
    if (read_file("acc_haar_1.csv").empty() ||
        read_file("acc_haar_1.csv") != read_file("acc_haar_2.csv")) {
        return "haar scan csv bytes differ";
    }
    if (read_file("acc_haar_1.json") != read_file("acc_haar_2.json")) {
        return "haar scan json bytes differ";
    }

    if (run("scan approach pauli-xz-eigenstate --steps 15 --seed 3 --out acc_app_1") != 0 ||
        run("scan approach pauli-xz-eigenstate --steps 15 --seed 3 --out acc_app_2") != 0) {
        return "scan approach command failed";
    }
    if (read_file("acc_app_1.csv").empty() ||
        read_file("acc_app_1.csv") != read_file("acc_app_2.csv")) {
        return "approach scan csv bytes differ";
    }
    if (read_file("acc_app_1.json") != read_file("acc_app_2.json")) {
        return "approach scan json bytes differ";
    }
    return std::nullopt;
}

// 9. The counterexample search reaches m12a >= 0.9 on (sigma_x, sigma_y)
//    within 32 starts and 5 seconds.
std::optional<std::string> criterion_search() {
    const auto start = Clock::now();
    const auto found =
        scenarios::counterexample_search(Observable::pauli_x(), Observable::pauli_y(), 2026, 32);
    const double elapsed = seconds_since(start);
    if (!found) return "search returned nothing";
    const double m12a = bounds::m12a_rhs(Observable::pauli_x(), Observable::pauli_y(), *found);
    if (m12a < 0.9) return "m12a = " + io::format_double(m12a) + " < 0.9";
    if (elapsed >= 5.0) return "took " + std::to_string(elapsed) + " s (limit 5)";
    return std::nullopt;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc > 1) g_cli_path = argv[1];

    const std::vector<std::pair<std::string, std::function<std::optional<std::string>()>>>
        criteria = {
            {"1 eigenstate-trivialization", criterion_eigenstate_trivialization},
            {"2 vanishing-commutator-counterexample", criterion_counterexample_state},
            {"3 validity-suite-4000-triples", criterion_validity_suite},
            {"4 mp2-two-path-equivalence", criterion_mp2_equivalence},
            {"5 commutator-identity", criterion_commutator_identity},
            {"6 mp1-optimal-maximality", criterion_mp1_maximality},
            {"7 approach-scan-limit", criterion_approach_limit},
            {"8 scan-determinism", criterion_scan_determinism},
            {"9 counterexample-search", criterion_search},
        };

    int failures = 0;
    for (const auto& [name, run] : criteria) {
        std::optional<std::string> failure;
        try {
            failure = run();
        } catch (const std::exception& e) {
            failure = std::string("exception: ") + e.what();
        }
        if (failure) {
            ++failures;
            std::printf("[FAIL] %s: %s\n", name.c_str(), failure->c_str());
        } else {
            std::printf("[PASS] %s\n", name.c_str());
        }
    }
    return failures == 0 ? 0 : 1;
}
