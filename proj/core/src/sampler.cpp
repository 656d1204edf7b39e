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
#include "qbound/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace qbound::sampler {

using linalg::CMatrix;
using linalg::Complex;
using linalg::CVector;
using quantum::Observable;
using quantum::StateVector;

namespace {

// splitmix64 finalizer; also used to mix (seed, index) into a stream key.
std::uint64_t mix64(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ULL;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBULL;
    z ^= z >> 31;
    return z;
}

Quantiles quantiles_of(std::vector<double> values) {
    std::sort(values.begin(), values.end());
    const std::size_t n = values.size();
    double median;
    if (n % 2 == 1) {
        median = values[n / 2];
    } else {
        median = 0.5 * (values[n / 2 - 1] + values[n / 2]);
    }
    return {values.front(), median, values.back()};
}

}  // namespace

RandomStream RandomStream::substream(std::uint64_t seed, std::uint64_t index) {
    return RandomStream(mix64(mix64(seed) ^ (index + 0x9E3779B97F4A7C15ULL)));
}

std::uint64_t RandomStream::next_u64() {
    state_ += 0x9E3779B97F4A7C15ULL;
    return mix64(state_);
}

double RandomStream::next_unit() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

Complex RandomStream::next_complex_gaussian() {
    const double u1 = 1.0 - next_unit(); // (0, 1]: keeps the log finite
    const double u2 = next_unit();
    const double radius = std::sqrt(-std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    return {radius * std::cos(angle), radius * std::sin(angle)};
}

StateVector haar_state(std::size_t dim, RandomStream& stream) {
    if (dim < 1) throw ValidationError("haar_state: dim must be >= 1");
    while (true) {
        CVector v(dim);
        for (std::size_t i = 0; i < dim; ++i) v[i] = stream.next_complex_gaussian();
        if (linalg::norm(v) > 1e-6) return StateVector::normalized(v);
        // Astronomically unlikely; redraw keeps the stream deterministic.
    }
}

Observable gue_observable(std::size_t dim, RandomStream& stream) {
    if (dim < 1) throw ValidationError("gue_observable: dim must be >= 1");
    CMatrix g(dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) g(i, j) = stream.next_complex_gaussian();
    CMatrix h = g;
    h += g.adjoint();
    h *= Complex{0.5, 0.0};
    return Observable(h);
}

TightnessStats tightness_scan(const SampleConfig& cfg) {
    if (cfg.dim < 2) throw ValidationError("tightness_scan: dim must be >= 2");
    if (cfg.n_samples < 1) throw ValidationError("tightness_scan: n_samples must be >= 1");

    TightnessStats stats;
    stats.config = cfg;
    stats.reports.reserve(cfg.n_samples);
    stats.hr_zero_m12a_positive_count = 0;
    stats.validity_violations = 0;

    for (std::size_t s = 0; s < cfg.n_samples; ++s) {
        RandomStream stream = RandomStream::substream(cfg.seed, s);
        const Observable a = gue_observable(cfg.dim, stream);
        const Observable b = gue_observable(cfg.dim, stream);
        const StateVector phi = haar_state(cfg.dim, stream);

        const auto report = bounds::bound_suite(a, b, phi);
        const double scale = quantum::scale_of(a, b);
        if (!bounds::suite_within_validity(report, scale)) ++stats.validity_violations;
        if (report.hr.rhs < 1e-6 && report.m12a > 1e-3) ++stats.hr_zero_m12a_positive_count;

        const double denom = report.lhs_sum;
        stats.rel_slack_hr.push_back(report.hr.slack / denom);
        stats.rel_slack_mp1_plus.push_back(report.slacks.mp1_plus / denom);
        stats.rel_slack_mp1_minus.push_back(report.slacks.mp1_minus / denom);
        stats.rel_slack_mp1_best.push_back(report.slacks.mp1_best / denom);
        stats.rel_slack_mp2.push_back(report.slacks.mp2 / denom);
        stats.rel_slack_m12a.push_back(report.slacks.m12a / denom);
        stats.reports.push_back(report);
    }

    stats.q_hr = quantiles_of(stats.rel_slack_hr);
    stats.q_mp1_plus = quantiles_of(stats.rel_slack_mp1_plus);
    stats.q_mp1_minus = quantiles_of(stats.rel_slack_mp1_minus);
    stats.q_mp1_best = quantiles_of(stats.rel_slack_mp1_best);
    stats.q_mp2 = quantiles_of(stats.rel_slack_mp2);
    stats.q_m12a = quantiles_of(stats.rel_slack_m12a);
    return stats;
}

std::vector<ApproachStep> eigenstate_approach_scan(const Observable& A, const Observable& B,
                                                   std::size_t eig_index, std::size_t n_steps,
                                                   RandomStream& stream) {
    if (n_steps < 2) throw ValidationError("eigenstate_approach_scan: n_steps must be >= 2");
    const double comm_norm = linalg::max_abs(quantum::commutator(A, B));
    if (comm_norm <= 1e-10) {
        throw ValidationError("eigenstate_approach_scan: [A,B] vanishes, scan inapplicable");
    }
    const auto es = linalg::hermitian_eigensystem(B.mat());
    if (eig_index >= es.eigenvalues.size()) {
        throw ValidationError("eigenstate_approach_scan: eig_index " + std::to_string(eig_index) +
                              " out of range for dimension " + std::to_string(B.dim()));
    }
    const CVector psi_b = es.eigenvectors[eig_index];
    const StateVector chi = haar_state(B.dim(), stream);

    std::vector<ApproachStep> steps;
    steps.reserve(n_steps);
    const double scale = quantum::scale_of(A, B);
    for (std::size_t k = 0; k < n_steps; ++k) {
        const double t = 1.0 - static_cast<double>(k) / static_cast<double>(n_steps - 1);
        CVector mix(psi_b.dim());
        for (std::size_t i = 0; i < mix.dim(); ++i) {
            mix[i] = (1.0 - t) * psi_b[i] + t * chi.vec()[i];
        }
        const StateVector phi = StateVector::normalized(mix);
        steps.push_back({t, bounds::bound_suite(A, B, phi)});
    }

    const auto& end = steps.back().report;
    if (end.hr.rhs > tol::kSlackFloor * scale) {
        throw ConsistencyError("approach endpoint: hr rhs = " + std::to_string(end.hr.rhs));
    }
    if (!(end.lhs_sum > 0.0)) {
        throw ConsistencyError("approach endpoint: lhs_sum vanishes (common eigenvector?)");
    }
    if (std::abs(end.mp2 / end.lhs_sum - 0.5) > tol::kSlackFloor) {
        throw ConsistencyError("approach endpoint: mp2/lhs_sum = " +
                               std::to_string(end.mp2 / end.lhs_sum));
    }
    if (!end.self_referential) {
        throw ConsistencyError("approach endpoint: expected self_referential flag");
    }
    return steps;
}

}  // namespace qbound::sampler
