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
#pragma once

#include <cstdint>
#include <vector>

#include "qbound/bounds.hpp"

/// Reproducible random states/observables and batch scans. Streams are
/// counter-based (splitmix64): every sample derives its own stream from
/// (seed, sample_index), so serial and parallel evaluation orders produce
/// bit-identical results. The exact generation recipe is part of the
/// contract; golden files depend on it (see README, "Randomness and
/// reproducibility").

namespace qbound::sampler {

class RandomStream {
  public:
    explicit RandomStream(std::uint64_t key) : state_(key) {}

    /// Stream for sample `index` of a scan seeded with `seed`.
    static RandomStream substream(std::uint64_t seed, std::uint64_t index);

    std::uint64_t next_u64();

    /// Uniform in [0, 1), 53-bit mantissa.
    double next_unit();

    /// Standard complex Gaussian (E|z|^2 = 1) via the trigonometric
    /// Box-Muller transform; consumes exactly two u64 draws.
    linalg::Complex next_complex_gaussian();

  private:
    std::uint64_t state_;
};

struct SampleConfig {
    std::size_t dim;       // >= 2
    std::size_t n_samples; // >= 1
    std::uint64_t seed;
};

/// Haar-random pure state: normalized vector of iid standard complex
/// Gaussians.
quantum::StateVector haar_state(std::size_t dim, RandomStream& stream);

/// GUE observable: (G + G^dag)/2 for G with iid standard complex Gaussian
/// entries. Exactly Hermitian by construction.
quantum::Observable gue_observable(std::size_t dim, RandomStream& stream);

struct Quantiles {
    double min;
    double median; // midpoint average for even counts
    double max;
};

struct TightnessStats {
    SampleConfig config;
    std::vector<bounds::BoundSuiteReport> reports; // one per sample, in index order

    // Relative slacks, bound slack / lhs_sum, one entry per sample.
    std::vector<double> rel_slack_hr;
    std::vector<double> rel_slack_mp1_plus;
    std::vector<double> rel_slack_mp1_minus;
    std::vector<double> rel_slack_mp1_best;
    std::vector<double> rel_slack_mp2;
    std::vector<double> rel_slack_m12a;

    Quantiles q_hr, q_mp1_plus, q_mp1_minus, q_mp1_best, q_mp2, q_m12a;

    /// Samples where the product bound degenerates (hr rhs < 1e-6) while the
    /// real-part sum bound stays informative (m12a > 1e-3).
    std::size_t hr_zero_m12a_positive_count;

    /// Samples breaching the -kSlackFloor * scale validity floor.
    std::size_t validity_violations;
};

/// Draw (A, B, phi) per sample from substream(seed, sample_index), run the
/// bound suite, accumulate statistics. Deterministic given the config.
TightnessStats tightness_scan(const SampleConfig& cfg);

struct ApproachStep {
    double t;
    bounds::BoundSuiteReport report;
};

/// Bound suites along phi(t) = normalize((1-t) psi_b + t chi) for a
/// Haar-random chi, t descending 1 -> 0 over n_steps points. psi_b is the
/// eig_index-th eigenvector of B. The endpoint must satisfy
/// hr rhs <= kSlackFloor * scale, mp2/lhs_sum = 1/2 (within kSlackFloor)
/// and self_referential = true; a violation throws ConsistencyError.
std::vector<ApproachStep> eigenstate_approach_scan(const quantum::Observable& A,
                                                   const quantum::Observable& B,
                                                   std::size_t eig_index, std::size_t n_steps,
                                                   RandomStream& stream);

}  // namespace qbound::sampler
