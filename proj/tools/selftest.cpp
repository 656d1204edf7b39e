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
#include "selftest.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "qbound/problem.hpp"
#include "qbound/serialize.hpp"

namespace qbound::cli {

using linalg::CMatrix;
using linalg::Complex;
using linalg::CVector;
using quantum::Observable;
using quantum::StateVector;
using sampler::RandomStream;

namespace {

using SuiteResult = std::optional<std::string>; // failure detail, nullopt = pass

std::string describe(double value) {
    std::ostringstream out;
    out << std::setprecision(6) << value;
    return out.str();
}

StateVector random_orthogonal_state(const StateVector& phi, RandomStream& stream) {
    while (true) {
        const StateVector raw = sampler::haar_state(phi.dim(), stream);
        const CVector projected = linalg::project_orthogonal(raw.vec(), phi.vec());
        if (linalg::norm(projected) > 1e-6) return StateVector::normalized(projected);
    }
}

SuiteResult eigensystem_reconstruction(std::uint64_t seed) {
    for (std::size_t dim = 2; dim <= 12; ++dim) {
        RandomStream stream = RandomStream::substream(seed, 100 + dim);
        const Observable h = sampler::gue_observable(dim, stream);
        const auto es = linalg::hermitian_eigensystem(h.mat());

        CMatrix reconstructed(dim);
        for (std::size_t k = 0; k < dim; ++k) {
            for (std::size_t i = 0; i < dim; ++i)
                for (std::size_t j = 0; j < dim; ++j)
                    reconstructed(i, j) += es.eigenvalues[k] * es.eigenvectors[k][i] *
                                           std::conj(es.eigenvectors[k][j]);
        }
        const double err = linalg::max_abs(reconstructed - h.mat());
        const double allowed = static_cast<double>(dim * dim) * tol::kHermiticity *
                               linalg::max_abs(h.mat());
        if (err > allowed) {
            return "dim " + std::to_string(dim) + ": reconstruction error " + describe(err);
        }
        for (std::size_t a = 0; a < dim; ++a) {
            for (std::size_t b = 0; b < dim; ++b) {
                const Complex g = linalg::inner(es.eigenvectors[a], es.eigenvectors[b]);
                const double expect = a == b ? 1.0 : 0.0;
                if (std::abs(g - Complex{expect, 0.0}) > 1e-12) {
                    return "dim " + std::to_string(dim) + ": eigenvectors not orthonormal";
                }
            }
        }
    }
    return std::nullopt;
}

SuiteResult moment_identities(std::uint64_t seed) {
    const std::size_t dims[] = {2, 3, 4};
    for (std::size_t trial = 0; trial < 150; ++trial) {
        RandomStream stream = RandomStream::substream(seed, 200 + trial);
        const std::size_t dim = dims[trial % 3];
        const Observable f = sampler::gue_observable(dim, stream);
        const StateVector phi = sampler::haar_state(dim, stream);
        const auto m = quantum::moments(f, phi);

        if (m.variance < 0.0) return "negative variance";

        const double c = (stream.next_unit() - 0.5) * 10.0;
        const Observable shifted(f.mat() + CMatrix::identity(dim) * Complex{c, 0.0});
        const auto ms = quantum::moments(shifted, phi);
        if (std::abs(ms.variance - m.variance) > 1e-9 * (1.0 + m.variance)) {
            return "shift invariance violated by " + describe(ms.variance - m.variance);
        }

        const Observable scaled(f.mat() * Complex{c, 0.0});
        const auto mc = quantum::moments(scaled, phi);
        if (std::abs(mc.std_dev - std::abs(c) * m.std_dev) > 1e-9 * (1.0 + m.std_dev)) {
            return "scale covariance violated";
        }

        const double two_path = quantum::variance_moment_form(f, phi);
        const double allowed = tol::kConsistency * (1.0 + linalg::max_abs(f.mat()) *
                                                              linalg::max_abs(f.mat()));
        if (std::abs(two_path - m.variance) > allowed) {
            return "two-path variance disagreement " + describe(two_path - m.variance);
        }
    }
    return std::nullopt;
}

SuiteResult commutator_identity(std::uint64_t seed) {
    const std::size_t dims[] = {2, 3, 4, 8};
    for (std::size_t trial = 0; trial < 150; ++trial) {
        RandomStream stream = RandomStream::substream(seed, 400 + trial);
        const std::size_t dim = dims[trial % 4];
        const Observable a = sampler::gue_observable(dim, stream);
        const Observable b = sampler::gue_observable(dim, stream);
        const StateVector phi = sampler::haar_state(dim, stream);
        const auto corr = quantum::correlation(a, b, phi); // enforces the identity internally
        const double residual =
            std::abs(corr.commutator_expectation - Complex{0.0, 2.0 * corr.im_part});
        if (residual > tol::kConsistency * quantum::scale_of(a, b)) {
            return "identity residual " + describe(residual);
        }
    }
    return std::nullopt;
}

SuiteResult av_reconstruction(std::uint64_t seed) {
    const std::size_t dims[] = {2, 3, 5, 8};
    for (std::size_t trial = 0; trial < 150; ++trial) {
        RandomStream stream = RandomStream::substream(seed, 600 + trial);
        const std::size_t dim = dims[trial % 4];
        const Observable f = sampler::gue_observable(dim, stream);
        const StateVector psi = sampler::haar_state(dim, stream);
        const auto dec = av::av_decompose(f, psi);
        const double residual = av::av_reconstruct_residual(f, psi, dec);
        if (residual > tol::kConsistency * (1.0 + linalg::max_abs(f.mat()))) {
            return "reconstruction residual " + describe(residual);
        }
        if (dec.perp_state) {
            const Complex element =
                linalg::inner(dec.perp_state->vec(), linalg::apply(f.mat(), psi.vec()));
            if (std::abs(element - Complex{dec.sigma, 0.0}) >
                tol::kConsistency * (1.0 + linalg::max_abs(f.mat()))) {
                return "matrix-element identity violated";
            }
        }
    }
    return std::nullopt;
}

SuiteResult bound_validity(std::uint64_t seed) {
    for (std::size_t dim : {2, 3, 4}) {
        const sampler::SampleConfig cfg{dim, 100, seed + dim};
        const auto stats = sampler::tightness_scan(cfg);
        if (stats.validity_violations != 0) {
            return "dim " + std::to_string(dim) + ": " +
                   std::to_string(stats.validity_violations) + " validity violations";
        }
    }
    return std::nullopt;
}

SuiteResult mp2_equivalence(std::uint64_t seed) {
    const std::size_t dims[] = {2, 3, 4};
    for (std::size_t trial = 0; trial < 120; ++trial) {
        RandomStream stream = RandomStream::substream(seed, 800 + trial);
        const std::size_t dim = dims[trial % 3];
        const Observable a = sampler::gue_observable(dim, stream);
        const Observable b = sampler::gue_observable(dim, stream);
        const StateVector phi = sampler::haar_state(dim, stream);
        const double direct = bounds::mp2_bound(a, b, phi);
        const auto via_av = bounds::mp2_bound_av_form(a, b, phi);
        if (via_av &&
            std::abs(*via_av - direct) > tol::kConsistency * quantum::scale_of(a, b)) {
            return "paths differ by " + describe(*via_av - direct);
        }
    }
    return std::nullopt;
}

SuiteResult mp1_maximality(std::uint64_t seed) {
    for (std::size_t instance = 0; instance < 10; ++instance) {
        RandomStream stream = RandomStream::substream(seed, 900 + instance);
        const std::size_t dim = 2 + instance % 3;
        const Observable a = sampler::gue_observable(dim, stream);
        const Observable b = sampler::gue_observable(dim, stream);
        const StateVector phi = sampler::haar_state(dim, stream);
        for (const int sign : {+1, -1}) {
            const auto best = bounds::mp1_optimal(a, b, phi, sign);
            for (std::size_t k = 0; k < 20; ++k) {
                const StateVector perp = random_orthogonal_state(phi, stream);
                const auto candidate = bounds::mp1_bound(a, b, phi, perp, sign);
                if (candidate.rhs > best.rhs + 1e-10) {
                    return "random perp beat the optimal by " + describe(candidate.rhs - best.rhs);
                }
            }
        }
    }
    return std::nullopt;
}

SuiteResult eigenstate_scenarios(std::uint64_t seed) {
    for (std::size_t index : {0u, 1u}) {
        const auto r = scenarios::eigenstate_scenario(Observable::pauli_x(),
                                                      Observable::pauli_z(), index);
        if (!r.verdict) return "pauli pair failed at index " + std::to_string(index);
    }
    for (std::size_t instance = 0; instance < 3; ++instance) {
        RandomStream stream = RandomStream::substream(seed, 1000 + instance);
        const Observable a = sampler::gue_observable(4, stream);
        const Observable b = sampler::gue_observable(4, stream);
        for (std::size_t index = 0; index < 4; ++index) {
            const auto r = scenarios::eigenstate_scenario(a, b, index);
            if (!r.verdict) {
                return "random pair " + std::to_string(instance) + " failed at index " +
                       std::to_string(index);
            }
        }
    }
    return std::nullopt;
}

SuiteResult counterexample_suite(std::uint64_t seed) {
    const auto problem = io::builtin_problem("pauli-xy-equator");
    const auto r = scenarios::counterexample_scenario(problem.A, problem.B,
                                                      io::resolve_state(problem));
    if (!r.verdict) return "equator state rejected";

    const auto found = scenarios::counterexample_search(Observable::pauli_x(),
                                                        Observable::pauli_y(), seed, 8);
    if (!found) return "search found nothing in 8 starts";
    const double m12a = bounds::m12a_rhs(Observable::pauli_x(), Observable::pauli_y(), *found);
    if (m12a < 0.9) return "search result weak, m12a = " + describe(m12a);
    return std::nullopt;
}

SuiteResult approach_endpoint(std::uint64_t seed) {
    RandomStream stream = RandomStream::substream(seed, 1100);
    // Throws on endpoint violations; ratio rechecked here.
    const auto steps = sampler::eigenstate_approach_scan(Observable::pauli_x(),
                                                         Observable::pauli_z(), 1, 11, stream);
    const auto& end = steps.back().report;
    if (std::abs(end.mp2 / end.lhs_sum - 0.5) > tol::kSlackFloor) {
        return "endpoint ratio " + describe(end.mp2 / end.lhs_sum);
    }
    return std::nullopt;
}

SuiteResult determinism(std::uint64_t seed) {
    const sampler::SampleConfig cfg{2, 60, seed};
    const auto first = sampler::tightness_scan(cfg);
    const auto second = sampler::tightness_scan(cfg);
    if (io::to_json(first) != io::to_json(second)) return "summary json differs across runs";
    if (io::scan_csv(first.reports) != io::scan_csv(second.reports)) {
        return "csv differs across runs";
    }
    const auto s1 = scenarios::counterexample_search(Observable::pauli_x(),
                                                     Observable::pauli_y(), seed, 4);
    const auto s2 = scenarios::counterexample_search(Observable::pauli_x(),
                                                     Observable::pauli_y(), seed, 4);
    if (static_cast<bool>(s1) != static_cast<bool>(s2) ||
        (s1 && io::to_json(*s1) != io::to_json(*s2))) {
        return "search result differs across runs";
    }
    return std::nullopt;
}

}  // namespace

int run_selftest(std::ostream& out, std::uint64_t seed) {
    using Clock = std::chrono::steady_clock;
    const std::vector<std::pair<std::string, std::function<SuiteResult(std::uint64_t)>>> suites =
        {{"eigensystem_reconstruction", eigensystem_reconstruction},
         {"moment_identities", moment_identities},
         {"commutator_identity", commutator_identity},
         {"av_reconstruction", av_reconstruction},
         {"bound_validity", bound_validity},
         {"mp2_equivalence", mp2_equivalence},
         {"mp1_maximality", mp1_maximality},
         {"eigenstate_scenarios", eigenstate_scenarios},
         {"counterexample", counterexample_suite},
         {"approach_endpoint", approach_endpoint},
         {"determinism", determinism}};

    int failures = 0;
    for (const auto& [name, suite] : suites) {
        const auto start = Clock::now();
        SuiteResult result;
        try {
            result = suite(seed);
        } catch (const std::exception& e) {
            result = std::string("exception: ") + e.what();
        }
        const auto ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
        if (result) {
            ++failures;
            out << "FAIL " << name << " (" << ms << " ms): " << *result << "\n";
        } else {
            out << "ok   " << name << " (" << ms << " ms)\n";
        }
    }
    out << (failures == 0 ? "selftest passed" : "selftest FAILED") << "\n";
    return failures;
}

}  // namespace qbound::cli
