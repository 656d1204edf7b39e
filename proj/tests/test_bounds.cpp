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
#include <numbers>

#include "test_support.hpp"

using namespace qbound;
using namespace qbound::testing;
using linalg::Complex;
using linalg::CVector;
using quantum::Observable;
using quantum::StateVector;

namespace {
const StateVector kUp{CVector{1.0, 0.0}};
const StateVector kDown{CVector{0.0, 1.0}};
const double kInvSqrt2 = std::sqrt(0.5);

StateVector equator_state() {
    return StateVector::normalized(
        CVector{Complex{kInvSqrt2, 0.0}, std::polar(kInvSqrt2, std::numbers::pi / 4.0)});
}
}  // namespace

TEST_CASE("hr_bound: equality, eigenstate degeneracy, self-commutator") {
    // sigma_x, sigma_y on |0>: 1*1 >= (1/2)*|2i| with equality
    const auto eq = bounds::hr_bound(Observable::pauli_x(), Observable::pauli_y(), kUp);
    CHECK(eq.lhs_product == doctest::Approx(1.0));
    CHECK(eq.rhs == doctest::Approx(1.0));
    CHECK(eq.slack == doctest::Approx(0.0));

    // B-eigenstate: both sides collapse to zero, DeltaA * 0 >= 0
    const auto deg = bounds::hr_bound(Observable::pauli_x(), Observable::pauli_z(), kUp);
    CHECK(deg.lhs_product == doctest::Approx(0.0));
    CHECK(deg.rhs == doctest::Approx(0.0));

    auto stream = sampler::RandomStream(11);
    const auto a = sampler::gue_observable(3, stream);
    const auto phi = sampler::haar_state(3, stream);
    const auto self = bounds::hr_bound(a, a, phi);
    CHECK(self.rhs == doctest::Approx(0.0));
    CHECK(self.lhs_product == doctest::Approx(quantum::moments(a, phi).variance).epsilon(1e-12));
}

TEST_CASE("mp1_bound: evaluates the right side exactly as written") {
    const auto a = Observable::pauli_x();
    const auto b = Observable::pauli_y();

    // sign -: -i<[A,B]> = -i(2i) = 2; (A - iB)|1> = 0 so the overlap dies
    const auto minus = bounds::mp1_bound(a, b, kUp, kDown, -1);
    CHECK(minus.commutator_term == doctest::Approx(2.0));
    CHECK(minus.overlap_term == doctest::Approx(0.0));
    CHECK(minus.rhs == doctest::Approx(2.0));

    // sign +: +i<[A,B]> = -2; |<0|(A + iB)|1>|^2 = |2|^2 = 4
    const auto plus = bounds::mp1_bound(a, b, kUp, kDown, +1);
    CHECK(plus.commutator_term == doctest::Approx(-2.0));
    CHECK(plus.overlap_term == doctest::Approx(4.0));
    CHECK(plus.rhs == doctest::Approx(2.0));

    // B-eigenstate with any perp phase: overlap = Delta^2 A * |<perpA|perp>|^2 = 1
    const StateVector phased_down =
        StateVector::normalized(CVector{0.0, std::polar(1.0, 0.83)});
    for (const int sign : {+1, -1}) {
        const auto r =
            bounds::mp1_bound(Observable::pauli_x(), Observable::pauli_z(), kUp, phased_down, sign);
        CHECK(r.commutator_term == doctest::Approx(0.0));
        CHECK(r.overlap_term == doctest::Approx(1.0));
    }

    CHECK_THROWS_AS(bounds::mp1_bound(a, b, kUp, kUp, +1), ValidationError);
    CHECK_THROWS_AS(bounds::mp1_bound(a, b, kUp, kDown, 2), ValidationError);
}

TEST_CASE("mp1_optimal: equality cases and the eigenstate self-reference") {
    // sigma_x, sigma_y on |0>: both signs reach lhs_sum = 2
    for (const int sign : {+1, -1}) {
        const auto r = bounds::mp1_optimal(Observable::pauli_x(), Observable::pauli_y(), kUp, sign);
        CHECK(r.rhs == doctest::Approx(2.0).epsilon(1e-12));
    }

    // B-eigenstate: optimal perp is |1>, rhs = Delta^2 A = 1 (the bound only
    // restates the quantity it bounds)
    const auto r = bounds::mp1_optimal(Observable::pauli_x(), Observable::pauli_z(), kUp, +1);
    CHECK(states_equivalent(r.perp_used.vec(), CVector{0.0, 1.0}));
    CHECK(r.rhs == doctest::Approx(1.0));
    CHECK_FALSE(r.degenerate_perp);

    // degenerate direction: A = B = sigma_z at its eigenstate
    const auto flat = bounds::mp1_optimal(Observable::pauli_z(), Observable::pauli_z(), kUp, +1);
    CHECK(flat.degenerate_perp);
    CHECK(flat.overlap_term == doctest::Approx(0.0));
    CHECK(flat.rhs == doctest::Approx(0.0));
    CHECK(std::abs(linalg::inner(flat.perp_used.vec(), kUp.vec())) <= 1e-10);

    CHECK_THROWS_AS(
        bounds::mp1_optimal(Observable::identity(1), Observable::identity(1),
                            StateVector(CVector{1.0}), +1),
        DimensionError);
}

TEST_CASE("mp1_optimal dominates random perpendicular states") {
    auto stream = sampler::RandomStream(13);
    for (int instance = 0; instance < 8; ++instance) {
        const std::size_t dim = 2 + instance % 4;
        const auto a = sampler::gue_observable(dim, stream);
        const auto b = sampler::gue_observable(dim, stream);
        const auto phi = sampler::haar_state(dim, stream);
        for (const int sign : {+1, -1}) {
            const auto best = bounds::mp1_optimal(a, b, phi, sign);
            for (int k = 0; k < 25; ++k) {
                const auto perp = random_orthogonal_state(phi, stream);
                CHECK(bounds::mp1_bound(a, b, phi, perp, sign).rhs <= best.rhs + 1e-10);
            }
        }
    }
}

TEST_CASE("mp2_bound: parallelogram form and its matrix-element twin") {
    CHECK(bounds::mp2_bound(Observable::pauli_x(), Observable::pauli_y(), kUp) ==
          doctest::Approx(1.0));
    CHECK(bounds::mp2_bound(Observable::pauli_x(), Observable::pauli_z(), kUp) ==
          doctest::Approx(0.5));

    auto stream = sampler::RandomStream(17);
    const auto a = sampler::gue_observable(3, stream);
    const Observable neg(a.mat() * Complex{-1.0, 0.0});
    CHECK(bounds::mp2_bound(a, neg, sampler::haar_state(3, stream)) == doctest::Approx(0.0));

    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t dim = 2 + trial % 7;
        auto sub = sampler::RandomStream::substream(99, trial);
        const auto x = sampler::gue_observable(dim, sub);
        const auto y = sampler::gue_observable(dim, sub);
        const auto phi = sampler::haar_state(dim, sub);
        const double direct = bounds::mp2_bound(x, y, phi);
        const auto via_av = bounds::mp2_bound_av_form(x, y, phi);
        if (via_av) {
            CHECK(std::abs(*via_av - direct) <= 1e-10 * quantum::scale_of(x, y));
        }
    }
}

TEST_CASE("m12a_rhs: stays alive where the commutator expectation dies") {
    CHECK(bounds::m12a_rhs(Observable::pauli_x(), Observable::pauli_y(), equator_state()) ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK(bounds::m12a_rhs(Observable::pauli_x(), Observable::pauli_y(), kUp) ==
          doctest::Approx(0.0));

    auto stream = sampler::RandomStream(19);
    const auto a = sampler::gue_observable(4, stream);
    CHECK(bounds::m12a_rhs(a, Observable::identity(4), sampler::haar_state(4, stream)) ==
          doctest::Approx(0.0));
}

TEST_CASE("bound_suite: eigenstate, counterexample and fully degenerate cases") {
    const auto eig = bounds::bound_suite(Observable::pauli_x(), Observable::pauli_z(), kUp);
    CHECK(eig.self_referential);
    CHECK(eig.lhs_sum == doctest::Approx(1.0));
    CHECK(eig.hr.rhs == doctest::Approx(0.0));
    CHECK(eig.mp1_best == doctest::Approx(1.0));
    CHECK(eig.mp2 == doctest::Approx(0.5));
    CHECK(eig.max_bound == doctest::Approx(1.0));
    CHECK(eig.slacks.mp1_best >= -1e-12);
    CHECK(eig.slacks.mp2 >= -1e-12);
    CHECK(eig.slacks.m12a >= -1e-12);

    const auto ce = bounds::bound_suite(Observable::pauli_x(), Observable::pauli_y(),
                                        equator_state());
    CHECK(ce.hr.rhs == doctest::Approx(0.0));
    CHECK(ce.m12a == doctest::Approx(1.0).epsilon(1e-12));
    CHECK_FALSE(ce.self_referential);

    const auto zero = bounds::bound_suite(Observable::pauli_z(), Observable::pauli_z(), kUp);
    CHECK(zero.lhs_sum == doctest::Approx(0.0));
    CHECK(zero.hr.lhs_product == doctest::Approx(0.0));
    CHECK(zero.hr.rhs == doctest::Approx(0.0));
    CHECK(zero.mp1_best == doctest::Approx(0.0));
    CHECK(zero.mp2 == doctest::Approx(0.0));
    CHECK(zero.m12a == doctest::Approx(0.0));
    CHECK(zero.max_bound == doctest::Approx(0.0));
    CHECK(zero.self_referential);
}

TEST_CASE("bound chain: m12a <= 2 DeltaA DeltaB <= lhs_sum on random instances") {
    for (int trial = 0; trial < 400; ++trial) {
        const std::size_t dim = 2 + trial % 7;
        auto stream = sampler::RandomStream::substream(7777, trial);
        const auto a = sampler::gue_observable(dim, stream);
        const auto b = sampler::gue_observable(dim, stream);
        const auto phi = sampler::haar_state(dim, stream);
        const double scale = quantum::scale_of(a, b);

        const double m12a = bounds::m12a_rhs(a, b, phi);
        const double da = quantum::moments(a, phi).std_dev;
        const double db = quantum::moments(b, phi).std_dev;
        const double lhs = da * da + db * db;
        CHECK(m12a <= 2.0 * da * db + 1e-9 * scale);
        CHECK(2.0 * da * db <= lhs + 1e-9 * scale);
    }
}

TEST_CASE("eigenstate reduction: mp2 is exactly half the left side") {
    auto stream = sampler::RandomStream(23);
    for (int trial = 0; trial < 10; ++trial) {
        const std::size_t dim = 2 + trial % 5;
        const auto a = sampler::gue_observable(dim, stream);
        const auto b = sampler::gue_observable(dim, stream);
        const auto es = linalg::hermitian_eigensystem(b.mat());
        for (std::size_t k = 0; k < dim; ++k) {
            const StateVector psi = StateVector::normalized(es.eigenvectors[k]);
            const auto suite = bounds::bound_suite(a, b, psi);
            CHECK(std::abs(suite.mp2 - 0.5 * suite.lhs_sum) <= 1e-10 * quantum::scale_of(a, b));
            CHECK(suite.hr.rhs <= 1e-9 * quantum::scale_of(a, b));
            CHECK(suite.self_referential);

            // triviality decomposition: mp1 rhs = c * lhs_sum with c <= 1,
            // so the bound only says (1-c) * Delta^2 A >= 0
            const double c_factor = suite.lhs_sum > 0.0 ? suite.mp1_best / suite.lhs_sum : 0.0;
            CHECK(c_factor <= 1.0 + 1e-9);
            CHECK((1.0 - c_factor) * suite.lhs_sum >= -1e-9 * quantum::scale_of(a, b));
        }
    }
}

TEST_CASE("suite_within_validity flags corrupted reports") {
    const auto good = bounds::bound_suite(Observable::pauli_x(), Observable::pauli_y(), kUp);
    const double scale = quantum::scale_of(Observable::pauli_x(), Observable::pauli_y());
    CHECK(bounds::suite_within_validity(good, scale));

    auto corrupted = good;
    corrupted.slacks.mp2 = -1e-3; // an injected sign error would surface here
    CHECK_FALSE(bounds::suite_within_validity(corrupted, scale));

    corrupted = good;
    corrupted.hr.slack = -1e-3;
    CHECK_FALSE(bounds::suite_within_validity(corrupted, scale));
}
