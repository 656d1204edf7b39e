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

#include <optional>

#include "qbound/quantum.hpp"

/// The Aharonov-Vaidman split of F|psi> into components parallel and
/// perpendicular to |psi>:
///
///     F|psi> = <F>_psi |psi> + DeltaF_psi |psi_perp>,   <psi|psi_perp> = 0.

namespace qbound::av {

struct AVDecomposition {
    double mean;  // <F>_psi
    double sigma; // Delta_psi F >= 0
    /// Absent when sigma <= eps_eigen: at an eigenstate the perpendicular
    /// direction is undefined and callers must branch explicitly.
    std::optional<quantum::StateVector> perp_state;
};

/// Decompose F|psi>. The perpendicular state carries the phase convention
/// <perp | deltaF psi> = sigma (real, positive), making it deterministic.
AVDecomposition av_decompose(const quantum::Observable& F, const quantum::StateVector& psi,
                             double eps_eigen = tol::kEpsEigen);

/// Norm of  F|psi> - mean |psi> - sigma |perp>  (perp term omitted when
/// absent). Bounded by kConsistency * (1 + max_abs(F)) for a decomposition
/// produced from (F, psi).
double av_reconstruct_residual(const quantum::Observable& F, const quantum::StateVector& psi,
                               const AVDecomposition& dec);

}  // namespace qbound::av
