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

/// Shared tolerance constants. Every threshold used across the library is
/// defined here; modules must not introduce ad-hoc epsilons.
///
/// "scale" in relative tolerances means `1 + max_abs(A) * max_abs(B)` for an
/// observable pair; see quantum::scale_of.

namespace qbound::tol {

/// Relative hermiticity test: max|M - M^dag| <= kHermiticity * (1 + max|M|).
inline constexpr double kHermiticity = 1e-10;

/// Orthogonality checks: |<phi|phi_perp>| against this, scaled by norms.
inline constexpr double kOrthogonality = 1e-12;

/// Unit-norm checks on state vectors: | ||v|| - 1 | <= kNormalization.
inline constexpr double kNormalization = 1e-12;

/// Deviations below this are treated as an exact eigenstate: the deviation
/// direction is numerically meaningless and must not be normalized.
inline constexpr double kEpsEigen = 1e-8;

/// Floor for bound slacks: a valid bound may go negative only by
/// kSlackFloor * scale (rounding noise).
inline constexpr double kSlackFloor = 1e-9;

/// Internal-consistency identities (imaginary residue of an expectation
/// value, the commutator identity, two-path variance agreement).
inline constexpr double kConsistency = 1e-10;

}  // namespace qbound::tol
