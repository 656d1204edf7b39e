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
#include "qbound/av_decomposition.hpp"

#include <cmath>

namespace qbound::av {

using linalg::apply;
using linalg::Complex;
using linalg::CVector;
using quantum::Observable;
using quantum::StateVector;

AVDecomposition av_decompose(const Observable& F, const StateVector& psi, double eps_eigen) {
    if (eps_eigen <= 0.0) throw ValidationError("av_decompose: eps_eigen must be > 0");
    const quantum::MomentReport m = quantum::moments(F, psi);
    if (m.std_dev <= eps_eigen) {
        return {m.mean, m.std_dev, std::nullopt};
    }
    CVector perp = quantum::deviation_apply(F, psi);
    perp *= Complex{1.0 / m.std_dev, 0.0};
    // deviation / sigma is unit by construction and orthogonal to psi;
    // its inner product with the deviation vector equals sigma, fixing the
    // global phase.
    return {m.mean, m.std_dev, StateVector(perp)};
}

double av_reconstruct_residual(const Observable& F, const StateVector& psi,
                               const AVDecomposition& dec) {
    CVector residual = apply(F.mat(), psi.vec());
    for (std::size_t i = 0; i < residual.dim(); ++i) {
        residual[i] -= dec.mean * psi.vec()[i];
        if (dec.perp_state) residual[i] -= dec.sigma * dec.perp_state->vec()[i];
    }
    return linalg::norm(residual);
}

}  // namespace qbound::av
