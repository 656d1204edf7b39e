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

#include <stdexcept>
#include <string>

namespace qbound {

/// Operands with incompatible dimensions.
class DimensionError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// A value violates a documented precondition (non-finite entry,
/// non-Hermitian matrix, non-unit state, non-orthogonal auxiliary state).
class ValidationError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Normalization of a (near-)zero vector: the direction is degenerate.
class DegenerateVectorError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// An identity that holds by construction was violated beyond tolerance.
/// Signals an implementation bug or a pathological input, never a physics
/// result.
class ConsistencyError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

}  // namespace qbound
