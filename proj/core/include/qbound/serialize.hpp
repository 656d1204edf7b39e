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

#include <string>
#include <vector>

#include "qbound/sampler.hpp"
#include "qbound/scenarios.hpp"

/// Canonical report serialization. JSON uses a fixed field order and
/// 17-significant-digit float formatting, so parsing an emitted document and
/// re-emitting it reproduces the bytes exactly. CSV columns are fixed and
/// versioned in a leading comment line.

namespace qbound::io {

/// %.17g: shortest decimal within 17 significant digits; round-trips the
/// double exactly.
std::string format_double(double value);

std::string to_json(const bounds::BoundSuiteReport& report);
bounds::BoundSuiteReport suite_report_from_json(const std::string& text);

/// {"dim": d, "vector": [[re, im], ...]}, the shared state schema.
std::string to_json(const quantum::StateVector& state);

std::string to_json(const scenarios::ScenarioResult& result);
std::string to_json(const sampler::TightnessStats& stats);

struct ApproachMeta {
    std::size_t dim;
    std::size_t eig_index;
    std::size_t n_steps;
    std::uint64_t seed;
};
std::string approach_summary_json(const ApproachMeta& meta,
                                  const std::vector<sampler::ApproachStep>& steps);

/// Re-emit any previously emitted JSON document canonically (used by the
/// round-trip checks; byte-identical for documents this library produced).
std::string canonical_json_reemit(const std::string& text);

std::string to_text(const bounds::BoundSuiteReport& report);
std::string to_text(const scenarios::ScenarioResult& result);

std::string check_csv(const bounds::BoundSuiteReport& report);
std::string scan_csv(const std::vector<bounds::BoundSuiteReport>& reports);
std::string approach_csv(const std::vector<sampler::ApproachStep>& steps);

}  // namespace qbound::io
