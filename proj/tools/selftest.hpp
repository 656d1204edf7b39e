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

#include <ostream>

namespace qbound::cli {

/// Run the invariant suite at reduced sample counts, printing one timed
/// line per suite. Returns the number of failed suites.
int run_selftest(std::ostream& out, std::uint64_t seed);

}  // namespace qbound::cli
