// Copyright 2026 The Sparseprep Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace sparseprep {

/// Rotation angle theta in [0, pi] and phase phi in (-2*pi, 2*pi), both
/// radians. Phases are kept unreduced.
struct AnglePair {
  double theta = 0.0;
  double phi = 0.0;

  friend bool operator==(const AnglePair&, const AnglePair&) = default;
};

/// One rotation layer: control bit-pattern -> (theta, phi). Keys of the
/// level-k map are k symbols over {0,1}; the merge optimizer may introduce
/// 'e' wildcards. std::map keeps keys in ascending pattern order, which is
/// the emission order of the circuit builder.
using AngleLevel = std::map<std::string, AnglePair>;

/// Per-level rotation data for an n-qubit circuit: levels[k] drives the
/// rotation of qubit k controlled on qubits 0..k-1. Entries whose angle and
/// phase are both zero are never stored.
struct AngleTable {
  std::vector<AngleLevel> levels;

  uint32_t depth() const { return static_cast<uint32_t>(levels.size()); }

  uint64_t entry_count() const {
    uint64_t count = 0;
    for (const AngleLevel& level : levels) count += level.size();
    return count;
  }

  friend bool operator==(const AngleTable&, const AngleTable&) = default;
};

}  // namespace sparseprep
