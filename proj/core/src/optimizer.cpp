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

#include "sparseprep/optimizer.hpp"

#include <cmath>
#include <string>

namespace sparseprep {

namespace {

bool merge_once(AngleLevel& level, double eps_merge) {
  for (auto it = level.begin(); it != level.end(); ++it) {
    const std::string& key = it->first;
    for (size_t i = 0; i < key.size(); ++i) {
      if (key[i] == 'e') continue;
      std::string neighbor = key;
      neighbor[i] = (key[i] == '0') ? '1' : '0';
      const auto partner = level.find(neighbor);
      if (partner == level.end()) continue;
      if (std::abs(partner->second.theta - it->second.theta) > eps_merge ||
          std::abs(partner->second.phi - it->second.phi) > eps_merge) {
        continue;
      }
      std::string merged = key;
      merged[i] = 'e';
      const AnglePair value = it->second;
      level.erase(partner);
      level.erase(it);
      level.emplace(std::move(merged), value);
      return true;
    }
  }
  return false;
}

}  // namespace

AngleLevel optimize_angles(const AngleLevel& level, double eps_merge) {
  AngleLevel merged = level;
  while (merged.size() > 1 && merge_once(merged, eps_merge)) {
  }
  return merged;
}

AngleTable optimize_table(const AngleTable& table, double eps_merge) {
  AngleTable optimized;
  optimized.levels.reserve(table.levels.size());
  for (const AngleLevel& level : table.levels) {
    optimized.levels.push_back(optimize_angles(level, eps_merge));
  }
  return optimized;
}

}  // namespace sparseprep
