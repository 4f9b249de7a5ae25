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

#include "sparseprep/angle_table.hpp"

namespace sparseprep {

/// Gate-merging pass over one rotation level.
///
/// Two keys identical except at a single non-'e' position, whose angle and
/// phase agree within eps_merge, collapse into one key with 'e' at that
/// position. The scan runs keys ascending and flip positions ascending and
/// restarts after every merge, until a fixed point. The merged map covers
/// exactly the concrete patterns of the input with the same values; its size
/// never grows. eps_merge absorbs floating-point jitter in the computed
/// angles; the comparison is absolute on both components.
AngleLevel optimize_angles(const AngleLevel& level, double eps_merge = 1e-12);

/// optimize_angles applied to every level.
AngleTable optimize_table(const AngleTable& table, double eps_merge = 1e-12);

}  // namespace sparseprep
