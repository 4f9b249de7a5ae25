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

#include <iosfwd>
#include <string>

#include "sparseprep/angle_table.hpp"
#include "sparseprep/circuit.hpp"
#include "sparseprep/sparse_vector.hpp"

namespace sparseprep {

// Sparse-vector text format: UTF-8, first line "n=<int>", then one entry per
// line "<location> <re> <im>", whitespace separated. '#' starts a comment
// line. Input entries may be unsorted; parsing sorts them.
SparseVector parse_sparse_vector(std::istream& in);
SparseVector parse_sparse_vector(const std::string& text);
std::string serialize_sparse_vector(const SparseVector& vector);

// Circuit text format: header lines "qubits <n_main>" and
// "ancillas <n_ancilla>", then one gate per line:
//   X q | CNOT c t | CCX c1 c2 t | RY theta q | P phi q
//   MCROT pattern theta phi target
// with the pattern over {0,1,e}; a zero-length pattern is written "-".
Circuit parse_circuit(std::istream& in);
Circuit parse_circuit(const std::string& text);
std::string serialize_circuit(const Circuit& circuit);

// Angle-table debug dump: one line per entry, "k <pattern> <theta> <phi>";
// the empty level-0 pattern is written "-".
std::string dump_angle_table(const AngleTable& table);

/// Shortest decimal form that parses back to exactly the same double.
std::string format_double(double value);

}  // namespace sparseprep
