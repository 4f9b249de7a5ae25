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

#include "sparseprep/io.hpp"

#include <charconv>
#include <cstdio>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace sparseprep {

namespace {

bool is_blank_or_comment(const std::string& line) {
  for (char ch : line) {
    if (ch == '#') return true;
    if (!isspace(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

std::vector<std::string> split_tokens(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream stream(line);
  std::string token;
  while (stream >> token) tokens.push_back(token);
  return tokens;
}

uint64_t parse_uint(const std::string& token, const char* what) {
  uint64_t value = 0;
  const auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw std::invalid_argument(std::string("malformed ") + what + ": '" +
                                token + "'");
  }
  return value;
}

double parse_real(const std::string& token, const char* what) {
  double value = 0.0;
  const auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw std::invalid_argument(std::string("malformed ") + what + ": '" +
                                token + "'");
  }
  return value;
}

std::string pattern_text(const std::string& bits) {
  return bits.empty() ? "-" : bits;
}

std::string pattern_from_text(const std::string& token) {
  return token == "-" ? std::string{} : token;
}

}  // namespace

std::string format_double(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

SparseVector parse_sparse_vector(std::istream& in) {
  std::string line;
  uint32_t num_qubits = 0;
  bool saw_header = false;
  std::vector<SparseEntry> entries;
  while (std::getline(in, line)) {
    if (is_blank_or_comment(line)) continue;
    if (!saw_header) {
      const auto tokens = split_tokens(line);
      if (tokens.size() != 1 || tokens[0].rfind("n=", 0) != 0) {
        throw std::invalid_argument("expected header line 'n=<int>'");
      }
      const uint64_t n = parse_uint(tokens[0].substr(2), "qubit count");
      if (n == 0 || n > 63) {
        throw std::invalid_argument("qubit count must be in [1, 63]");
      }
      num_qubits = static_cast<uint32_t>(n);
      saw_header = true;
      continue;
    }
    const auto tokens = split_tokens(line);
    if (tokens.size() != 3) {
      throw std::invalid_argument("expected '<location> <re> <im>', got: '" +
                                  line + "'");
    }
    entries.push_back(SparseEntry{
        parse_uint(tokens[0], "location"),
        {parse_real(tokens[1], "amplitude"), parse_real(tokens[2], "amplitude")}});
  }
  if (!saw_header) {
    throw std::invalid_argument("missing 'n=<int>' header line");
  }
  return SparseVector(num_qubits, std::move(entries));
}

SparseVector parse_sparse_vector(const std::string& text) {
  std::istringstream stream(text);
  return parse_sparse_vector(stream);
}

std::string serialize_sparse_vector(const SparseVector& vector) {
  std::string out = "n=" + std::to_string(vector.num_qubits()) + "\n";
  for (const SparseEntry& entry : vector.entries()) {
    out += std::to_string(entry.location) + " " +
           format_double(entry.amplitude.real()) + " " +
           format_double(entry.amplitude.imag()) + "\n";
  }
  return out;
}

Circuit parse_circuit(std::istream& in) {
  std::string line;
  bool saw_qubits = false;
  bool saw_ancillas = false;
  Circuit circuit;
  while (std::getline(in, line)) {
    if (is_blank_or_comment(line)) continue;
    const auto tokens = split_tokens(line);
    if (!saw_qubits) {
      if (tokens.size() != 2 || tokens[0] != "qubits") {
        throw std::invalid_argument("expected header line 'qubits <n>'");
      }
      circuit.n_main = static_cast<uint32_t>(parse_uint(tokens[1], "qubit count"));
      saw_qubits = true;
      continue;
    }
    if (!saw_ancillas) {
      if (tokens.size() != 2 || tokens[0] != "ancillas") {
        throw std::invalid_argument("expected header line 'ancillas <n>'");
      }
      circuit.n_ancilla =
          static_cast<uint32_t>(parse_uint(tokens[1], "ancilla count"));
      saw_ancillas = true;
      continue;
    }
    const std::string& op = tokens[0];
    if (op == "X" && tokens.size() == 2) {
      circuit.push(Gate::x(static_cast<uint32_t>(parse_uint(tokens[1], "qubit"))));
    } else if (op == "CNOT" && tokens.size() == 3) {
      circuit.push(Gate::cnot(static_cast<uint32_t>(parse_uint(tokens[1], "qubit")),
                              static_cast<uint32_t>(parse_uint(tokens[2], "qubit"))));
    } else if (op == "CCX" && tokens.size() == 4) {
      circuit.push(Gate::toffoli(
          static_cast<uint32_t>(parse_uint(tokens[1], "qubit")),
          static_cast<uint32_t>(parse_uint(tokens[2], "qubit")),
          static_cast<uint32_t>(parse_uint(tokens[3], "qubit"))));
    } else if (op == "RY" && tokens.size() == 3) {
      circuit.push(Gate::ry(parse_real(tokens[1], "angle"),
                            static_cast<uint32_t>(parse_uint(tokens[2], "qubit"))));
    } else if (op == "P" && tokens.size() == 3) {
      circuit.push(Gate::phase(parse_real(tokens[1], "angle"),
                               static_cast<uint32_t>(parse_uint(tokens[2], "qubit"))));
    } else if (op == "MCROT" && tokens.size() == 5) {
      ControlPattern pattern;
      pattern.bits = pattern_from_text(tokens[1]);
      pattern.target = static_cast<uint32_t>(parse_uint(tokens[4], "qubit"));
      circuit.push(Gate::mcrot(std::move(pattern), parse_real(tokens[2], "angle"),
                               parse_real(tokens[3], "angle")));
    } else {
      throw std::invalid_argument("malformed gate line: '" + line + "'");
    }
  }
  if (!saw_qubits || !saw_ancillas) {
    throw std::invalid_argument("missing circuit header lines");
  }
  return circuit;
}

Circuit parse_circuit(const std::string& text) {
  std::istringstream stream(text);
  return parse_circuit(stream);
}

std::string serialize_circuit(const Circuit& circuit) {
  std::string out = "qubits " + std::to_string(circuit.n_main) + "\n" +
                    "ancillas " + std::to_string(circuit.n_ancilla) + "\n";
  for (const Gate& gate : circuit.gates) {
    switch (gate.kind) {
      case GateKind::X:
        out += "X " + std::to_string(gate.a) + "\n";
        break;
      case GateKind::CNOT:
        out += "CNOT " + std::to_string(gate.a) + " " + std::to_string(gate.b) +
               "\n";
        break;
      case GateKind::Toffoli:
        out += "CCX " + std::to_string(gate.a) + " " + std::to_string(gate.b) +
               " " + std::to_string(gate.c) + "\n";
        break;
      case GateKind::Ry:
        out += "RY " + format_double(gate.theta) + " " + std::to_string(gate.a) +
               "\n";
        break;
      case GateKind::Phase:
        out += "P " + format_double(gate.phi) + " " + std::to_string(gate.a) +
               "\n";
        break;
      case GateKind::MCRot:
        out += "MCROT " + pattern_text(gate.pattern.bits) + " " +
               format_double(gate.theta) + " " + format_double(gate.phi) + " " +
               std::to_string(gate.pattern.target) + "\n";
        break;
    }
  }
  return out;
}

std::string dump_angle_table(const AngleTable& table) {
  std::string out;
  for (uint32_t k = 0; k < table.depth(); ++k) {
    for (const auto& [pattern, angles] : table.levels[k]) {
      out += std::to_string(k) + " " + pattern_text(pattern) + " " +
             format_double(angles.theta) + " " + format_double(angles.phi) + "\n";
    }
  }
  return out;
}

}  // namespace sparseprep
