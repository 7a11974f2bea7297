// Copyright 2026 The icobat Authors
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

// OpenQASM 3 text for the two-charger circuit, and a reader for the subset
// the emitter produces.

#include <stdexcept>
#include <string>
#include <string_view>

#include "icobat/circuit.hpp"

namespace icobat::qasm {

class ParseError : public std::runtime_error {
  public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("qasm line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

  private:
    int line_;
};

/// Emits qubits D, Q, C1, C2 in that order, the preparation, a barrier, the
/// charging gates, a barrier, then the x-basis switch and z-basis battery
/// measurements. `rxx`/`ryy` are defined in terms of stdgates.inc gates.
/// An empty circuit yields the header and declarations only.
std::string emit_qasm(const circuit::QuantumCircuit& circuit);

/// Inverse of emit_qasm. Throws ParseError on anything outside that subset.
circuit::QuantumCircuit parse_qasm(std::string_view text);

/// Shortest round-trip decimal text of a double.
std::string format_double(double v);

}  // namespace icobat::qasm
