// Copyright 2026 The fermiq Authors
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

#include <string>
#include <utility>
#include <vector>

#include "fermiq/gate.h"
#include "fermiq/pauli.h"

namespace fermiq {

/// Ordered gate sequence. The first stored gate acts first.
class Circuit {
  public:
    Circuit() = default;
    explicit Circuit(std::vector<Gate> gates) : gates_(std::move(gates)) {}

    void add_gate(const Gate& g) { gates_.push_back(g); }
    void add_circuit(const Circuit& c) { gates_.insert(gates_.end(), c.gates_.begin(), c.gates_.end()); }

    const std::vector<Gate>& gates() const { return gates_; }
    std::size_t size() const { return gates_.size(); }
    bool empty() const { return gates_.empty(); }

    /// Reversed order with every gate replaced by its adjoint.
    Circuit adjoint() const;

    std::size_t count(GateKind kind) const;
    std::size_t cnot_count() const { return count(GateKind::CNOT); }
    /// Highest qubit touched plus one.
    std::size_t n_qubits() const;

    /// One gate per line in application order, e.g. "H 2\nCNOT 1 0\n".
    std::string str() const;

    friend bool operator==(const Circuit&, const Circuit&) = default;

  private:
    std::vector<Gate> gates_;
};

/// Parses the str() format back into a circuit. Throws ParseError.
Circuit parse_circuit(const std::string& text);

/// Circuit for exp(factor * string) together with the global phase the gates
/// do not carry.
///
/// `factor` must be purely imaginary (i*theta); a real part above 1e-14 is
/// rejected because the result would not be unitary. Non-identity strings map
/// to: basis change (H for X, Rx(pi/2) for Y), CNOT ladder over the
/// participating qubits in ascending order, Rz(-2 Im(factor)) on the highest
/// one, then the mirror image; the phase is 1. The identity string maps to an
/// empty circuit and phase exp(factor).
std::pair<Circuit, Complex> exponentiate_pauli_string(Complex factor, const PauliString& string);

}  // namespace fermiq
