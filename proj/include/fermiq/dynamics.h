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

#include <cstdint>
#include <vector>

#include "fermiq/circuit.h"
#include "fermiq/computer.h"
#include "fermiq/pauli.h"

namespace fermiq {

enum class TermOrder {
    /// Descending |h_l|, ties broken by PauliString ordering.
    DescendingMagnitude,
    /// Order of the (simplified) operator as stored.
    AsGiven,
};

struct EvolutionSpec {
    double time = 0.0;
    std::size_t trotter_steps = 1;
    TermOrder ordering = TermOrder::DescendingMagnitude;
    bool exact = false;
};

/// A circuit plus the scalar phase it does not carry. Applying `circuit` to a
/// state and multiplying by `phase` gives the intended action.
struct PhasedCircuit {
    Circuit circuit;
    Complex phase{1.0, 0.0};
};

/// Non-identity terms of the simplified Hermitian operator, in Trotter order.
/// Throws std::invalid_argument if a coefficient has an imaginary part above 1e-12.
std::vector<QubitOperator::Term> trotter_terms(const QubitOperator& h, TermOrder ordering);

/// First-order product formula (prod_l exp(-i t h_l P_l / r))^r. The identity
/// term only contributes the phase exp(-i t h_I).
PhasedCircuit trotter_circuit(const QubitOperator& h, const EvolutionSpec& spec);

/// CNOTs in one application of trotter_circuit, without building it.
std::size_t trotter_cnot_count(const QubitOperator& h, std::size_t trotter_steps);

/// state <- exp(-i t H) state by a scaled Taylor series on the state vector.
/// Throws CapacityError when the register exceeds kOracleMaxQubits.
void exact_evolve(const QubitOperator& h, double t, Computer& state);

/// Trotter circuit controlled on `ancilla`: every Rz becomes cRz and the
/// identity phase becomes R(-t h_I) on the ancilla. The remaining gates cancel
/// pairwise when the ancilla is 0. Throws std::invalid_argument if the
/// ancilla is a qubit of `h`.
Circuit controlled_evolution_circuit(const QubitOperator& h, const EvolutionSpec& spec, std::size_t ancilla);

/// Applies the evolution described by `spec` (exact or Trotterized, phase included).
void evolve(const QubitOperator& h, const EvolutionSpec& spec, Computer& state);

enum class MatrixElementMethod { Direct, HadamardTest };

struct MatrixElementOptions {
    MatrixElementMethod method = MatrixElementMethod::Direct;
    /// Zero for exact ancilla readout; otherwise shots per ancilla observable.
    std::size_t shots = 0;
    std::uint64_t seed = 0;
};

/// <bra|O|ket> where each state is its preparation applied to |0...0> on
/// n_qubits. O is the identity when `op` is null. The Hadamard test uses one
/// extra qubit (index n_qubits) as the ancilla and reads <X> + i<Y> from it,
/// one circuit per Pauli term of O.
Complex matrix_element(const PhasedCircuit& bra, const PhasedCircuit& ket, const QubitOperator* op,
                       std::size_t n_qubits, const MatrixElementOptions& options = {});

}  // namespace fermiq
