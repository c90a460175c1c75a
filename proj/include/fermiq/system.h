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

#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "fermiq/computer.h"
#include "fermiq/pauli.h"
#include "fermiq/sq_operator.h"
#include "fermiq/types.h"

namespace fermiq {

/// Molecular integrals plus the Hamiltonians derived from them.
///
/// Spin-orbital convention: spatial orbital p maps to qubits 2p (alpha) and
/// 2p+1 (beta). Systems read from a qubit-Hamiltonian JSON file carry no
/// integrals (`has_integrals` false) and only the qubit Hamiltonian.
struct MolecularSystem {
    std::string name;
    std::size_t n_spatial = 0;
    std::size_t n_electrons = 0;
    int ms2 = 0;
    double e_nuclear = 0.0;
    bool has_integrals = false;
    std::vector<double> h;  // n_spatial^2, row-major h[p*n + q]
    std::vector<double> g;  // n_spatial^4, chemist (pq|rs)
    /// One entry per spatial orbital; empty when unknown.
    std::vector<double> orbital_energies;
    /// Molpro D2h irrep labels (1..8) per spatial orbital; empty when unknown.
    std::vector<int> orbital_irreps;

    SQOperator sq_hamiltonian;
    QubitOperator qubit_hamiltonian;
    BasisAddress hf_reference;

    std::size_t n_qubits() const { return n_qubits_; }
    void set_n_qubits(std::size_t n) { n_qubits_ = n; }
    /// Number of distinct Pauli strings in the qubit Hamiltonian, identity included.
    std::size_t n_pauli_strings() const { return qubit_hamiltonian.size(); }

    double h1(std::size_t p, std::size_t q) const { return h[p * n_spatial + q]; }
    double g2(std::size_t p, std::size_t q, std::size_t r, std::size_t s) const {
        return g[((p * n_spatial + q) * n_spatial + r) * n_spatial + s];
    }
    /// Orbital energy of a spin orbital (the energy of its spatial orbital).
    double spin_orbital_energy(std::size_t so) const { return orbital_energies.at(so / 2); }

  private:
    std::size_t n_qubits_ = 0;
};

/// Reads an FCIDUMP file. Throws ParseError (with the offending line number
/// where there is one) on malformed input and std::runtime_error when the
/// file cannot be opened.
MolecularSystem load_fcidump(const std::string& path);
MolecularSystem parse_fcidump(std::istream& in, const std::string& name = "");

/// Reads {"n_qubits": n, "terms": [{"coeff": [re, im], "paulis": [[q, "X"], ...]}]}
/// with an optional "n_electrons" field (default 0) that places the reference
/// on the lowest qubits.
MolecularSystem load_hamiltonian_json(const std::string& path);
MolecularSystem parse_hamiltonian_json(const std::string& text, const std::string& name = "");

/// Assembles a system from spatial integrals: fills in missing orbital
/// energies from the Fock diagonal, builds the second-quantized and qubit
/// Hamiltonians and the reference determinant.
MolecularSystem make_molecular_system(std::size_t n_spatial, std::size_t n_electrons, int ms2, double e_nuclear,
                                      std::vector<double> h, std::vector<double> g,
                                      std::vector<double> orbital_energies = {}, std::vector<int> orbital_irreps = {});

/// sum h_pq a+_p a_q + 1/4 sum <pq||rs> a+_p a+_q a_s a_r + E_nuc.
SQOperator build_sq_hamiltonian(const MolecularSystem& sys);
/// Jordan-Wigner image of build_sq_hamiltonian with E_nuc as the identity term.
QubitOperator build_qubit_hamiltonian(const MolecularSystem& sys);

/// Lowest-energy single determinant for the given electron count and 2*S_z:
/// alpha electrons in the lowest alpha spin orbitals, beta likewise.
BasisAddress hf_determinant(std::size_t n_spatial, std::size_t n_electrons, int ms2);

/// Flips the occupied qubits of the reference. Throws std::invalid_argument
/// unless `state` is |0...0> and wide enough.
void prepare_reference(const MolecularSystem& sys, Computer& state);

/// N = sum_p a+_p a_p over n_qubits modes, JW-transformed.
QubitOperator number_operator(std::size_t n_qubits);

/// <b|H|b> for a computational basis state.
double diagonal_energy(const QubitOperator& h, BasisAddress b);

}  // namespace fermiq
