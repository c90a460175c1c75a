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
#include <map>
#include <span>
#include <vector>

#include "fermiq/circuit.h"
#include "fermiq/gate.h"
#include "fermiq/pauli.h"
#include "fermiq/rng.h"
#include "fermiq/types.h"

namespace fermiq {

/// Default cap on the number of amplitudes a Computer may allocate (2^26).
inline constexpr std::size_t kDefaultMaxAmplitudes = std::size_t{1} << 26;

/// Dense state vector over n qubits. The amplitude index is the BasisAddress
/// integer, so qubit 0 is the least significant bit.
///
/// Every mutating call validates its qubit indices before touching the
/// amplitudes; a throwing call leaves the state unchanged.
class Computer {
  public:
    /// |0...0>. Throws CapacityError for n_qubits == 0, n_qubits > 64 or when
    /// 2^n_qubits exceeds `max_amplitudes`.
    explicit Computer(std::size_t n_qubits, std::size_t max_amplitudes = kDefaultMaxAmplitudes);

    std::size_t n_qubits() const { return n_qubits_; }
    std::size_t dimension() const { return coeff_.size(); }

    std::span<const Complex> amplitudes() const { return coeff_; }
    Complex amplitude(BasisAddress b) const { return coeff_.at(b.index()); }

    /// Replaces the amplitudes; the size must match. No renormalization.
    void set_amplitudes(std::vector<Complex> amps);
    /// Computational basis state |b>.
    void set_basis_state(BasisAddress b);
    void scale(Complex c);

    void apply_gate(const Gate& g);
    void apply_circuit(const Circuit& c);
    /// Applies every gate of `c` only on the subspace where qubit `control` is 1.
    void apply_circuit_controlled(const Circuit& c, std::size_t control);
    void apply_gate_controlled(const Gate& g, std::size_t control);

    /// In-place psi <- P psi.
    void apply_pauli(const PauliString& p, Complex coeff = 1.0);
    /// In-place psi <- O psi (not unitary in general).
    void apply_operator(const QubitOperator& op);

    /// Exact sum_l u_l <psi|U_l|psi>.
    Complex expectation(const QubitOperator& op) const;
    /// Real part of expectation(), for Hermitian observables.
    double energy(const QubitOperator& op) const { return expectation(op).real(); }
    double norm() const;

    /// Shot-based estimate: each Pauli term is sampled independently from its
    /// exact +/-1 outcome distribution, Prob(+1) = (1 + <P>)/2, which is what a
    /// basis rotation followed by a Born-rule readout of the parity produces.
    /// Deterministic for fixed `rng` state. Throws std::invalid_argument on n_shots == 0.
    Complex measure(const QubitOperator& op, std::size_t n_shots, Rng& rng) const;
    Complex measure(const QubitOperator& op, std::size_t n_shots, std::uint64_t seed) const {
        Rng rng(seed);
        return measure(op, n_shots, rng);
    }

    /// Draws n_shots basis states from |C|^2. Outcomes are returned in draw order.
    std::vector<BasisAddress> sample_basis_states(std::size_t n_shots, Rng& rng) const;
    std::vector<BasisAddress> sample_basis_states(std::size_t n_shots, std::uint64_t seed) const {
        Rng rng(seed);
        return sample_basis_states(n_shots, rng);
    }

    /// Non-zero amplitudes as "(re,im) |0110>" lines.
    std::string str(double threshold = 1e-12) const;

  private:
    void check_qubit(std::size_t q) const;
    void check_gate(const Gate& g) const;
    void apply_gate_masked(const Gate& g, std::uint64_t extra_controls);

    std::size_t n_qubits_;
    std::vector<Complex> coeff_;
};

/// <a|b>. Throws std::invalid_argument on dimension mismatch.
Complex inner_product(const Computer& a, const Computer& b);
Complex inner_product(std::span<const Complex> a, std::span<const Complex> b);

/// <a|op|b> without modifying either state.
Complex transition_element(const Computer& a, const QubitOperator& op, const Computer& b);

}  // namespace fermiq
