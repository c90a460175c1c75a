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
#include <string_view>
#include <vector>

#include "fermiq/circuit.h"
#include "fermiq/pauli.h"
#include "fermiq/sq_operator.h"
#include "fermiq/system.h"

namespace fermiq {

enum class PoolKind { ParticleHole, GSD, PairedD };

/// ParticleHole with max_rank 2 is SD, 3 is SDT and so on.
struct PoolSpec {
    PoolKind kind = PoolKind::ParticleHole;
    std::size_t max_rank = 2;
    /// Drop excitations that change the spatial symmetry of the reference.
    /// Only has an effect when the system lists orbital irreps.
    bool point_group = true;
};

/// Accepts SD, SDT, SDTQ, SDTQP, SDTQPH, GSD, pairedD and rankN (N >= 1).
/// Throws std::invalid_argument on anything else.
PoolSpec parse_pool_spec(std::string_view name);
std::string pool_spec_name(const PoolSpec& spec);

/// One anti-Hermitian generator kappa = tau - tau^dagger.
struct PoolEntry {
    std::vector<std::size_t> holes;      // spin orbitals, ascending
    std::vector<std::size_t> particles;  // spin orbitals, ascending
    SQOperator excitation;               // tau
    SQOperator generator;                // kappa
    QubitOperator qubit_generator;       // JW(kappa), purely imaginary coefficients
    /// Occupation of tau|Phi_0> (equal to the reference for GSD entries that
    /// annihilate it).
    BasisAddress determinant;
    /// sum eps_holes - sum eps_particles, or the diagonal-energy difference
    /// E(Phi_0) - E(Phi_mu) when the system has no orbital energies.
    double denominator = 0.0;
    std::string label;  // "0 1 -> 4 5"
};

struct OperatorPool {
    std::vector<PoolEntry> entries;
    std::size_t size() const { return entries.size(); }
    bool empty() const { return entries.empty(); }
    const PoolEntry& operator[](std::size_t i) const { return entries[i]; }
};

/// tau = a+_{a_k} ... a+_{a_1} a_{i_k} ... a_{i_1} for holes i_1 < ... < i_k and
/// particles a_1 < ... < a_k.
PoolEntry make_pool_entry(const MolecularSystem& sys, std::vector<std::size_t> holes,
                          std::vector<std::size_t> particles);

/// True when the excitation conserves S_z and, if `point_group` is set and the
/// system lists orbital irreps, the spatial symmetry of the reference.
bool excitation_allowed(const MolecularSystem& sys, const std::vector<std::size_t>& holes,
                        const std::vector<std::size_t>& particles, bool point_group = true);

/// Particle-hole pools are sorted by the integer value of the excited
/// determinant. The paired pool follows the product order i (occupied) outer,
/// a (virtual) inner. GSD lists singles before doubles.
OperatorPool build_pool(const MolecularSystem& sys, const PoolSpec& spec);
inline OperatorPool build_pool(const MolecularSystem& sys, std::string_view name) {
    return build_pool(sys, parse_pool_spec(name));
}

/// exp(t_1 kappa_1) is applied first, then exp(t_2 kappa_2), ... Each
/// generator's Pauli terms mutually commute, so every factor is exact.
Circuit ansatz_circuit(const OperatorPool& pool, const std::vector<std::size_t>& indices,
                       const std::vector<double>& amplitudes);
/// Circuit for a single factor exp(t kappa).
Circuit generator_circuit(const QubitOperator& qubit_generator, double t);

/// CNOT count of the ansatz circuit, which does not depend on the amplitudes.
std::size_t ansatz_cnot_count(const OperatorPool& pool, const std::vector<std::size_t>& indices);

}  // namespace fermiq
