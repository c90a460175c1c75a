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
#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <fmt/format.h>

#include "fermiq/algorithms.h"

namespace fermiq {

Circuit inverse_qft_circuit(std::size_t first, std::size_t n) {
    // Forward QFT with the most significant qubit handled first, then the
    // bit-reversal swaps; the inverse is its adjoint.
    Circuit qft;
    for (std::size_t jj = n; jj-- > 0;) {
        const std::size_t j = first + jj;
        qft.add_gate(make_gate(GateKind::H, j));
        for (std::size_t kk = jj; kk-- > 0;) {
            const double angle = std::numbers::pi / static_cast<double>(std::uint64_t{1} << (jj - kk));
            qft.add_gate(make_gate(GateKind::cR, j, first + kk, angle));
        }
    }
    for (std::size_t i = 0; i < n / 2; ++i) qft.add_gate(make_gate(GateKind::SWAP, first + i, first + n - 1 - i));
    return qft.adjoint();
}

double qpe_energy(long readout, std::size_t n_ancilla, double t) {
    return -2.0 * std::numbers::pi * static_cast<double>(readout) /
           (static_cast<double>(std::uint64_t{1} << n_ancilla) * t);
}

namespace {

QpeResult qpe_pass(const MolecularSystem& sys, const QpeOptions& options) {
    const std::size_t n = sys.n_qubits();
    const std::size_t a = options.n_ancilla;
    const std::size_t total = n + a;
    const auto& h = sys.qubit_hamiltonian;

    QpeResult q;
    auto& rep = q.result.resources;
    Computer c(total);
    c.apply_circuit(reference_circuit(sys.hf_reference));
    for (std::size_t k = 0; k < a; ++k) c.apply_gate(make_gate(GateKind::H, n + k));

    if (options.exact) {
        if (n > kOracleMaxQubits) throw CapacityError("exact QPE is limited to oracle-sized systems");
        // The controlled powers commute, so ancilla value x sees U^x = exp(-i x t H):
        // build each block by stepping one power at a time.
        const std::size_t dim_sys = std::size_t{1} << n;
        const std::size_t n_blocks = std::size_t{1} << a;
        const auto amps = c.amplitudes();
        std::vector<Complex> out(amps.begin(), amps.end());
        Computer block(n);
        std::vector<Complex> v(dim_sys);
        for (std::size_t i = 0; i < dim_sys; ++i) v[i] = amps[i];
        const double scale = std::sqrt(static_cast<double>(n_blocks));
        for (std::size_t i = 0; i < dim_sys; ++i) v[i] *= scale;
        block.set_amplitudes(v);
        for (std::size_t x = 0; x < n_blocks; ++x) {
            const auto b = block.amplitudes();
            for (std::size_t i = 0; i < dim_sys; ++i) out[x * dim_sys + i] = b[i] / scale;
            if (x + 1 < n_blocks) exact_evolve(h, options.t, block);
        }
        c.set_amplitudes(std::move(out));
    } else {
        EvolutionSpec spec;
        spec.time = options.t;
        spec.trotter_steps = options.trotter_steps;
        for (std::size_t k = 0; k < a; ++k) {
            const Circuit cu = controlled_evolution_circuit(h, spec, n + k);
            for (std::uint64_t rep_k = 0; rep_k < (std::uint64_t{1} << k); ++rep_k) {
                c.apply_circuit(cu);
                rep.n_cnot += cu.cnot_count();
            }
        }
    }
    c.apply_circuit(inverse_qft_circuit(n, a));

    Rng rng(options.seed);
    const long full = static_cast<long>(std::uint64_t{1} << a);
    for (const auto& b : c.sample_basis_states(options.shots, rng)) {
        long m = static_cast<long>(b.bits() >> n);
        if (m >= full / 2) m -= full;
        ++q.distribution[m];
    }
    std::size_t best = 0;
    for (const auto& [m, count] : q.distribution) {
        if (count > best) {
            best = count;
            q.modal_readout = m;
        }
    }
    q.t = options.t;
    q.resolution = 2.0 * std::numbers::pi / (static_cast<double>(full) * options.t);
    q.result.energy = qpe_energy(q.modal_readout, a, options.t);
    rep.n_parameters = a;
    rep.n_iterations = 1;
    rep.final_energy = q.result.energy;
    q.result.trajectory.push_back(q.result.energy);
    return q;
}

/// Fractional readout from the modal bin and its heavier neighbour. For a
/// phase d bins past m the two weights go as 1/d^2 and 1/(1-d)^2.
double interpolated_readout(const QpeResult& q) {
    const auto count = [&](long m) {
        const auto it = q.distribution.find(m);
        return it == q.distribution.end() ? 0.0 : static_cast<double>(it->second);
    };
    const long m = q.modal_readout;
    const double lo = count(m - 1);
    const double hi = count(m + 1);
    const double ratio = std::sqrt(std::max(lo, hi) / count(m));
    const double d = ratio / (1.0 + ratio);
    return static_cast<double>(m) + (hi >= lo ? d : -d);
}

}  // namespace

QpeResult run_qpe(const MolecularSystem& sys, const QpeOptions& options) {
    if (options.n_ancilla == 0) throw std::invalid_argument("QPE needs at least one ancilla");
    if (options.shots == 0) throw std::invalid_argument("QPE needs at least one shot");
    if (options.t == 0.0) throw std::invalid_argument("QPE needs t != 0");
    QpeResult first = qpe_pass(sys, options);
    if (!options.align_phase) return first;

    const double m_est = interpolated_readout(first);
    const double target = std::round(m_est);
    if (target == 0.0) return first;
    QpeOptions second = options;
    second.t = options.t * target / m_est;
    second.seed = options.seed + 1;
    QpeResult q = qpe_pass(sys, second);
    q.result.resources.n_cnot += first.result.resources.n_cnot;
    q.result.resources.n_iterations = 2;
    q.result.trajectory.insert(q.result.trajectory.begin(), first.result.energy);
    return q;
}

}  // namespace fermiq
