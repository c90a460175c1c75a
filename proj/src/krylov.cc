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
#include <map>
#include <set>
#include <stdexcept>

#include <fmt/format.h>

#include "fermiq/algorithms.h"

namespace fermiq {

namespace {

EvolutionSpec step_spec(const QkOptions& o, std::size_t n) {
    EvolutionSpec spec;
    spec.time = o.dt * static_cast<double>(n);
    spec.trotter_steps = o.trotter_steps;
    spec.exact = o.exact;
    return spec;
}

Computer krylov_state(const MolecularSystem& sys, BasisAddress ref, const QkOptions& o, std::size_t n) {
    Computer c(sys.n_qubits());
    c.set_basis_state(ref);
    if (n > 0) evolve(sys.qubit_hamiltonian, step_spec(o, n), c);
    return c;
}

SubspaceResult solve_subspace(CMatrix s, CMatrix h, double trim) {
    const GeneralizedEigResult ge = solve_generalized_eig(h, s, trim);
    SubspaceResult out;
    out.s = std::move(s);
    out.h = std::move(h);
    out.energies.assign(ge.eigenvalues.data(), ge.eigenvalues.data() + ge.eigenvalues.size());
    out.retained_dim = ge.retained_dim;
    return out;
}

}  // namespace

std::size_t qk_cnot_count(const QubitOperator& h, std::size_t trotter_steps) {
    return 2 * trotter_cnot_count(h, trotter_steps);
}

SubspaceResult krylov_subspace(const MolecularSystem& sys, const std::vector<BasisAddress>& references,
                               const QkOptions& options) {
    if (references.empty()) throw std::invalid_argument("Krylov subspace needs at least one reference");
    const std::size_t per_ref = options.s + 1;
    const auto dim = static_cast<Eigen::Index>(references.size() * per_ref);
    const auto& h = sys.qubit_hamiltonian;
    CMatrix s(dim, dim);
    CMatrix hm(dim, dim);

    if (options.method == MatrixElementMethod::Direct) {
        std::vector<Computer> states;
        std::vector<Computer> h_states;
        states.reserve(static_cast<std::size_t>(dim));
        for (auto ref : references) {
            for (std::size_t n = 0; n < per_ref; ++n) {
                states.push_back(krylov_state(sys, ref, options, n));
                Computer hs = states.back();
                hs.apply_operator(h);
                h_states.push_back(std::move(hs));
            }
        }
        for (Eigen::Index i = 0; i < dim; ++i) {
            for (Eigen::Index j = i; j < dim; ++j) {
                s(i, j) = inner_product(states[i], states[j]);
                hm(i, j) = inner_product(states[i], h_states[j]);
                s(j, i) = std::conj(s(i, j));
                hm(j, i) = std::conj(hm(i, j));
            }
        }
        return solve_subspace(std::move(s), std::move(hm), options.trim_threshold);
    }

    if (options.exact) throw std::invalid_argument("the Hadamard-test path needs Trotterized evolution");
    std::vector<PhasedCircuit> preps;
    for (auto ref : references) {
        for (std::size_t n = 0; n < per_ref; ++n) {
            PhasedCircuit p;
            p.circuit = reference_circuit(ref);
            if (n > 0) {
                const PhasedCircuit evo = trotter_circuit(h, step_spec(options, n));
                p.circuit.add_circuit(evo.circuit);
                p.phase = evo.phase;
            }
            preps.push_back(std::move(p));
        }
    }
    MatrixElementOptions mo;
    mo.method = MatrixElementMethod::HadamardTest;
    mo.shots = options.shots;
    for (Eigen::Index i = 0; i < dim; ++i) {
        for (Eigen::Index j = i; j < dim; ++j) {
            mo.seed = options.seed + static_cast<std::uint64_t>(i * dim + j);
            s(i, j) = i == j ? Complex(1.0) : matrix_element(preps[i], preps[j], nullptr, sys.n_qubits(), mo);
            hm(i, j) = matrix_element(preps[i], preps[j], &h, sys.n_qubits(), mo);
            if (i == j) hm(i, j) = hm(i, j).real();
            s(j, i) = std::conj(s(i, j));
            hm(j, i) = std::conj(hm(i, j));
        }
    }
    return solve_subspace(std::move(s), std::move(hm), options.trim_threshold);
}

AlgorithmResult run_qk(const MolecularSystem& sys, const QkOptions& options) {
    AlgorithmResult out;
    SubspaceResult sub = krylov_subspace(sys, {sys.hf_reference}, options);
    const std::size_t dim = options.s + 1;
    auto& rep = out.resources;
    rep.n_parameters = dim;
    rep.n_cnot = options.exact ? 0 : qk_cnot_count(sys.qubit_hamiltonian, options.trotter_steps);
    // Every H element, plus the off-diagonal overlaps (diagonal ones are 1).
    rep.add_energy_evaluations(dim * dim * sys.n_pauli_strings() + dim * (dim - 1));
    rep.n_iterations = 1;
    out.energy = sub.energies.front();
    rep.final_energy = out.energy;
    for (std::size_t k = 1; k <= dim; ++k) {
        const auto l = static_cast<Eigen::Index>(k);
        out.trajectory.push_back(
            solve_generalized_eig(sub.h.topLeftCorner(l, l), sub.s.topLeftCorner(l, l), options.trim_threshold)
                .eigenvalues(0));
    }
    if (sub.retained_dim < dim) out.status = fmt::format("converged; {} of {} directions trimmed", dim - sub.retained_dim, dim);
    out.subspace = std::move(sub);
    return out;
}

std::vector<BasisAddress> spin_complete(BasisAddress det, std::size_t n_spatial) {
    std::vector<std::size_t> open;
    std::uint64_t closed = 0;
    int n_alpha_open = 0;
    for (std::size_t p = 0; p < n_spatial; ++p) {
        const bool a = det.get_bit(2 * p);
        const bool b = det.get_bit(2 * p + 1);
        if (a && b) {
            closed |= std::uint64_t{3} << (2 * p);
        } else if (a || b) {
            open.push_back(p);
            if (a) ++n_alpha_open;
        }
    }
    std::vector<BasisAddress> out{det};
    const std::size_t k = open.size();
    std::vector<std::uint64_t> others;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
        if (std::popcount(mask) != n_alpha_open) continue;
        std::uint64_t bits = closed;
        for (std::size_t i = 0; i < k; ++i) bits |= std::uint64_t{1} << (2 * open[i] + (((mask >> i) & 1U) ? 0 : 1));
        if (bits != det.bits()) others.push_back(bits);
    }
    std::sort(others.begin(), others.end());
    for (auto b : others) out.emplace_back(b);
    return out;
}

std::vector<BasisAddress> select_references(const std::vector<std::pair<BasisAddress, double>>& importance,
                                            std::size_t d, std::size_t n_spatial) {
    auto ranked = importance;
    std::stable_sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first.bits() < b.first.bits();
    });
    std::vector<BasisAddress> out;
    std::set<std::uint64_t> taken;
    for (const auto& [det, p] : ranked) {
        if (out.size() == d) break;
        if (!(p > 1e-14) || taken.contains(det.bits())) continue;
        const auto group = spin_complete(det, n_spatial);
        if (out.size() + group.size() > d) continue;
        for (auto g : group) {
            out.push_back(g);
            taken.insert(g.bits());
        }
    }
    if (out.size() < d) {
        throw SolverError(fmt::format("only {} references available with nonzero importance, {} requested", out.size(), d));
    }
    return out;
}

AlgorithmResult run_mrsqk(const MolecularSystem& sys, const MrsqkOptions& options) {
    if (options.d == 0) throw std::invalid_argument("MRSQK needs d >= 1");
    QkOptions pre;
    pre.s = options.s_prelim ? options.s_prelim : options.s;
    pre.dt = options.dt_prelim > 0.0 ? options.dt_prelim : options.dt;
    pre.trotter_steps = options.trotter_steps;
    pre.exact = options.exact;
    pre.trim_threshold = options.trim_threshold;

    const SubspaceResult prelim = krylov_subspace(sys, {sys.hf_reference}, pre);
    const GeneralizedEigResult ge = solve_generalized_eig(prelim.h, prelim.s, options.trim_threshold);
    const CVector c = ge.eigenvectors.col(0);

    // P_mu ~ sum_n |c_n|^2 |<phi_mu|psi_n>|^2
    std::map<std::uint64_t, double> weight;
    Rng rng(options.seed);
    std::size_t nps_prelim = (pre.s + 1) * (pre.s + 1) * sys.n_pauli_strings() + pre.s * (pre.s + 1);
    for (std::size_t n = 0; n <= pre.s; ++n) {
        const Computer psi = krylov_state(sys, sys.hf_reference, pre, n);
        const double w = std::norm(c(static_cast<Eigen::Index>(n)));
        if (options.shots == 0) {
            const auto amps = psi.amplitudes();
            for (std::uint64_t i = 0; i < amps.size(); ++i) {
                const double p = std::norm(amps[i]);
                if (p > 0.0) weight[i] += w * p;
            }
        } else {
            const double inv = 1.0 / static_cast<double>(options.shots);
            for (const auto& b : psi.sample_basis_states(options.shots, rng)) weight[b.bits()] += w * inv;
        }
    }
    std::vector<std::pair<BasisAddress, double>> importance;
    importance.reserve(weight.size());
    for (const auto& [bits, p] : weight) importance.emplace_back(BasisAddress(bits), p);
    const auto refs = select_references(importance, options.d, sys.n_spatial ? sys.n_spatial : sys.n_qubits() / 2);

    QkOptions main;
    main.s = options.s;
    main.dt = options.dt;
    main.trotter_steps = options.trotter_steps;
    main.exact = options.exact;
    main.trim_threshold = options.trim_threshold;
    SubspaceResult sub = krylov_subspace(sys, refs, main);

    AlgorithmResult out;
    auto& rep = out.resources;
    const std::size_t dim = refs.size() * (options.s + 1);
    rep.n_parameters = dim;
    rep.n_cnot = options.exact ? 0 : qk_cnot_count(sys.qubit_hamiltonian, options.trotter_steps);
    rep.add_energy_evaluations(nps_prelim + dim * dim * sys.n_pauli_strings() + dim * (dim - 1));
    rep.n_iterations = 2;
    out.energy = sub.energies.front();
    out.trajectory = {prelim.energies.front(), out.energy};
    rep.final_energy = out.energy;
    if (sub.retained_dim < dim) out.status = fmt::format("converged; {} of {} directions trimmed", dim - sub.retained_dim, dim);
    out.subspace = std::move(sub);
    out.references = refs;
    return out;
}

}  // namespace fermiq
