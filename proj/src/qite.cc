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
#include <set>
#include <stdexcept>

#include <fmt/format.h>

#include "fermiq/algorithms.h"

namespace fermiq {

std::vector<PauliString> qite_pauli_pool(const OperatorPool& pool) {
    std::set<PauliString> unique;
    for (const auto& e : pool.entries) {
        for (const auto& [c, p] : e.qubit_generator.terms()) {
            if (p.count_y() % 2 == 1) unique.insert(p);
        }
    }
    return {unique.begin(), unique.end()};
}

namespace {

/// <psi|exp(-2 dbeta H)|psi> from the central moments <(H - E)^k>, k <= order:
/// exp(-2 dbeta E) sum_k (-2 dbeta)^k mu_k / k!.
double normalization(const QubitOperator& h, const Computer& psi, double energy, double dbeta, int order) {
    QubitOperator shifted = h;
    shifted.add_term(-energy, PauliString());
    shifted.simplify(0.0);
    std::vector<Computer> w{psi};
    for (int j = 1; 2 * j - 1 <= order; ++j) {
        Computer next = w.back();
        next.apply_operator(shifted);
        w.push_back(std::move(next));
    }
    double sum = 1.0;
    double coeff = 1.0;
    for (int k = 1; k <= order; ++k) {
        coeff *= -2.0 * dbeta / static_cast<double>(k);
        const std::size_t j = static_cast<std::size_t>(k / 2);
        const double mu = k % 2 == 0 ? std::pow(w[j].norm(), 2) : inner_product(w[j], w[j + 1]).real();
        if (k > 1) sum += coeff * mu;
    }
    return std::exp(-2.0 * dbeta * energy) * sum;
}

}  // namespace

QiteResult run_qite(const MolecularSystem& sys, const QiteOptions& options) {
    if (!(options.dbeta > 0.0)) throw std::invalid_argument("QITE needs dbeta > 0");
    if (options.beta_max < 0.0) throw std::invalid_argument("QITE needs beta_max >= 0");

    QiteResult q;
    auto& rep = q.result.resources;
    const auto& h = sys.qubit_hamiltonian;
    const std::size_t nps = sys.n_pauli_strings();
    const auto paulis = qite_pauli_pool(build_pool(sys, options.pool));
    const std::size_t m = paulis.size();
    q.n_pauli_pool = m;

    const auto n_steps = static_cast<std::size_t>(std::llround(options.beta_max / options.dbeta));
    Computer psi(sys.n_qubits());
    prepare_reference(sys, psi);

    double energy = psi.energy(h);
    rep.add_energy_evaluations(nps);
    q.betas.push_back(0.0);
    q.energies.push_back(energy);

    std::size_t n_cnot = 0;
    for (std::size_t step = 0; step < n_steps; ++step) {
        Computer sigma = psi;
        sigma.apply_operator(h);
        const double norm_factor = 1.0 - 2.0 * options.dbeta * energy;
        if (!(norm_factor > 0.0)) {
            throw SolverError(fmt::format("QITE normalization 1 - 2 dbeta E = {} is not positive", norm_factor));
        }
        double n_step = norm_factor;
        if (options.norm_order >= 2) {
            n_step = normalization(h, psi, energy, options.dbeta, options.norm_order);
            rep.add_energy_evaluations((static_cast<std::size_t>(options.norm_order) - 1) * nps);
        }
        q.norms.push_back(n_step);
        std::vector<Computer> rho_psi;
        rho_psi.reserve(m);
        for (const auto& p : paulis) {
            Computer c = psi;
            c.apply_pauli(p);
            rho_psi.push_back(std::move(c));
        }

        const double shift = (1.0 / std::sqrt(norm_factor) - 1.0) / options.dbeta;
        CMatrix s(m, m);
        CVector b(m);
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = i; j < m; ++j) {
                const double v = inner_product(rho_psi[i], rho_psi[j]).real();
                s(i, j) = v;
                s(j, i) = v;
            }
            // The <rho psi|psi> part vanishes for real psi only.
            b(i) = inner_product(rho_psi[i], sigma).imag() / std::sqrt(norm_factor) -
                   inner_product(rho_psi[i], psi).imag() * shift;
        }
        rep.add_energy_evaluations(m * m + m * nps);

        const CVector alpha = solve_linear_regularized(s, b, options.ridge);

        Circuit u;
        for (std::size_t i = 0; i < m; ++i) {
            const double a = alpha(i).real();
            if (a == 0.0) continue;
            u.add_circuit(exponentiate_pauli_string(Complex(0.0, -options.dbeta * a), paulis[i]).first);
        }
        psi.apply_circuit(u);
        n_cnot = std::max(n_cnot, u.cnot_count());

        energy = psi.energy(h);
        rep.add_energy_evaluations(nps);
        q.betas.push_back(options.dbeta * static_cast<double>(step + 1));
        q.energies.push_back(energy);
        ++rep.n_iterations;
    }

    rep.n_parameters = m;
    rep.n_cnot = n_cnot;
    rep.final_energy = energy;
    q.result.energy = energy;
    q.result.trajectory = q.energies;
    return q;
}

AlgorithmResult run_qlanczos(const QiteResult& qite, const QLanczosOptions& options) {
    if (options.stride == 0 || options.stride % 2 != 0) {
        throw std::invalid_argument("QLanczos stride must be a positive even number");
    }
    const auto& e = qite.energies;
    if (e.empty()) throw std::invalid_argument("QLanczos needs a QITE trajectory");
    if (qite.norms.size() + 1 < e.size()) throw std::invalid_argument("QITE run lacks normalization factors");

    // log c_j^2 = sum_{i<j} log N_i, c_j the norm of exp(-beta_j H)|Phi_0>.
    std::vector<double> log_c2(e.size(), 0.0);
    for (std::size_t j = 1; j < e.size(); ++j) log_c2[j] = log_c2[j - 1] + std::log(qite.norms[j - 1]);

    auto overlap = [&](std::size_t m, std::size_t n) {
        return std::exp(log_c2[(m + n) / 2] - 0.5 * (log_c2[m] + log_c2[n]));
    };
    std::vector<std::size_t> basis;
    for (std::size_t j = 0; j < e.size(); j += options.stride) {
        if (options.beta_max >= 0.0 && qite.betas[j] > options.beta_max + 1e-12) break;
        if (!basis.empty() && overlap(basis.back(), j) > options.overlap_cutoff) continue;
        basis.push_back(j);
    }
    const auto dim = static_cast<Eigen::Index>(basis.size());
    CMatrix s(dim, dim);
    CMatrix hm(dim, dim);
    for (Eigen::Index a = 0; a < dim; ++a) {
        for (Eigen::Index b = 0; b < dim; ++b) {
            const std::size_t m = basis[a];
            const std::size_t n = basis[b];
            const double v = overlap(m, n);
            s(a, b) = v;
            hm(a, b) = v * e[(m + n) / 2];
        }
    }

    const GeneralizedEigResult ge = solve_generalized_eig(hm, s, options.trim_threshold);
    AlgorithmResult out;
    SubspaceResult sub;
    sub.s = s;
    sub.h = hm;
    sub.energies.assign(ge.eigenvalues.data(), ge.eigenvalues.data() + ge.eigenvalues.size());
    sub.retained_dim = ge.retained_dim;
    out.energy = sub.energies.front();
    out.resources = qite.result.resources;
    out.resources.n_parameters = basis.size();
    out.resources.final_energy = out.energy;
    out.subspace = std::move(sub);

    // Running estimate as the subspace grows.
    for (std::size_t len = 1; len <= basis.size(); ++len) {
        const auto l = static_cast<Eigen::Index>(len);
        try {
            out.trajectory.push_back(
                solve_generalized_eig(hm.topLeftCorner(l, l), s.topLeftCorner(l, l), options.trim_threshold)
                    .eigenvalues(0));
        } catch (const SolverError&) {
            out.trajectory.push_back(std::nan(""));
        }
    }
    return out;
}

}  // namespace fermiq
