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
#include <numeric>
#include <set>
#include <stdexcept>

#include <fmt/format.h>

#include "fermiq/algorithms.h"

namespace fermiq {

Circuit reference_circuit(BasisAddress reference) {
    Circuit c;
    std::uint64_t bits = reference.bits();
    while (bits) {
        c.add_gate(make_gate(GateKind::X, static_cast<std::size_t>(std::countr_zero(bits))));
        bits &= bits - 1;
    }
    return c;
}

Circuit ansatz_state_circuit(const OperatorPool& pool, const AnsatzState& ansatz) {
    Circuit c = reference_circuit(ansatz.reference);
    c.add_circuit(ansatz_circuit(pool, ansatz.pool_indices, ansatz.amplitudes));
    return c;
}

Computer prepare_ansatz_state(const MolecularSystem& sys, const OperatorPool& pool, const AnsatzState& ansatz) {
    Computer c(sys.n_qubits());
    c.apply_circuit(ansatz_state_circuit(pool, ansatz));
    return c;
}

namespace {

double ansatz_energy(const MolecularSystem& sys, const OperatorPool& pool, const AnsatzState& a) {
    return prepare_ansatz_state(sys, pool, a).energy(sys.qubit_hamiltonian);
}

void require_pool(const OperatorPool& pool) {
    for (const auto& e : pool.entries) {
        if (e.qubit_generator.empty()) throw std::invalid_argument(fmt::format("pool operator {} is zero", e.label));
    }
}

/// BFGS/Nelder-Mead over the amplitudes of `a`, starting from its current values.
/// Central-difference gradients are tallied as gradient evaluations.
MinimizeResult optimize_amplitudes(const MolecularSystem& sys, const OperatorPool& pool, AnsatzState& a,
                                   MinimizeMethod method, double tol, std::size_t max_iter, ResourceReport& rep) {
    const std::size_t nps = sys.n_pauli_strings();
    auto energy_at = [&](const std::vector<double>& x) {
        AnsatzState trial = a;
        trial.amplitudes = x;
        return ansatz_energy(sys, pool, trial);
    };
    Objective f = [&](const std::vector<double>& x) {
        rep.add_energy_evaluations(nps);
        return energy_at(x);
    };
    constexpr double kStep = 1e-6;
    GradientFn grad = [&](const std::vector<double>& x) {
        std::vector<double> g(x.size());
        std::vector<double> y = x;
        for (std::size_t i = 0; i < x.size(); ++i) {
            y[i] = x[i] + kStep;
            const double fp = energy_at(y);
            y[i] = x[i] - kStep;
            const double fm = energy_at(y);
            y[i] = x[i];
            g[i] = (fp - fm) / (2.0 * kStep);
        }
        rep.add_gradient_evaluations(2 * x.size() * nps);
        return g;
    };
    MinimizeOptions mo;
    mo.method = method;
    mo.tol = tol;
    mo.max_iter = max_iter;
    MinimizeResult r = minimize(f, a.amplitudes, mo, method == MinimizeMethod::BFGS ? grad : GradientFn{});
    a.amplitudes = r.x;
    return r;
}

}  // namespace

// ---- VQE -------------------------------------------------------------------

AlgorithmResult run_vqe(const MolecularSystem& sys, const VqeOptions& options) {
    return run_vqe(sys, build_pool(sys, options.pool), options);
}

AlgorithmResult run_vqe(const MolecularSystem& sys, const OperatorPool& pool, const VqeOptions& options) {
    require_pool(pool);
    AlgorithmResult out;
    AnsatzState a;
    a.reference = sys.hf_reference;
    a.pool_indices.resize(pool.size());
    std::iota(a.pool_indices.begin(), a.pool_indices.end(), std::size_t{0});
    a.amplitudes.assign(pool.size(), 0.0);

    auto& rep = out.resources;
    rep.n_parameters = pool.size();
    rep.n_cnot = ansatz_cnot_count(pool, a.pool_indices);

    if (pool.empty()) {
        rep.add_energy_evaluations(sys.n_pauli_strings());
        out.energy = ansatz_energy(sys, pool, a);
    } else {
        const MinimizeResult r = optimize_amplitudes(sys, pool, a, options.method, options.tol, options.max_iter, rep);
        out.energy = r.f;
        rep.n_iterations = r.n_iter;
        out.converged = r.converged;
        out.status = r.status;
    }
    out.trajectory.push_back(out.energy);
    rep.final_energy = out.energy;
    for (auto i : a.pool_indices) a.labels.push_back(pool[i].label);
    out.ansatz = std::move(a);
    return out;
}

// ---- ADAPT-VQE ---------------------------------------------------------------

namespace {

std::vector<QubitOperator> pool_commutators(const QubitOperator& h, const OperatorPool& pool) {
    std::vector<QubitOperator> out;
    out.reserve(pool.size());
    for (const auto& e : pool.entries) out.push_back(commutator(h, e.qubit_generator));
    return out;
}

std::vector<double> commutator_expectations(const std::vector<QubitOperator>& comms, const Computer& state) {
    std::vector<double> g;
    g.reserve(comms.size());
    for (const auto& c : comms) g.push_back(state.expectation(c).real());
    return g;
}

}  // namespace

std::vector<double> adapt_gradients(const QubitOperator& h, const OperatorPool& pool, const Computer& state) {
    return commutator_expectations(pool_commutators(h, pool), state);
}

AlgorithmResult run_adapt_vqe(const MolecularSystem& sys, const AdaptOptions& options) {
    return run_adapt_vqe(sys, build_pool(sys, options.pool), options);
}

AlgorithmResult run_adapt_vqe(const MolecularSystem& sys, const OperatorPool& pool, const AdaptOptions& options) {
    require_pool(pool);
    AlgorithmResult out;
    auto& rep = out.resources;
    AnsatzState a;
    a.reference = sys.hf_reference;

    const auto comms = pool_commutators(sys.qubit_hamiltonian, pool);
    std::size_t comm_terms = 0;
    for (const auto& c : comms) comm_terms += c.size();

    rep.add_energy_evaluations(sys.n_pauli_strings());
    out.energy = ansatz_energy(sys, pool, a);
    out.trajectory.push_back(out.energy);
    out.converged = false;
    out.status = "maximum depth reached";

    while (true) {
        const Computer state = prepare_ansatz_state(sys, pool, a);
        const auto g = commutator_expectations(comms, state);
        rep.add_gradient_evaluations(comm_terms);
        double norm2 = 0.0;
        std::size_t best = 0;
        for (std::size_t i = 0; i < g.size(); ++i) {
            norm2 += g[i] * g[i];
            if (std::abs(g[i]) > std::abs(g[best])) best = i;
        }
        if (g.empty() || std::sqrt(norm2) < options.grad_norm_threshold) {
            out.converged = true;
            out.status = "converged";
            break;
        }
        if (a.pool_indices.size() >= options.max_depth) break;
        if (!a.pool_indices.empty() && a.pool_indices.back() == best && std::abs(g[best]) < 1e-12) {
            out.status = "stagnated";
            break;
        }

        a.pool_indices.push_back(best);
        a.amplitudes.push_back(0.0);
        const MinimizeResult r = optimize_amplitudes(sys, pool, a, options.method, options.tol, options.max_iter, rep);
        out.energy = r.f;
        out.trajectory.push_back(out.energy);
        ++rep.n_iterations;
    }

    rep.n_parameters = a.pool_indices.size();
    rep.n_cnot = ansatz_cnot_count(pool, a.pool_indices);
    rep.final_energy = out.energy;
    for (auto i : a.pool_indices) a.labels.push_back(pool[i].label);
    out.ansatz = std::move(a);
    return out;
}

// ---- PQE ---------------------------------------------------------------------

std::vector<double> pqe_residuals(const MolecularSystem& sys, const OperatorPool& pool, const AnsatzState& ansatz) {
    const std::size_t n = sys.n_qubits();
    const Circuit u = ansatz_circuit(pool, ansatz.pool_indices, ansatz.amplitudes);
    const Circuit ref = reference_circuit(ansatz.reference);
    const auto& h = sys.qubit_hamiltonian;

    auto energy_of = [&](const Circuit& prep) {
        Computer c(n);
        c.apply_circuit(prep);
        c.apply_circuit(u);
        return c.energy(h);
    };

    const double e0 = energy_of(ref);
    std::vector<double> r;
    r.reserve(ansatz.pool_indices.size());
    for (auto idx : ansatz.pool_indices) {
        const PoolEntry& e = pool[idx];
        if (e.determinant == ansatz.reference) {
            throw std::invalid_argument(fmt::format("operator {} does not excite the reference", e.label));
        }
        Circuit omega = ref;
        omega.add_circuit(generator_circuit(e.qubit_generator, std::numbers::pi / 4.0));
        const double e_mu = energy_of(reference_circuit(e.determinant));
        r.push_back(energy_of(omega) - 0.5 * e0 - 0.5 * e_mu);
    }
    return r;
}

namespace {

/// Pulay extrapolation over stored (amplitude, error) pairs.
class Diis {
  public:
    explicit Diis(std::size_t max_vectors) : max_(max_vectors) {}

    std::vector<double> extrapolate(const std::vector<double>& t, const std::vector<double>& err) {
        ts_.push_back(t);
        errs_.push_back(err);
        if (ts_.size() > max_) {
            ts_.erase(ts_.begin());
            errs_.erase(errs_.begin());
        }
        const std::size_t m = ts_.size();
        if (m < 2) return t;
        Eigen::MatrixXd b = Eigen::MatrixXd::Zero(m + 1, m + 1);
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j < m; ++j) {
                double s = 0.0;
                for (std::size_t k = 0; k < err.size(); ++k) s += errs_[i][k] * errs_[j][k];
                b(i, j) = s;
            }
            b(i, m) = b(m, i) = -1.0;
        }
        Eigen::VectorXd rhs = Eigen::VectorXd::Zero(m + 1);
        rhs(m) = -1.0;
        const Eigen::VectorXd c = b.completeOrthogonalDecomposition().solve(rhs);
        if (!c.allFinite()) return t;
        std::vector<double> out(t.size(), 0.0);
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t k = 0; k < t.size(); ++k) out[k] += c(i) * ts_[i][k];
        }
        return out;
    }

  private:
    std::size_t max_;
    std::vector<std::vector<double>> ts_;
    std::vector<std::vector<double>> errs_;
};

double l2(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

struct PqeLoop {
    std::size_t iterations = 0;
    bool converged = false;
    bool diverged = false;
};

/// Quasi-Newton fixed-point iteration t <- t + r / Delta on every operator of `a`.
PqeLoop pqe_iterate(const MolecularSystem& sys, const OperatorPool& pool, AnsatzState& a, double tol,
                    std::size_t max_iter, bool use_diis, std::size_t diis_vectors, ResourceReport& rep) {
    PqeLoop loop;
    Diis diis(diis_vectors);
    double last_norm = std::numeric_limits<double>::infinity();
    std::size_t growth = 0;
    const std::size_t nps = sys.n_pauli_strings();
    while (loop.iterations < max_iter) {
        const auto r = pqe_residuals(sys, pool, a);
        rep.add_energy_evaluations(nps * (1 + 2 * r.size()));
        ++loop.iterations;
        const double norm = l2(r);
        if (norm < tol) {
            loop.converged = true;
            break;
        }
        growth = norm > last_norm ? growth + 1 : 0;
        if (growth >= 5) {
            loop.diverged = true;
            break;
        }
        last_norm = norm;

        std::vector<double> step(r.size());
        std::vector<double> t = a.amplitudes;
        for (std::size_t k = 0; k < r.size(); ++k) {
            const double delta = pool[a.pool_indices[k]].denominator;
            if (delta == 0.0) throw SolverError(fmt::format("zero denominator for {}", pool[a.pool_indices[k]].label));
            step[k] = r[k] / delta;
            t[k] += step[k];
        }
        a.amplitudes = use_diis ? diis.extrapolate(t, step) : t;
    }
    return loop;
}

}  // namespace

AlgorithmResult run_pqe(const MolecularSystem& sys, const PqeOptions& options) {
    return run_pqe(sys, build_pool(sys, options.pool), options);
}

AlgorithmResult run_pqe(const MolecularSystem& sys, const OperatorPool& pool, const PqeOptions& options) {
    require_pool(pool);
    AlgorithmResult out;
    auto& rep = out.resources;
    AnsatzState a;
    a.reference = sys.hf_reference;
    a.pool_indices.resize(pool.size());
    std::iota(a.pool_indices.begin(), a.pool_indices.end(), std::size_t{0});
    a.amplitudes.assign(pool.size(), 0.0);
    rep.n_parameters = pool.size();
    rep.n_cnot = ansatz_cnot_count(pool, a.pool_indices);

    const PqeLoop loop = pqe_iterate(sys, pool, a, options.residual_tol, options.max_iter, options.diis,
                                     options.diis_max_vectors, rep);
    rep.n_iterations = loop.iterations;
    out.converged = loop.converged;
    out.status = loop.converged ? "converged" : (loop.diverged ? "diverged" : "maximum iterations reached");

    rep.add_energy_evaluations(sys.n_pauli_strings());
    out.energy = ansatz_energy(sys, pool, a);
    out.trajectory.push_back(out.energy);
    rep.final_energy = out.energy;
    for (auto i : a.pool_indices) a.labels.push_back(pool[i].label);
    out.ansatz = std::move(a);
    return out;
}

// ---- SPQE --------------------------------------------------------------------

AlgorithmResult run_spqe(const MolecularSystem& sys, const SpqeOptions& options) {
    if (!(options.dt > 0.0)) throw std::invalid_argument("SPQE needs dt > 0");
    if (!(options.omega > 0.0)) throw std::invalid_argument("SPQE needs omega > 0");

    AlgorithmResult out;
    auto& rep = out.resources;
    OperatorPool pool;
    AnsatzState a;
    a.reference = sys.hf_reference;
    std::set<std::uint64_t> selected;
    Rng rng(options.seed);

    const std::size_t n = sys.n_qubits();
    const std::uint64_t ref = sys.hf_reference.bits();
    const int ref_alpha = std::popcount(ref & 0x5555555555555555ULL);
    EvolutionSpec back;
    back.time = -options.dt;
    const PhasedCircuit step_back = trotter_circuit(sys.qubit_hamiltonian, back);

    rep.add_energy_evaluations(sys.n_pauli_strings());
    out.energy = ansatz_energy(sys, pool, a);
    out.trajectory.push_back(out.energy);
    out.converged = false;
    out.status = "maximum macro iterations reached";

    for (std::size_t macro = 0; macro < options.max_macro_iter; ++macro) {
        // |r~> = U^+ exp(i dt H) U |Phi_0>
        const Circuit u = ansatz_circuit(pool, a.pool_indices, a.amplitudes);
        Computer c(n);
        c.apply_circuit(reference_circuit(a.reference));
        c.apply_circuit(u);
        c.apply_circuit(step_back.circuit);
        c.apply_circuit(u.adjoint());

        std::vector<std::pair<double, std::uint64_t>> cand;
        const double scale = 1.0 / (options.dt * options.dt);
        if (options.shots == 0) {
            const auto amps = c.amplitudes();
            for (std::uint64_t i = 0; i < amps.size(); ++i) {
                if (i == ref || std::popcount(i) != std::popcount(ref)) continue;
                if (std::popcount(i & 0x5555555555555555ULL) != ref_alpha) continue;
                cand.emplace_back(std::norm(amps[i]) * scale, i);
            }
        } else {
            std::map<std::uint64_t, std::size_t> counts;
            for (const auto& b : c.sample_basis_states(options.shots, rng)) ++counts[b.bits()];
            for (const auto& [i, k] : counts) {
                if (i == ref || std::popcount(i) != std::popcount(ref)) continue;
                if (std::popcount(i & 0x5555555555555555ULL) != ref_alpha) continue;
                cand.emplace_back(static_cast<double>(k) / static_cast<double>(options.shots) * scale, i);
            }
            rep.add_energy_evaluations(options.shots);
        }
        std::sort(cand.begin(), cand.end());

        double excluded = 0.0;
        std::size_t cut = 0;
        while (cut < cand.size() && excluded + cand[cut].first <= options.omega * options.omega) {
            excluded += cand[cut].first;
            ++cut;
        }
        std::vector<std::uint64_t> fresh;
        for (std::size_t k = cut; k < cand.size(); ++k) {
            if (!selected.contains(cand[k].second)) fresh.push_back(cand[k].second);
        }
        if (fresh.empty()) {
            out.converged = true;
            out.status = "converged";
            break;
        }
        std::sort(fresh.begin(), fresh.end());
        for (auto det : fresh) {
            std::vector<std::size_t> holes;
            std::vector<std::size_t> particles;
            for (std::size_t q = 0; q < n; ++q) {
                const bool in_ref = (ref >> q) & 1U;
                const bool in_det = (det >> q) & 1U;
                if (in_ref && !in_det) holes.push_back(q);
                if (!in_ref && in_det) particles.push_back(q);
            }
            pool.entries.push_back(make_pool_entry(sys, holes, particles));
            selected.insert(det);
            a.pool_indices.push_back(pool.size() - 1);
            a.amplitudes.push_back(0.0);
        }

        const PqeLoop loop =
            pqe_iterate(sys, pool, a, options.residual_tol, options.max_micro_iter, options.diis, 6, rep);
        rep.n_iterations += loop.iterations;
        rep.add_energy_evaluations(sys.n_pauli_strings());
        out.energy = ansatz_energy(sys, pool, a);
        out.trajectory.push_back(out.energy);
        if (loop.diverged) {
            out.status = "diverged";
            break;
        }
    }

    rep.n_parameters = a.pool_indices.size();
    rep.n_cnot = ansatz_cnot_count(pool, a.pool_indices);
    rep.final_energy = out.energy;
    for (auto i : a.pool_indices) a.labels.push_back(pool[i].label);
    out.ansatz = std::move(a);
    return out;
}

}  // namespace fermiq
