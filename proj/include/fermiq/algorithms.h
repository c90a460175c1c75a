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
#include <optional>
#include <string>
#include <vector>

#include "fermiq/circuit.h"
#include "fermiq/dynamics.h"
#include "fermiq/linalg.h"
#include "fermiq/pool.h"
#include "fermiq/system.h"

namespace fermiq {

struct ResourceReport {
    std::size_t n_parameters = 0;
    std::size_t n_cnot = 0;
    /// Pauli-string expectation evaluations, energy and gradient passes together.
    std::size_t n_pauli_evaluations = 0;
    std::size_t n_energy_pauli_evaluations = 0;
    std::size_t n_gradient_pauli_evaluations = 0;
    std::size_t n_iterations = 0;
    double final_energy = 0.0;

    void add_energy_evaluations(std::size_t n) {
        n_energy_pauli_evaluations += n;
        n_pauli_evaluations += n;
    }
    void add_gradient_evaluations(std::size_t n) {
        n_gradient_pauli_evaluations += n;
        n_pauli_evaluations += n;
    }
};

/// Ordered selection of pool operators with their amplitudes. The first
/// selected operator acts first on the reference.
struct AnsatzState {
    std::vector<std::size_t> pool_indices;
    std::vector<double> amplitudes;
    BasisAddress reference;
    /// Excitation label of each selected operator, e.g. "0 1 -> 4 5".
    std::vector<std::string> labels;
};

struct SubspaceResult {
    CMatrix s;
    CMatrix h;
    std::vector<double> energies;  // ascending
    std::size_t retained_dim = 0;
};

struct AlgorithmResult {
    double energy = 0.0;
    /// Energy after each macro step (algorithm specific; empty when not meaningful).
    std::vector<double> trajectory;
    ResourceReport resources;
    std::optional<AnsatzState> ansatz;
    std::optional<SubspaceResult> subspace;
    /// Reference determinants of a multireference subspace.
    std::vector<BasisAddress> references;
    bool converged = true;
    std::string status = "converged";
};

/// X gates on the occupied qubits of `reference`.
Circuit reference_circuit(BasisAddress reference);
/// Reference preparation followed by the ansatz unitary.
Circuit ansatz_state_circuit(const OperatorPool& pool, const AnsatzState& ansatz);
/// Statevector of ansatz_state_circuit on the system register.
Computer prepare_ansatz_state(const MolecularSystem& sys, const OperatorPool& pool, const AnsatzState& ansatz);

// ---- VQE -------------------------------------------------------------------

struct VqeOptions {
    PoolSpec pool;
    MinimizeMethod method = MinimizeMethod::BFGS;
    double tol = 1e-6;
    std::size_t max_iter = 500;
};

AlgorithmResult run_vqe(const MolecularSystem& sys, const VqeOptions& options = {});
AlgorithmResult run_vqe(const MolecularSystem& sys, const OperatorPool& pool, const VqeOptions& options = {});

// ---- ADAPT-VQE ---------------------------------------------------------------

struct AdaptOptions {
    PoolSpec pool;
    double grad_norm_threshold = 1e-4;
    std::size_t max_depth = 50;
    MinimizeMethod method = MinimizeMethod::BFGS;
    double tol = 1e-7;
    std::size_t max_iter = 500;
};

/// g_nu = <Psi|[H, kappa_nu]|Psi> for every pool operator at `state`.
std::vector<double> adapt_gradients(const QubitOperator& h, const OperatorPool& pool, const Computer& state);

AlgorithmResult run_adapt_vqe(const MolecularSystem& sys, const AdaptOptions& options = {});
AlgorithmResult run_adapt_vqe(const MolecularSystem& sys, const OperatorPool& pool, const AdaptOptions& options = {});

// ---- PQE ---------------------------------------------------------------------

struct PqeOptions {
    PoolSpec pool;
    double residual_tol = 1e-6;
    std::size_t max_iter = 300;
    bool diis = false;
    std::size_t diis_max_vectors = 6;
};

/// r_mu = <Phi_mu|U^+ H U|Phi_0> for the selected operators, assembled from
/// the three expectation values <Omega_mu|..|Omega_mu>, <Phi_0|..|Phi_0> and
/// <Phi_mu|..|Phi_mu> with Omega_mu = exp(pi/4 kappa_mu)|Phi_0>.
std::vector<double> pqe_residuals(const MolecularSystem& sys, const OperatorPool& pool, const AnsatzState& ansatz);

AlgorithmResult run_pqe(const MolecularSystem& sys, const PqeOptions& options = {});
AlgorithmResult run_pqe(const MolecularSystem& sys, const OperatorPool& pool, const PqeOptions& options = {});

// ---- SPQE --------------------------------------------------------------------

struct SpqeOptions {
    double omega = 1e-2;
    double dt = 1e-3;
    /// Zero reads |r_mu|^2 from the amplitudes; otherwise the number of samples M.
    std::size_t shots = 0;
    std::uint64_t seed = 0;
    double residual_tol = 1e-6;
    std::size_t max_macro_iter = 30;
    std::size_t max_micro_iter = 300;
    bool diis = false;
};

AlgorithmResult run_spqe(const MolecularSystem& sys, const SpqeOptions& options = {});

// ---- QITE and QLanczos -----------------------------------------------------

struct QiteOptions {
    double dbeta = 0.1;
    double beta_max = 10.0;
    PoolSpec pool;
    double ridge = 1e-8;
    /// Normalization N(dbeta) stored for QLanczos. 1: 1 - 2 dbeta <H>.
    /// k >= 2: exp(-2 dbeta <H>) times the expansion of <exp(-2 dbeta (H - <H>))>
    /// through the k-th central moment, which does not depend on the constant
    /// energy offset. The QITE step itself always uses order 1.
    int norm_order = 8;
};

struct QiteResult {
    AlgorithmResult result;
    std::vector<double> betas;     // beta after each step, starting at 0
    std::vector<double> energies;  // <H> at each beta
    /// N(dbeta) measured at the start of each step (one entry per step).
    std::vector<double> norms;
    std::size_t n_pauli_pool = 0;
};

/// Hermitian Pauli strings with an odd number of Y factors appearing in the
/// Jordan-Wigner images of the pool generators, deduplicated, canonical order.
std::vector<PauliString> qite_pauli_pool(const OperatorPool& pool);

QiteResult run_qite(const MolecularSystem& sys, const QiteOptions& options = {});

struct QLanczosOptions {
    /// Use every `stride`-th QITE state as a basis vector; must be even.
    std::size_t stride = 2;
    /// Only use states with beta <= beta_max (negative: all).
    double beta_max = -1.0;
    /// Skip a candidate whose overlap with the last accepted vector exceeds this.
    double overlap_cutoff = 1.0;
    double trim_threshold = 1e-9;
};

AlgorithmResult run_qlanczos(const QiteResult& qite, const QLanczosOptions& options = {});

// ---- QK and MRSQK ------------------------------------------------------------

struct QkOptions {
    std::size_t s = 3;
    double dt = 0.5;
    std::size_t trotter_steps = 1;
    bool exact = false;
    MatrixElementMethod method = MatrixElementMethod::Direct;
    std::size_t shots = 0;
    std::uint64_t seed = 0;
    double trim_threshold = 1e-9;
};

/// S and H over the states exp(-i n dt H)|ref> for every reference and n = 0..s
/// (reference-major ordering), together with the eigen solution.
SubspaceResult krylov_subspace(const MolecularSystem& sys, const std::vector<BasisAddress>& references,
                               const QkOptions& options);

/// CNOTs in the circuit U_m^+ U_n that connects two Krylov states, each
/// evolution using r Trotter steps.
std::size_t qk_cnot_count(const QubitOperator& h, std::size_t trotter_steps);

AlgorithmResult run_qk(const MolecularSystem& sys, const QkOptions& options = {});

struct MrsqkOptions {
    std::size_t d = 2;
    std::size_t s = 2;
    double dt = 0.5;
    /// Preliminary QK; zero means "same as s / dt".
    std::size_t s_prelim = 0;
    double dt_prelim = 0.0;
    std::size_t trotter_steps = 1;
    bool exact = false;
    std::size_t shots = 0;
    std::uint64_t seed = 0;
    double trim_threshold = 1e-9;
};

/// Every determinant with the same spatial occupation pattern and S_z as `det`,
/// `det` first and the rest ascending.
std::vector<BasisAddress> spin_complete(BasisAddress det, std::size_t n_spatial);

/// Picks up to d references from importance weights, keeping spin-completion
/// groups whole. Groups are taken in descending importance of their best member.
std::vector<BasisAddress> select_references(const std::vector<std::pair<BasisAddress, double>>& importance,
                                            std::size_t d, std::size_t n_spatial);

AlgorithmResult run_mrsqk(const MolecularSystem& sys, const MrsqkOptions& options = {});

// ---- QPE ---------------------------------------------------------------------

struct QpeOptions {
    std::size_t n_ancilla = 8;
    double t = 1.0;
    std::size_t trotter_steps = 1;
    bool exact = false;
    std::size_t shots = 1000;
    std::uint64_t seed = 0;
    /// Two passes: the first locates the phase between two bins, the second
    /// reruns with t rescaled so the estimated phase sits on a bin centre.
    bool align_phase = false;
};

struct QpeResult {
    AlgorithmResult result;
    /// Signed ancilla readout (m >= 2^(n-1) folded to m - 2^n) -> count.
    std::map<long, std::size_t> distribution;
    long modal_readout = 0;
    double resolution = 0.0;  // 2 pi / (2^n t)
    double t = 0.0;           // evolution time of the reported pass
};

/// Inverse quantum Fourier transform on qubits first..first+n-1, qubit `first`
/// being the least significant bit of the register integer.
Circuit inverse_qft_circuit(std::size_t first, std::size_t n);

double qpe_energy(long readout, std::size_t n_ancilla, double t);

QpeResult run_qpe(const MolecularSystem& sys, const QpeOptions& options = {});

}  // namespace fermiq
