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

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "fermiq/pauli.h"
#include "fermiq/types.h"

namespace fermiq {

using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

/// Largest register handled by the dense oracle routines.
inline constexpr std::size_t kOracleMaxQubits = 12;

/// Dense 2^n x 2^n matrix of `op`, row/column index = BasisAddress integer.
/// Throws CapacityError for n > 12 and std::invalid_argument when the
/// operator acts outside the register.
CMatrix qubit_operator_matrix(const QubitOperator& op, std::size_t n_qubits);

/// Matrix of `op` restricted to the computational basis states listed in
/// `basis` (rows and columns in that order).
CMatrix qubit_operator_submatrix(const QubitOperator& op, const std::vector<BasisAddress>& basis);

struct GeneralizedEigResult {
    Eigen::VectorXd eigenvalues;  // ascending
    CMatrix eigenvectors;         // columns, in the original (non-orthogonal) basis
    std::size_t retained_dim = 0;
};

/// Solves H c = S c E by canonical orthogonalization: S eigenvectors with
/// eigenvalue below `trim_threshold` are discarded. Throws SolverError when
/// nothing survives and std::invalid_argument on shape mismatch.
GeneralizedEigResult solve_generalized_eig(const CMatrix& h, const CMatrix& s, double trim_threshold = 1e-9);

/// (S + ridge I) alpha = b via a Hermitian LDLT factorization. Throws
/// SolverError if the regularized matrix is still singular.
CVector solve_linear_regularized(const CMatrix& s, const CVector& b, double ridge = 1e-8);

struct FciResult {
    double energy = 0.0;
    std::vector<Complex> vector;  // full 2^n amplitude vector
};

/// Lowest eigenpair of `h`, optionally restricted to the sector with
/// `n_electrons` set bits. Throws CapacityError for n_qubits > 12.
FciResult fci_oracle(const QubitOperator& h, std::size_t n_qubits, std::optional<std::size_t> n_electrons = {});

enum class MinimizeMethod { BFGS, NelderMead };

struct MinimizeOptions {
    MinimizeMethod method = MinimizeMethod::BFGS;
    /// Gradient infinity norm (BFGS) or simplex spread (Nelder-Mead).
    double tol = 1e-6;
    std::size_t max_iter = 500;
    /// Central finite-difference step when no analytic gradient is given.
    double fd_step = 1e-6;
};

struct MinimizeResult {
    std::vector<double> x;
    double f = 0.0;
    std::size_t n_evals = 0;       // objective calls, including finite-difference ones
    std::size_t n_grad_evals = 0;  // analytic or finite-difference gradient calls
    std::size_t n_iter = 0;
    bool converged = false;
    std::string status;
};

using Objective = std::function<double(const std::vector<double>&)>;
using GradientFn = std::function<std::vector<double>(const std::vector<double>&)>;

/// Throws SolverError if the objective returns a non-finite value. Running out
/// of iterations is reported through `converged` and `status`.
MinimizeResult minimize(const Objective& f, std::vector<double> x0, const MinimizeOptions& options = {},
                        const GradientFn& grad = {});

}  // namespace fermiq
