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
#include "fermiq/linalg.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <unordered_map>

#include <fmt/format.h>

namespace fermiq {

namespace {

constexpr Complex kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

Complex pauli_phase(const PauliString& p, std::uint64_t col) {
    Complex ph = kIPow[p.count_y() % 4];
    return (std::popcount(col & p.z_mask()) & 1) ? -ph : ph;
}

}  // namespace

CMatrix qubit_operator_matrix(const QubitOperator& op, std::size_t n_qubits) {
    if (n_qubits > kOracleMaxQubits) {
        throw CapacityError(fmt::format("dense matrix limited to {} qubits, got {}", kOracleMaxQubits, n_qubits));
    }
    if (op.n_qubits() > n_qubits) {
        throw std::invalid_argument(fmt::format("operator spans {} qubits, matrix has {}", op.n_qubits(), n_qubits));
    }
    const std::size_t dim = std::size_t{1} << n_qubits;
    CMatrix m = CMatrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (const auto& [u, p] : op.terms()) {
        for (std::uint64_t col = 0; col < dim; ++col) {
            m(static_cast<Eigen::Index>(col ^ p.x_mask()), static_cast<Eigen::Index>(col)) += u * pauli_phase(p, col);
        }
    }
    return m;
}

CMatrix qubit_operator_submatrix(const QubitOperator& op, const std::vector<BasisAddress>& basis) {
    std::unordered_map<std::uint64_t, Eigen::Index> pos;
    for (std::size_t k = 0; k < basis.size(); ++k) pos.emplace(basis[k].bits(), static_cast<Eigen::Index>(k));
    const auto n = static_cast<Eigen::Index>(basis.size());
    CMatrix m = CMatrix::Zero(n, n);
    for (const auto& [u, p] : op.terms()) {
        for (Eigen::Index c = 0; c < n; ++c) {
            const std::uint64_t col = basis[static_cast<std::size_t>(c)].bits();
            auto it = pos.find(col ^ p.x_mask());
            if (it != pos.end()) m(it->second, c) += u * pauli_phase(p, col);
        }
    }
    return m;
}

GeneralizedEigResult solve_generalized_eig(const CMatrix& h, const CMatrix& s, double trim_threshold) {
    if (h.rows() != h.cols() || s.rows() != s.cols() || h.rows() != s.rows()) {
        throw std::invalid_argument("solve_generalized_eig: H and S must be square and of equal size");
    }
    const CMatrix sh = 0.5 * (s + s.adjoint());
    Eigen::SelfAdjointEigenSolver<CMatrix> se(sh);
    if (se.info() != Eigen::Success) throw SolverError("overlap diagonalization failed");
    std::vector<Eigen::Index> keep;
    for (Eigen::Index k = 0; k < sh.rows(); ++k) {
        if (se.eigenvalues()(k) >= trim_threshold) keep.push_back(k);
    }
    if (keep.empty()) throw SolverError("canonical orthogonalization removed every direction");
    const auto r = static_cast<Eigen::Index>(keep.size());
    CMatrix x(sh.rows(), r);
    for (Eigen::Index j = 0; j < r; ++j) {
        x.col(j) = se.eigenvectors().col(keep[static_cast<std::size_t>(j)]) /
                   std::sqrt(se.eigenvalues()(keep[static_cast<std::size_t>(j)]));
    }
    CMatrix hp = x.adjoint() * h * x;
    hp = 0.5 * (hp + hp.adjoint()).eval();
    Eigen::SelfAdjointEigenSolver<CMatrix> he(hp);
    if (he.info() != Eigen::Success) throw SolverError("projected Hamiltonian diagonalization failed");
    GeneralizedEigResult out;
    out.eigenvalues = he.eigenvalues();
    out.eigenvectors = x * he.eigenvectors();
    out.retained_dim = static_cast<std::size_t>(r);
    return out;
}

CVector solve_linear_regularized(const CMatrix& s, const CVector& b, double ridge) {
    if (s.rows() != s.cols() || s.rows() != b.size()) {
        throw std::invalid_argument("solve_linear_regularized: dimension mismatch");
    }
    CMatrix a = 0.5 * (s + s.adjoint());
    a.diagonal().array() += ridge;
    Eigen::LDLT<CMatrix> ldlt(a);
    if (ldlt.info() != Eigen::Success) throw SolverError("regularized system could not be factorized");
    CVector x = ldlt.solve(b);
    if (!x.allFinite()) throw SolverError("regularized system is singular");
    // LDLT on an indefinite or singular pivot silently yields garbage.
    const double res = (a * x - b).norm();
    if (res > 1e-6 * std::max(1.0, b.norm())) {
        Eigen::CompleteOrthogonalDecomposition<CMatrix> cod(a);
        x = cod.solve(b);
        if (!x.allFinite()) throw SolverError("regularized system is singular");
    }
    return x;
}

FciResult fci_oracle(const QubitOperator& h, std::size_t n_qubits, std::optional<std::size_t> n_electrons) {
    if (n_qubits > kOracleMaxQubits) {
        throw CapacityError(fmt::format("FCI oracle limited to {} qubits, got {}", kOracleMaxQubits, n_qubits));
    }
    if (h.n_qubits() > n_qubits) {
        throw std::invalid_argument(fmt::format("operator spans {} qubits, oracle has {}", h.n_qubits(), n_qubits));
    }
    const std::size_t dim = std::size_t{1} << n_qubits;
    std::vector<BasisAddress> basis;
    for (std::uint64_t i = 0; i < dim; ++i) {
        if (!n_electrons || static_cast<std::size_t>(std::popcount(i)) == *n_electrons) basis.emplace_back(i);
    }
    if (basis.empty()) throw std::invalid_argument("empty particle-number sector");
    CMatrix m = qubit_operator_submatrix(h, basis);
    m = 0.5 * (m + m.adjoint()).eval();
    Eigen::SelfAdjointEigenSolver<CMatrix> es(m);
    if (es.info() != Eigen::Success) throw SolverError("FCI diagonalization failed");
    FciResult out;
    out.energy = es.eigenvalues()(0);
    out.vector.assign(dim, Complex(0.0, 0.0));
    for (std::size_t k = 0; k < basis.size(); ++k) {
        out.vector[basis[k].index()] = es.eigenvectors()(static_cast<Eigen::Index>(k), 0);
    }
    return out;
}

namespace {

class Counted {
  public:
    Counted(const Objective& f, MinimizeResult& r) : f_(f), r_(r) {}
    double operator()(const std::vector<double>& x) const {
        ++r_.n_evals;
        const double v = f_(x);
        if (!std::isfinite(v)) throw SolverError("objective returned a non-finite value");
        return v;
    }

  private:
    const Objective& f_;
    MinimizeResult& r_;
};

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
}

double inf_norm(const std::vector<double>& v) {
    double m = 0.0;
    for (double e : v) m = std::max(m, std::abs(e));
    return m;
}

MinimizeResult bfgs(const Objective& fun, std::vector<double> x, const MinimizeOptions& opt, const GradientFn& grad) {
    MinimizeResult res;
    Counted f(fun, res);
    const std::size_t n = x.size();

    auto gradient = [&](const std::vector<double>& at) {
        ++res.n_grad_evals;
        if (grad) return grad(at);
        std::vector<double> g(n);
        std::vector<double> xp = at;
        for (std::size_t i = 0; i < n; ++i) {
            xp[i] = at[i] + opt.fd_step;
            const double fp = f(xp);
            xp[i] = at[i] - opt.fd_step;
            const double fm = f(xp);
            xp[i] = at[i];
            g[i] = (fp - fm) / (2.0 * opt.fd_step);
        }
        return g;
    };

    double fx = f(x);
    if (n == 0) {
        res.x = x;
        res.f = fx;
        res.converged = true;
        res.status = "no parameters";
        return res;
    }
    std::vector<double> g = gradient(x);
    Eigen::MatrixXd hinv = Eigen::MatrixXd::Identity(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    bool first = true;

    for (res.n_iter = 0; res.n_iter < opt.max_iter; ++res.n_iter) {
        if (inf_norm(g) < opt.tol) {
            res.converged = true;
            break;
        }
        Eigen::Map<const Eigen::VectorXd> gv(g.data(), static_cast<Eigen::Index>(n));
        Eigen::VectorXd pv = -hinv * gv;
        double slope = pv.dot(gv);
        if (slope >= 0.0) {
            hinv.setIdentity();
            pv = -gv;
            slope = pv.dot(gv);
        }
        std::vector<double> p(pv.data(), pv.data() + n);

        // Backtracking line search on the Armijo condition.
        double alpha = 1.0;
        std::vector<double> xn(n);
        double fn = 0.0;
        bool accepted = false;
        for (int k = 0; k < 60; ++k) {
            for (std::size_t i = 0; i < n; ++i) xn[i] = x[i] + alpha * p[i];
            fn = f(xn);
            if (fn <= fx + 1e-4 * alpha * slope) {
                accepted = true;
                break;
            }
            alpha *= 0.5;
        }
        if (!accepted) {
            res.status = "line search failed";
            break;
        }
        std::vector<double> gn = gradient(xn);
        std::vector<double> s(n);
        std::vector<double> y(n);
        for (std::size_t i = 0; i < n; ++i) {
            s[i] = xn[i] - x[i];
            y[i] = gn[i] - g[i];
        }
        const double sy = dot(s, y);
        if (sy > 1e-16) {
            Eigen::Map<const Eigen::VectorXd> sv(s.data(), static_cast<Eigen::Index>(n));
            Eigen::Map<const Eigen::VectorXd> yv(y.data(), static_cast<Eigen::Index>(n));
            if (first) {
                hinv *= sy / yv.dot(yv);
                first = false;
            }
            const double rho = 1.0 / sy;
            const Eigen::VectorXd hy = hinv * yv;
            hinv += rho * ((1.0 + rho * yv.dot(hy)) * sv * sv.transpose() - hy * sv.transpose() - sv * hy.transpose());
        }
        x = std::move(xn);
        g = std::move(gn);
        fx = fn;
    }
    if (res.converged) {
        res.status = "converged";
    } else if (res.status.empty()) {
        res.status = "maximum iterations reached";
    }
    res.x = std::move(x);
    res.f = fx;
    return res;
}

MinimizeResult nelder_mead(const Objective& fun, std::vector<double> x0, const MinimizeOptions& opt) {
    MinimizeResult res;
    Counted f(fun, res);
    const std::size_t n = x0.size();
    if (n == 0) {
        res.x = x0;
        res.f = f(x0);
        res.converged = true;
        res.status = "no parameters";
        return res;
    }
    std::vector<std::vector<double>> v(n + 1, x0);
    for (std::size_t i = 0; i < n; ++i) v[i + 1][i] += (x0[i] != 0.0) ? 0.05 * x0[i] : 0.025;
    std::vector<double> fv(n + 1);
    for (std::size_t i = 0; i <= n; ++i) fv[i] = f(v[i]);

    std::vector<std::size_t> order(n + 1);
    for (res.n_iter = 0; res.n_iter < opt.max_iter; ++res.n_iter) {
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return fv[a] < fv[b]; });
        {
            std::vector<std::vector<double>> vs(n + 1);
            std::vector<double> fs(n + 1);
            for (std::size_t i = 0; i <= n; ++i) {
                vs[i] = v[order[i]];
                fs[i] = fv[order[i]];
            }
            v = std::move(vs);
            fv = std::move(fs);
        }
        double spread = 0.0;
        for (std::size_t i = 1; i <= n; ++i) {
            for (std::size_t j = 0; j < n; ++j) spread = std::max(spread, std::abs(v[i][j] - v[0][j]));
        }
        if (spread < opt.tol && fv[n] - fv[0] < opt.tol) {
            res.converged = true;
            break;
        }
        std::vector<double> c(n, 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) c[j] += v[i][j] / static_cast<double>(n);
        }
        auto along = [&](double coef) {
            std::vector<double> p(n);
            for (std::size_t j = 0; j < n; ++j) p[j] = c[j] + coef * (v[n][j] - c[j]);
            return p;
        };
        auto xr = along(-1.0);
        const double fr = f(xr);
        if (fr < fv[0]) {
            auto xe = along(-2.0);
            const double fe = f(xe);
            if (fe < fr) {
                v[n] = xe;
                fv[n] = fe;
            } else {
                v[n] = xr;
                fv[n] = fr;
            }
        } else if (fr < fv[n - 1]) {
            v[n] = xr;
            fv[n] = fr;
        } else {
            const bool outside = fr < fv[n];
            auto xc = along(outside ? -0.5 : 0.5);
            const double fc = f(xc);
            if (fc < (outside ? fr : fv[n])) {
                v[n] = xc;
                fv[n] = fc;
            } else {
                for (std::size_t i = 1; i <= n; ++i) {
                    for (std::size_t j = 0; j < n; ++j) v[i][j] = v[0][j] + 0.5 * (v[i][j] - v[0][j]);
                    fv[i] = f(v[i]);
                }
            }
        }
    }
    const auto best = static_cast<std::size_t>(std::min_element(fv.begin(), fv.end()) - fv.begin());
    res.x = v[best];
    res.f = fv[best];
    res.status = res.converged ? "converged" : "maximum iterations reached";
    return res;
}

}  // namespace

MinimizeResult minimize(const Objective& f, std::vector<double> x0, const MinimizeOptions& options,
                        const GradientFn& grad) {
    if (options.method == MinimizeMethod::NelderMead) return nelder_mead(f, std::move(x0), options);
    return bfgs(f, std::move(x0), options, grad);
}

}  // namespace fermiq
