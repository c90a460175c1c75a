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

#include <gtest/gtest.h>

#include "oracle.h"

namespace fermiq {
namespace {

TEST(OperatorMatrix, SmallCases) {
    const auto z = qubit_operator_matrix(QubitOperator({{1.0, PauliString{{0, PauliAxis::Z}}}}), 1);
    EXPECT_EQ(z(0, 0), Complex(1.0, 0.0));
    EXPECT_EQ(z(1, 1), Complex(-1.0, 0.0));
    EXPECT_EQ(z(0, 1), Complex(0.0, 0.0));
    const auto x = qubit_operator_matrix(QubitOperator({{1.0, PauliString{{0, PauliAxis::X}}}}), 2);
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) EXPECT_EQ(x(r, c), Complex((r ^ 1) == c ? 1.0 : 0.0, 0.0));
    }
    EXPECT_THROW(qubit_operator_matrix(QubitOperator(), 13), CapacityError);
    EXPECT_THROW(qubit_operator_matrix(QubitOperator({{1.0, PauliString{{3, PauliAxis::X}}}}), 2),
                 std::invalid_argument);
}

TEST(OperatorMatrix, MatchesKroneckerAssembly) {
    std::mt19937_64 rng(47);
    std::uniform_int_distribution<int> d(0, 3);
    std::normal_distribution<double> nd;
    QubitOperator op;
    for (int t = 0; t < 12; ++t) {
        std::vector<PauliFactor> f;
        for (std::size_t q = 0; q < 4; ++q) {
            const int a = d(rng);
            if (a) f.push_back({q, static_cast<PauliAxis>(a - 1)});
        }
        op.add_term(Complex(nd(rng), nd(rng)), PauliString(f));
    }
    EXPECT_LT(oracle::max_abs(qubit_operator_matrix(op, 4) - oracle::operator_matrix(op, 4)), 1e-14);
}

TEST(GeneralizedEig, IdentityOverlapReducesToOrdinary) {
    CMatrix h(2, 2);
    h << 0, 1, 1, 0;
    const auto r = solve_generalized_eig(h, CMatrix::Identity(2, 2));
    EXPECT_EQ(r.retained_dim, 2u);
    EXPECT_NEAR(r.eigenvalues(0), -1.0, 1e-14);
    EXPECT_NEAR(r.eigenvalues(1), 1.0, 1e-14);
}

CMatrix random_hermitian(Eigen::Index n, std::mt19937_64& rng) {
    std::normal_distribution<double> nd;
    CMatrix a(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) a(i, j) = Complex(nd(rng), nd(rng));
    }
    return 0.5 * (a + a.adjoint());
}

TEST(GeneralizedEig, DuplicatedBasisVectorIsTrimmed) {
    std::mt19937_64 rng(53);
    const CMatrix hfull = random_hermitian(6, rng);
    // Basis: three orthonormal vectors of a 6-dim space plus a copy of the first.
    CMatrix b = CMatrix::Zero(6, 4);
    b(0, 0) = 1.0;
    b(1, 1) = 1.0;
    b(2, 2) = 1.0;
    b.col(3) = b.col(0);
    const CMatrix s = b.adjoint() * b;
    const CMatrix h = b.adjoint() * hfull * b;
    const auto r = solve_generalized_eig(h, s);
    EXPECT_EQ(r.retained_dim, 3u);
    Eigen::SelfAdjointEigenSolver<CMatrix> ref(hfull.topLeftCorner(3, 3));
    for (int k = 0; k < 3; ++k) EXPECT_NEAR(r.eigenvalues(k), ref.eigenvalues()(k), 1e-10);
}

TEST(GeneralizedEig, ScalingInvariance) {
    std::mt19937_64 rng(59);
    const CMatrix a = random_hermitian(5, rng);
    CMatrix s = a * a.adjoint() + CMatrix::Identity(5, 5);
    const CMatrix h = random_hermitian(5, rng);
    const auto r1 = solve_generalized_eig(h, s);
    const auto r2 = solve_generalized_eig(3.7 * h, 3.7 * s);
    for (int k = 0; k < 5; ++k) EXPECT_NEAR(r1.eigenvalues(k), r2.eigenvalues(k), 1e-12);
}

TEST(GeneralizedEig, Errors) {
    EXPECT_THROW(solve_generalized_eig(CMatrix::Identity(2, 2), CMatrix::Zero(2, 2)), SolverError);
    EXPECT_THROW(solve_generalized_eig(CMatrix::Identity(2, 2), CMatrix::Identity(3, 3)), std::invalid_argument);
}

TEST(LinearSolve, IdentityAndRandomSystems) {
    CVector b(3);
    b << 1.0, Complex(0.0, 2.0), -3.0;
    const auto x = solve_linear_regularized(CMatrix::Identity(3, 3), b);
    EXPECT_LT((x - b / (1.0 + 1e-8)).norm(), 1e-15);

    std::mt19937_64 rng(61);
    const CMatrix a = random_hermitian(6, rng);
    const CMatrix s = a * a.adjoint() + CMatrix::Identity(6, 6);
    CVector rhs = CVector::Random(6);
    const auto y = solve_linear_regularized(s, rhs, 0.0);
    EXPECT_LE((s * y - rhs).norm(), 1e-8 * rhs.norm());
}

TEST(LinearSolve, RankDeficientConsistentSystem) {
    CVector u(3);
    u << 1.0, 1.0, 0.0;
    u.normalize();
    const CMatrix s = u * u.adjoint();  // rank one projector
    const CVector b = 2.0 * u;
    const auto x = solve_linear_regularized(s, b, 1e-8);
    EXPECT_TRUE(x.allFinite());
    EXPECT_LT((s * x - b).norm(), 1e-6);
}

TEST(FciOracle, TrivialOperators) {
    const auto id = fci_oracle(QubitOperator({{-1.25, PauliString()}}), 2);
    EXPECT_NEAR(id.energy, -1.25, 1e-14);
    const auto mz = fci_oracle(QubitOperator({{-1.0, PauliString{{0, PauliAxis::Z}}}}), 1);
    EXPECT_NEAR(mz.energy, -1.0, 1e-14);
    EXPECT_NEAR(std::abs(mz.vector[0]), 1.0, 1e-14);
    EXPECT_THROW(fci_oracle(QubitOperator(), 13), CapacityError);
}

TEST(FciOracle, SectorRestriction) {
    // Z0 + Z1: full minimum -2 at |11>, one-particle minimum 0.
    QubitOperator op;
    op.add_term(1.0, PauliString{{0, PauliAxis::Z}});
    op.add_term(1.0, PauliString{{1, PauliAxis::Z}});
    EXPECT_NEAR(fci_oracle(op, 2).energy, -2.0, 1e-14);
    EXPECT_NEAR(fci_oracle(op, 2, 1).energy, 0.0, 1e-14);
}

TEST(Minimize, Parabola) {
    for (auto m : {MinimizeMethod::BFGS, MinimizeMethod::NelderMead}) {
        MinimizeOptions o;
        o.method = m;
        o.tol = 1e-8;
        const auto r = minimize([](const std::vector<double>& x) { return (x[0] - 3.0) * (x[0] - 3.0); }, {0.0}, o);
        EXPECT_TRUE(r.converged);
        EXPECT_NEAR(r.x[0], 3.0, 1e-6);
        EXPECT_GT(r.n_evals, 0u);
    }
}

TEST(Minimize, Rosenbrock) {
    auto f = [](const std::vector<double>& x) {
        return 100.0 * std::pow(x[1] - x[0] * x[0], 2) + std::pow(1.0 - x[0], 2);
    };
    auto g = [](const std::vector<double>& x) {
        return std::vector<double>{-400.0 * x[0] * (x[1] - x[0] * x[0]) - 2.0 * (1.0 - x[0]),
                                   200.0 * (x[1] - x[0] * x[0])};
    };
    MinimizeOptions o;
    o.tol = 1e-9;
    o.max_iter = 2000;
    const auto r = minimize(f, {-1.2, 1.0}, o, g);
    EXPECT_TRUE(r.converged) << r.status;
    EXPECT_NEAR(r.x[0], 1.0, 1e-5);
    EXPECT_NEAR(r.x[1], 1.0, 1e-5);
    const auto fd = minimize(f, {-1.2, 1.0}, o);
    EXPECT_NEAR(fd.x[0], 1.0, 1e-5);
    EXPECT_NEAR(fd.x[1], 1.0, 1e-5);
    o.method = MinimizeMethod::NelderMead;
    o.tol = 1e-10;
    o.max_iter = 5000;
    const auto nm = minimize(f, {-1.2, 1.0}, o);
    EXPECT_NEAR(nm.x[0], 1.0, 1e-5);
    EXPECT_NEAR(nm.x[1], 1.0, 1e-5);
}

TEST(Minimize, QuadraticFormConvergesInFewIterations) {
    // f = 1/2 x^T A x - b^T x, minimizer A^{-1} b.
    Eigen::Matrix3d a;
    a << 4, 1, 0, 1, 3, 0.5, 0, 0.5, 2;
    const Eigen::Vector3d b(1, -2, 0.5);
    const Eigen::Vector3d xstar = a.ldlt().solve(b);
    auto f = [&](const std::vector<double>& x) {
        Eigen::Map<const Eigen::Vector3d> v(x.data());
        return 0.5 * v.dot(a * v) - b.dot(v);
    };
    auto g = [&](const std::vector<double>& x) {
        Eigen::Map<const Eigen::Vector3d> v(x.data());
        const Eigen::Vector3d gr = a * v - b;
        return std::vector<double>{gr(0), gr(1), gr(2)};
    };
    MinimizeOptions o;
    o.tol = 1e-6;
    const auto r = minimize(f, {0.0, 0.0, 0.0}, o, g);
    EXPECT_TRUE(r.converged);
    for (int i = 0; i < 3; ++i) EXPECT_NEAR(r.x[static_cast<std::size_t>(i)], xstar(i), 1e-6);
    EXPECT_LE(r.n_iter, 12u);
}

TEST(Minimize, ReportsFailures) {
    EXPECT_THROW(minimize([](const std::vector<double>&) { return std::nan(""); }, {0.0}), SolverError);
    MinimizeOptions o;
    o.max_iter = 2;
    o.tol = 1e-14;
    const auto r = minimize(
        [](const std::vector<double>& x) { return 100.0 * std::pow(x[1] - x[0] * x[0], 2) + std::pow(1.0 - x[0], 2); },
        {-1.2, 1.0}, o);
    EXPECT_FALSE(r.converged);
    EXPECT_EQ(r.status, "maximum iterations reached");
}

}  // namespace
}  // namespace fermiq
