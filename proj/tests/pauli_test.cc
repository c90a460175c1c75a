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
#include "fermiq/pauli.h"

#include <gtest/gtest.h>

#include "fermiq/circuit.h"
#include "oracle.h"

namespace fermiq {
namespace {

PauliString random_string(std::size_t n, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> d(0, 3);
    std::vector<PauliFactor> f;
    for (std::size_t q = 0; q < n; ++q) {
        const int a = d(rng);
        if (a) f.push_back({q, static_cast<PauliAxis>(a - 1)});
    }
    return PauliString(f);
}

TEST(Pauli, SingleQubitProducts) {
    const PauliString x0{{0, PauliAxis::X}};
    const PauliString y0{{0, PauliAxis::Y}};
    const PauliString z1{{1, PauliAxis::Z}};
    auto p = pauli_multiply(x0, y0);
    EXPECT_EQ(p.phase, Complex(0.0, 1.0));
    EXPECT_EQ(p.string, (PauliString{{0, PauliAxis::Z}}));
    p = pauli_multiply(z1, z1);
    EXPECT_EQ(p.phase, Complex(1.0, 0.0));
    EXPECT_TRUE(p.string.is_identity());
}

TEST(Pauli, ProductsMatchMatrixOracle) {
    const PauliString a{{0, PauliAxis::X}, {1, PauliAxis::Z}};
    const PauliString b{{0, PauliAxis::Y}, {1, PauliAxis::Y}};
    const auto p = pauli_multiply(a, b);
    EXPECT_LT(oracle::max_abs(oracle::pauli_matrix(a, 2) * oracle::pauli_matrix(b, 2) -
                              p.phase * oracle::pauli_matrix(p.string, 2)),
              1e-15);
    std::mt19937_64 rng(31);
    for (int k = 0; k < 200; ++k) {
        const auto s = random_string(4, rng);
        const auto t = random_string(4, rng);
        const auto r = pauli_multiply(s, t);
        EXPECT_LT(oracle::max_abs(oracle::pauli_matrix(s, 4) * oracle::pauli_matrix(t, 4) -
                                  r.phase * oracle::pauli_matrix(r.string, 4)),
                  1e-15);
        const bool comm = oracle::max_abs(oracle::pauli_matrix(s, 4) * oracle::pauli_matrix(t, 4) -
                                          oracle::pauli_matrix(t, 4) * oracle::pauli_matrix(s, 4)) < 1e-12;
        EXPECT_EQ(s.commutes_with(t), comm);
    }
}

TEST(Pauli, StringBasics) {
    const PauliString p{{4, PauliAxis::Y}, {0, PauliAxis::X}, {1, PauliAxis::Z}};
    EXPECT_EQ(p.str(), "X0 Z1 Y4");
    EXPECT_EQ(p.weight(), 3u);
    EXPECT_EQ(p.count_y(), 1u);
    EXPECT_EQ(p.max_qubit(), 4);
    EXPECT_EQ(PauliString().str(), "I");
    EXPECT_EQ(PauliString().max_qubit(), -1);
    EXPECT_THROW((PauliString{{1, PauliAxis::X}, {1, PauliAxis::Z}}), std::invalid_argument);
    EXPECT_THROW((PauliString{{64, PauliAxis::X}}), std::invalid_argument);
}

TEST(QubitOperator, SimplifyMergesAndPrunes) {
    QubitOperator op;
    const PauliString z0{{0, PauliAxis::Z}};
    const PauliString x1{{1, PauliAxis::X}};
    op.add_term(0.5, z0);
    op.add_term(0.25, x1);
    op.add_term(-0.5, z0);
    op.add_term(1e-16, PauliString());
    const auto s = op.simplified();
    ASSERT_EQ(s.size(), 1u);
    EXPECT_EQ(s.terms()[0].second, x1);
    EXPECT_EQ(s.simplified().terms(), s.terms());
}

TEST(QubitOperator, AlgebraMatchesMatrices) {
    std::mt19937_64 rng(37);
    std::normal_distribution<double> nd;
    for (int k = 0; k < 20; ++k) {
        QubitOperator a, b;
        for (int t = 0; t < 4; ++t) {
            a.add_term(Complex(nd(rng), nd(rng)), random_string(3, rng));
            b.add_term(Complex(nd(rng), nd(rng)), random_string(3, rng));
        }
        const auto ma = oracle::operator_matrix(a, 3);
        const auto mb = oracle::operator_matrix(b, 3);
        EXPECT_LT(oracle::max_abs(oracle::operator_matrix(a * b, 3) - ma * mb), 1e-13);
        EXPECT_LT(oracle::max_abs(oracle::operator_matrix(a + b, 3) - (ma + mb)), 1e-13);
        EXPECT_LT(oracle::max_abs(oracle::operator_matrix(a - b, 3) - (ma - mb)), 1e-13);
        EXPECT_LT(oracle::max_abs(oracle::operator_matrix(a.adjoint(), 3) - ma.adjoint()), 1e-13);
        EXPECT_LT(oracle::max_abs(oracle::operator_matrix(commutator(a, b), 3) - (ma * mb - mb * ma)), 1e-13);
        const auto herm = a + a.adjoint();
        EXPECT_TRUE(herm.simplified().is_hermitian());
    }
}

TEST(QubitOperator, HermiticityDetection) {
    QubitOperator op;
    op.add_term(Complex(0.0, 1.0), PauliString{{0, PauliAxis::X}});
    EXPECT_FALSE(op.is_hermitian());
    QubitOperator h;
    h.add_term(0.3, PauliString{{0, PauliAxis::X}});
    h.add_term(-1.0, PauliString{{0, PauliAxis::Z}, {2, PauliAxis::Y}});
    EXPECT_TRUE(h.is_hermitian());
    EXPECT_EQ(h.n_qubits(), 3u);
}

TEST(PauliExponential, ThreeQubitXzzLayout) {
    const PauliString p{{2, PauliAxis::X}, {1, PauliAxis::Z}, {0, PauliAxis::Z}};
    const auto [c, phase] = exponentiate_pauli_string(Complex(0.0, -0.5), p);
    EXPECT_EQ(phase, Complex(1.0, 0.0));
    ASSERT_EQ(c.size(), 7u);
    EXPECT_EQ(c.gates()[0], make_gate(GateKind::H, 2));
    EXPECT_EQ(c.gates()[1], make_gate(GateKind::CNOT, 1, 0));
    EXPECT_EQ(c.gates()[2], make_gate(GateKind::CNOT, 2, 1));
    EXPECT_EQ(c.gates()[3], make_gate(GateKind::Rz, 2, std::nullopt, 1.0));
    EXPECT_EQ(c.gates()[4], make_gate(GateKind::CNOT, 2, 1));
    EXPECT_EQ(c.gates()[5], make_gate(GateKind::CNOT, 1, 0));
    EXPECT_EQ(c.gates()[6], make_gate(GateKind::H, 2));
    EXPECT_EQ(c.cnot_count(), 4u);
    const auto ref = oracle::expm_hermitian(oracle::pauli_matrix(p, 3), 0.5);
    EXPECT_LT(oracle::max_abs(oracle::circuit_matrix(c, 3) - ref), 1e-12);
}

TEST(PauliExponential, RandomStringsMatchMatrixExponential) {
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> th(-2.0, 2.0);
    for (int k = 0; k < 100; ++k) {
        const auto p = random_string(4, rng);
        const double theta = th(rng);
        const auto [c, phase] = exponentiate_pauli_string(Complex(0.0, theta), p);
        // exp(i theta P) = exp(-i (-theta) P)
        const auto ref = oracle::expm_hermitian(oracle::pauli_matrix(p, 4), -theta);
        EXPECT_LT(oracle::max_abs(phase * oracle::circuit_matrix(c, 4) - ref), 1e-12) << p.str();
        const std::size_t w = p.weight();
        EXPECT_EQ(c.cnot_count(), w ? 2 * (w - 1) : 0u);
        const auto neg = exponentiate_pauli_string(Complex(0.0, -theta), p);
        EXPECT_EQ(c.adjoint(), neg.first);
    }
}

TEST(PauliExponential, IdentityGivesPhaseOnly) {
    const auto [c, phase] = exponentiate_pauli_string(Complex(0.0, 0.3), PauliString());
    EXPECT_TRUE(c.empty());
    EXPECT_NEAR(std::abs(phase - std::exp(Complex(0.0, 0.3))), 0.0, 1e-15);
}

TEST(PauliExponential, RejectsRealFactor) {
    EXPECT_THROW(exponentiate_pauli_string(Complex(0.1, 0.3), PauliString{{0, PauliAxis::X}}),
                 std::invalid_argument);
}

}  // namespace
}  // namespace fermiq
