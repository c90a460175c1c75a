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
#include "fermiq/sq_operator.h"

#include <gtest/gtest.h>

#include "oracle.h"

namespace fermiq {
namespace {

oracle::M dense(const SQOperator& op, std::size_t n) {
    oracle::M m = oracle::M::Zero(std::int64_t{1} << n, std::int64_t{1} << n);
    for (const auto& t : op.terms()) {
        oracle::M prod = oracle::M::Identity(std::int64_t{1} << n, std::int64_t{1} << n);
        for (auto p : t.creators) prod = prod * oracle::ladder(p, true, n);
        for (auto p : t.annihilators) prod = prod * oracle::ladder(p, false, n);
        m += t.coeff * prod;
    }
    return m;
}

Complex coeff_of(const QubitOperator& op, const PauliString& p) {
    for (const auto& [c, s] : op.terms()) {
        if (s == p) return c;
    }
    return 0.0;
}

TEST(JordanWigner, SingleAnnihilator) {
    SQOperator a;
    a.add_term(1.0, {}, {0});
    const auto q = a.jw_transform();
    ASSERT_EQ(q.size(), 2u);
    EXPECT_EQ(coeff_of(q, PauliString{{0, PauliAxis::X}}), Complex(0.5, 0.0));
    EXPECT_EQ(coeff_of(q, PauliString{{0, PauliAxis::Y}}), Complex(0.0, 0.5));
}

TEST(JordanWigner, SingleCreatorCarriesStringOfZ) {
    SQOperator a;
    a.add_term(1.0, {1}, {});
    const auto q = a.jw_transform();
    ASSERT_EQ(q.size(), 2u);
    EXPECT_EQ(coeff_of(q, PauliString{{1, PauliAxis::X}, {0, PauliAxis::Z}}), Complex(0.5, 0.0));
    EXPECT_EQ(coeff_of(q, PauliString{{1, PauliAxis::Y}, {0, PauliAxis::Z}}), Complex(0.0, -0.5));
}

TEST(JordanWigner, NumberOperator) {
    SQOperator n;
    n.add_term(1.0, {0}, {0});
    const auto q = n.jw_transform();
    ASSERT_EQ(q.size(), 2u);
    EXPECT_EQ(coeff_of(q, PauliString()), Complex(0.5, 0.0));
    EXPECT_EQ(coeff_of(q, PauliString{{0, PauliAxis::Z}}), Complex(-0.5, 0.0));
}

TEST(JordanWigner, ListingSixOperatorMatchesDenseFermions) {
    SQOperator op;
    op.add_term(0.5, {1}, {2});
    op.add_term(Complex(0.0, -0.25), {4, 2}, {3, 1});
    const auto q = op.jw_transform();
    EXPECT_LT(oracle::max_abs(oracle::operator_matrix(q, 5) - dense(op, 5)), 1e-14);
}

TEST(JordanWigner, AnticommutationOnFiveModes) {
    const std::size_t n = 5;
    double worst = 0.0;
    for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t q = 0; q < n; ++q) {
            const auto a = oracle::operator_matrix(jw_ladder(p, false), n);
            const auto ad = oracle::operator_matrix(jw_ladder(q, true), n);
            oracle::M expect = oracle::M::Zero(32, 32);
            if (p == q) expect = oracle::M::Identity(32, 32);
            worst = std::max(worst, oracle::max_abs(a * ad + ad * a - expect));
            const auto b = oracle::operator_matrix(jw_ladder(q, false), n);
            worst = std::max(worst, oracle::max_abs(a * b + b * a));
        }
    }
    EXPECT_LT(worst, 1e-13);
}

TEST(JordanWigner, RandomTermsMatchDenseFermions) {
    std::mt19937_64 rng(43);
    std::uniform_int_distribution<std::size_t> mode(0, 4);
    std::normal_distribution<double> nd;
    for (int k = 0; k < 30; ++k) {
        SQOperator op;
        for (int t = 0; t < 3; ++t) {
            std::vector<std::size_t> c, a;
            for (std::size_t i = 0; i < 2; ++i) {
                std::size_t m = mode(rng);
                if (std::find(c.begin(), c.end(), m) == c.end()) c.push_back(m);
                m = mode(rng);
                if (std::find(a.begin(), a.end(), m) == a.end()) a.push_back(m);
            }
            op.add_term(Complex(nd(rng), nd(rng)), c, a);
        }
        EXPECT_LT(oracle::max_abs(oracle::operator_matrix(op.jw_transform(), 5) - dense(op, 5)), 1e-13);
        EXPECT_LT(oracle::max_abs(oracle::operator_matrix(op.adjoint().jw_transform(), 5) - dense(op, 5).adjoint()),
                  1e-13);
    }
}

TEST(JordanWigner, Linearity) {
    SQOperator a, b;
    a.add_term(0.3, {3, 1}, {2, 0});
    b.add_term(Complex(0.0, 0.7), {2}, {4});
    const Complex alpha(1.5, -0.5), beta(-0.25, 2.0);
    SQOperator combo;
    for (const auto& t : a.terms()) combo.add_term(alpha * t.coeff, t.creators, t.annihilators);
    for (const auto& t : b.terms()) combo.add_term(beta * t.coeff, t.creators, t.annihilators);
    QubitOperator rhs = alpha * a.jw_transform();
    rhs.add_op(beta * b.jw_transform());
    EXPECT_LT(oracle::max_abs(oracle::operator_matrix(combo.jw_transform(), 5) -
                              oracle::operator_matrix(rhs.simplified(), 5)),
              1e-14);
}

TEST(SQOperator, CanonicalOrderFoldsPermutationSign) {
    SQOperator op;
    op.add_term(1.0, {1, 2}, {0, 3});
    ASSERT_EQ(op.size(), 1u);
    EXPECT_EQ(op.terms()[0].creators, (std::vector<std::size_t>{2, 1}));
    EXPECT_EQ(op.terms()[0].annihilators, (std::vector<std::size_t>{3, 0}));
    EXPECT_EQ(op.terms()[0].coeff, Complex(1.0, 0.0));
    SQOperator one;
    one.add_term(1.0, {1, 2}, {3, 0});
    EXPECT_EQ(one.terms()[0].coeff, Complex(-1.0, 0.0));
}

TEST(SQOperator, RejectsRepeatedIndicesAndNonNormalOrder) {
    SQOperator op;
    EXPECT_THROW(op.add_term(1.0, {1, 1}, {}), std::invalid_argument);
    EXPECT_THROW(op.add_ladder_term(1.0, {{0, false}, {1, true}}), std::invalid_argument);
    EXPECT_NO_THROW(op.add_ladder_term(1.0, {{1, true}, {0, false}}));
    EXPECT_EQ(op.n_modes(), 2u);
}

}  // namespace
}  // namespace fermiq
