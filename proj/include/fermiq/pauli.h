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
#include <string>
#include <utility>
#include <vector>

#include "fermiq/types.h"

namespace fermiq {

enum class PauliAxis : std::uint8_t { X, Y, Z };

struct PauliFactor {
    std::size_t qubit;
    PauliAxis axis;
    friend bool operator==(const PauliFactor&, const PauliFactor&) = default;
};

/// Tensor product of Pauli matrices on distinct qubits, identity elsewhere.
///
/// Stored in symplectic form: qubit q carries X when only x bit q is set, Z when
/// only z bit q is set and Y when both are. The matrix is exactly the product of
/// its factors (Y is Y, not i*X*Z).
class PauliString {
  public:
    PauliString() = default;
    /// Throws std::invalid_argument on repeated or out-of-range (>= 64) qubits.
    explicit PauliString(const std::vector<PauliFactor>& factors);
    PauliString(std::initializer_list<PauliFactor> factors)
        : PauliString(std::vector<PauliFactor>(factors)) {}
    static PauliString from_masks(std::uint64_t x, std::uint64_t z) {
        PauliString p;
        p.x_ = x;
        p.z_ = z;
        return p;
    }

    std::uint64_t x_mask() const { return x_; }
    std::uint64_t z_mask() const { return z_; }
    std::uint64_t support() const { return x_ | z_; }
    /// Number of non-identity factors.
    std::size_t weight() const;
    std::size_t count_y() const;
    bool is_identity() const { return support() == 0; }
    bool commutes_with(const PauliString& other) const;

    /// Factors in ascending qubit order.
    std::vector<PauliFactor> factors() const;
    /// Highest qubit acted on, or -1 for the identity.
    int max_qubit() const;

    /// e.g. "X0 Z1 Y4"; "I" for the identity.
    std::string str() const;

    friend bool operator==(const PauliString&, const PauliString&) = default;
    /// Canonical order: lexicographic over the ascending (qubit, axis) factor list.
    friend bool operator<(const PauliString& a, const PauliString& b);

  private:
    std::uint64_t x_ = 0;
    std::uint64_t z_ = 0;
};

struct PauliProduct {
    Complex phase;  // one of +1, -1, +i, -i
    PauliString string;
};

/// a * b with single-qubit Pauli algebra applied factor-wise (XY = iZ, ...).
PauliProduct pauli_multiply(const PauliString& a, const PauliString& b);

struct PauliStringHash {
    std::size_t operator()(const PauliString& p) const noexcept {
        return std::hash<std::uint64_t>{}(p.x_mask() * 0x9E3779B97F4A7C15ULL ^ p.z_mask());
    }
};

/// Linear combination of Pauli strings, sum_l u_l P_l.
class QubitOperator {
  public:
    using Term = std::pair<Complex, PauliString>;

    QubitOperator() = default;
    explicit QubitOperator(std::vector<Term> terms) : terms_(std::move(terms)) {}

    void add_term(Complex coeff, const PauliString& string) { terms_.emplace_back(coeff, string); }
    void add_op(const QubitOperator& other);

    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool empty() const { return terms_.empty(); }

    /// Merges equal strings (first-appearance order kept) and drops terms with
    /// |coeff| below `threshold`. Idempotent.
    QubitOperator simplified(double threshold = 1e-14) const;
    void simplify(double threshold = 1e-14) { *this = simplified(threshold); }

    QubitOperator adjoint() const;
    bool is_hermitian(double tol = 1e-12) const;
    /// Number of qubits spanned (max qubit + 1, 0 for pure identity).
    std::size_t n_qubits() const;
    std::uint64_t support() const;

    QubitOperator operator*(const QubitOperator& rhs) const;
    QubitOperator& operator*=(Complex c);
    QubitOperator operator+(const QubitOperator& rhs) const;
    QubitOperator operator-(const QubitOperator& rhs) const;
    friend QubitOperator operator*(Complex c, QubitOperator op) { return op *= c; }

    /// Coefficient of the identity string (0 if absent).
    Complex identity_coefficient() const;

    /// "+0.500000 X0 Z1\n-0.250000i Y2\n" style rendering, one term per line.
    std::string str() const;

  private:
    std::vector<Term> terms_;
};

/// Commutator [a, b] = ab - ba, simplified.
QubitOperator commutator(const QubitOperator& a, const QubitOperator& b);

}  // namespace fermiq
