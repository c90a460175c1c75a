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

#include <string>
#include <utility>
#include <vector>

#include "fermiq/pauli.h"
#include "fermiq/types.h"

namespace fermiq {

/// Sum of normal-ordered fermionic strings c a+_{p1} a+_{p2} ... a_{q1} a_{q2} ...
///
/// Terms are stored with creators and annihilators each in descending index
/// order; add_term() sorts its input and folds the permutation sign into the
/// coefficient, so add_term(1, {1, 2}, {}) stores -a+_2 a+_1.
class SQOperator {
  public:
    struct Term {
        Complex coeff;
        std::vector<std::size_t> creators;
        std::vector<std::size_t> annihilators;
        friend bool operator==(const Term&, const Term&) = default;
    };

    SQOperator() = default;

    /// Throws std::invalid_argument on a repeated index within either list
    /// (such a string is identically zero and almost always a caller bug).
    void add_term(Complex coeff, std::vector<std::size_t> creators, std::vector<std::size_t> annihilators);

    /// Accepts a raw ladder sequence (true = creator), left to right as written.
    /// Throws std::invalid_argument when a creator appears right of an
    /// annihilator; input that is not normal-ordered is rejected, not reordered.
    void add_ladder_term(Complex coeff, const std::vector<std::pair<std::size_t, bool>>& ladder);

    void add_op(const SQOperator& other);

    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool empty() const { return terms_.empty(); }

    SQOperator adjoint() const;
    /// Highest mode index plus one.
    std::size_t n_modes() const;

    /// Jordan-Wigner: a_p = (X_p + iY_p)/2 Z_{p-1}...Z_0,
    /// a+_p = (X_p - iY_p)/2 Z_{p-1}...Z_0. Result is simplified.
    QubitOperator jw_transform() const;

    /// "+0.500000 [4^ 2^ 3 1]" style, one term per line.
    std::string str() const;

  private:
    std::vector<Term> terms_;
};

/// JW image of a single ladder operator.
QubitOperator jw_ladder(std::size_t mode, bool creator);

}  // namespace fermiq
