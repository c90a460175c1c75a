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

#include <algorithm>
#include <stdexcept>

#include <fmt/format.h>

namespace fermiq {

namespace {

/// Sorts descending in place; returns the parity of the permutation.
int sort_descending(std::vector<std::size_t>& v) {
    int sign = 1;
    for (std::size_t i = 1; i < v.size(); ++i) {
        for (std::size_t j = i; j > 0 && v[j - 1] < v[j]; --j) {
            std::swap(v[j - 1], v[j]);
            sign = -sign;
        }
    }
    for (std::size_t i = 1; i < v.size(); ++i) {
        if (v[i] == v[i - 1]) throw std::invalid_argument(fmt::format("repeated mode index {}", v[i]));
    }
    return sign;
}

}  // namespace

void SQOperator::add_term(Complex coeff, std::vector<std::size_t> creators, std::vector<std::size_t> annihilators) {
    for (auto p : creators) {
        if (p >= 64) throw std::invalid_argument(fmt::format("mode index {} out of range", p));
    }
    for (auto p : annihilators) {
        if (p >= 64) throw std::invalid_argument(fmt::format("mode index {} out of range", p));
    }
    const int sign = sort_descending(creators) * sort_descending(annihilators);
    terms_.push_back({coeff * static_cast<double>(sign), std::move(creators), std::move(annihilators)});
}

void SQOperator::add_ladder_term(Complex coeff, const std::vector<std::pair<std::size_t, bool>>& ladder) {
    std::vector<std::size_t> cre;
    std::vector<std::size_t> ann;
    for (const auto& [mode, is_creator] : ladder) {
        if (is_creator) {
            if (!ann.empty()) throw std::invalid_argument("ladder sequence is not normal-ordered");
            cre.push_back(mode);
        } else {
            ann.push_back(mode);
        }
    }
    add_term(coeff, std::move(cre), std::move(ann));
}

void SQOperator::add_op(const SQOperator& other) {
    terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
}

SQOperator SQOperator::adjoint() const {
    SQOperator out;
    for (const auto& t : terms_) {
        std::vector<std::size_t> cre(t.annihilators.rbegin(), t.annihilators.rend());
        std::vector<std::size_t> ann(t.creators.rbegin(), t.creators.rend());
        out.add_term(std::conj(t.coeff), std::move(cre), std::move(ann));
    }
    return out;
}

std::size_t SQOperator::n_modes() const {
    std::size_t n = 0;
    for (const auto& t : terms_) {
        if (!t.creators.empty()) n = std::max(n, t.creators.front() + 1);
        if (!t.annihilators.empty()) n = std::max(n, t.annihilators.front() + 1);
    }
    return n;
}

QubitOperator jw_ladder(std::size_t mode, bool creator) {
    const std::uint64_t bit = std::uint64_t{1} << mode;
    const std::uint64_t tail = bit - 1;
    QubitOperator op;
    op.add_term(0.5, PauliString::from_masks(bit, tail));
    op.add_term(Complex(0.0, creator ? -0.5 : 0.5), PauliString::from_masks(bit, bit | tail));
    return op;
}

QubitOperator SQOperator::jw_transform() const {
    QubitOperator out;
    for (const auto& t : terms_) {
        QubitOperator prod({{t.coeff, PauliString()}});
        for (auto p : t.creators) prod = prod * jw_ladder(p, true);
        for (auto p : t.annihilators) prod = prod * jw_ladder(p, false);
        out.add_op(prod);
    }
    return out.simplified();
}

std::string SQOperator::str() const {
    std::string s;
    for (const auto& t : terms_) {
        s += fmt::format("{:+.6f}{:+.6f}i [", t.coeff.real(), t.coeff.imag());
        bool first = true;
        for (auto p : t.creators) {
            s += fmt::format("{}{}^", first ? "" : " ", p);
            first = false;
        }
        for (auto p : t.annihilators) {
            s += fmt::format("{}{}", first ? "" : " ", p);
            first = false;
        }
        s += "]\n";
    }
    return s;
}

}  // namespace fermiq
