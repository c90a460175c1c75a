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

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_map>

#include <fmt/format.h>

namespace fermiq {

namespace {

constexpr Complex kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

char axis_char(PauliAxis a) { return a == PauliAxis::X ? 'X' : (a == PauliAxis::Y ? 'Y' : 'Z'); }

}  // namespace

PauliString::PauliString(const std::vector<PauliFactor>& factors) {
    for (const auto& f : factors) {
        if (f.qubit >= 64) throw std::invalid_argument("Pauli factor qubit index exceeds 63");
        const std::uint64_t bit = std::uint64_t{1} << f.qubit;
        if (support() & bit) {
            throw std::invalid_argument(fmt::format("repeated qubit {} in Pauli string", f.qubit));
        }
        if (f.axis != PauliAxis::Z) x_ |= bit;
        if (f.axis != PauliAxis::X) z_ |= bit;
    }
}

std::size_t PauliString::weight() const { return std::popcount(support()); }
std::size_t PauliString::count_y() const { return std::popcount(x_ & z_); }

bool PauliString::commutes_with(const PauliString& o) const {
    return (std::popcount((x_ & o.z_) ^ (z_ & o.x_)) & 1) == 0;
}

std::vector<PauliFactor> PauliString::factors() const {
    std::vector<PauliFactor> out;
    std::uint64_t s = support();
    while (s) {
        const auto q = static_cast<std::size_t>(std::countr_zero(s));
        s &= s - 1;
        const bool x = (x_ >> q) & 1U;
        const bool z = (z_ >> q) & 1U;
        out.push_back({q, x && z ? PauliAxis::Y : (x ? PauliAxis::X : PauliAxis::Z)});
    }
    return out;
}

int PauliString::max_qubit() const {
    const auto s = support();
    return s ? 63 - std::countl_zero(s) : -1;
}

std::string PauliString::str() const {
    if (is_identity()) return "I";
    std::string s;
    for (const auto& f : factors()) {
        if (!s.empty()) s += ' ';
        s += axis_char(f.axis);
        s += std::to_string(f.qubit);
    }
    return s;
}

bool operator<(const PauliString& a, const PauliString& b) {
    const auto fa = a.factors();
    const auto fb = b.factors();
    return std::lexicographical_compare(fa.begin(), fa.end(), fb.begin(), fb.end(),
                                        [](const PauliFactor& l, const PauliFactor& r) {
                                            if (l.qubit != r.qubit) return l.qubit < r.qubit;
                                            return l.axis < r.axis;
                                        });
}

PauliProduct pauli_multiply(const PauliString& a, const PauliString& b) {
    // Write P = i^{pc(x&z)} X^x Z^z. Moving Z^z1 past X^x2 costs (-1)^{pc(z1&x2)}.
    const std::uint64_t x = a.x_mask() ^ b.x_mask();
    const std::uint64_t z = a.z_mask() ^ b.z_mask();
    const int e = std::popcount(a.x_mask() & a.z_mask()) + std::popcount(b.x_mask() & b.z_mask()) +
                  2 * std::popcount(a.z_mask() & b.x_mask()) - std::popcount(x & z);
    return {kIPow[((e % 4) + 4) % 4], PauliString::from_masks(x, z)};
}

void QubitOperator::add_op(const QubitOperator& other) {
    terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
}

QubitOperator QubitOperator::simplified(double threshold) const {
    std::unordered_map<PauliString, std::size_t, PauliStringHash> slot;
    std::vector<Term> merged;
    merged.reserve(terms_.size());
    for (const auto& [c, p] : terms_) {
        auto [it, inserted] = slot.try_emplace(p, merged.size());
        if (inserted) {
            merged.emplace_back(c, p);
        } else {
            merged[it->second].first += c;
        }
    }
    std::vector<Term> kept;
    kept.reserve(merged.size());
    for (auto& t : merged) {
        if (std::abs(t.first) >= threshold) kept.push_back(std::move(t));
    }
    return QubitOperator(std::move(kept));
}

QubitOperator QubitOperator::adjoint() const {
    auto out = *this;
    for (auto& t : out.terms_) t.first = std::conj(t.first);
    return out;
}

bool QubitOperator::is_hermitian(double tol) const {
    const QubitOperator merged = simplified(0.0);
    for (const auto& [c, p] : merged.terms()) {
        if (std::abs(c.imag()) > tol) return false;
    }
    return true;
}

std::uint64_t QubitOperator::support() const {
    std::uint64_t s = 0;
    for (const auto& t : terms_) s |= t.second.support();
    return s;
}

std::size_t QubitOperator::n_qubits() const {
    const auto s = support();
    return s ? static_cast<std::size_t>(64 - std::countl_zero(s)) : 0;
}

QubitOperator QubitOperator::operator*(const QubitOperator& rhs) const {
    QubitOperator out;
    out.terms_.reserve(terms_.size() * rhs.terms_.size());
    for (const auto& [ca, pa] : terms_) {
        for (const auto& [cb, pb] : rhs.terms_) {
            auto prod = pauli_multiply(pa, pb);
            out.terms_.emplace_back(ca * cb * prod.phase, prod.string);
        }
    }
    return out.simplified();
}

QubitOperator& QubitOperator::operator*=(Complex c) {
    for (auto& t : terms_) t.first *= c;
    return *this;
}

QubitOperator QubitOperator::operator+(const QubitOperator& rhs) const {
    auto out = *this;
    out.add_op(rhs);
    return out.simplified();
}

QubitOperator QubitOperator::operator-(const QubitOperator& rhs) const {
    auto out = *this;
    for (const auto& [c, p] : rhs.terms_) out.add_term(-c, p);
    return out.simplified();
}

Complex QubitOperator::identity_coefficient() const {
    Complex c = 0.0;
    for (const auto& t : terms_) {
        if (t.second.is_identity()) c += t.first;
    }
    return c;
}

std::string QubitOperator::str() const {
    std::string s;
    for (const auto& [c, p] : terms_) {
        if (c.imag() == 0.0) {
            s += fmt::format("{:+.10f} {}\n", c.real(), p.str());
        } else if (c.real() == 0.0) {
            s += fmt::format("{:+.10f}i {}\n", c.imag(), p.str());
        } else {
            s += fmt::format("({:+.10f}{:+.10f}i) {}\n", c.real(), c.imag(), p.str());
        }
    }
    return s;
}

QubitOperator commutator(const QubitOperator& a, const QubitOperator& b) { return a * b - b * a; }

}  // namespace fermiq
