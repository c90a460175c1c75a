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
#include "fermiq/computer.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include <fmt/format.h>

namespace fermiq {

namespace {

constexpr Complex kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

/// Phase picked up by basis state |i> under P: P|i> = phase(i) |i ^ flip>.
struct PauliAction {
    std::uint64_t flip;
    std::uint64_t zmask;
    Complex base;

    explicit PauliAction(const PauliString& p, Complex coeff = 1.0)
        : flip(p.x_mask()), zmask(p.z_mask()), base(coeff * kIPow[p.count_y() % 4]) {}

    Complex phase(std::uint64_t i) const { return (std::popcount(i & zmask) & 1) ? -base : base; }
};

}  // namespace

Computer::Computer(std::size_t n_qubits, std::size_t max_amplitudes) : n_qubits_(n_qubits) {
    if (n_qubits == 0) throw CapacityError("Computer needs at least one qubit");
    if (n_qubits > 63 || (std::size_t{1} << n_qubits) > max_amplitudes) {
        throw CapacityError(fmt::format("{} qubits exceed the amplitude cap of {}", n_qubits, max_amplitudes));
    }
    coeff_.assign(std::size_t{1} << n_qubits, Complex(0.0, 0.0));
    coeff_[0] = 1.0;
}

void Computer::set_amplitudes(std::vector<Complex> amps) {
    if (amps.size() != coeff_.size()) {
        throw std::invalid_argument(fmt::format("expected {} amplitudes, got {}", coeff_.size(), amps.size()));
    }
    coeff_ = std::move(amps);
}

void Computer::set_basis_state(BasisAddress b) {
    if (b.index() >= coeff_.size()) throw std::out_of_range("basis address outside the register");
    std::fill(coeff_.begin(), coeff_.end(), Complex(0.0, 0.0));
    coeff_[b.index()] = 1.0;
}

void Computer::scale(Complex c) {
    for (auto& a : coeff_) a *= c;
}

void Computer::check_qubit(std::size_t q) const {
    if (q >= n_qubits_) {
        throw std::out_of_range(fmt::format("qubit {} out of range for {} qubits", q, n_qubits_));
    }
}

void Computer::check_gate(const Gate& g) const {
    check_qubit(g.target());
    if (g.control()) check_qubit(*g.control());
}

void Computer::apply_gate(const Gate& g) {
    check_gate(g);
    apply_gate_masked(g, 0);
}

void Computer::apply_gate_controlled(const Gate& g, std::size_t control) {
    check_gate(g);
    check_qubit(control);
    if (control == g.target() || (g.control() && *g.control() == control)) {
        throw std::invalid_argument("extra control coincides with a gate qubit");
    }
    apply_gate_masked(g, std::uint64_t{1} << control);
}

void Computer::apply_circuit(const Circuit& c) {
    for (const auto& g : c.gates()) check_gate(g);
    for (const auto& g : c.gates()) apply_gate_masked(g, 0);
}

void Computer::apply_circuit_controlled(const Circuit& c, std::size_t control) {
    check_qubit(control);
    for (const auto& g : c.gates()) {
        check_gate(g);
        if (control == g.target() || (g.control() && *g.control() == control)) {
            throw std::invalid_argument("extra control coincides with a gate qubit");
        }
    }
    const std::uint64_t mask = std::uint64_t{1} << control;
    for (const auto& g : c.gates()) apply_gate_masked(g, mask);
}

void Computer::apply_gate_masked(const Gate& g, std::uint64_t mask) {
    const std::size_t dim = coeff_.size();
    Complex* c = coeff_.data();

    if (g.kind() == GateKind::SWAP) {
        const std::uint64_t a = std::uint64_t{1} << g.target();
        const std::uint64_t b = std::uint64_t{1} << *g.control();
        for (std::uint64_t i = 0; i < dim; ++i) {
            if ((i & a) && !(i & b) && (i & mask) == mask) std::swap(c[i], c[i ^ a ^ b]);
        }
        return;
    }

    if (g.control()) mask |= std::uint64_t{1} << *g.control();
    const std::size_t t = g.target();
    const std::size_t tb = std::size_t{1} << t;
    const Mat2& m = g.target_matrix();

    if (g.is_diagonal()) {
        // Phases only; no pairing of amplitudes.
        const Complex d0 = m[0];
        const Complex d1 = m[3];
        const bool skip0 = d0 == Complex(1.0, 0.0);
        for (std::uint64_t i = 0; i < dim; ++i) {
            if ((i & mask) != mask) continue;
            if (i & tb) {
                c[i] *= d1;
            } else if (!skip0) {
                c[i] *= d0;
            }
        }
        return;
    }

    if (g.kind() == GateKind::X || g.kind() == GateKind::CNOT) {
        if (mask == 0) {
            // C'_{..q_t..} = C_{..(1-q_t)..}: swap contiguous blocks of length 2^t.
            for (std::size_t base = 0; base < dim; base += 2 * tb) {
                std::swap_ranges(c + base, c + base + tb, c + base + tb);
            }
        } else {
            for (std::size_t base = 0; base < dim; base += 2 * tb) {
                for (std::size_t i = base; i < base + tb; ++i) {
                    if ((i & mask) == mask) std::swap(c[i], c[i + tb]);
                }
            }
        }
        return;
    }

    for (std::size_t base = 0; base < dim; base += 2 * tb) {
        for (std::size_t i = base; i < base + tb; ++i) {
            if ((i & mask) != mask) continue;
            const Complex a0 = c[i];
            const Complex a1 = c[i + tb];
            c[i] = m[0] * a0 + m[1] * a1;
            c[i + tb] = m[2] * a0 + m[3] * a1;
        }
    }
}

void Computer::apply_pauli(const PauliString& p, Complex coeff) {
    if (p.max_qubit() >= static_cast<int>(n_qubits_)) {
        throw std::out_of_range(fmt::format("Pauli string {} exceeds {} qubits", p.str(), n_qubits_));
    }
    const PauliAction act(p, coeff);
    const std::size_t dim = coeff_.size();
    if (act.flip == 0) {
        for (std::uint64_t i = 0; i < dim; ++i) coeff_[i] *= act.phase(i);
        return;
    }
    for (std::uint64_t i = 0; i < dim; ++i) {
        const std::uint64_t j = i ^ act.flip;
        if (j < i) continue;
        const Complex a = coeff_[i];
        const Complex b = coeff_[j];
        coeff_[j] = act.phase(i) * a;
        coeff_[i] = act.phase(j) * b;
    }
}

void Computer::apply_operator(const QubitOperator& op) {
    if (op.n_qubits() > n_qubits_) {
        throw std::out_of_range(fmt::format("operator spans {} qubits, register has {}", op.n_qubits(), n_qubits_));
    }
    std::vector<Complex> out(coeff_.size(), Complex(0.0, 0.0));
    for (const auto& [u, p] : op.terms()) {
        const PauliAction act(p, u);
        for (std::uint64_t i = 0; i < coeff_.size(); ++i) out[i ^ act.flip] += act.phase(i) * coeff_[i];
    }
    coeff_ = std::move(out);
}

Complex Computer::expectation(const QubitOperator& op) const {
    if (op.n_qubits() > n_qubits_) {
        throw std::out_of_range(fmt::format("operator spans {} qubits, register has {}", op.n_qubits(), n_qubits_));
    }
    Complex total = 0.0;
    const std::size_t dim = coeff_.size();
    for (const auto& [u, p] : op.terms()) {
        const PauliAction act(p);
        Complex acc = 0.0;
        for (std::uint64_t i = 0; i < dim; ++i) acc += std::conj(coeff_[i ^ act.flip]) * act.phase(i) * coeff_[i];
        total += u * acc;
    }
    return total;
}

double Computer::norm() const {
    double s = 0.0;
    for (const auto& a : coeff_) s += std::norm(a);
    return std::sqrt(s);
}

Complex Computer::measure(const QubitOperator& op, std::size_t n_shots, Rng& rng) const {
    if (n_shots == 0) throw std::invalid_argument("measure: n_shots must be positive");
    Complex total = 0.0;
    for (const auto& [u, p] : op.terms()) {
        if (p.is_identity()) {
            total += u;
            continue;
        }
        const double mean = std::clamp(expectation(QubitOperator({{1.0, p}})).real(), -1.0, 1.0);
        const double p_plus = 0.5 * (1.0 + mean);
        std::size_t plus = 0;
        for (std::size_t s = 0; s < n_shots; ++s) {
            if (rng.uniform() < p_plus) ++plus;
        }
        total += u * (2.0 * static_cast<double>(plus) - static_cast<double>(n_shots)) / static_cast<double>(n_shots);
    }
    return total;
}

std::vector<BasisAddress> Computer::sample_basis_states(std::size_t n_shots, Rng& rng) const {
    if (n_shots == 0) throw std::invalid_argument("sample_basis_states: n_shots must be positive");
    std::vector<double> cdf(coeff_.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < coeff_.size(); ++i) {
        acc += std::norm(coeff_[i]);
        cdf[i] = acc;
    }
    std::vector<BasisAddress> out;
    out.reserve(n_shots);
    for (std::size_t s = 0; s < n_shots; ++s) {
        const double u = rng.uniform() * acc;
        auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        // Never land on a zero-probability tail entry.
        std::size_t idx = std::min<std::size_t>(static_cast<std::size_t>(it - cdf.begin()), cdf.size() - 1);
        while (idx > 0 && std::norm(coeff_[idx]) == 0.0) --idx;
        out.emplace_back(idx);
    }
    return out;
}

std::string Computer::str(double threshold) const {
    std::string s;
    for (std::size_t i = 0; i < coeff_.size(); ++i) {
        if (std::abs(coeff_[i]) > threshold) {
            s += fmt::format("({:+.8f},{:+.8f}) {}\n", coeff_[i].real(), coeff_[i].imag(),
                             BasisAddress(i).str(n_qubits_));
        }
    }
    return s;
}

Complex inner_product(std::span<const Complex> a, std::span<const Complex> b) {
    if (a.size() != b.size()) throw std::invalid_argument("inner_product: dimension mismatch");
    Complex s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
    return s;
}

Complex inner_product(const Computer& a, const Computer& b) { return inner_product(a.amplitudes(), b.amplitudes()); }

Complex transition_element(const Computer& a, const QubitOperator& op, const Computer& b) {
    Computer ob = b;
    ob.apply_operator(op);
    return inner_product(a, ob);
}

}  // namespace fermiq
