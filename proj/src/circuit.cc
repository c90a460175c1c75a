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
#include "fermiq/circuit.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <fmt/format.h>

namespace fermiq {

Circuit Circuit::adjoint() const {
    std::vector<Gate> out;
    out.reserve(gates_.size());
    for (auto it = gates_.rbegin(); it != gates_.rend(); ++it) out.push_back(it->adjoint());
    return Circuit(std::move(out));
}

std::size_t Circuit::count(GateKind kind) const {
    return static_cast<std::size_t>(
        std::count_if(gates_.begin(), gates_.end(), [kind](const Gate& g) { return g.kind() == kind; }));
}

std::size_t Circuit::n_qubits() const {
    std::size_t n = 0;
    for (const auto& g : gates_) n = std::max(n, g.highest_qubit() + 1);
    return n;
}

std::string Circuit::str() const {
    std::string s;
    for (const auto& g : gates_) {
        s += g.str();
        s += '\n';
    }
    return s;
}

Circuit parse_circuit(const std::string& text) {
    Circuit c;
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string name;
        if (!(ls >> name) || name[0] == '#') continue;
        GateKind kind;
        try {
            kind = gate_kind_from_name(name);
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what(), line_no);
        }
        std::size_t target = 0;
        if (!(ls >> target)) throw ParseError("missing target qubit", line_no);
        std::optional<std::size_t> control;
        std::optional<double> param;
        if (is_two_qubit(kind)) {
            std::size_t ctl = 0;
            if (!(ls >> ctl)) throw ParseError("missing control qubit", line_no);
            control = ctl;
        }
        if (is_parametric(kind)) {
            double p = 0.0;
            if (!(ls >> p)) throw ParseError("missing gate angle", line_no);
            param = p;
        }
        try {
            c.add_gate(make_gate(kind, target, control, param));
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what(), line_no);
        }
    }
    return c;
}

std::pair<Circuit, Complex> exponentiate_pauli_string(Complex factor, const PauliString& string) {
    if (std::abs(factor.real()) > 1e-14) {
        throw std::invalid_argument(
            fmt::format("exponentiate_pauli_string: factor ({}, {}) is not purely imaginary", factor.real(),
                        factor.imag()));
    }
    if (string.is_identity()) return {Circuit(), std::exp(Complex(0.0, factor.imag()))};

    const auto factors = string.factors();
    Circuit basis;
    Circuit ladder;
    for (const auto& f : factors) {
        if (f.axis == PauliAxis::X) basis.add_gate(make_gate(GateKind::H, f.qubit));
        if (f.axis == PauliAxis::Y) basis.add_gate(make_gate(GateKind::Rx, f.qubit, std::nullopt, std::numbers::pi / 2));
    }
    for (std::size_t k = 0; k + 1 < factors.size(); ++k) {
        ladder.add_gate(make_gate(GateKind::CNOT, factors[k + 1].qubit, factors[k].qubit));
    }
    // exp(-i theta Z) = Rz(2 theta) with factor = -i theta.
    const double angle = -2.0 * factor.imag();

    Circuit out = basis;
    out.add_circuit(ladder);
    out.add_gate(make_gate(GateKind::Rz, factors.back().qubit, std::nullopt, angle));
    out.add_circuit(ladder.adjoint());
    out.add_circuit(basis.adjoint());
    return {std::move(out), Complex(1.0, 0.0)};
}

}  // namespace fermiq
