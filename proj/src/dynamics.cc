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
#include "fermiq/dynamics.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <fmt/format.h>

#include "fermiq/linalg.h"

namespace fermiq {

std::vector<QubitOperator::Term> trotter_terms(const QubitOperator& h, TermOrder ordering) {
    const QubitOperator merged = h.simplified();
    std::vector<QubitOperator::Term> terms;
    for (const auto& [c, p] : merged.terms()) {
        if (std::abs(c.imag()) > 1e-12) {
            throw std::invalid_argument(fmt::format("evolution needs a Hermitian operator; term {} has coefficient ({}, {})",
                                                    p.str(), c.real(), c.imag()));
        }
        if (!p.is_identity()) terms.emplace_back(c, p);
    }
    if (ordering == TermOrder::DescendingMagnitude) {
        std::stable_sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
            const double ma = std::abs(a.first.real());
            const double mb = std::abs(b.first.real());
            if (ma != mb) return ma > mb;
            return a.second < b.second;
        });
    }
    return terms;
}

PhasedCircuit trotter_circuit(const QubitOperator& h, const EvolutionSpec& spec) {
    if (spec.trotter_steps == 0) throw std::invalid_argument("trotter_steps must be at least 1");
    const auto terms = trotter_terms(h, spec.ordering);
    const double dt = spec.time / static_cast<double>(spec.trotter_steps);

    Circuit step;
    for (const auto& [c, p] : terms) {
        auto [circ, phase] = exponentiate_pauli_string(Complex(0.0, -dt * c.real()), p);
        step.add_circuit(circ);
    }
    PhasedCircuit out;
    for (std::size_t k = 0; k < spec.trotter_steps; ++k) out.circuit.add_circuit(step);
    out.phase = std::exp(Complex(0.0, -spec.time * h.simplified().identity_coefficient().real()));
    return out;
}

std::size_t trotter_cnot_count(const QubitOperator& h, std::size_t trotter_steps) {
    std::size_t n = 0;
    for (const auto& [c, p] : trotter_terms(h, TermOrder::AsGiven)) n += 2 * (p.weight() - 1);
    return n * trotter_steps;
}

void exact_evolve(const QubitOperator& h, double t, Computer& state) {
    if (state.n_qubits() > kOracleMaxQubits) {
        throw CapacityError(fmt::format("exact evolution is limited to {} qubits", kOracleMaxQubits));
    }
    if (h.n_qubits() > state.n_qubits()) {
        throw std::out_of_range(fmt::format("operator spans {} qubits, register has {}", h.n_qubits(), state.n_qubits()));
    }
    if (t == 0.0) return;

    QubitOperator rest;
    double shift = 0.0;
    double one_norm = 0.0;
    const QubitOperator merged = h.simplified();
    for (const auto& [c, p] : merged.terms()) {
        if (p.is_identity()) {
            shift += c.real();
        } else {
            rest.add_term(c, p);
            one_norm += std::abs(c);
        }
    }

    const auto n_steps = static_cast<std::size_t>(std::max(1.0, std::ceil(std::abs(t) * one_norm)));
    const double tau = t / static_cast<double>(n_steps);
    for (std::size_t s = 0; s < n_steps; ++s) {
        Computer term = state;
        std::vector<Complex> acc(state.amplitudes().begin(), state.amplitudes().end());
        for (std::size_t k = 1; k <= 60; ++k) {
            term.apply_operator(rest);
            term.scale(Complex(0.0, -tau / static_cast<double>(k)));
            const auto amps = term.amplitudes();
            for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += amps[i];
            if (term.norm() < 1e-17) break;
        }
        state.set_amplitudes(std::move(acc));
    }
    state.scale(std::exp(Complex(0.0, -t * shift)));
}

Circuit controlled_evolution_circuit(const QubitOperator& h, const EvolutionSpec& spec, std::size_t ancilla) {
    if (ancilla < 64 && (h.support() >> ancilla) & 1U) {
        throw std::invalid_argument(fmt::format("ancilla {} is acted on by the Hamiltonian", ancilla));
    }
    const PhasedCircuit plain = trotter_circuit(h, spec);
    Circuit out;
    for (const auto& g : plain.circuit.gates()) {
        if (g.target() == ancilla || (g.control() && *g.control() == ancilla)) {
            throw std::invalid_argument(fmt::format("ancilla {} collides with the evolution circuit", ancilla));
        }
        if (g.kind() == GateKind::Rz) {
            out.add_gate(make_gate(GateKind::cRz, g.target(), ancilla, g.parameter()));
        } else {
            out.add_gate(g);
        }
    }
    const double angle = std::arg(plain.phase);
    if (angle != 0.0) out.add_gate(make_gate(GateKind::R, ancilla, std::nullopt, angle));
    return out;
}

void evolve(const QubitOperator& h, const EvolutionSpec& spec, Computer& state) {
    if (spec.exact) {
        exact_evolve(h, spec.time, state);
        return;
    }
    const PhasedCircuit pc = trotter_circuit(h, spec);
    state.apply_circuit(pc.circuit);
    state.scale(pc.phase);
}

namespace {

Computer prepared(const PhasedCircuit& prep, std::size_t n_qubits) {
    Computer c(n_qubits);
    c.apply_circuit(prep.circuit);
    c.scale(prep.phase);
    return c;
}

void apply_controlled_pauli(Computer& c, const PauliString& p, std::size_t ancilla) {
    for (const auto& f : p.factors()) {
        const GateKind k = f.axis == PauliAxis::X ? GateKind::X : (f.axis == PauliAxis::Y ? GateKind::Y : GateKind::Z);
        c.apply_gate_controlled(make_gate(k, f.qubit), ancilla);
    }
}

}  // namespace

Complex matrix_element(const PhasedCircuit& bra, const PhasedCircuit& ket, const QubitOperator* op,
                       std::size_t n_qubits, const MatrixElementOptions& options) {
    if (bra.circuit.n_qubits() > n_qubits || ket.circuit.n_qubits() > n_qubits) {
        throw std::invalid_argument(fmt::format("state preparations act on more than {} qubits", n_qubits));
    }
    if (op && op->n_qubits() > n_qubits) {
        throw std::invalid_argument(fmt::format("operator spans {} qubits, register has {}", op->n_qubits(), n_qubits));
    }

    if (options.method == MatrixElementMethod::Direct) {
        const Computer b = prepared(bra, n_qubits);
        const Computer k = prepared(ket, n_qubits);
        return op ? transition_element(b, *op, k) : inner_product(b, k);
    }

    const std::size_t anc = n_qubits;
    const Complex rel = std::conj(bra.phase) * ket.phase;
    Computer base(n_qubits + 1);
    base.apply_gate(make_gate(GateKind::H, anc));
    base.apply_circuit_controlled(ket.circuit, anc);
    if (std::arg(rel) != 0.0) base.apply_gate(make_gate(GateKind::R, anc, std::nullopt, std::arg(rel)));
    const Circuit bra_adj = bra.circuit.adjoint();

    const QubitOperator x_anc({{1.0, PauliString({{anc, PauliAxis::X}})}});
    const QubitOperator y_anc({{1.0, PauliString({{anc, PauliAxis::Y}})}});
    Rng rng(options.seed);

    const QubitOperator identity({{1.0, PauliString()}});
    const QubitOperator& o = op ? *op : identity;
    Complex total = 0.0;
    for (const auto& [u, p] : o.terms()) {
        Computer c = base;
        apply_controlled_pauli(c, p, anc);
        c.apply_circuit_controlled(bra_adj, anc);
        Complex value;
        if (options.shots == 0) {
            value = Complex(c.expectation(x_anc).real(), c.expectation(y_anc).real());
        } else {
            value = Complex(c.measure(x_anc, options.shots, rng).real(), c.measure(y_anc, options.shots, rng).real());
        }
        total += u * value;
    }
    return std::abs(rel) * total;
}

}  // namespace fermiq
