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

// Dense reference constructions for tests. Nothing here calls into the
// library's own matrix code: gates and Pauli strings are rebuilt from
// textbook 2x2 matrices and Kronecker products.
#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "fermiq/circuit.h"
#include "fermiq/gate.h"
#include "fermiq/pauli.h"

namespace oracle {

using fermiq::Complex;
using M = Eigen::MatrixXcd;
using V = Eigen::VectorXcd;

inline M m2(Complex a, Complex b, Complex c, Complex d) {
    M m(2, 2);
    m << a, b, c, d;
    return m;
}

inline M eye2() { return M::Identity(2, 2); }
inline M pauli_x() { return m2(0, 1, 1, 0); }
inline M pauli_y() { return m2(0, Complex(0, -1), Complex(0, 1), 0); }
inline M pauli_z() { return m2(1, 0, 0, -1); }
inline M proj0() { return m2(1, 0, 0, 0); }
inline M proj1() { return m2(0, 0, 0, 1); }

/// ops[q] acts on qubit q; qubit 0 is the least significant index bit, so the
/// full matrix is ops[n-1] (x) ... (x) ops[0].
inline M kron_chain(const std::vector<M>& ops) {
    M out = M::Identity(1, 1);
    for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
        M next(out.rows() * 2, out.cols() * 2);
        for (Eigen::Index i = 0; i < out.rows(); ++i) {
            for (Eigen::Index j = 0; j < out.cols(); ++j) {
                next.block(2 * i, 2 * j, 2, 2) = out(i, j) * (*it);
            }
        }
        out = next;
    }
    return out;
}

inline M embed1(const M& u, std::size_t q, std::size_t n) {
    std::vector<M> ops(n, eye2());
    ops[q] = u;
    return kron_chain(ops);
}

/// |0><0|_c (x) I + |1><1|_c (x) U_t.
inline M embed_controlled(const M& u, std::size_t t, std::size_t c, std::size_t n) {
    std::vector<M> a(n, eye2());
    std::vector<M> b(n, eye2());
    a[c] = proj0();
    b[c] = proj1();
    b[t] = u;
    return kron_chain(a) + kron_chain(b);
}

inline M single_qubit(fermiq::GateKind k, double th) {
    using fermiq::GateKind;
    const Complex i(0, 1);
    const double s2 = 1.0 / std::sqrt(2.0);
    switch (k) {
        case GateKind::I: return eye2();
        case GateKind::X: return pauli_x();
        case GateKind::Y: return pauli_y();
        case GateKind::Z: return pauli_z();
        case GateKind::H: return m2(s2, s2, s2, -s2);
        case GateKind::S: return m2(1, 0, 0, i);
        case GateKind::Sdg: return m2(1, 0, 0, -i);
        case GateKind::T: return m2(1, 0, 0, std::exp(i * std::numbers::pi / 4.0));
        case GateKind::Tdg: return m2(1, 0, 0, std::exp(-i * std::numbers::pi / 4.0));
        case GateKind::V: return 0.5 * m2(1.0 + i, 1.0 - i, 1.0 - i, 1.0 + i);
        case GateKind::adjV: return 0.5 * m2(1.0 - i, 1.0 + i, 1.0 + i, 1.0 - i);
        // exp(-i th/2 P) = cos(th/2) I - i sin(th/2) P
        case GateKind::Rx: return std::cos(th / 2) * eye2() - i * std::sin(th / 2) * pauli_x();
        case GateKind::Ry: return std::cos(th / 2) * eye2() - i * std::sin(th / 2) * pauli_y();
        case GateKind::Rz:
        case GateKind::cRz: return std::cos(th / 2) * eye2() - i * std::sin(th / 2) * pauli_z();
        case GateKind::R:
        case GateKind::cR: return m2(1, 0, 0, std::exp(i * th));
        case GateKind::CNOT: return pauli_x();
        case GateKind::CZ: return pauli_z();
        default: throw std::logic_error("no single-qubit block");
    }
}

inline M gate_matrix(const fermiq::Gate& g, std::size_t n) {
    using fermiq::GateKind;
    const double th = g.parameter().value_or(0.0);
    if (g.kind() == GateKind::SWAP) {
        // SWAP = (I + XX + YY + ZZ) / 2
        const std::size_t a = g.target();
        const std::size_t b = *g.control();
        auto two = [&](const M& p) {
            std::vector<M> ops(n, eye2());
            ops[a] = p;
            ops[b] = p;
            return kron_chain(ops);
        };
        return 0.5 * (kron_chain(std::vector<M>(n, eye2())) + two(pauli_x()) + two(pauli_y()) + two(pauli_z()));
    }
    const M u = single_qubit(g.kind(), th);
    if (g.control()) return embed_controlled(u, g.target(), *g.control(), n);
    return embed1(u, g.target(), n);
}

inline M circuit_matrix(const fermiq::Circuit& c, std::size_t n) {
    M u = M::Identity(std::int64_t{1} << n, std::int64_t{1} << n);
    for (const auto& g : c.gates()) u = gate_matrix(g, n) * u;
    return u;
}

inline M pauli_matrix(const fermiq::PauliString& p, std::size_t n) {
    std::vector<M> ops(n, eye2());
    for (const auto& f : p.factors()) {
        ops[f.qubit] = f.axis == fermiq::PauliAxis::X ? pauli_x() : f.axis == fermiq::PauliAxis::Y ? pauli_y() : pauli_z();
    }
    return kron_chain(ops);
}

inline M operator_matrix(const fermiq::QubitOperator& op, std::size_t n) {
    M m = M::Zero(std::int64_t{1} << n, std::int64_t{1} << n);
    for (const auto& [u, p] : op.terms()) m += u * pauli_matrix(p, n);
    return m;
}

/// exp(-i t H) for Hermitian H via its eigendecomposition.
inline M expm_hermitian(const M& h, double t) {
    Eigen::SelfAdjointEigenSolver<M> es(h);
    const Complex i(0, 1);
    V ph = (es.eigenvalues().cast<Complex>() * (-i * t)).array().exp();
    return es.eigenvectors() * ph.asDiagonal() * es.eigenvectors().adjoint();
}

/// Dense fermionic ladder operator on n modes with JW ordering: the sign is
/// (-1)^(number of occupied modes below p).
inline M ladder(std::size_t p, bool creator, std::size_t n) {
    const std::size_t dim = std::size_t{1} << n;
    M m = M::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (std::size_t s = 0; s < dim; ++s) {
        const bool occ = (s >> p) & 1U;
        if (occ == creator) continue;
        int below = 0;
        for (std::size_t q = 0; q < p; ++q) below += (s >> q) & 1U;
        m(static_cast<Eigen::Index>(s ^ (std::size_t{1} << p)), static_cast<Eigen::Index>(s)) = (below % 2) ? -1.0 : 1.0;
    }
    return m;
}

inline double max_abs(const M& m) { return m.cwiseAbs().maxCoeff(); }

inline V random_state(std::size_t n, std::mt19937_64& rng) {
    std::normal_distribution<double> nd;
    V v(std::int64_t{1} << n);
    for (auto& x : v) x = Complex(nd(rng), nd(rng));
    return v / v.norm();
}

inline fermiq::Circuit random_circuit(std::size_t n, std::size_t n_gates, std::mt19937_64& rng) {
    using fermiq::GateKind;
    static const GateKind kinds[] = {GateKind::X,  GateKind::Y,   GateKind::Z,    GateKind::H,    GateKind::S,
                                     GateKind::T,  GateKind::Sdg, GateKind::Tdg,  GateKind::V,    GateKind::adjV,
                                     GateKind::Rx, GateKind::Ry,  GateKind::Rz,   GateKind::R,    GateKind::CNOT,
                                     GateKind::CZ, GateKind::cR,  GateKind::cRz,  GateKind::SWAP, GateKind::I};
    std::uniform_int_distribution<std::size_t> pick_kind(0, std::size(kinds) - 1);
    std::uniform_int_distribution<std::size_t> pick_q(0, n - 1);
    std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
    fermiq::Circuit c;
    while (c.size() < n_gates) {
        const GateKind k = kinds[pick_kind(rng)];
        const std::size_t t = pick_q(rng);
        std::optional<std::size_t> ctl;
        if (fermiq::is_two_qubit(k)) {
            if (n < 2) continue;
            std::size_t cq = pick_q(rng);
            while (cq == t) cq = pick_q(rng);
            ctl = cq;
        }
        std::optional<double> par;
        if (fermiq::is_parametric(k)) par = angle(rng);
        c.add_gate(fermiq::make_gate(k, t, ctl, par));
    }
    return c;
}

}  // namespace oracle
