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
#include "fermiq/gate.h"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include <fmt/format.h>

namespace fermiq {

namespace {

struct KindInfo {
    GateKind kind;
    std::string_view name;
    bool parametric;
    bool two_qubit;
};

constexpr std::array kKinds{
    KindInfo{GateKind::I, "I", false, false},        KindInfo{GateKind::X, "X", false, false},
    KindInfo{GateKind::Y, "Y", false, false},        KindInfo{GateKind::Z, "Z", false, false},
    KindInfo{GateKind::H, "H", false, false},        KindInfo{GateKind::S, "S", false, false},
    KindInfo{GateKind::Sdg, "Sdg", false, false},    KindInfo{GateKind::T, "T", false, false},
    KindInfo{GateKind::Tdg, "Tdg", false, false},    KindInfo{GateKind::V, "V", false, false},
    KindInfo{GateKind::adjV, "adjV", false, false},  KindInfo{GateKind::Rx, "Rx", true, false},
    KindInfo{GateKind::Ry, "Ry", true, false},       KindInfo{GateKind::Rz, "Rz", true, false},
    KindInfo{GateKind::R, "R", true, false},         KindInfo{GateKind::CNOT, "CNOT", false, true},
    KindInfo{GateKind::CZ, "CZ", false, true},       KindInfo{GateKind::cR, "cR", true, true},
    KindInfo{GateKind::cRz, "cRz", true, true},      KindInfo{GateKind::SWAP, "SWAP", false, true},
};

const KindInfo& info(GateKind kind) {
    for (const auto& k : kKinds) {
        if (k.kind == kind) return k;
    }
    throw std::invalid_argument("unknown gate kind");
}

Mat2 target_block(GateKind kind, double theta) {
    using std::numbers::sqrt2;
    const Complex i(0.0, 1.0);
    const double h = 1.0 / sqrt2;
    switch (kind) {
        case GateKind::I: return {1.0, 0.0, 0.0, 1.0};
        case GateKind::X:
        case GateKind::CNOT: return {0.0, 1.0, 1.0, 0.0};
        case GateKind::Y: return {0.0, -i, i, 0.0};
        case GateKind::Z:
        case GateKind::CZ: return {1.0, 0.0, 0.0, -1.0};
        case GateKind::H: return {h, h, h, -h};
        case GateKind::S: return {1.0, 0.0, 0.0, i};
        case GateKind::Sdg: return {1.0, 0.0, 0.0, -i};
        case GateKind::T: return {1.0, 0.0, 0.0, std::polar(1.0, std::numbers::pi / 4)};
        case GateKind::Tdg: return {1.0, 0.0, 0.0, std::polar(1.0, -std::numbers::pi / 4)};
        case GateKind::V: return {Complex(0.5, 0.5), Complex(0.5, -0.5), Complex(0.5, -0.5), Complex(0.5, 0.5)};
        case GateKind::adjV: return {Complex(0.5, -0.5), Complex(0.5, 0.5), Complex(0.5, 0.5), Complex(0.5, -0.5)};
        case GateKind::Rx: return {std::cos(theta / 2), -i * std::sin(theta / 2), -i * std::sin(theta / 2), std::cos(theta / 2)};
        case GateKind::Ry: return {std::cos(theta / 2), -std::sin(theta / 2), std::sin(theta / 2), std::cos(theta / 2)};
        case GateKind::Rz:
        case GateKind::cRz: return {std::polar(1.0, -theta / 2), 0.0, 0.0, std::polar(1.0, theta / 2)};
        case GateKind::R:
        case GateKind::cR: return {1.0, 0.0, 0.0, std::polar(1.0, theta)};
        case GateKind::SWAP: return {};
    }
    return {};
}

}  // namespace

std::string_view gate_name(GateKind kind) { return info(kind).name; }

GateKind gate_kind_from_name(std::string_view name) {
    for (const auto& k : kKinds) {
        if (k.name == name) return k.kind;
    }
    // Aliases used in the wild.
    if (name == "cX") return GateKind::CNOT;
    if (name == "cZ") return GateKind::CZ;
    throw std::invalid_argument(fmt::format("unknown gate kind '{}'", name));
}

bool is_parametric(GateKind kind) { return info(kind).parametric; }
bool is_two_qubit(GateKind kind) { return info(kind).two_qubit; }

Gate make_gate(GateKind kind, std::size_t target, std::optional<std::size_t> control,
               std::optional<double> parameter) {
    const auto& k = info(kind);
    if (k.two_qubit && !control) {
        throw std::invalid_argument(fmt::format("{} gate requires a control qubit", k.name));
    }
    if (!k.two_qubit && control) {
        throw std::invalid_argument(fmt::format("{} gate takes no control qubit", k.name));
    }
    if (control && *control == target) {
        throw std::invalid_argument(fmt::format("{} gate: control equals target ({})", k.name, target));
    }
    if (k.parametric != parameter.has_value()) {
        throw std::invalid_argument(k.parametric ? fmt::format("{} gate requires an angle", k.name)
                                                 : fmt::format("{} gate takes no angle", k.name));
    }
    if (target >= 64 || (control && *control >= 64)) {
        throw std::invalid_argument("qubit index exceeds 63");
    }
    Gate g;
    g.kind_ = kind;
    g.target_ = target;
    g.control_ = control;
    g.parameter_ = parameter;
    g.mat_ = target_block(kind, parameter.value_or(0.0));
    return g;
}

std::vector<Complex> Gate::matrix() const {
    if (!control_) return {mat_.begin(), mat_.end()};
    std::vector<Complex> m(16, 0.0);
    if (kind_ == GateKind::SWAP) {
        m[0] = m[15] = 1.0;
        m[1 * 4 + 2] = m[2 * 4 + 1] = 1.0;
        return m;
    }
    m[0] = m[5] = 1.0;
    m[2 * 4 + 2] = mat_[0];
    m[2 * 4 + 3] = mat_[1];
    m[3 * 4 + 2] = mat_[2];
    m[3 * 4 + 3] = mat_[3];
    return m;
}

bool Gate::is_diagonal() const {
    switch (kind_) {
        case GateKind::I:
        case GateKind::Z:
        case GateKind::S:
        case GateKind::Sdg:
        case GateKind::T:
        case GateKind::Tdg:
        case GateKind::Rz:
        case GateKind::R:
        case GateKind::CZ:
        case GateKind::cR:
        case GateKind::cRz: return true;
        default: return false;
    }
}

Gate Gate::adjoint() const {
    switch (kind_) {
        case GateKind::S: return make_gate(GateKind::Sdg, target_);
        case GateKind::Sdg: return make_gate(GateKind::S, target_);
        case GateKind::T: return make_gate(GateKind::Tdg, target_);
        case GateKind::Tdg: return make_gate(GateKind::T, target_);
        case GateKind::V: return make_gate(GateKind::adjV, target_);
        case GateKind::adjV: return make_gate(GateKind::V, target_);
        default: break;
    }
    if (parameter_) return make_gate(kind_, target_, control_, -*parameter_);
    return *this;
}

std::string Gate::str() const {
    std::string s = fmt::format("{} {}", gate_name(kind_), target_);
    if (control_) s += fmt::format(" {}", *control_);
    if (parameter_) s += fmt::format(" {}", *parameter_);
    return s;
}

}  // namespace fermiq
