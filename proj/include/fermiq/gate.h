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

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fermiq/types.h"

namespace fermiq {

enum class GateKind {
    I,
    X,
    Y,
    Z,
    H,
    S,
    Sdg,
    T,
    Tdg,
    V,     // sqrt(X)
    adjV,  // sqrt(X)^dagger
    Rx,
    Ry,
    Rz,
    R,  // phase gate diag(1, e^{i theta})
    CNOT,
    CZ,
    cR,   // controlled phase
    cRz,  // controlled Rz
    SWAP,
};

std::string_view gate_name(GateKind kind);
/// Inverse of gate_name; throws std::invalid_argument on unknown names.
GateKind gate_kind_from_name(std::string_view name);

bool is_parametric(GateKind kind);
bool is_two_qubit(GateKind kind);

/// 2x2 matrix stored row-major: {m00, m01, m10, m11}.
using Mat2 = std::array<Complex, 4>;
/// 4x4 matrix stored row-major over the local index (control_bit << 1) | target_bit.
/// For SWAP the two local bits are (control, target) as passed to make_gate.
using Mat4 = std::array<Complex, 16>;

/// A single- or two-qubit gate. Controlled gates (CNOT, CZ, cR, cRz) apply
/// target_matrix() to the target whenever the control qubit is 1.
class Gate {
  public:
    GateKind kind() const { return kind_; }
    std::size_t target() const { return target_; }
    std::optional<std::size_t> control() const { return control_; }
    std::optional<double> parameter() const { return parameter_; }

    /// Action on the target qubit (the controlled block for controlled kinds).
    /// Undefined for SWAP.
    const Mat2& target_matrix() const { return mat_; }
    /// Full 2x2 (single-qubit) or 4x4 (two-qubit) unitary, row-major.
    std::vector<Complex> matrix() const;

    bool is_diagonal() const;
    std::size_t highest_qubit() const { return control_ ? std::max(*control_, target_) : target_; }

    Gate adjoint() const;

    /// e.g. "Rz 2 1.0", "CNOT 1 0" (target then control).
    std::string str() const;

    friend bool operator==(const Gate& a, const Gate& b) {
        return a.kind_ == b.kind_ && a.target_ == b.target_ && a.control_ == b.control_ &&
               a.parameter_ == b.parameter_;
    }

  private:
    friend Gate make_gate(GateKind, std::size_t, std::optional<std::size_t>, std::optional<double>);
    Gate() = default;

    GateKind kind_ = GateKind::I;
    std::size_t target_ = 0;
    std::optional<std::size_t> control_;
    std::optional<double> parameter_;
    Mat2 mat_{};
};

/// Builds a gate. CNOT convention: make_gate(CNOT, t, c) flips t when c is 1.
/// Throws std::invalid_argument when control == target, a two-qubit kind lacks a
/// control, a single-qubit kind has one, or the parameter does not match the kind.
Gate make_gate(GateKind kind, std::size_t target, std::optional<std::size_t> control = std::nullopt,
               std::optional<double> parameter = std::nullopt);

inline Gate make_gate(std::string_view name, std::size_t target,
                      std::optional<std::size_t> control = std::nullopt,
                      std::optional<double> parameter = std::nullopt) {
    return make_gate(gate_kind_from_name(name), target, control, parameter);
}

}  // namespace fermiq
