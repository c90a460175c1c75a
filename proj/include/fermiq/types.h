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

#include <bit>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace fermiq {

using Complex = std::complex<double>;

/// Occupation bitstring of one computational basis state. Bit i is the state
/// of qubit i, so the integer value doubles as the amplitude index.
class BasisAddress {
  public:
    constexpr BasisAddress() = default;
    constexpr explicit BasisAddress(std::uint64_t bits) : bits_(bits) {}

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr std::size_t index() const { return static_cast<std::size_t>(bits_); }

    constexpr bool get_bit(std::size_t q) const { return (bits_ >> q) & 1U; }
    constexpr BasisAddress with_bit(std::size_t q, bool value) const {
        return BasisAddress(value ? (bits_ | (std::uint64_t{1} << q))
                                  : (bits_ & ~(std::uint64_t{1} << q)));
    }
    constexpr BasisAddress flipped(std::size_t q) const {
        return BasisAddress(bits_ ^ (std::uint64_t{1} << q));
    }
    constexpr int count_ones() const { return std::popcount(bits_); }

    /// Renders q0 first, e.g. |1100> for bits 0 and 1 set on four qubits.
    std::string str(std::size_t n_qubits) const {
        std::string s = "|";
        for (std::size_t q = 0; q < n_qubits; ++q) s += get_bit(q) ? '1' : '0';
        return s + ">";
    }

    friend constexpr bool operator==(BasisAddress, BasisAddress) = default;
    friend constexpr auto operator<=>(BasisAddress, BasisAddress) = default;

  private:
    std::uint64_t bits_ = 0;
};

class CapacityError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A file could not be opened or read.
class IoError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string& what, std::size_t line = 0)
        : std::runtime_error(line ? what + " (line " + std::to_string(line) + ")" : what),
          line_(line) {}
    std::size_t line() const { return line_; }

  private:
    std::size_t line_;
};

/// Numerical failure inside a solver or algorithm driver.
class SolverError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace fermiq
