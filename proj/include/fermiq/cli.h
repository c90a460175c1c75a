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

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "fermiq/system.h"
#include "json.hpp"

namespace fermiq::cli {

inline constexpr int kSchemaVersion = 1;

enum ExitCode : int {
    kOk = 0,
    kInvalidParameters = 2,
    kUnknownAlgorithm = 3,
    kIoError = 4,
    kSolverFailure = 5,
};

/// Everything a run can be configured with. Unset optionals fall back to the
/// library defaults of the chosen algorithm.
struct RunConfig {
    std::string algorithm;
    std::string fcidump;
    std::string hamiltonian_json;
    std::string scan;
    std::string out;

    std::string pool = "SD";
    bool point_group = true;
    std::optional<double> tol;
    std::optional<std::size_t> shots;
    std::uint64_t seed = 0;
    std::optional<double> dt;
    std::optional<std::size_t> s;
    std::optional<std::size_t> trotter_r;
    std::optional<double> dbeta;
    std::optional<double> beta_max;
    std::optional<double> omega;
    std::optional<std::size_t> d_refs;
    std::optional<std::size_t> n_ancilla;
    std::optional<double> t;
    std::optional<double> trim;
    std::optional<double> ridge;
    std::string method = "bfgs";               // bfgs | nelder-mead
    std::string matrix_elements = "direct";   // direct | hadamard
    bool exact = false;
    bool diis = false;
    bool align_phase = false;
    std::size_t threads = 1;
};

/// vqe, adapt, pqe, spqe, qite, qlanczos, qk, mrsqk, qpe, fci.
const std::vector<std::string>& algorithm_names();
bool is_known_algorithm(const std::string& name);

/// Runs one algorithm on a loaded system and returns the JSON record. Library
/// exceptions propagate unchanged.
nlohmann::json run_algorithm(const MolecularSystem& sys, const RunConfig& config);

/// Scan manifest: one FCIDUMP path per line, optionally followed by a
/// reference energy; relative paths resolve against the manifest directory.
/// Blank lines and lines starting with '#' are skipped.
struct ScanPoint {
    std::string path;
    std::optional<double> reference;
};
std::vector<ScanPoint> read_scan_manifest(const std::string& path);

/// Runs every point (in parallel when config.threads > 1) and reports the
/// per-point energies and the mean signed error against the references, or
/// against the FCI oracle where a point has none.
nlohmann::json run_scan(const RunConfig& config);

/// Short human-readable account of a result record.
std::string summary(const nlohmann::json& record);

/// Full command-line entry point. Writes JSON to `out` (or to --out, in which
/// case the summary goes to `out`), diagnostics to `err`.
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fermiq::cli
