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
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "fermiq/algorithms.h"
#include "fermiq/cli.h"

namespace fermiq {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

const std::string kData = FERMIQ_DATA_DIR;
const std::string kH2 = kData + "/fcidump/H2_0.75.fcidump";
const std::string kH4 = kData + "/fcidump/H4_1.00.fcidump";

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run(std::vector<std::string> args) {
    args.insert(args.begin(), "fermiq");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::main(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / "fermiq_cli_test";
    fs::create_directories(dir);
    return dir / name;
}

TEST(Cli, VqeEnergyEqualsLibraryBitForBit) {
    const CliRun r = run({"vqe", "--fcidump", kH2, "--pool", "SD"});
    ASSERT_EQ(r.code, 0) << r.err;
    const json j = json::parse(r.out);
    const double lib = run_vqe(load_fcidump(kH2), VqeOptions{}).energy;
    EXPECT_EQ(j["energy"].get<double>(), lib);
    EXPECT_EQ(j["schema_version"].get<int>(), cli::kSchemaVersion);
    EXPECT_EQ(j["algorithm"], "vqe");
    for (const char* key : {"n_parameters", "n_cnot", "n_pauli_evaluations", "n_iterations"}) {
        EXPECT_TRUE(j["resources"].contains(key)) << key;
    }
    EXPECT_TRUE(j.contains("trajectory"));
    EXPECT_TRUE(j.contains("seed"));
    EXPECT_NE(r.err.find("energy"), std::string::npos);
}

TEST(Cli, EveryAlgorithmMatchesLibrary) {
    const MolecularSystem sys = load_fcidump(kH2);
    cli::RunConfig c;
    c.s = 2;
    c.beta_max = 1.0;
    c.n_ancilla = 5;
    c.shots = 200;
    c.seed = 3;
    for (const auto& name : cli::algorithm_names()) {
        c.algorithm = name;
        const json j = cli::run_algorithm(sys, c);
        const CliRun r = run({name, "--fcidump", kH2, "--s", "2", "--beta-max", "1", "--n-ancilla", "5", "--shots",
                           "200", "--seed", "3"});
        ASSERT_EQ(r.code, 0) << name << ": " << r.err;
        EXPECT_EQ(json::parse(r.out)["energy"].get<double>(), j["energy"].get<double>()) << name;
    }
    QkOptions qo;
    qo.s = 2;
    qo.shots = 200;
    qo.seed = 3;
    c.algorithm = "qk";
    const MolecularSystem h4 = load_fcidump(kH4);
    EXPECT_EQ(cli::run_algorithm(h4, c)["energy"].get<double>(), run_qk(h4, qo).energy);
}

TEST(Cli, RepeatedRunsAreByteIdentical) {
    for (const std::vector<std::string>& args :
         {std::vector<std::string>{"qpe", "--fcidump", kH2, "--shots", "500", "--seed", "11"},
          std::vector<std::string>{"spqe", "--fcidump", kH2, "--shots", "1000", "--dt", "0.1", "--seed", "5"},
          std::vector<std::string>{"qk", "--fcidump", kH4, "--s", "3", "--dt", "0.5"}}) {
        const CliRun a = run(args);
        const CliRun b = run(args);
        ASSERT_EQ(a.code, 0) << a.err;
        EXPECT_EQ(a.out, b.out);
        EXPECT_EQ(a.err, b.err);
    }
}

TEST(Cli, MissingFileGivesIoErrorAndNoOutput) {
    const fs::path out = scratch("missing.json");
    fs::remove(out);
    const CliRun r = run({"vqe", "--fcidump", "/nonexistent/H2.fcidump", "--out", out.string()});
    EXPECT_EQ(r.code, cli::kIoError);
    EXPECT_TRUE(r.out.empty());
    EXPECT_FALSE(fs::exists(out));
    EXPECT_FALSE(fs::exists(out.string() + ".tmp"));

    const CliRun j = run({"vqe", "--hamiltonian-json", "/nonexistent/h.json"});
    EXPECT_EQ(j.code, cli::kIoError);
    EXPECT_TRUE(j.out.empty());
}

TEST(Cli, MalformedFileIsAnIoError) {
    const fs::path bad = scratch("bad.fcidump");
    std::ofstream(bad) << "this is not an FCIDUMP\n";
    EXPECT_EQ(run({"vqe", "--fcidump", bad.string()}).code, cli::kIoError);
}

TEST(Cli, UnknownAlgorithm) {
    const CliRun r = run({"vqd", "--fcidump", kH2});
    EXPECT_EQ(r.code, cli::kUnknownAlgorithm);
    EXPECT_TRUE(r.out.empty());
    EXPECT_EQ(run({"--algorithm", "nope", "--fcidump", "/nonexistent"}).code, cli::kUnknownAlgorithm);
}

TEST(Cli, InvalidParameters) {
    EXPECT_EQ(run({"vqe", "--fcidump", kH2, "--tol", "-1"}).code, cli::kInvalidParameters);
    EXPECT_EQ(run({"vqe", "--fcidump", kH2, "--pool", "XYZ"}).code, cli::kInvalidParameters);
    EXPECT_EQ(run({"qk", "--fcidump", kH2, "--s", "abc"}).code, cli::kInvalidParameters);
    EXPECT_EQ(run({"qk", "--fcidump", kH2, "--bogus-flag"}).code, cli::kInvalidParameters);
    EXPECT_EQ(run({"vqe"}).code, cli::kInvalidParameters);
    EXPECT_EQ(run({"--fcidump", kH2}).code, cli::kInvalidParameters);
    EXPECT_EQ(run({"vqe", "--fcidump", kH2, "--hamiltonian-json", kH2}).code, cli::kInvalidParameters);
    EXPECT_EQ(run({"qpe", "--fcidump", kH2, "--n-ancilla", "0"}).code, cli::kInvalidParameters);
    EXPECT_EQ(run({"qlanczos", "--fcidump", kH2, "--dbeta", "0"}).code, cli::kInvalidParameters);
}

TEST(Cli, OutFileAndSummary) {
    const fs::path out = scratch("qk.json");
    fs::remove(out);
    const CliRun r = run({"qk", "--fcidump", kH4, "--s", "3", "--out", out.string()});
    ASSERT_EQ(r.code, 0) << r.err;
    std::ifstream f(out);
    const json j = json::parse(f);
    EXPECT_EQ(j["retained_dim"].get<std::size_t>(), 4u);
    EXPECT_EQ(j["resources"]["n_cnot"].get<std::size_t>(), 2656u);
    EXPECT_NE(r.out.find("retained dim"), std::string::npos);
    EXPECT_EQ(r.out.find('{'), std::string::npos);
}

TEST(Cli, ConfigFileWithFlagOverride) {
    const fs::path cfg = scratch("run.ini");
    std::ofstream(cfg) << "algorithm = qk\nfcidump = " << kH4 << "\ns = 3\ndt = 0.5\ntrotter-r = 1\n";
    const CliRun from_file = run({"--config", cfg.string()});
    const CliRun flags = run({"qk", "--fcidump", kH4, "--s", "3", "--dt", "0.5", "--trotter-r", "1"});
    ASSERT_EQ(from_file.code, 0) << from_file.err;
    EXPECT_EQ(from_file.out, flags.out);

    const CliRun over = run({"--config", cfg.string(), "--s", "1"});
    ASSERT_EQ(over.code, 0) << over.err;
    EXPECT_EQ(json::parse(over.out)["parameters"]["s"].get<std::size_t>(), 1u);
}

TEST(Cli, HamiltonianJsonInput) {
    const fs::path h = scratch("z.json");
    std::ofstream(h) << R"({"n_qubits": 2, "terms": [{"coeff": [-1.0, 0.0], "paulis": [[0, "Z"]]},
                                                      {"coeff": [0.5, 0.0], "paulis": [[0, "X"], [1, "X"]]}]})";
    const CliRun r = run({"fci", "--hamiltonian-json", h.string()});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NEAR(json::parse(r.out)["energy"].get<double>(), -std::sqrt(1.25), 1e-12);
}

TEST(Cli, ScanManifest) {
    const fs::path dir = scratch("scan");
    fs::create_directories(dir);
    for (const char* n : {"H4_0.75.fcidump", "H4_1.00.fcidump", "H4_1.50.fcidump"}) {
        fs::copy_file(kData + "/fcidump/" + n, dir / n, fs::copy_options::overwrite_existing);
    }
    std::ofstream(dir / "manifest.txt") << "# comment\nH4_0.75.fcidump -2.0\n\nH4_1.00.fcidump\nH4_1.50.fcidump -1.9\n";

    const CliRun a = run({"qk", "--scan", (dir / "manifest.txt").string(), "--s", "2"});
    ASSERT_EQ(a.code, 0) << a.err;
    const CliRun b = run({"qk", "--scan", (dir / "manifest.txt").string(), "--s", "2", "--threads", "3"});
    EXPECT_EQ(a.out, b.out);

    const json j = json::parse(a.out);
    ASSERT_EQ(j["points"].size(), 3u);
    double sum = 0.0;
    double pse = 0.0;
    for (const auto& p : j["points"]) {
        pse += static_cast<double>(p["resources"]["n_pauli_evaluations"].get<std::size_t>());
        const MolecularSystem sys = load_fcidump(p["source"].get<std::string>());
        QkOptions o;
        o.s = 2;
        EXPECT_EQ(p["energy"].get<double>(), run_qk(sys, o).energy);
        EXPECT_EQ(p["error"].get<double>(), p["energy"].get<double>() - p["reference"].get<double>());
        sum += p["error"].get<double>();
    }
    EXPECT_EQ(j["points"][0]["reference"].get<double>(), -2.0);
    EXPECT_EQ(j["points"][1]["reference_source"], "fci");
    EXPECT_NEAR(j["points"][1]["reference"].get<double>(),
                fci_oracle(load_fcidump(kH4).qubit_hamiltonian, 8, 4).energy, 0.0);
    EXPECT_NEAR(j["mean_signed_error"].get<double>(), sum / 3.0, 1e-15);
    EXPECT_NEAR(j["mean_signed_error_mEh"].get<double>(), 1e3 * sum / 3.0, 1e-12);
    EXPECT_EQ(j["mean_n_pauli_evaluations"].get<double>(), pse / 3.0);
}

TEST(Cli, ScanErrors) {
    const fs::path dir = scratch("scan_bad");
    fs::create_directories(dir);
    std::ofstream(dir / "refs.txt") << "missing.fcidump -1.0\n";
    EXPECT_EQ(run({"qk", "--scan", (dir / "refs.txt").string()}).code, cli::kIoError);
    std::ofstream(dir / "garbled.txt") << kH4 << " minus-two\n";
    EXPECT_EQ(run({"qk", "--scan", (dir / "garbled.txt").string()}).code, cli::kIoError);
    EXPECT_EQ(run({"qk", "--scan", (dir / "absent.txt").string()}).code, cli::kIoError);
}

}  // namespace
}  // namespace fermiq
