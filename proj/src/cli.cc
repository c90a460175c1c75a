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
#include "fermiq/cli.h"

#include <algorithm>
#include <atomic>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "fermiq/algorithms.h"
#include "fermiq/linalg.h"
#include "fermiq/pool.h"

namespace fermiq::cli {

using nlohmann::json;

const std::vector<std::string>& algorithm_names() {
    static const std::vector<std::string> names{"vqe", "adapt", "pqe",   "spqe", "qite",
                                                "qlanczos", "qk", "mrsqk", "qpe", "fci"};
    return names;
}

bool is_known_algorithm(const std::string& name) {
    const auto& n = algorithm_names();
    return std::find(n.begin(), n.end(), name) != n.end();
}

namespace {

PoolSpec pool_spec(const RunConfig& c) {
    PoolSpec spec = parse_pool_spec(c.pool);
    spec.point_group = c.point_group;
    return spec;
}

MinimizeMethod minimize_method(const std::string& name) {
    if (name == "bfgs") return MinimizeMethod::BFGS;
    if (name == "nelder-mead") return MinimizeMethod::NelderMead;
    throw std::invalid_argument(fmt::format("unknown minimizer '{}'", name));
}

MatrixElementMethod matrix_element_method(const std::string& name) {
    if (name == "direct") return MatrixElementMethod::Direct;
    if (name == "hadamard") return MatrixElementMethod::HadamardTest;
    throw std::invalid_argument(fmt::format("unknown matrix-element method '{}'", name));
}

template <typename T>
void set_if(T& field, const std::optional<T>& value) {
    if (value) field = *value;
}

json resources_json(const ResourceReport& r) {
    return {{"n_parameters", r.n_parameters},
            {"n_cnot", r.n_cnot},
            {"n_pauli_evaluations", r.n_pauli_evaluations},
            {"n_energy_pauli_evaluations", r.n_energy_pauli_evaluations},
            {"n_gradient_pauli_evaluations", r.n_gradient_pauli_evaluations},
            {"n_iterations", r.n_iterations}};
}

json system_json(const MolecularSystem& sys) {
    return {{"name", sys.name},
            {"n_qubits", sys.n_qubits()},
            {"n_electrons", sys.n_electrons},
            {"n_pauli_strings", sys.n_pauli_strings()},
            {"reference", sys.hf_reference.bits()}};
}

json result_json(const AlgorithmResult& r) {
    json j;
    j["energy"] = r.energy;
    j["trajectory"] = r.trajectory;
    j["resources"] = resources_json(r.resources);
    if (r.subspace) {
        j["retained_dim"] = r.subspace->retained_dim;
        j["subspace_energies"] = r.subspace->energies;
    }
    if (r.ansatz) {
        j["operators"] = r.ansatz->labels;
        j["amplitudes"] = r.ansatz->amplitudes;
    }
    if (!r.references.empty()) {
        std::vector<std::uint64_t> refs;
        for (const auto& b : r.references) refs.push_back(b.bits());
        j["references"] = refs;
    }
    j["converged"] = r.converged;
    j["status"] = r.status;
    return j;
}

std::optional<std::size_t> fci_sector(const MolecularSystem& sys) {
    if (sys.has_integrals || sys.n_electrons > 0) return sys.n_electrons;
    return std::nullopt;
}

}  // namespace

json run_algorithm(const MolecularSystem& sys, const RunConfig& c) {
    const std::string& a = c.algorithm;
    json params;
    json body;

    if (a == "vqe") {
        VqeOptions o;
        o.pool = pool_spec(c);
        o.method = minimize_method(c.method);
        set_if(o.tol, c.tol);
        params = {{"pool", pool_spec_name(o.pool)}, {"point_group", o.pool.point_group},
                  {"method", c.method}, {"tol", o.tol}, {"max_iter", o.max_iter}};
        body = result_json(run_vqe(sys, o));
    } else if (a == "adapt") {
        AdaptOptions o;
        o.pool = pool_spec(c);
        o.method = minimize_method(c.method);
        set_if(o.grad_norm_threshold, c.tol);
        params = {{"pool", pool_spec_name(o.pool)}, {"point_group", o.pool.point_group},
                  {"method", c.method}, {"grad_norm_threshold", o.grad_norm_threshold},
                  {"max_depth", o.max_depth}, {"tol", o.tol}};
        body = result_json(run_adapt_vqe(sys, o));
    } else if (a == "pqe") {
        PqeOptions o;
        o.pool = pool_spec(c);
        o.diis = c.diis;
        set_if(o.residual_tol, c.tol);
        params = {{"pool", pool_spec_name(o.pool)}, {"point_group", o.pool.point_group},
                  {"residual_tol", o.residual_tol}, {"diis", o.diis}, {"max_iter", o.max_iter}};
        body = result_json(run_pqe(sys, o));
    } else if (a == "spqe") {
        SpqeOptions o;
        set_if(o.omega, c.omega);
        set_if(o.dt, c.dt);
        set_if(o.shots, c.shots);
        set_if(o.residual_tol, c.tol);
        o.seed = c.seed;
        o.diis = c.diis;
        params = {{"omega", o.omega}, {"dt", o.dt}, {"shots", o.shots}, {"residual_tol", o.residual_tol},
                  {"diis", o.diis}};
        body = result_json(run_spqe(sys, o));
    } else if (a == "qite" || a == "qlanczos") {
        QiteOptions o;
        o.pool = pool_spec(c);
        set_if(o.dbeta, c.dbeta);
        set_if(o.beta_max, c.beta_max);
        set_if(o.ridge, c.ridge);
        params = {{"pool", pool_spec_name(o.pool)}, {"point_group", o.pool.point_group},
                  {"dbeta", o.dbeta}, {"beta_max", o.beta_max}, {"ridge", o.ridge}};
        const QiteResult q = run_qite(sys, o);
        if (a == "qite") {
            body = result_json(q.result);
        } else {
            QLanczosOptions lo;
            set_if(lo.trim_threshold, c.trim);
            params["stride"] = lo.stride;
            params["trim"] = lo.trim_threshold;
            body = result_json(run_qlanczos(q, lo));
            body["qite_energy"] = q.result.energy;
        }
        body["betas"] = q.betas;
        body["qite_energies"] = q.energies;
        body["n_pauli_pool"] = q.n_pauli_pool;
    } else if (a == "qk") {
        QkOptions o;
        set_if(o.s, c.s);
        set_if(o.dt, c.dt);
        set_if(o.trotter_steps, c.trotter_r);
        set_if(o.shots, c.shots);
        set_if(o.trim_threshold, c.trim);
        o.exact = c.exact;
        o.method = matrix_element_method(c.matrix_elements);
        o.seed = c.seed;
        params = {{"s", o.s}, {"dt", o.dt}, {"trotter_r", o.trotter_steps}, {"exact", o.exact},
                  {"matrix_elements", c.matrix_elements}, {"shots", o.shots}, {"trim", o.trim_threshold}};
        body = result_json(run_qk(sys, o));
    } else if (a == "mrsqk") {
        MrsqkOptions o;
        set_if(o.d, c.d_refs);
        set_if(o.s, c.s);
        set_if(o.dt, c.dt);
        set_if(o.trotter_steps, c.trotter_r);
        set_if(o.shots, c.shots);
        set_if(o.trim_threshold, c.trim);
        o.exact = c.exact;
        o.seed = c.seed;
        params = {{"d_refs", o.d}, {"s", o.s}, {"dt", o.dt}, {"trotter_r", o.trotter_steps},
                  {"exact", o.exact}, {"shots", o.shots}, {"trim", o.trim_threshold}};
        body = result_json(run_mrsqk(sys, o));
    } else if (a == "qpe") {
        QpeOptions o;
        set_if(o.n_ancilla, c.n_ancilla);
        set_if(o.t, c.t);
        set_if(o.trotter_steps, c.trotter_r);
        set_if(o.shots, c.shots);
        o.exact = c.exact;
        o.align_phase = c.align_phase;
        o.seed = c.seed;
        params = {{"n_ancilla", o.n_ancilla}, {"t", o.t}, {"trotter_r", o.trotter_steps}, {"exact", o.exact},
                  {"shots", o.shots}, {"align_phase", o.align_phase}};
        const QpeResult q = run_qpe(sys, o);
        body = result_json(q.result);
        json dist = json::array();
        for (const auto& [k, n] : q.distribution) dist.push_back({k, n});
        body["distribution"] = dist;
        body["modal_readout"] = q.modal_readout;
        body["resolution"] = q.resolution;
        body["t_final"] = q.t;
    } else if (a == "fci") {
        const FciResult f = fci_oracle(sys.qubit_hamiltonian, sys.n_qubits(), fci_sector(sys));
        AlgorithmResult r;
        r.energy = f.energy;
        body = result_json(r);
    } else {
        throw std::invalid_argument(fmt::format("unknown algorithm '{}'", a));
    }

    json j;
    j["schema_version"] = kSchemaVersion;
    j["algorithm"] = a;
    j["system"] = system_json(sys);
    j["parameters"] = params;
    j["seed"] = c.seed;
    j.update(body);
    return j;
}

std::vector<ScanPoint> read_scan_manifest(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError(fmt::format("cannot open scan manifest '{}'", path));
    const std::filesystem::path dir = std::filesystem::path(path).parent_path();
    std::vector<ScanPoint> points;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string file;
        if (!(ls >> file) || file[0] == '#') continue;
        ScanPoint p;
        const std::filesystem::path fp(file);
        p.path = fp.is_absolute() ? fp.string() : (dir / fp).string();
        std::string ref;
        if (ls >> ref) {
            try {
                std::size_t used = 0;
                p.reference = std::stod(ref, &used);
                if (used != ref.size()) throw std::invalid_argument(ref);
            } catch (const std::exception&) {
                throw ParseError(fmt::format("{}:{}: bad reference energy '{}'", path, line_no, ref));
            }
            std::string extra;
            if (ls >> extra) throw ParseError(fmt::format("{}:{}: unexpected '{}'", path, line_no, extra));
        }
        points.push_back(std::move(p));
    }
    if (points.empty()) throw ParseError(fmt::format("scan manifest '{}' lists no systems", path));
    return points;
}

json run_scan(const RunConfig& config) {
    const auto points = read_scan_manifest(config.scan);
    const std::size_t n = points.size();
    std::vector<json> records(n);
    std::vector<std::exception_ptr> errors(n);
    std::atomic<std::size_t> next{0};

    auto worker = [&] {
        for (std::size_t i = next++; i < n; i = next++) {
            try {
                const MolecularSystem sys = load_fcidump(points[i].path);
                json r = run_algorithm(sys, config);
                json p;
                p["parameters"] = r["parameters"];
                p["source"] = points[i].path;
                p["energy"] = r["energy"];
                if (points[i].reference) {
                    p["reference"] = *points[i].reference;
                    p["reference_source"] = "manifest";
                } else {
                    p["reference"] = fci_oracle(sys.qubit_hamiltonian, sys.n_qubits(), fci_sector(sys)).energy;
                    p["reference_source"] = "fci";
                }
                p["error"] = r["energy"].get<double>() - p["reference"].get<double>();
                p["resources"] = r["resources"];
                if (r.contains("retained_dim")) p["retained_dim"] = r["retained_dim"];
                p["converged"] = r["converged"];
                p["status"] = r["status"];
                records[i] = std::move(p);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const std::size_t n_threads = std::clamp<std::size_t>(config.threads, 1, n);
    std::vector<std::thread> pool;
    for (std::size_t t = 1; t < n_threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }

    double sum_err = 0.0;
    double sum_abs = 0.0;
    double max_abs = 0.0;
    double sum_pse = 0.0;
    bool all_converged = true;
    const json params = records.front()["parameters"];
    for (auto& p : records) p.erase("parameters");
    for (const auto& p : records) {
        const double e = p["error"].get<double>();
        sum_err += e;
        sum_abs += std::abs(e);
        max_abs = std::max(max_abs, std::abs(e));
        sum_pse += static_cast<double>(p["resources"]["n_pauli_evaluations"].get<std::size_t>());
        all_converged = all_converged && p["converged"].get<bool>();
    }
    const double dn = static_cast<double>(n);
    json j;
    j["schema_version"] = kSchemaVersion;
    j["algorithm"] = config.algorithm;
    j["mode"] = "scan";
    j["manifest"] = config.scan;
    j["parameters"] = params;
    j["seed"] = config.seed;
    j["points"] = records;
    j["mean_signed_error"] = sum_err / dn;
    j["mean_signed_error_mEh"] = 1e3 * sum_err / dn;
    j["mean_absolute_error"] = sum_abs / dn;
    j["max_absolute_error"] = max_abs;
    j["mean_n_pauli_evaluations"] = sum_pse / dn;
    j["converged"] = all_converged;
    return j;
}

std::string summary(const json& r) {
    std::string s;
    if (r.value("mode", "") == "scan") {
        s += fmt::format("{} scan over {} points\n", r["algorithm"].get<std::string>(), r["points"].size());
        for (const auto& p : r["points"]) {
            s += fmt::format("  {:<40} E = {:.10f}  ref = {:.10f}  err = {:+.3f} mEh\n",
                             std::filesystem::path(p["source"].get<std::string>()).filename().string(),
                             p["energy"].get<double>(), p["reference"].get<double>(),
                             1e3 * p["error"].get<double>());
        }
        s += fmt::format("mean signed error {:.3f} mEh, mean N_PSE {:.0f}\n", r["mean_signed_error_mEh"].get<double>(),
                         r["mean_n_pauli_evaluations"].get<double>());
        return s;
    }
    const auto& res = r["resources"];
    s += fmt::format("{} on {} ({} qubits)\n", r["algorithm"].get<std::string>(),
                     r["system"]["name"].get<std::string>(), r["system"]["n_qubits"].get<std::size_t>());
    s += fmt::format("  energy        {:.12f}\n", r["energy"].get<double>());
    s += fmt::format("  status        {}\n", r["status"].get<std::string>());
    s += fmt::format("  N_par {}  N_CNOT {}  N_PSE {}  iterations {}\n", res["n_parameters"].get<std::size_t>(),
                     res["n_cnot"].get<std::size_t>(), res["n_pauli_evaluations"].get<std::size_t>(),
                     res["n_iterations"].get<std::size_t>());
    if (r.contains("retained_dim")) s += fmt::format("  retained dim  {}\n", r["retained_dim"].get<std::size_t>());
    return s;
}

namespace {

void write_atomically(const std::string& path, const std::string& text) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw IoError(fmt::format("cannot write '{}'", path));
        f << text;
        f.flush();
        if (!f) {
            f.close();
            std::filesystem::remove(tmp);
            throw IoError(fmt::format("cannot write '{}'", path));
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        throw IoError(fmt::format("cannot write '{}'", path));
    }
}

template <typename T>
CLI::Option* add_optional(CLI::App& app, const std::string& name, std::optional<T>& target, const std::string& help) {
    return app.add_option_function<T>(name, [&target](const T& v) { target = v; }, help);
}

}  // namespace

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    RunConfig c;
    CLI::App app{"Run a quantum-chemistry algorithm on a molecular Hamiltonian", "fermiq"};
    app.set_config("--config", "", "key = value file; command-line flags take precedence");
    app.add_option("algorithm,--algorithm", c.algorithm,
                   "vqe | adapt | pqe | spqe | qite | qlanczos | qk | mrsqk | qpe | fci");
    app.add_option("--fcidump", c.fcidump, "FCIDUMP file");
    app.add_option("--hamiltonian-json", c.hamiltonian_json, "qubit Hamiltonian JSON file");
    app.add_option("--scan", c.scan, "manifest of FCIDUMP paths with optional reference energies");
    app.add_option("--out", c.out, "write the JSON result here");
    app.add_option("--pool", c.pool, "SD | SDT | ... | GSD | pairedD | rankN");
    app.add_flag("!--no-point-group", c.point_group, "keep symmetry-breaking excitations");
    add_optional(app, "--tol", c.tol, "convergence threshold")->check(CLI::PositiveNumber);
    add_optional(app, "--shots", c.shots, "measurement samples (0: exact)");
    app.add_option("--seed", c.seed, "random seed");
    add_optional(app, "--dt", c.dt, "time step")->check(CLI::PositiveNumber);
    add_optional(app, "--s", c.s, "Krylov order (basis states per reference minus one)");
    add_optional(app, "--trotter-r,--trotter", c.trotter_r, "Trotter steps")->check(CLI::PositiveNumber);
    add_optional(app, "--dbeta", c.dbeta, "imaginary time step")->check(CLI::PositiveNumber);
    add_optional(app, "--beta-max", c.beta_max, "total imaginary time")->check(CLI::NonNegativeNumber);
    add_optional(app, "--omega", c.omega, "SPQE selection threshold")->check(CLI::PositiveNumber);
    add_optional(app, "--d-refs", c.d_refs, "MRSQK reference count")->check(CLI::PositiveNumber);
    add_optional(app, "--n-ancilla", c.n_ancilla, "QPE ancilla qubits")->check(CLI::PositiveNumber);
    add_optional(app, "--t", c.t, "QPE evolution time")->check(CLI::PositiveNumber);
    add_optional(app, "--trim", c.trim, "canonical orthogonalization threshold")->check(CLI::NonNegativeNumber);
    add_optional(app, "--ridge", c.ridge, "QITE ridge regularization")->check(CLI::NonNegativeNumber);
    app.add_option("--method", c.method, "minimizer")->check(CLI::IsMember({"bfgs", "nelder-mead"}));
    app.add_option("--matrix-elements", c.matrix_elements, "QK matrix elements")
        ->check(CLI::IsMember({"direct", "hadamard"}));
    app.add_flag("--exact", c.exact, "exact instead of Trotterized evolution");
    app.add_flag("--diis", c.diis, "DIIS acceleration for PQE and SPQE");
    app.add_flag("--align-phase", c.align_phase, "two-pass QPE with bin-centred phase");
    app.add_option("--threads", c.threads, "worker threads for --scan")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "fermiq: " << e.what() << "\n";
        return kInvalidParameters;
    }

    if (c.algorithm.empty()) {
        err << "fermiq: no algorithm given\n";
        return kInvalidParameters;
    }
    if (!is_known_algorithm(c.algorithm)) {
        err << fmt::format("fermiq: unknown algorithm '{}'\n", c.algorithm);
        return kUnknownAlgorithm;
    }
    const int n_sources = !c.fcidump.empty() + !c.hamiltonian_json.empty() + !c.scan.empty();
    if (n_sources != 1) {
        err << "fermiq: give exactly one of --fcidump, --hamiltonian-json, --scan\n";
        return kInvalidParameters;
    }

    try {
        json record;
        if (!c.scan.empty()) {
            record = run_scan(c);
        } else {
            const MolecularSystem sys =
                c.fcidump.empty() ? load_hamiltonian_json(c.hamiltonian_json) : load_fcidump(c.fcidump);
            record = run_algorithm(sys, c);
            record["system"]["source"] = c.fcidump.empty() ? c.hamiltonian_json : c.fcidump;
        }
        const std::string text = record.dump(2) + "\n";
        if (c.out.empty()) {
            out << text;
            err << summary(record);
        } else {
            write_atomically(c.out, text);
            out << summary(record);
        }
        return kOk;
    } catch (const IoError& e) {
        err << "fermiq: " << e.what() << "\n";
        return kIoError;
    } catch (const ParseError& e) {
        err << "fermiq: " << e.what() << "\n";
        return kIoError;
    } catch (const SolverError& e) {
        err << "fermiq: solver failure: " << e.what() << "\n";
        return kSolverFailure;
    } catch (const CapacityError& e) {
        err << "fermiq: " << e.what() << "\n";
        return kInvalidParameters;
    } catch (const std::invalid_argument& e) {
        err << "fermiq: " << e.what() << "\n";
        return kInvalidParameters;
    } catch (const std::exception& e) {
        err << "fermiq: solver failure: " << e.what() << "\n";
        return kSolverFailure;
    }
}

}  // namespace fermiq::cli
