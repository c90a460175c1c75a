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
#include "fermiq/system.h"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include <fmt/format.h>
#include "json.hpp"

namespace fermiq {

namespace {

constexpr std::size_t kMaxSpatial = 32;

std::string upper(std::string s) {
    for (auto& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    return s;
}

struct Header {
    std::map<std::string, std::vector<std::string>> fields;
};

/// Parses "&FCI NORB=4,NELEC=4,MS2=0, ORBSYM=1,5,1,5, ISYM=1, &END".
Header parse_header(const std::string& text) {
    Header h;
    std::string cleaned = text;
    for (auto& c : cleaned) {
        if (c == ',') c = ' ';
    }
    std::istringstream ts(cleaned);
    std::string tok;
    std::string key;
    while (ts >> tok) {
        const std::string u = upper(tok);
        if (u == "&FCI" || u == "&END" || u == "/" || u == "$FCI" || u == "$END") continue;
        if (u.starts_with("&FCI")) continue;
        const auto eq = u.find('=');
        if (eq != std::string::npos) {
            key = u.substr(0, eq);
            h.fields[key];
            const std::string rest = u.substr(eq + 1);
            if (!rest.empty()) h.fields[key].push_back(rest);
        } else if (!key.empty()) {
            h.fields[key].push_back(u);
        }
    }
    return h;
}

long header_int(const Header& h, const std::string& key) {
    auto it = h.fields.find(key);
    if (it == h.fields.end() || it->second.empty()) throw ParseError(fmt::format("FCIDUMP header lacks {}", key));
    try {
        std::size_t used = 0;
        const long v = std::stol(it->second.front(), &used);
        if (used != it->second.front().size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw ParseError(fmt::format("FCIDUMP header field {} is not an integer", key));
    }
}

bool is_header_end(const std::string& line) {
    const std::string u = upper(line);
    if (u.find("&END") != std::string::npos || u.find("$END") != std::string::npos) return true;
    const auto first = u.find_first_not_of(" \t");
    return first != std::string::npos && u[first] == '/';
}

}  // namespace

MolecularSystem load_fcidump(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError(fmt::format("cannot open FCIDUMP file '{}'", path));
    std::string name = path;
    if (auto slash = name.find_last_of('/'); slash != std::string::npos) name = name.substr(slash + 1);
    return parse_fcidump(in, name);
}

MolecularSystem parse_fcidump(std::istream& in, const std::string& name) {
    std::string line;
    std::size_t line_no = 0;
    std::string header_text;
    bool header_done = false;
    while (std::getline(in, line)) {
        ++line_no;
        header_text += line + ' ';
        if (is_header_end(line)) {
            header_done = true;
            break;
        }
    }
    if (!header_done) throw ParseError("FCIDUMP header is not terminated", line_no);
    const Header hdr = parse_header(header_text);
    const long norb = header_int(hdr, "NORB");
    const long nelec = header_int(hdr, "NELEC");
    const long ms2 = header_int(hdr, "MS2");
    if (norb < 1 || norb > static_cast<long>(kMaxSpatial)) {
        throw ParseError(fmt::format("NORB={} outside 1..{}", norb, kMaxSpatial));
    }
    if (nelec < 0) throw ParseError("NELEC must be non-negative");
    if (nelec > 2 * norb) throw ParseError(fmt::format("NELEC={} exceeds 2*NORB={}", nelec, 2 * norb));
    const auto n = static_cast<std::size_t>(norb);

    std::vector<int> irreps;
    if (auto it = hdr.fields.find("ORBSYM"); it != hdr.fields.end()) {
        if (it->second.size() != n) {
            throw ParseError(fmt::format("ORBSYM lists {} entries for NORB={}", it->second.size(), n));
        }
        for (const auto& s : it->second) {
            int v = 0;
            try {
                v = std::stoi(s);
            } catch (const std::exception&) {
                throw ParseError(fmt::format("ORBSYM entry '{}' is not an integer", s));
            }
            if (v < 1 || v > 8) throw ParseError(fmt::format("ORBSYM entry {} outside 1..8", v));
            irreps.push_back(v);
        }
    }

    std::vector<double> h(n * n, 0.0);
    std::vector<double> g(n * n * n * n, 0.0);
    std::vector<double> eps(n, 0.0);
    bool have_eps = false;
    double e_nuc = 0.0;
    auto gi = [n](std::size_t p, std::size_t q, std::size_t r, std::size_t s) {
        return ((p * n + q) * n + r) * n + s;
    };

    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        for (auto& c : line) {
            if (c == 'D' || c == 'd') c = 'E';
        }
        std::istringstream ls(line);
        double v = 0.0;
        long idx[4];
        if (!(ls >> v >> idx[0] >> idx[1] >> idx[2] >> idx[3])) {
            throw ParseError("integral line needs a value and four indices", line_no);
        }
        std::string extra;
        if (ls >> extra) throw ParseError("trailing tokens on integral line", line_no);
        for (long k : idx) {
            if (k < 0 || k > norb) throw ParseError(fmt::format("orbital index {} out of range 0..{}", k, norb), line_no);
        }
        const auto i = static_cast<std::size_t>(idx[0]);
        const auto j = static_cast<std::size_t>(idx[1]);
        const auto k = static_cast<std::size_t>(idx[2]);
        const auto l = static_cast<std::size_t>(idx[3]);
        if (i && j && k && l) {
            const std::size_t p = i - 1, q = j - 1, r = k - 1, s = l - 1;
            for (auto [a, b, c, d] : {std::array{p, q, r, s}, std::array{q, p, r, s}, std::array{p, q, s, r},
                                      std::array{q, p, s, r}, std::array{r, s, p, q}, std::array{s, r, p, q},
                                      std::array{r, s, q, p}, std::array{s, r, q, p}}) {
                g[gi(a, b, c, d)] = v;
            }
        } else if (i && j && !k && !l) {
            h[(i - 1) * n + (j - 1)] = v;
            h[(j - 1) * n + (i - 1)] = v;
        } else if (i && !j && !k && !l) {
            eps[i - 1] = v;
            have_eps = true;
        } else if (!i && !j && !k && !l) {
            e_nuc = v;
        } else {
            throw ParseError("unrecognized index pattern", line_no);
        }
    }
    auto sys = make_molecular_system(n, static_cast<std::size_t>(nelec), static_cast<int>(ms2), e_nuc, std::move(h),
                                     std::move(g), have_eps ? std::move(eps) : std::vector<double>{},
                                     std::move(irreps));
    sys.name = name;
    return sys;
}

BasisAddress hf_determinant(std::size_t n_spatial, std::size_t n_electrons, int ms2) {
    const long n = static_cast<long>(n_electrons);
    if ((n + ms2) % 2 != 0 || std::abs(ms2) > n) {
        throw std::invalid_argument(fmt::format("MS2={} incompatible with {} electrons", ms2, n_electrons));
    }
    const auto n_alpha = static_cast<std::size_t>((n + ms2) / 2);
    const auto n_beta = static_cast<std::size_t>((n - ms2) / 2);
    if (n_alpha > n_spatial || n_beta > n_spatial) {
        throw std::invalid_argument("more electrons of one spin than spatial orbitals");
    }
    std::uint64_t bits = 0;
    for (std::size_t p = 0; p < n_alpha; ++p) bits |= std::uint64_t{1} << (2 * p);
    for (std::size_t p = 0; p < n_beta; ++p) bits |= std::uint64_t{1} << (2 * p + 1);
    return BasisAddress(bits);
}

MolecularSystem make_molecular_system(std::size_t n_spatial, std::size_t n_electrons, int ms2, double e_nuclear,
                                      std::vector<double> h, std::vector<double> g,
                                      std::vector<double> orbital_energies, std::vector<int> orbital_irreps) {
    if (n_spatial == 0 || n_spatial > kMaxSpatial) throw std::invalid_argument("n_spatial outside 1..32");
    const std::size_t n = n_spatial;
    if (h.size() != n * n || g.size() != n * n * n * n) throw std::invalid_argument("integral tensor size mismatch");
    if (!orbital_energies.empty() && orbital_energies.size() != n) {
        throw std::invalid_argument("orbital energy count mismatch");
    }
    if (!orbital_irreps.empty() && orbital_irreps.size() != n) throw std::invalid_argument("irrep count mismatch");
    if (n_electrons > 2 * n) throw std::invalid_argument("more electrons than spin orbitals");

    MolecularSystem sys;
    sys.n_spatial = n;
    sys.n_electrons = n_electrons;
    sys.ms2 = ms2;
    sys.e_nuclear = e_nuclear;
    sys.has_integrals = true;
    sys.h = std::move(h);
    sys.g = std::move(g);
    sys.orbital_irreps = std::move(orbital_irreps);
    sys.set_n_qubits(2 * n);
    sys.hf_reference = hf_determinant(n, n_electrons, ms2);

    if (orbital_energies.empty()) {
        // Alpha Fock diagonal of the reference determinant.
        orbital_energies.assign(n, 0.0);
        for (std::size_t p = 0; p < n; ++p) {
            double e = sys.h1(p, p);
            for (std::size_t i = 0; i < n; ++i) {
                if (sys.hf_reference.get_bit(2 * i)) e += sys.g2(p, p, i, i) - sys.g2(p, i, i, p);
                if (sys.hf_reference.get_bit(2 * i + 1)) e += sys.g2(p, p, i, i);
            }
            orbital_energies[p] = e;
        }
    }
    sys.orbital_energies = std::move(orbital_energies);
    sys.sq_hamiltonian = build_sq_hamiltonian(sys);
    sys.qubit_hamiltonian = build_qubit_hamiltonian(sys);
    return sys;
}

SQOperator build_sq_hamiltonian(const MolecularSystem& sys) {
    SQOperator op;
    const std::size_t nso = 2 * sys.n_spatial;
    constexpr double kZero = 1e-14;
    for (std::size_t p = 0; p < nso; ++p) {
        for (std::size_t q = 0; q < nso; ++q) {
            if (p % 2 != q % 2) continue;
            const double v = sys.h1(p / 2, q / 2);
            if (std::abs(v) > kZero) op.add_term(v, {p}, {q});
        }
    }
    // <pq|rs> = (pr|qs) with matching spins.
    auto braket = [&](std::size_t p, std::size_t q, std::size_t r, std::size_t s) {
        if (p % 2 != r % 2 || q % 2 != s % 2) return 0.0;
        return sys.g2(p / 2, r / 2, q / 2, s / 2);
    };
    // 1/4 sum_{pqrs} v a+p a+q a_s a_r == sum_{p>q, r>s} v a+p a+q a_s a_r.
    for (std::size_t p = 0; p < nso; ++p) {
        for (std::size_t q = 0; q < p; ++q) {
            for (std::size_t r = 0; r < nso; ++r) {
                for (std::size_t s = 0; s < r; ++s) {
                    const double v = braket(p, q, r, s) - braket(p, q, s, r);
                    if (std::abs(v) > kZero) op.add_term(v, {p, q}, {s, r});
                }
            }
        }
    }
    return op;
}

QubitOperator build_qubit_hamiltonian(const MolecularSystem& sys) {
    QubitOperator op({{sys.e_nuclear, PauliString()}});
    op.add_op(build_sq_hamiltonian(sys).jw_transform());
    return op.simplified();
}

void prepare_reference(const MolecularSystem& sys, Computer& state) {
    if (state.n_qubits() < sys.n_qubits()) {
        throw std::invalid_argument(fmt::format("reference needs {} qubits, state has {}", sys.n_qubits(),
                                                state.n_qubits()));
    }
    const auto amps = state.amplitudes();
    if (amps[0] != Complex(1.0, 0.0) ||
        std::any_of(amps.begin() + 1, amps.end(), [](const Complex& c) { return c != Complex(0.0, 0.0); })) {
        throw std::invalid_argument("prepare_reference expects a freshly initialized state");
    }
    for (std::size_t q = 0; q < sys.n_qubits(); ++q) {
        if (sys.hf_reference.get_bit(q)) state.apply_gate(make_gate(GateKind::X, q));
    }
}

QubitOperator number_operator(std::size_t n_qubits) {
    SQOperator n;
    for (std::size_t p = 0; p < n_qubits; ++p) n.add_term(1.0, {p}, {p});
    return n.jw_transform();
}

double diagonal_energy(const QubitOperator& h, BasisAddress b) {
    double e = 0.0;
    for (const auto& [u, p] : h.terms()) {
        if (p.x_mask() != 0) continue;
        e += (std::popcount(b.bits() & p.z_mask()) & 1) ? -u.real() : u.real();
    }
    return e;
}

MolecularSystem load_hamiltonian_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError(fmt::format("cannot open Hamiltonian file '{}'", path));
    std::stringstream ss;
    ss << in.rdbuf();
    std::string name = path;
    if (auto slash = name.find_last_of('/'); slash != std::string::npos) name = name.substr(slash + 1);
    return parse_hamiltonian_json(ss.str(), name);
}

MolecularSystem parse_hamiltonian_json(const std::string& text, const std::string& name) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(fmt::format("invalid JSON: {}", e.what()));
    }
    try {
        const auto nq = j.at("n_qubits").get<std::size_t>();
        if (nq == 0 || nq > 64) throw ParseError("n_qubits outside 1..64");
        QubitOperator op;
        for (const auto& t : j.at("terms")) {
            const auto& c = t.at("coeff");
            if (!c.is_array() || c.size() != 2) throw ParseError("coeff must be [re, im]");
            std::vector<PauliFactor> factors;
            for (const auto& f : t.at("paulis")) {
                if (!f.is_array() || f.size() != 2) throw ParseError("pauli factor must be [qubit, axis]");
                const auto q = f[0].get<std::size_t>();
                if (q >= nq) throw ParseError(fmt::format("qubit {} outside register of {}", q, nq));
                const auto a = f[1].get<std::string>();
                PauliAxis axis;
                if (a == "X") {
                    axis = PauliAxis::X;
                } else if (a == "Y") {
                    axis = PauliAxis::Y;
                } else if (a == "Z") {
                    axis = PauliAxis::Z;
                } else {
                    throw ParseError(fmt::format("unknown Pauli axis '{}'", a));
                }
                factors.push_back({q, axis});
            }
            try {
                op.add_term(Complex(c[0].get<double>(), c[1].get<double>()), PauliString(factors));
            } catch (const std::invalid_argument& e) {
                throw ParseError(e.what());
            }
        }
        op.simplify();
        if (!op.is_hermitian(1e-10)) throw ParseError("Hamiltonian is not Hermitian");
        const auto ne = j.value("n_electrons", std::size_t{0});
        if (ne > nq) throw ParseError("n_electrons exceeds n_qubits");
        MolecularSystem sys;
        sys.name = name;
        sys.set_n_qubits(nq);
        sys.n_spatial = (nq + 1) / 2;
        sys.n_electrons = ne;
        sys.qubit_hamiltonian = std::move(op);
        sys.e_nuclear = sys.qubit_hamiltonian.identity_coefficient().real();
        sys.hf_reference = BasisAddress(ne == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << ne) - 1);
        return sys;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(fmt::format("malformed Hamiltonian JSON: {}", e.what()));
    }
}

}  // namespace fermiq
