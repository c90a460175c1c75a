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
#include "fermiq/pool.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <stdexcept>

#include <fmt/format.h>

namespace fermiq {

namespace {

void combinations(const std::vector<std::size_t>& from, std::size_t k,
                  const std::function<void(const std::vector<std::size_t>&)>& visit) {
    std::vector<std::size_t> pick;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        if (pick.size() == k) {
            visit(pick);
            return;
        }
        for (std::size_t i = start; i + (k - pick.size()) <= from.size(); ++i) {
            pick.push_back(from[i]);
            rec(i + 1);
            pick.pop_back();
        }
    };
    rec(0);
}

std::string join(const std::vector<std::size_t>& v) {
    std::string s;
    for (auto x : v) s += (s.empty() ? "" : " ") + std::to_string(x);
    return s;
}

}  // namespace

PoolSpec parse_pool_spec(std::string_view name) {
    static const std::pair<std::string_view, std::size_t> ranks[] = {
        {"S", 1}, {"SD", 2}, {"SDT", 3}, {"SDTQ", 4}, {"SDTQP", 5}, {"SDTQPH", 6}};
    for (const auto& [n, r] : ranks) {
        if (name == n) return {PoolKind::ParticleHole, r};
    }
    if (name == "GSD") return {PoolKind::GSD, 2};
    if (name == "pairedD" || name == "paired-D") return {PoolKind::PairedD, 2};
    if (name.starts_with("rank")) {
        const std::string digits(name.substr(4));
        if (!digits.empty() && std::all_of(digits.begin(), digits.end(), ::isdigit)) {
            const auto r = static_cast<std::size_t>(std::stoul(digits));
            if (r >= 1) return {PoolKind::ParticleHole, r};
        }
    }
    throw std::invalid_argument(fmt::format("unknown pool kind '{}'", name));
}

std::string pool_spec_name(const PoolSpec& spec) {
    switch (spec.kind) {
        case PoolKind::GSD: return "GSD";
        case PoolKind::PairedD: return "pairedD";
        case PoolKind::ParticleHole: break;
    }
    static const char* names[] = {"", "S", "SD", "SDT", "SDTQ", "SDTQP", "SDTQPH"};
    if (spec.max_rank < 7) return names[spec.max_rank];
    return fmt::format("rank{}", spec.max_rank);
}

bool excitation_allowed(const MolecularSystem& sys, const std::vector<std::size_t>& holes,
                        const std::vector<std::size_t>& particles, bool point_group) {
    int spin = 0;
    for (auto h : holes) spin += (h % 2) ? -1 : 1;
    for (auto p : particles) spin -= (p % 2) ? -1 : 1;
    if (spin != 0) return false;
    if (!point_group || sys.orbital_irreps.empty()) return true;
    // D2h labels 1..8 compose by XOR of (label - 1).
    int irrep = 0;
    for (auto h : holes) irrep ^= sys.orbital_irreps.at(h / 2) - 1;
    for (auto p : particles) irrep ^= sys.orbital_irreps.at(p / 2) - 1;
    return irrep == 0;
}

PoolEntry make_pool_entry(const MolecularSystem& sys, std::vector<std::size_t> holes,
                          std::vector<std::size_t> particles) {
    if (holes.size() != particles.size() || holes.empty()) {
        throw std::invalid_argument("excitation needs equal, nonzero numbers of holes and particles");
    }
    std::sort(holes.begin(), holes.end());
    std::sort(particles.begin(), particles.end());
    for (auto q : holes) {
        if (q >= sys.n_qubits()) throw std::invalid_argument("hole index outside the register");
    }
    for (auto q : particles) {
        if (q >= sys.n_qubits()) throw std::invalid_argument("particle index outside the register");
    }
    PoolEntry e;
    e.holes = holes;
    e.particles = particles;
    e.excitation.add_term(1.0, particles, holes);
    e.generator = e.excitation;
    const SQOperator de_excitation = e.excitation.adjoint();
    for (const auto& t : de_excitation.terms()) e.generator.add_term(-t.coeff, t.creators, t.annihilators);
    e.qubit_generator = e.generator.jw_transform();
    e.label = join(holes) + " -> " + join(particles);

    std::uint64_t det = sys.hf_reference.bits();
    bool valid = true;
    for (auto h : holes) {
        valid = valid && ((det >> h) & 1U);
        det &= ~(std::uint64_t{1} << h);
    }
    for (auto p : particles) {
        valid = valid && !((det >> p) & 1U);
        det |= std::uint64_t{1} << p;
    }
    e.determinant = valid ? BasisAddress(det) : sys.hf_reference;

    if (!sys.orbital_energies.empty()) {
        for (auto h : holes) e.denominator += sys.spin_orbital_energy(h);
        for (auto p : particles) e.denominator -= sys.spin_orbital_energy(p);
    } else {
        e.denominator = diagonal_energy(sys.qubit_hamiltonian, sys.hf_reference) -
                        diagonal_energy(sys.qubit_hamiltonian, e.determinant);
    }
    return e;
}

OperatorPool build_pool(const MolecularSystem& sys, const PoolSpec& spec) {
    const std::size_t nq = sys.n_qubits();
    std::vector<std::size_t> occ, vir;
    for (std::size_t q = 0; q < nq; ++q) (sys.hf_reference.get_bit(q) ? occ : vir).push_back(q);

    OperatorPool pool;
    switch (spec.kind) {
        case PoolKind::ParticleHole: {
            if (spec.max_rank == 0) throw std::invalid_argument("pool rank must be at least 1");
            for (std::size_t r = 1; r <= spec.max_rank; ++r) {
                combinations(occ, r, [&](const std::vector<std::size_t>& h) {
                    combinations(vir, r, [&](const std::vector<std::size_t>& p) {
                        if (excitation_allowed(sys, h, p, spec.point_group)) pool.entries.push_back(make_pool_entry(sys, h, p));
                    });
                });
            }
            std::stable_sort(pool.entries.begin(), pool.entries.end(), [](const PoolEntry& a, const PoolEntry& b) {
                return a.determinant.bits() < b.determinant.bits();
            });
            break;
        }
        case PoolKind::PairedD: {
            for (std::size_t i = 0; i < sys.n_spatial; ++i) {
                if (!(sys.hf_reference.get_bit(2 * i) && sys.hf_reference.get_bit(2 * i + 1))) continue;
                for (std::size_t a = 0; a < sys.n_spatial; ++a) {
                    if (sys.hf_reference.get_bit(2 * a) || sys.hf_reference.get_bit(2 * a + 1)) continue;
                    pool.entries.push_back(make_pool_entry(sys, {2 * i, 2 * i + 1}, {2 * a, 2 * a + 1}));
                }
            }
            break;
        }
        case PoolKind::GSD: {
            std::vector<std::size_t> all(nq);
            for (std::size_t q = 0; q < nq; ++q) all[q] = q;
            for (std::size_t r = 1; r <= 2; ++r) {
                std::vector<std::vector<std::size_t>> sets;
                combinations(all, r, [&](const std::vector<std::size_t>& s) { sets.push_back(s); });
                for (std::size_t x = 0; x < sets.size(); ++x) {
                    for (std::size_t y = x + 1; y < sets.size(); ++y) {
                        const auto& h = sets[x];
                        const auto& p = sets[y];
                        const bool disjoint = std::none_of(h.begin(), h.end(), [&](std::size_t q) {
                            return std::find(p.begin(), p.end(), q) != p.end();
                        });
                        if (disjoint && excitation_allowed(sys, h, p, spec.point_group)) {
                            pool.entries.push_back(make_pool_entry(sys, h, p));
                        }
                    }
                }
            }
            break;
        }
    }
    return pool;
}

Circuit generator_circuit(const QubitOperator& qubit_generator, double t) {
    Circuit c;
    for (const auto& [coeff, p] : qubit_generator.terms()) {
        if (p.is_identity()) continue;
        c.add_circuit(exponentiate_pauli_string(Complex(0.0, t * coeff.imag()), p).first);
    }
    return c;
}

Circuit ansatz_circuit(const OperatorPool& pool, const std::vector<std::size_t>& indices,
                       const std::vector<double>& amplitudes) {
    if (indices.size() != amplitudes.size()) throw std::invalid_argument("one amplitude per ansatz operator required");
    Circuit c;
    for (std::size_t k = 0; k < indices.size(); ++k) {
        c.add_circuit(generator_circuit(pool.entries.at(indices[k]).qubit_generator, amplitudes[k]));
    }
    return c;
}

std::size_t ansatz_cnot_count(const OperatorPool& pool, const std::vector<std::size_t>& indices) {
    std::size_t n = 0;
    for (auto i : indices) {
        for (const auto& [coeff, p] : pool.entries.at(i).qubit_generator.terms()) {
            if (p.weight() > 1) n += 2 * (p.weight() - 1);
        }
    }
    return n;
}

}  // namespace fermiq
