#!/usr/bin/env python3
# Copyright 2026 The fermiq Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Regenerate the FCIDUMP fixtures under data/fcidump.

Needs pyscf. Not part of the build; the generated files are checked in.
Linear hydrogen chains along z, STO-3G, RHF canonical orbitals. ORBSYM uses
Molpro D2h labels. Orbital energies are written as `eps i 0 0 0` lines.
Symmetry-forbidden integrals are dropped exactly.
"""
import argparse
import os

import numpy as np
from pyscf import ao2mo, fci, gto, scf, symm
from pyscf.tools.fcidump import ORBSYM_MAP

TOL = 1e-12


def chain(n_atoms, spacing):
    return [("H", (0.0, 0.0, i * spacing)) for i in range(n_atoms)]


def write_fcidump(path, n_atoms, spacing):
    mol = gto.M(atom=chain(n_atoms, spacing), basis="sto-3g", unit="Angstrom",
                symmetry="D2h", verbose=0)
    mf = scf.RHF(mol)
    mf.conv_tol = 1e-12
    mf.kernel()
    # Walk away from saddle points at stretched geometries.
    for _ in range(3):
        try:
            mo, _, stable, _ = mf.stability(return_status=True)
        except Exception:  # single occ/vir pair, nothing to rotate
            break
        if stable:
            break
        dm = mf.make_rdm1(mo, mf.mo_occ)
        mf.kernel(dm)
    c = mf.mo_coeff
    norb = c.shape[1]
    h1 = c.T @ mf.get_hcore() @ c
    eri = ao2mo.restore(1, ao2mo.full(mol, c), norb)
    irrep_ids = symm.label_orb_symm(mol, mol.irrep_id, mol.symm_orb, c)
    orbsym = [symm.irrep_id2name(mol.groupname, i) for i in irrep_ids]
    molpro = [ORBSYM_MAP["D2h"][i % 10] for i in irrep_ids]
    # Molpro D2h labels: XOR of (label - 1) is the direct product.
    lab = [m - 1 for m in molpro]

    with open(path, "w") as f:
        f.write(" &FCI NORB=%d,NELEC=%d,MS2=0,\n" % (norb, mol.nelectron))
        f.write("  ORBSYM=%s,\n" % ",".join(str(m) for m in molpro))
        f.write("  ISYM=1,\n &END\n")
        for i in range(norb):
            for j in range(i + 1):
                for k in range(norb):
                    for l in range(k + 1):
                        if i * (i + 1) // 2 + j < k * (k + 1) // 2 + l:
                            continue
                        if lab[i] ^ lab[j] ^ lab[k] ^ lab[l]:
                            continue
                        v = eri[i, j, k, l]
                        if abs(v) > TOL:
                            f.write("%23.16e %3d %3d %3d %3d\n" % (v, i + 1, j + 1, k + 1, l + 1))
        for i in range(norb):
            for j in range(i + 1):
                if lab[i] ^ lab[j]:
                    continue
                if abs(h1[i, j]) > TOL:
                    f.write("%23.16e %3d %3d %3d %3d\n" % (h1[i, j], i + 1, j + 1, 0, 0))
        for i in range(norb):
            f.write("%23.16e %3d %3d %3d %3d\n" % (mf.mo_energy[i], i + 1, 0, 0, 0))
        f.write("%23.16e %3d %3d %3d %3d\n" % (mol.energy_nuc(), 0, 0, 0, 0))

    e_fci = fci.FCI(mf).kernel()[0]
    return mf.e_tot, e_fci, orbsym


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default=os.path.join(os.path.dirname(__file__), "..", "..", "data", "fcidump"))
    args = ap.parse_args()
    os.makedirs(args.out, exist_ok=True)

    jobs = [("H2_0.75", 2, 0.75), ("H6_1.00", 6, 1.00)]
    for r in np.arange(0.50, 2.0001, 0.05):
        jobs.append(("H4_%.2f" % r, 4, r))

    rows = []
    for name, n, r in jobs:
        path = os.path.join(args.out, name + ".fcidump")
        e_hf, e_fci, orbsym = write_fcidump(path, n, r)
        rows.append("%s %.2f % .12f % .12f %s" % (name, r, e_hf, e_fci, ",".join(orbsym)))
        print(rows[-1])

    with open(os.path.join(args.out, "energies.txt"), "w") as f:
        f.write("# name spacing_angstrom e_rhf e_fci orbital_irreps  (pyscf cross-check)\n")
        f.write("\n".join(rows) + "\n")


if __name__ == "__main__":
    main()
