#!/usr/bin/env python3
# Copyright 2026 The cliffload Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Regenerates the vendored FCIDUMP fixtures under data/.

Linear hydrogen chains with 1.4 bohr spacing, RHF canonical orbitals, no
frozen core: H2 and H4 in STO-3G, plus H2 in cc-pVDZ (20 qubits) for the
performance checks. Reference energies are written next to each
fixture so the C++ tests can cross-check the in-repo Hamiltonian build.
"""
import json
import pathlib

import pyscf
from pyscf import fci, gto, scf
from pyscf.tools import fcidump

SPACING_BOHR = 1.4
OUT = pathlib.Path(__file__).resolve().parent.parent / "data"


def build(n_atoms: int, basis: str = "sto-3g") -> None:
    atoms = [("H", (0.0, 0.0, i * SPACING_BOHR)) for i in range(n_atoms)]
    mol = gto.M(atom=atoms, basis=basis, unit="Bohr", verbose=0)
    mf = scf.RHF(mol)
    mf.conv_tol = 1e-12
    e_hf = mf.kernel()
    e_fci = fci.FCI(mf).kernel()[0]

    stem = f"h{n_atoms}_{basis.replace('-', '')}_1.4bohr"
    fcidump.from_scf(mf, str(OUT / f"{stem}.fcidump"), tol=1e-14)
    meta = {
        "molecule": f"H{n_atoms} linear chain",
        "basis": basis,
        "spacing_bohr": SPACING_BOHR,
        "orbitals": "RHF canonical, no frozen core",
        "generator": f"pyscf {pyscf.__version__}",
        "n_orb": int(mol.nao),
        "n_elec": int(mol.nelectron),
        "e_hf": e_hf,
        "e_fci": e_fci,
    }
    (OUT / f"{stem}.json").write_text(json.dumps(meta, indent=2) + "\n")
    print(stem, e_hf, e_fci)


if __name__ == "__main__":
    OUT.mkdir(exist_ok=True)
    build(2)
    build(4)
    # 20-qubit fixture for the performance check.
    build(2, "cc-pvdz")
