#!/usr/bin/env python3
# Copyright 2026 The ppicd Authors
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
"""Regenerates tests/data/toy: 20 proteins, 40 interactions, 10 samples.

Two modules of ten proteins, each a ring plus eight chords, joined by four
cross edges. YTOY20 has no expression row, so its edges take the fallback
weight. One expression cell is missing and gets imputed.
"""

import pathlib
import random
import sys

OUT = pathlib.Path(sys.argv[1] if len(sys.argv) > 1 else "tests/data/toy")
rng = random.Random(20260101)

proteins = [f"YTOY{i:02d}" for i in range(1, 21)]
mods = [proteins[:10], proteins[10:]]

edges = []
for m in mods:
    for i in range(10):
        edges.append((m[i], m[(i + 1) % 10]))
    for i, j in [(0, 2), (0, 5), (1, 4), (2, 7), (3, 6), (4, 8), (5, 9), (6, 9)]:
        edges.append((m[i], m[j]))
edges += [(mods[0][0], mods[1][0]), (mods[0][3], mods[1][5]),
          (mods[0][7], mods[1][2]), (mods[0][9], mods[1][9])]
assert len(edges) == 40 and len(set(frozenset(e) for e in edges)) == 40

OUT.mkdir(parents=True, exist_ok=True)
with open(OUT / "ppi.tsv", "w") as f:
    f.write("# protein_a\tprotein_b\n")
    # A reciprocal duplicate and a self-loop exercise ingestion cleanup.
    for a, b in edges:
        f.write(f"{a}\t{b}\n")
    f.write(f"{edges[0][1]}\t{edges[0][0]}\n")
    f.write(f"{proteins[4]}\t{proteins[4]}\n")

samples = [f"S{k}" for k in range(1, 11)]
latent = [[rng.gauss(0, 1) for _ in samples] for _ in mods]
rows = []
for b, m in enumerate(mods):
    for p in m:
        if p == "YTOY20":
            continue
        base = rng.uniform(2, 14)
        rows.append([p] + [base + latent[b][k] + 0.4 * rng.gauss(0, 1)
                           for k in range(10)])
for g in range(30):
    base = rng.uniform(2, 14)
    rows.append([f"BG{g + 1:02d}"] + [base + rng.gauss(0, 1) for _ in samples])
with open(OUT / "ged.tsv", "w") as f:
    f.write("gene_id\t" + "\t".join(samples) + "\n")
    for i, r in enumerate(rows):
        cells = [f"{x:.4f}" for x in r[1:]]
        if i == 3:
            cells[6] = "NA"
        f.write(r[0] + "\t" + "\t".join(cells) + "\n")

with open(OUT / "catalogue.tsv", "w") as f:
    f.write("# complex\tproteins\n")
    f.write("ToyA\t" + ",".join(mods[0]) + "\n")
    f.write("ToyB_core\t" + ",".join(mods[1][:6]) + "\n")
    f.write("Mixed\t" + ",".join([mods[0][0], mods[0][1], mods[1][0]]) + "\n")

with open(OUT / "annotations.tsv", "w") as f:
    f.write("protein_label\tterm_id\n")
    for p in mods[0][:8]:
        f.write(f"{p}\tGO:0000001\n")
    for p in mods[1][:7]:
        f.write(f"{p}\tGO:0000002\n")
    for p in proteins[::4]:
        f.write(f"{p}\tGO:0000003\n")
