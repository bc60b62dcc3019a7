# Copyright 2026 The cliffsynth Authors
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

"""Regenerates tests/data/stim_tableaux.txt and tests/data/pivot_costs.txt.

Tableaux are computed with stim, independently of this library, and frozen
so the test suite does not need Python at run time.
"""

import random

import networkx as nx
import stim


def main(path):
    rng = random.Random(20240611)
    blocks = []
    for case in range(60):
        n = 1 + case % 6
        gates = []
        for _ in range(rng.randint(0, 40)):
            kind = rng.choice("hsc") if n > 1 else rng.choice("hs")
            if kind == "c":
                c, t = rng.sample(range(n), 2)
                gates.append(("cx", c, t))
            else:
                gates.append((kind, rng.randrange(n)))
        circ = stim.Circuit()
        circ.append("I", list(range(n)))
        for g in gates:
            circ.append({"h": "H", "s": "S", "cx": "CX"}[g[0]], list(g[1:]))
        tab = stim.Tableau.from_circuit(circ)
        lines = [f"qubits {n}"] + [" ".join(map(str, g)) for g in gates]
        lines.append("tableau")
        lines.append(f"n={n}")
        for k in range(n):
            lines.append(row_text(tab.x_output(k), n))
        for k in range(n):
            lines.append(row_text(tab.z_output(k), n))
        blocks.append("\n".join(lines))
    with open(path, "w") as f:
        f.write("# generated by tests/oracle/gen_stim_fixtures.py\n")
        f.write("\n===\n".join(blocks) + "\n")


def pivot_costs(path):
    """Pivot cost sum_i d(r,i) * ([destab r acts on i] + [stab r acts on i])."""
    rng = random.Random(7)
    graphs = {
        "line-5": nx.path_graph(5),
        "quito": nx.Graph([(0, 1), (1, 2), (1, 3), (3, 4)]),
        "nairobi": nx.Graph([(0, 1), (1, 2), (1, 3), (3, 5), (4, 5), (5, 6)]),
    }
    out = ["# generated by tests/oracle/gen_stim_fixtures.py"]
    for name, g in graphs.items():
        n = g.number_of_nodes()
        dist = dict(nx.all_pairs_shortest_path_length(g))
        for _ in range(8):
            circ = stim.Circuit()
            circ.append("I", list(range(n)))
            lines = []
            for _ in range(rng.randint(1, 30)):
                kind = rng.choice("hsc")
                if kind == "c":
                    c, t = rng.sample(range(n), 2)
                    circ.append("CX", [c, t])
                    lines.append(f"cx {c} {t}")
                else:
                    q = rng.randrange(n)
                    circ.append(kind.upper(), [q])
                    lines.append(f"{kind} {q}")
            tab = stim.Tableau.from_circuit(circ)
            costs = []
            for r in range(n):
                total = 0
                for row in (tab.x_output(r), tab.z_output(r)):
                    xs, zs = row.to_numpy()
                    total += sum(dist[r][i] for i in range(n) if xs[i] or zs[i])
                costs.append(str(total))
            out.append(f"arch {name}")
            out.append(f"qubits {n}")
            out.extend(lines)
            out.append("costs " + " ".join(costs))
            out.append("===")
    with open(path, "w") as f:
        f.write("\n".join(out) + "\n")


def row_text(p, n):
    xs, zs = p.to_numpy()
    bits = "".join("1" if b else "0" for b in xs) + "".join("1" if b else "0" for b in zs)
    # stim folds i factors into the sign for Y, which is what we want: the
    # row encodes the Hermitian Pauli (+/-) X^x Z^z with Y = iXZ.
    return bits + " " + ("-" if p.sign == -1 else "+")


if __name__ == "__main__":
    main("tests/data/stim_tableaux.txt")
    pivot_costs("tests/data/pivot_costs.txt")
