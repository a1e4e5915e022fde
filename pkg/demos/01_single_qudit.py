# Single qudit: maximal commuting sets <-> isotropic lines of Z_q^2
import numpy as np
from pauligraph import build_pauli_graph, maximal_cliques, sigma, psi, jordan_j2
from pauligraph.zq import isotropic_lines, projective_line, admissible_vectors, clique_line_bijection
from pauligraph.polar import clique_split, dual_graph
from pauligraph.graphs import spectrum, aut_order

q = 4
g = build_pauli_graph(str(q))
print(g)  # 15 observables, 21 commuting pairs

# every maximal commuting set is a line of the lattice
for clique, line in clique_line_bijection(q).items():
    print(" ".join(str(o) for o in clique).ljust(20), sorted(line.points), "free" if line.free else "non-free")

# sizes: sigma(q) lines, psi(q) of them free
for q in (4, 8, 9, 12, 16, 18):
    print(q, len(isotropic_lines(q)), sigma(q), len(projective_line(q)), psi(q), len(admissible_vectors(q)), jordan_j2(q))

# the dual graph: projective line plus isolated non-free lines
cf = maximal_cliques(build_pauli_graph("12"))
main, iso = clique_split(cf)
d = dual_graph(cf)
print(len(main), "+", len(iso), spectrum(d))
print("degrees", np.bincount(d.degrees()))

cf4 = maximal_cliques(build_pauli_graph("4"))
main4, _ = clique_split(cf4)
pl = dual_graph(cf4.select(main4))  # projective line over Z_4
print("|Aut P1(Z_4)| =", aut_order(pl))
