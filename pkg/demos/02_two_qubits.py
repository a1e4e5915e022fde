# Two qubits: the commutation graph is the generalized quadrangle of order two
from pauligraph import build_pauli_graph, maximal_cliques
from pauligraph.graphs import spectrum, aut_order, find_isomorphism
from pauligraph.polar import dual_graph, k_intersection_graph

g = build_pauli_graph("2x2")
print(g, "srg", g.strongly_regular_parameters())
print("spectrum", spectrum(g))

cf = maximal_cliques(g)
for c in cf.labelled():
    print(" ".join(map(str, c)))

# lines meeting in a point give the same graph back (self-duality)
g1 = k_intersection_graph(cf, 1)
print("self-dual:", find_isomorphism(g, g1) is not None)
print("dual (disjoint lines):", spectrum(dual_graph(cf)))
print("|Aut| =", aut_order(g))

# edge list and DOT for external tools
open("doily.txt", "w").write(g.to_edgelist())
open("doily.dot", "w").write(g.to_dot("doily"))
