# Mixed dimensions: several copies of a smaller geometry inside the clique graphs
from collections import Counter
from pauligraph import analyze, build_pauli_graph, maximal_cliques
from pauligraph.graphs import spectrum, find_isomorphism
from pauligraph.polar import clique_split, k_intersection_graph

for spec in ("2x4", "2x2x3", "2x3x3", "4x4", "2x8"):
    r = analyze(spec)
    print(spec, r.cliques["total"], r.cliques["split"], "intersections", r.intersection_profile)
    for k, kg in r.k_graphs.items():
        print("   k =", k, [(c["count"], c["size"], c["spectrum"]) for c in kg["classes"]])

# two qubits and a qutrit: four copies of the two-qubit quadrangle
cf = maximal_cliques(build_pauli_graph("2x2x3"))
doily = build_pauli_graph("2x2")
comps = k_intersection_graph(cf, 5).connected_components()
print(len(comps), "components,", sum(find_isomorphism(doily, c) is not None for c in comps), "isomorphic to the doily")

# two quartits: fifteen cubes, plus a cocktail-party graph among the isolated sets
cf = maximal_cliques(build_pauli_graph("4x4"))
main, iso = clique_split(cf)
print(Counter(str(spectrum(c)) for c in k_intersection_graph(cf.select(main), 7).connected_components()))
print([str(spectrum(c)) for c in k_intersection_graph(cf.select(iso), 3).connected_components() if c.n > 1])
