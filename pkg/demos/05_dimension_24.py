# The three 24-dimensional systems
from pauligraph import build_pauli_graph, maximal_cliques, analyze
from pauligraph.graphs import spectrum
from pauligraph.polar import dual_graph, clique_split, k_intersection_graph

for spec in ("24", "2x3x4", "2x2x2x3"):
    g = build_pauli_graph(spec)
    cf = maximal_cliques(g)
    main, iso = clique_split(cf)
    # a maximal commuting set is a maximal isotropic subgroup: always 23 observables
    print(spec, g.n, "observables;", len(cf), "maximal sets of sizes", sorted(cf.by_size), ";", len(main), "+", len(iso))

cf = maximal_cliques(build_pauli_graph("2x3x4"))
main, _ = clique_split(cf)
fam = cf.select(main)
for k in (7, 3, 2):
    comps = k_intersection_graph(fam, k).connected_components()
    print("k =", k, len(comps), "components", {str(spectrum(c)) for c in comps})

print(analyze("24").dual["spectrum"])
