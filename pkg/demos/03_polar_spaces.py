# n qupits as a symplectic polar space, its spreads and punctured versions
from pauligraph import polar_space, find_spread, puncture, psi, sigma
from pauligraph.graphs import spectrum, aut_order

for p, n in [(2, 2), (3, 2), (2, 3), (2, 4), (3, 3)]:
    ps = polar_space(p, n)  # also cross-checked against the Pauli graph of p x ... x p
    pun = puncture(ps)
    print(ps.symbol, len(ps.points), "points", len(ps.generators), "generators;",
          "punctured", pun.point_count, "= psi", psi(p ** (2 * n - 1)),
          "= sigma difference", sigma(p ** (2 * n - 1)) - sigma(p ** (2 * n - 3)))

ps = polar_space(2, 3)
sp = find_spread(ps)
print("spread of", ps.symbol, ":", len(sp), "pairwise disjoint generators")
for gen in sp.generators:
    print("  ", [ps.points[i] for i in gen])

for p, n in [(2, 2), (3, 2), (2, 3)]:
    d = puncture(polar_space(p, n)).dual
    print(p, n, d.n, spectrum(d), "|Aut| =", aut_order(d))
