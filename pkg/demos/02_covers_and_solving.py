"""Covers, representative sets, and the gap between DP- and list coloring.

The 4-cycle separates the two models: it can always be colored from
2-lists when matchings pair equal colors (plain list coloring), but one
twisted cover defeats every choice, pushing its DP-chromatic number to 3.
"""

from dpcolor import (
    Cover,
    build_graph,
    diagonal_cover,
    dp_chromatic,
    find_rep_set,
    impropriety,
    list_relaxed_colorable,
    uniform_assignment,
    validate_cover,
)

c4 = build_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
lists = uniform_assignment(4, 2)  # every vertex gets {1, 2}

# the equal-color cover is just list coloring in disguise
plain = diagonal_cover(c4, lists)
print("diagonal cover valid:", validate_cover(plain) is None)
coloring = find_rep_set(plain, 0)
print("proper 2-coloring of C4:", coloring)

# twist one edge: identity matchings on three edges, the swap on the fourth
matchings = []
for edge in c4.edges:
    if edge == (0, 3):
        matchings.append(((1, 2), (2, 1)))
    else:
        matchings.append(((1, 1), (2, 2)))
twisted = Cover(graph=c4, lists=lists, matchings=tuple(matchings))
print("\ntwisted cover valid:", validate_cover(twisted) is None)
print("representative set with 0 conflicts:", find_rep_set(twisted, 0))
rep = find_rep_set(twisted, 1)
print("allowing one conflict per vertex:", rep, "conflicts:", impropriety(twisted, rep))

print("\nDP-chromatic number of C4:", dp_chromatic(c4), "(its chromatic number is 2)")

# relaxed list coloring: K4 from {1,2} everywhere needs impropriety 1
k4 = build_graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
print("\nK4 from 2-lists, no conflicts:", list_relaxed_colorable(k4, uniform_assignment(4, 2), 0))
print("K4 from 2-lists, one conflict allowed:", list_relaxed_colorable(k4, uniform_assignment(4, 2), 1))
