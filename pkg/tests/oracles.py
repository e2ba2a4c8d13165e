"""Independent reference implementations used only by tests.

These deliberately avoid the package's algorithms: cycles are found by
checking subsets against permutations, and relaxed list colorings by
enumerating raw color maps on the graph.
"""

from itertools import combinations, permutations, product


def subset_cycles(graph, k):
    """All k-cycles, one canonical tuple per cycle, via subset/permutation scan."""
    found = set()
    for subset in combinations(range(graph.n), k):
        for perm in permutations(subset[1:]):
            seq = (subset[0],) + perm
            if seq[1] > seq[-1]:
                continue  # canonical direction
            edges_ok = all(
                graph.has_edge(seq[i], seq[(i + 1) % k]) for i in range(k)
            )
            if edges_ok:
                found.add(seq)
    return sorted(found)


def relaxed_list_colorable(graph, lists, d):
    """Direct search for a coloring whose color classes induce max degree <= d."""
    for coloring in product(*lists):
        ok = True
        for v in range(graph.n):
            same = sum(
                1 for u in graph.neighbors(v) if coloring[u] == coloring[v]
            )
            if same > d:
                ok = False
                break
        if ok:
            return coloring
    return None
