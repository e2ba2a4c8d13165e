"""Graphs, fixed-length cycle queries, and face tracing.

Builds a few small graphs, asks which cycle lengths they contain, traces
the faces of their plane embeddings, and runs the structural checks that
hold for embeddings without 4- or 6-cycles.
"""

from dpcolor import (
    build_graph,
    check_propositions,
    has_cycle_of_length,
    list_cycles,
    load_catalog,
    trace_faces,
)

# --- cycle queries ----------------------------------------------------------

c4 = build_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
print("C4 contains a 4-cycle:", has_cycle_of_length(c4, 4))
print("C4 4-cycles:", list_cycles(c4, 4))

petersen = build_graph(
    10,
    [(i, (i + 1) % 5) for i in range(5)]
    + [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    + [(i, i + 5) for i in range(5)],
)
print("\nPetersen graph: girth-5, so no 4-cycles:", not has_cycle_of_length(petersen, 4))
print("but it has", len(list_cycles(petersen, 6)), "six-cycles")

# --- face tracing from a rotation system -------------------------------------

k4 = build_graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
pg = trace_faces(k4, [[1, 3, 2], [0, 2, 3], [1, 0, 3], [2, 0, 1]])
print("\nK4 embedding faces:", [f.degree for f in pg.faces])
print("Euler check: 4 - 6 +", len(pg.faces), "= 2")

dodec = load_catalog("dodecahedron")
print(
    "\ndodecahedron:",
    dodec.graph.n,
    "vertices,",
    dodec.graph.m,
    "edges,",
    len(dodec.faces),
    "pentagonal faces",
)
print("no 4-cycles:", not has_cycle_of_length(dodec.graph, 4))
print("no 6-cycles:", not has_cycle_of_length(dodec.graph, 6))

# --- structural checks under the cycle conditions -----------------------------

report = check_propositions(load_catalog("triangle_tail7"))
print("\ntriangle_tail7 structural checks all pass:", report.all_pass)
for entry in report.entries:
    if entry.check == "3face-edge-sharing":
        print("  ", entry.subject, "->", entry.detail)
