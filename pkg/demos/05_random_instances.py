"""Random 4-/6-cycle-free plane graphs and what they are good for.

The generator grows an embedding by face subdivision and deletes an edge
from any forbidden cycle it creates; outputs are verified and fully
determined by the seed.  Every instance contains a reducible
configuration, which is the structural heart of the coloring pipeline.
"""

from collections import Counter

from dpcolor import find_reducible_config, generate_plane_no46, has_cycle_of_length

sizes = Counter()
kinds = Counter()
for seed in range(100):
    n = 4 + seed % 15
    pg = generate_plane_no46(n, seed)
    assert not has_cycle_of_length(pg.graph, 4)
    assert not has_cycle_of_length(pg.graph, 6)
    for f in pg.faces:
        sizes[f.degree] += 1
    kinds[find_reducible_config(pg.graph).kind.value] += 1

print("face degrees over 100 instances:")
for degree in sorted(sizes):
    print(f"  {degree:>3}: {'#' * sizes[degree]}")

print("\nfirst reducible configuration found:")
for kind, count in kinds.most_common():
    print(f"  {kind}: {count}")

pg = generate_plane_no46(16, seed=3)
print(f"\nsample instance (n=16, seed=3): {pg.graph.m} edges")
print("rotations:", [list(r) for r in pg.rotation])
