"""
Polytope diameters and provably hard instances
==============================================

The partitions of a fixed shape form the vertices of a polytope whose
edges are single cyclic exchanges.  This script compares the constructive
diameter bound k1 + ceil(k2/2) with exact breadth-first search on small
shapes, then generates instances whose shortest resolutions provably
approach the bound.
"""

from itertools import combinations_with_replacement

from polyresolve import (
    exact_diameter_bfs,
    gen_lower_bound_instance,
    min_resolution_length,
    resolve,
)

# Exact diameters for every shape with at most 8 items and 4 clusters.
# Item relabeling is vertex-transitive, so one BFS from any state suffices.
print("shape          exact  bound")
for n_clusters in (2, 3, 4):
    for shape in combinations_with_replacement((3, 2, 1), n_clusters):
        shape = tuple(sorted(shape, reverse=True))
        if sum(shape) > 8:
            continue
        exact = exact_diameter_bfs(shape)
        bound = shape[0] + (shape[1] + 1) // 2
        assert exact <= bound
        print(f"{str(shape):14} {exact:5}  {bound:5}")

# The hard family pairs clusters off and swaps their contents wholesale.
# Each instance carries its own certified lower bound.
print("\nhard instances:")
for shape in ((2, 2, 2, 2), (3, 3, 2, 2), (2, 2, 2, 1, 1)):
    inst = gen_lower_bound_instance(shape)
    res = resolve(inst.p, inst.q)
    line = (f"shape {shape}: family {inst.family}, "
            f"lower bound {inst.bound}, constructed {len(res.taus)}")
    if sum(shape) <= 9:
        exact = min_resolution_length(inst.p, inst.q)
        line += f", exact {exact}"
        assert inst.bound <= exact <= len(res.taus)
    print(line)
