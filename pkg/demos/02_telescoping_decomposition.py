"""How the MST weight telescopes into bottleneck distances.

Fix any spanning tree e_1..e_{n-1}.  The MST weight is the sum over i of
the min-max distance of e_i, measured after e_1..e_{i-1} were given weight
zero.  The individual terms depend on the tree and the edge order, but the
total never does.
"""

import random

from minmaxmst import (
    SpanningTree,
    Weighting,
    fix_spanning_tree,
    kruskal_mst,
    kruskal_tree,
    mst_decomposition,
    parse_graph,
)

TEXT = """\
5 7
1 2 4
1 3 8
2 3 11
2 4 10
3 4 2
3 5 7
4 5 9
"""

g, x = parse_graph(TEXT)
print(f"kruskal says the MST weight is {kruskal_mst(g, x)}")
print()

tree = fix_spanning_tree(g)
dec = mst_decomposition(g, x, tree)
print("decomposition along the library's fixed tree (DFS from vertex 1):")
for eidx, dist in dec.terms:
    u, v = g.edges[eidx]
    w = x.values[eidx]
    print(f"  edge {{{u},{v}}}  weight {w:>4}  contributes {dist}")
print(f"  total = {dec.total}")
print()

# Any other spanning tree, in any edge order, reaches the same total.
rng = random.Random(1)
print("five random trees, shuffled edge orders:")
for _ in range(5):
    ranks = list(range(g.m))
    rng.shuffle(ranks)
    other = list(kruskal_tree(g, Weighting(ranks)))
    rng.shuffle(other)
    dec = mst_decomposition(g, x, SpanningTree(other))
    labels = [f"{{{g.edges[e][0]},{g.edges[e][1]}}}" for e in other]
    terms = [d for _, d in dec.terms]
    print(f"  tree {' '.join(labels):<30} terms {terms}  total {dec.total}")
