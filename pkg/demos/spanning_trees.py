"""Minimum spanning trees grown with Prim's method on the trie queue.

Run:  python3 demos/spanning_trees.py
"""

from prefixpq import mst_prim, parse_graph
from prefixpq.fixtures import fixture_text
from prefixpq.oracles import kruskal

for name, blurb in (("fig1.g", "seven vertices"), ("fig4.g", "eleven vertices")):
    graph = parse_graph(fixture_text(name))
    result = mst_prim(graph, "A")
    print(f"\n{name} ({blurb}, {graph.arc_count // 2} undirected edges)")
    for tail, head, weight in result.edges:
        print(f"  attach {head} via {tail}-{head} weight {weight}")
    print(f"  total weight {result.total_weight}, spans all: {result.spans_all}")
    print(f"  kruskal cross-check: {kruskal(graph)}")

print("\nany root gives the same total:")
graph = parse_graph(fixture_text("fig4.g"))
totals = {root: mst_prim(graph, root).total_weight for root in graph.vertices()}
print(" ", totals)
