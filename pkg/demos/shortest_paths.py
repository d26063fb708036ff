"""Shortest paths out of a source and into a destination.

Run:  python3 demos/shortest_paths.py
"""

from prefixpq import format_walk, parse_graph, sdsp, sssp, walk
from prefixpq.fixtures import fixture_text

demo = parse_graph(fixture_text("demo.g"))

print("single-source run from A:")
tree = sssp(demo, "A")
for v in demo.vertices():
    ba = tree.back[v]
    via = "start" if ba is None else f"via {ba[0]} (arc weight {ba[1]})"
    print(f"  {v}: dist={tree.dist[v]} hops={tree.hops[v]}  {via}")

print("\nback-chains retrace one cheapest path each:")
for v in ("E", "C", "A"):
    print(f"  {format_walk(walk(tree, v))}")

print("\nsingle-destination run into D (same solver, reversed graph):")
into_d = sdsp(demo, "D")
for v in demo.vertices():
    d = into_d.distance(v)
    print(f"  {v} -> D: {'unreachable' if d is None else d}")

print("\nunreached vertices are simply absent:")
tiny = parse_graph("v A\nv B\nv Z\na A B 1\n")
t = sssp(tiny, "A")
print("  reachable from A:", sorted(t.dist))
print("  walk(Z):", walk(t, "Z"))
