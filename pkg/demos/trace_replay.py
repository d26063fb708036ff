"""Replay a shortest-path run extraction by extraction.

Every event carries the queue's full pre-extraction content, so you can
watch stale entries pile up and get rejected.  The same log is available
as JSON from the command line:  prefixpq trace --input demo.g --source A --json

Run:  python3 demos/trace_replay.py
"""

from prefixpq import format_trace_event, parse_graph, sssp_trace
from prefixpq.fixtures import fixture_text

graph = parse_graph(fixture_text("demo.g"))
tree, events = sssp_trace(graph, "A")

print(f"{len(events)} extractions settle {len(tree.dist)} vertices\n")
for event in events:
    print(format_trace_event(event))

print("\nthe first few steps again, with queue snapshots:")
for event in events[:4]:
    print(format_trace_event(event, verbose=True))

accepted = sum(1 for e in events if not e.rejected)
print(f"\naccepted {accepted}, rejected {len(events) - accepted} "
      "(lazy deletion at work)")
