"""
Auditing the bound catalogue
============================

Every connected labelled graph on 5 vertices is solved exactly and checked
against each catalogued bound. Proven rows must never be violated; the two
open statements are reported as findings.
"""

from forcing_lab.audit import audit_graph, scan_corpus
from forcing_lab.families import complete_graph, petersen_graph
from forcing_lab.graph import enumerate_connected_labeled_graphs

report = scan_corpus(enumerate_connected_labeled_graphs(5))
print(report.format_table())

# the open question on maximum degree fails on complete graphs
e = audit_graph(complete_graph(5)).entry("J2")
print(f"K5, J2: lhs={e.lhs} rhs={e.rhs} -> {e.status}")

for e in audit_graph(petersen_graph()).entries:
    print(f"Petersen {e.id:<4} {e.status:<15} {e.lhs} vs {e.rhs}")
