"""
Connected forcing on the extremal families
==========================================

The spoke trees G_delta, the pendant-padded trees G_{k,delta} and the
flowers each pin down the connected forcing number exactly. Here the exact
solver (pruning off) is compared with the predicted values.
"""

from forcing_lab import AUDIT_CONFIG, solve
from forcing_lab.families import build_family

for spec in ["g_delta:3", "g_delta:4", "g_k_delta:k=3,delta=3",
             "g_k_delta:k=3,delta=4,backbone=1-0/1-2", "flower:3,4,5", "flower:5,5,5,5"]:
    g, pred = build_family(spec)
    print(f"{spec:<40} n={g.n:>3}")
    for key, value in pred.expected.items():
        if key in ("n", "b"):
            continue
        r = solve(g, key, AUDIT_CONFIG)
        flag = "ok" if r.value == value else "MISMATCH"
        print(f"    {key:<8} predicted {value:>3}  solved {r.value:>3}  [{flag}]  {pred.basis[key]}")
