"""The bound ledger on two tiny showcases.

The square C_4 separates the three chromatic variants: chi = 2 but the
correspondence number is 3, matching the cover-number bound exactly.  The
complete bipartite K_{2,4} is perfect (chi = omega = 2) yet its list
number is already 3, which the index bound omega + i = 3 pins from above.
"""

from holechord import (ListAssignment, ReportOptions, bound_report,
                       list_colorable)
from holechord.generators import cycle, sharpness_instance


def show(report):
    d = report.to_json_dict()
    for key in ("n", "m", "omega", "omega_star", "chromatic", "degeneracy",
                "beta", "dp_tiny"):
        if d[key] is not None:
            print(f"   {key} = {d[key]}")
    print(f"   index = {report.index.value}")
    for row in report.ledger:
        print(f"   [{row.status}] {row.name}: {row.lhs} {row.rel} {row.rhs}")


print("== the square ==")
show(bound_report(cycle(4), ReportOptions(want_beta=True, dp_tiny=True)))

print("\n== K_{2,4} ==")
g = sharpness_instance([1])
show(bound_report(g, ReportOptions(want_beta=True)))

lists = ListAssignment.from_mapping(
    g, {0: [1, 2], 1: [3, 4], 2: [1, 3], 3: [1, 4], 4: [2, 3], 5: [2, 4]})
ok, _ = list_colorable(g, lists)
print(f"\n   2-list assignment colorable: {ok}  (so the list number is 3, "
      "meeting omega + index)")
