"""
Checking the structural laws
============================

"""

from dhpath import LAWS, load_fixture

# each law returns a report with a verdict, a detail line and, when the
# law fails or has a strictness witness, a path that shows it
G = load_fixture("hyper4")
for name, check in LAWS.items():
    r = check(G, 3)
    print(f"{name:22} {'holds' if r.holds else 'FAILS'}  {r.detail}")

# the connective cylinder misses (2|0 3|1): the box product joins {2, 3}|0
# to {2, 3}|1 through a single arrow, while the cylinder only links v|0 to v|1
