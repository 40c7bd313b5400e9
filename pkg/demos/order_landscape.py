"""The landscape of ord(p*q) across parameter grids.

Run with:  python3 demos/order_landscape.py

For fixed orders (m, n) of the two twist scalars, the product p*q can
have full order lcm(m, n) for every admissible index pair, for none of
them, or for some but not others.  The trichotomy is decided by an
integer criterion, and this script tabulates it against brute force.
"""

import math

from qheisenberg import classify_pair, ord_formula, scan_orders, valid_pairs

SHORT = {"ALWAYS_MAX": "max", "ALWAYS_NONMAX": "non", "MIXED": "mix"}

# A verdict grid for small m, n.  Dots mark grids with no admissible
# index pair at all: (1, 1), and (2, 2) where excluding p*q = 1 removes
# the only candidate.
print("verdict grid, m down / n across, 1..12")
header = "      " + "".join(f"{n:>5d}" for n in range(1, 13))
print(header)
for m in range(1, 13):
    row = [f"{m:>5d}:"]
    for n in range(1, 13):
        if not valid_pairs(m, n):
            row.append("    .")
        else:
            row.append(f"{SHORT[classify_pair(m, n)]:>5s}")
    print("".join(row))

# Every entry above is confirmed by enumerating all index pairs.
mismatches = 0
for m in range(1, 13):
    for n in range(1, 13):
        if valid_pairs(m, n):
            assert classify_pair(m, n) == scan_orders(m, n).verdict
print("\nbrute-force scans agree with the criterion everywhere")

# The mixed case needs a squared odd prime; (9, 9) is the smallest.
report = scan_orders(9, 9)
orders = sorted(set(report.entries.values()))
print(f"(9, 9) is {report.verdict} with orders {orders} "
      f"over {len(report.entries)} admissible pairs")

# At (4, 4) the exclusion p*q != 1 removes exactly the full-order
# candidates, so every surviving pair is non-maximal.
l = math.lcm(4, 4)
entries = scan_orders(4, 4).entries
print(f"(4, 4): lcm = {l}, observed orders "
      f"{sorted(set(entries.values()))} -> {classify_pair(4, 4)}")

# Orders realized at (6, 4), pair by pair.
print("\n(6, 4) admissible pairs and ord(p*q):")
for (k1, k2) in valid_pairs(6, 4):
    print(f"  k1={k1} k2={k2}: ord = {ord_formula(6, 4, k1, k2)}")
