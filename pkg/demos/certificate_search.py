"""End-to-end: enumerate parameters, check every constraint, save, re-verify.

Run:  python3 demos/certificate_search.py
"""

import tempfile
from pathlib import Path

from ellspec import (
    SearchBounds,
    enumerate_table1,
    load_certificates,
    save_certificates,
    solve,
    verify_certificate,
)

# Only five (k2, k3) pairs survive the fiber-degree bookkeeping.
print("admissible rows (k2, k3, l2f, l3f):")
for row in enumerate_table1():
    print("  ", (row.k2, row.k3, row.l2f, row.l3f), "k =", row.k)

# Search the (3, 6) row in a small box.  The consistency disk forces the
# shape (u, x, z) = (-3, 5, 1) here, so everything found differs only in
# the twist degrees d2, d3.
bounds = SearchBounds(u_abs=4, x_abs=8, z_min=0, z_max=2, d_abs=10, a_max=0)
certs = solve(3, 6, bounds)
print(f"\nfound {len(certs)} certificates on the (3, 6) row")

shapes = {(c.u, c.x, c.z) for c in certs}
print("distinct (u, x, z) shapes:", shapes)

golden = next(c for c in certs if (c.params.d2, c.params.d3) == (10, 10))
print("\none certificate in full:")
print("  twists:", golden.params.l2, "|", golden.params.l3)
for entry in golden.report.entries:
    extra = f" = {entry.value}" if entry.value is not None else ""
    print(f"  {entry.name}: {'pass' if entry.passes else 'FAIL'}{extra}")
print(
    "  c2 deficit:",
    tuple(str(v) for v in golden.report.c2_deficit),
    " c3:",
    str(golden.report.c3),
)

# Certificates round-trip through JSON and re-verify from scratch; any
# doctored entry raises TamperError instead of passing silently.
with tempfile.TemporaryDirectory() as tmp:
    path = Path(tmp) / "certs.json"
    save_certificates(path, certs)
    again = load_certificates(path)
    assert again == certs
    report = verify_certificate(again[0])
    print("\nreloaded first certificate re-verifies:", report.all_pass)
