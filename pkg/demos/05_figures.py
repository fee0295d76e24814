"""
Figure data
===========

Write the CSV series behind every figure, then look at one of them.
"""

import sys
from pathlib import Path

from fodkit.cli import main
from fodkit.csvio import read_records

out = Path(sys.argv[1] if len(sys.argv) > 1 else "figures")
main(["figure", "--id", "all", "--out", str(out), "--gnuplot"])

with open(out / "figure_08.csv", newline="") as fh:
    rows = read_records(fh)
complex_rows = [r for r in rows if r.classification == "complex"]
print(len(rows), "rows,", len(complex_rows), "complex")
print(complex_rows[0])
