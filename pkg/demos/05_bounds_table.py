"""A small table of what is known about m*(k, d, λ), written as CSV."""
import csv
import sys

from kneser_transversal.report import TABLE_COLUMNS, bound_report, table_rows

rows = table_rows(5, 4, 3)
writer = csv.DictWriter(sys.stdout, fieldnames=TABLE_COLUMNS)
writer.writeheader()
writer.writerows(rows)

print("\nflagged cell:")
for note in bound_report(3, 5, 2)["notes"]:
    print(" ", note)
