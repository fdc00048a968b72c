"""
Auditing the claims on a whole corpus
=====================================

Sweep every connected labeled graph on up to five vertices, write the
JSON-lines and CSV reports, and build the sensitivity agreement table.
"""

import sys
import tempfile
from collections import Counter

from hadwiger_lab.graph import all_labeled_connected
from hadwiger_lab.lab import audit_theorem31, sweep, write_reports

records = list(sweep(all_labeled_connected(5)))
print("flags:", Counter(f for r in records for f in r.flags))

out = tempfile.mkdtemp(prefix="hadlab-")
jsonl, summary = write_reports(records, out)
sys.stdout.write(summary.read_text())
print("records in", jsonl)

report = audit_theorem31(all_labeled_connected(5))
sys.stdout.write(report.to_text())
