"""Validate `negdim verify all --json` output against docs/report.schema.json."""
import json
import subprocess
import sys

import jsonschema

cli, schema_path = sys.argv[1], sys.argv[2]
proc = subprocess.run([cli, "verify", "all", "--json", *sys.argv[3:]], capture_output=True, text=True)
if proc.returncode not in (0, 1):
    sys.exit(f"unexpected exit code {proc.returncode}: {proc.stderr}")
report = json.loads(proc.stdout)
with open(schema_path) as f:
    jsonschema.validate(report, json.load(f))

s = report["summary"]
statuses = [c["status"] for c in report["cases"]]
assert s["total"] == len(statuses)
assert s["pass"] == statuses.count("pass")
assert s["fail"] == statuses.count("fail")
assert s["expected_discrepancy"] == statuses.count("expected-discrepancy")
ids = [c["id"] for c in report["cases"]]
assert ids == sorted(ids) and len(set(ids)) == len(ids)
assert proc.returncode == (1 if s["fail"] else 0)
print(f"schema ok: {s}")
