"""Validates CLI JSON output against the shipped schemas."""

import json
import pathlib
import subprocess
import sys
import tempfile

import jsonschema
from referencing import Registry, Resource

cli, schema_dir = sys.argv[1], pathlib.Path(sys.argv[2])
report_schema = json.loads((schema_dir / "verification_report.schema.json").read_text())
output_schema = json.loads((schema_dir / "query_output.schema.json").read_text())
registry = Registry().with_resource(report_schema["$id"], Resource.from_contents(report_schema))
validator = jsonschema.Draft202012Validator(output_schema, registry=registry)

commands = [
    ["numbers", "--max-n", "4", "--q", "1/2"],
    ["numbers", "--max-n", "6", "--variant", "classical-bernoulli"],
    ["poly", "--max-n", "3", "--x", "2/3", "--q", "8/27", "--variant", "star"],
    ["sums", "--m", "2", "--n", "3", "--q", "1/2", "--variant", "weighted"],
    ["zeta", "--s", "-1/2", "--x", "7/2", "--q", "0.8"],
    ["partial-zeta", "--s", "-2", "--a", "2", "--f", "5", "--q", "1/3"],
    ["lfunction", "--s", "1/2", "--modulus", "7", "--char-index", "1", "--q", "1/2"],
    ["characters", "--modulus", "15"],
    ["verify", "--suite", "thm3"],
    ["verify", "--suite", "zeta", "--prec", "30"],
]

failed = 0
with tempfile.TemporaryDirectory() as tmp:
    report_path = pathlib.Path(tmp) / "report.json"
    for args in commands + [["verify", "--suite", "all", "--report", str(report_path)]]:
        run = subprocess.run([cli, *args], capture_output=True, text=True)
        errors = [] if run.returncode == 0 else [f"exit code {run.returncode}: {run.stderr.strip()}"]
        if not errors:
            errors = [e.message for e in validator.iter_errors(json.loads(run.stdout))]
        if errors:
            failed += 1
            print("FAIL", " ".join(args), *errors, sep="\n  ")
        else:
            print("ok  ", " ".join(args))
    report_errors = list(jsonschema.Draft202012Validator(report_schema).iter_errors(json.loads(report_path.read_text())))
    for e in report_errors:
        print("FAIL report file:", e.message)
    failed += bool(report_errors)

sys.exit(1 if failed else 0)
