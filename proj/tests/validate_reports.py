"""Runs each subcommand with --format json and validates the output against the report schema."""
import json
import subprocess
import sys

import jsonschema

cli, schema_path, data = sys.argv[1:4]
with open(schema_path) as f:
    schema = json.load(f)
jsonschema.Draft202012Validator.check_schema(schema)
validator = jsonschema.Draft202012Validator(schema)

commands = [
    ["lehmer-scan", "--max", "100000", "--carmichael"],
    ["lehmer-scan", "--max", "1000", "--timing"],
    ["aut", "--abelian", "2^1,1,1,1,1,1,1,1,1,1,1,1,1,1"],
    ["aut", "--abelian", "2^1,2;3^1", "--cross-check"],
    ["aut", "--table", f"{data}/s3.txt", "--cross-check"],
    ["verify-theorem1", "--max-order", "32", "--extra-table", f"{data}/klein.txt"],
    ["relation2", "--max-order", "32"],
    ["phi-g", "--group", "sym:3"],
    ["phi-g", "--table", f"{data}/klein.txt"],
]

failures = 0
for args in commands:
    proc = subprocess.run([cli, *args, "--format", "json"], capture_output=True, text=True)
    label = " ".join(args)
    if proc.returncode != 0:
        print(f"FAIL {label}: exit {proc.returncode}: {proc.stderr.strip()}")
        failures += 1
        continue
    errors = list(validator.iter_errors(json.loads(proc.stdout)))
    for e in errors:
        print(f"FAIL {label}: {e.json_path}: {e.message}")
    failures += bool(errors)
    if not errors:
        print(f"ok   {label}")
sys.exit(1 if failures else 0)
