"""Runs the ferrers CLI over every subcommand and validates each JSON
envelope against the published schema.

usage: validate_envelopes.py <ferrers executable> <envelope.schema.json>
"""

import json
import subprocess
import sys

import jsonschema

CASES = [
    (0, ["count", "--m", "2", "--n", "2", "--partition", "1"]),
    (0, ["count", "--m", "3", "--n", "3", "--partition", "", "--engine", "recursive"]),
    (0, ["count", "--m", "4", "--n", "3", "--partition", "3,1", "--engine", "enumerate"]),
    (0, ["enumerate", "--m", "2", "--n", "2", "--partition", "1"]),
    (0, ["sequence", "--partition", "1", "--ell", "2", "--checks", "log-concave,unimodal"]),
    (0, ["sequence", "--partition", "", "--ell", "3"]),
    (0, ["verify", "--box-m", "2", "--box-n", "2", "--ell-max", "2", "--list-instances"]),
    (0, ["verify", "--mode", "random", "--seed", "7", "--samples", "20", "--box-m", "10",
         "--box-n", "10", "--ell-max", "4"]),
    (0, ["tp2", "check-matrix", "1,2;1,3"]),
    (0, ["tp2", "check-matrix", "1,2;3,1"]),
    (0, ["tp2", "lift-sequence", "3,5,3"]),
    (0, ["tp2", "lift-sequence", "1,2,5"]),
    (0, ["tp2", "corollary-i", "--a", "1,2", "--x", "1,1"]),
    (5, ["tp2", "corollary-i", "--a", "2,1", "--x", "1,1"]),
    (0, ["tp2", "corollary-ii", "1,2,1"]),
    (5, ["tp2", "corollary-ii", "1,2,5"]),
]


def main() -> int:
    exe, schema_path = sys.argv[1], sys.argv[2]
    with open(schema_path) as f:
        schema = json.load(f)
    jsonschema.Draft202012Validator.check_schema(schema)
    validator = jsonschema.Draft202012Validator(schema)

    failures = 0
    for expected_status, args in CASES:
        proc = subprocess.run([exe, *args], capture_output=True, text=True)
        label = " ".join(args)
        if proc.returncode != expected_status:
            print(f"FAIL {label}: exit {proc.returncode}, expected {expected_status}")
            failures += 1
            continue
        errors = list(validator.iter_errors(json.loads(proc.stdout)))
        for err in errors:
            print(f"FAIL {label}: {err.json_path}: {err.message}")
        failures += bool(errors)
        if not errors:
            print(f"ok   {label}")

    # a deliberately broken envelope must be rejected
    bad = {"schema_version": "1.0", "command": "count", "parameters": {"m": 1, "n": 1, "partition": "",
           "engine": "dp"}, "results": {"count": 2.0}, "violations": []}
    if validator.is_valid(bad):
        print("FAIL schema accepts a floating-point count")
        failures += 1

    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
