#!/usr/bin/env python3
"""Run isotwist-cli over a fixed set of invocations and validate every response against the schema."""

import json
import subprocess
import sys

import jsonschema

CASES = [
    (0, ["classify", "--ainvs", "1,1,1,-30,-76", "--p", "11"]),
    (0, ["classify", "--sig", "48,0,64", "--p", "2", "--d", "-1"]),
    (0, ["minimal", "--sig", "768,0,262144"]),
    (0, ["twist", "--ainvs", "0,0,1,0,0", "--d", "-3"]),
    (0, ["faltings", "--type", "L3_9", "--t", "45", "--d", "3"]),
    (0, ["faltings", "--type", "L2_11", "--d", "-11"]),
    (0, ["faltings", "--type", "R4_10", "--t", "14", "--d", "2"]),
    (0, ["prob", "--type", "L3_9", "--t", "1/3"]),
    (0, ["prob", "--type", "L2_67"]),
    (0, ["family", "l39", "--t", "-5/2"]),
    (0, ["family", "l211", "--variant", "a"]),
    (0, ["verify", "--type", "L3_9", "--t", "45", "--d", "3", "--bits", "128"]),
    (0, ["verify", "--type", "L2_11", "--d", "-11", "--variant", "b"]),
    (0, ["density", "--p", "3", "--n", "100000"]),
    (0, ["empirical", "--type", "L3_9", "--t", "3", "--n", "20000"]),
    (2, ["faltings", "--type", "L3_9", "--t", "0", "--d", "5"]),
    (2, ["faltings", "--type", "L3_9", "--t", "45", "--d", "12"]),
    (2, ["faltings", "--type", "Q7", "--t", "1", "--d", "1"]),
    (2, ["classify", "--sig", "1,2,3", "--p", "2"]),
    (2, ["density", "--p", "4", "--n", "100000"]),
    (2, []),
    (3, ["faltings", "--type", "S8", "--t", "3", "--d", "1"]),
]


def main() -> int:
    exe, schema_path = sys.argv[1], sys.argv[2]
    with open(schema_path, encoding="utf-8") as f:
        schema = json.load(f)
    jsonschema.Draft202012Validator.check_schema(schema)
    validator = jsonschema.Draft202012Validator(schema)

    failures = 0
    for expected, args in CASES:
        proc = subprocess.run([exe, *args], capture_output=True, text=True, check=False)
        label = " ".join(args) or "<no arguments>"
        if proc.returncode != expected:
            print(f"FAIL {label}: exit {proc.returncode}, expected {expected}")
            failures += 1
            continue
        try:
            response = json.loads(proc.stdout)
        except json.JSONDecodeError as e:
            print(f"FAIL {label}: not JSON ({e})")
            failures += 1
            continue
        errors = sorted(validator.iter_errors(response), key=lambda e: list(e.path))
        if errors:
            print(f"FAIL {label}: {errors[0].message} at {list(errors[0].path)}")
            failures += 1
        elif (expected != 0) != ("error" in response):
            print(f"FAIL {label}: error body does not match exit code")
            failures += 1
        else:
            print(f"ok   {label}")
    print(f"{len(CASES) - failures}/{len(CASES)} responses valid")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
