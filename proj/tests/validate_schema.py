#!/usr/bin/env python3
"""Validates wschur JSON output against the shipped schema."""
import json
import subprocess
import sys

import jsonschema

def main():
    binary, schema_path = sys.argv[1], sys.argv[2]
    with open(schema_path) as fh:
        schema = json.load(fh)

    invocations = [
        ["schur", "--d", "2", "--lambda", "1,0", "--variant", "weighted-factorial",
         "--format", "json"],
        ["schur", "--d", "2", "--lambda", "2,1", "--variant", "factorial", "--format", "json"],
        ["expand", "--d", "2", "--lambda", "1,0", "--mu", "1,0", "--basis", "factorial"],
        ["expand", "--d", "2", "--lambda", "1,0", "--mu", "1,1", "--basis", "weighted"],
        ["restrict", "--d", "2", "--n", "3", "--itw", "1,0,2", "--u", "2",
         "--format", "json", "--output", "table.json"],
    ]
    for args in invocations:
        subprocess.run([binary] + args, check=True, capture_output=True, text=True)

    for args in invocations[:-1]:
        out = subprocess.run([binary] + args, check=True, capture_output=True, text=True).stdout
        jsonschema.validate(json.loads(out), schema)
    with open("table.json") as fh:
        jsonschema.validate(json.load(fh), schema)
    print("schema validation passed")

if __name__ == "__main__":
    main()
