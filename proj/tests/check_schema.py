"""Validate JSON output of every plethysm subcommand against the schema and
check that repeated runs are byte-identical."""

import json
import subprocess
import sys

import jsonschema

QUERIES = [
    ["stable", "--lambda", "6,2"],
    ["stable", "--lambda", "-"],
    ["coeff", "--m", "10", "--n", "10", "--lambda", "4,4,2"],
    ["coeff", "--m", "3", "--n", "3", "--lambda", "4"],
    ["table", "--r", "8"],
    ["table", "--r", "0"],
    ["module", "--r", "3", "--info", "dims"],
    ["module", "--r", "3", "--info", "matrices"],
    ["module", "--r", "4", "--info", "dq"],
    ["module", "--r", "4", "--info", "filtration"],
    ["verify", "--suite", "fast"],
]


def main(binary, schema_path):
    with open(schema_path) as f:
        schema = json.load(f)
    validator = jsonschema.Draft202012Validator(schema)
    failures = 0
    for q in QUERIES:
        args = [binary] + q + ["--format", "json"]
        first = subprocess.run(args, capture_output=True, check=True).stdout
        second = subprocess.run(args, capture_output=True, check=True).stdout
        doc = json.loads(first)
        errors = list(validator.iter_errors(doc))
        if errors or first != second:
            failures += 1
            print("FAIL", " ".join(q), errors[:1] if errors else "output differs between runs")
        else:
            print("ok  ", " ".join(q))
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main(sys.argv[1], sys.argv[2]))
