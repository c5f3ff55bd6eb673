"""Validates every JSON-producing command against docs/schema and checks
that re-serializing the parsed output reproduces it byte for byte."""

import json
import pathlib
import subprocess
import sys

import jsonschema

CASES = [
    ("roots.json", ["roots"]),
    ("hasse.json", ["hasse", "--format", "json"]),
    ("hasse.json", ["hasse", "--space", "s10", "--format", "json"]),
    ("degrees.json", ["degrees", "--format", "json"]),
    ("multiply.json", ["multiply", "s4p", "s4p", "--engine", "both", "--format", "json"]),
    ("multiply.json", ["multiply", "h", "s15", "--engine", "borel", "--format", "json"]),
    ("table.json", ["table"]),
    ("invariants.json", ["invariants", "--format", "json"]),
    ("sequence.json", ["chern", "--format", "json"]),
    ("sequence.json", ["chern", "--projected", "--format", "json"]),
    ("sequence.json", ["segre", "--format", "json"]),
    ("deg-y8.json", ["deg-y8", "--format", "json"]),
    ("jordan-selftest.json", ["jordan-selftest", "--samples", "200", "--format", "json"]),
]


def main():
    binary, schema_dir = sys.argv[1], pathlib.Path(sys.argv[2])
    failures = 0
    for schema_name, args in CASES:
        schema = json.loads((schema_dir / schema_name).read_text())
        jsonschema.Draft202012Validator.check_schema(schema)
        text = subprocess.run([binary, *args], check=True, capture_output=True, text=True).stdout
        data = json.loads(text)
        problems = [e.message for e in jsonschema.Draft202012Validator(schema).iter_errors(data)]
        if json.dumps(data, indent=2, sort_keys=True, ensure_ascii=False) + "\n" != text:
            problems.append("output is not in canonical form")
        status = "ok" if not problems else "FAIL: " + "; ".join(problems[:3])
        print(f"{' '.join(args)}: {status}")
        failures += bool(problems)
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
