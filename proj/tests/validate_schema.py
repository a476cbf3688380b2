"""Runs the CLI with JSON output and validates each result against the schema."""

import json
import subprocess
import sys

import jsonschema

CASES = [
    ("intersect", ["intersect", "--n", "4", "--arc", "0,26", "--arc", "3,17", "--json"], 0),
    ("intersect", ["intersect", "--n", "4", "--arc", "0,26", "--arc", "3,17", "--points", "--json"], 0),
    ("ext", ["ext", "--n", "4", "--mod", "0,26", "--mod", "3,17", "--json"], 0),
    ("ext", ["ext", "--n", "4", "--mod", "0,26", "--mod", "3,17", "--cluster", "--explain", "--json"], 0),
    ("ext", ["ext", "--infinity", "--mod", "1,5", "--mod", "0,3", "--explain", "--json"], 0),
    ("quiver", ["quiver", "--n", "5", "--max-len", "6", "--format", "json"], 0),
    ("quiver", ["quiver", "--infinity", "--max-len", "4", "--json"], 0),
    ("oracle", ["oracle", "--n", "5", "--mod", "0,7", "--mod", "0,7", "--json"], 0),
    ("oracle", ["oracle", "--infinity", "--mod", "0,4", "--mod", "1,3", "--json"], 0),
    ("check", ["check", "--n-max", "3", "--len-max", "8", "--json"], 0),
    ("check", ["check", "--n-max", "2", "--len-max", "6", "--json", "--flip-signs"], 1),
]


def main():
    tool, schema_path = sys.argv[1], sys.argv[2]
    with open(schema_path) as f:
        schema = json.load(f)
    jsonschema.Draft202012Validator.check_schema(schema)
    failures = 0
    for kind, args, expected_code in CASES:
        proc = subprocess.run([tool] + args, capture_output=True, text=True)
        if proc.returncode != expected_code:
            print(f"FAIL {' '.join(args)}: exit {proc.returncode}")
            failures += 1
            continue
        doc = json.loads(proc.stdout)
        sub = dict(schema, **{"$ref": f"#/$defs/{kind}"})
        sub.pop("anyOf")
        for s in (schema, sub):
            errors = list(jsonschema.Draft202012Validator(s).iter_errors(doc))
            if errors:
                print(f"FAIL {' '.join(args)}: {errors[0].message}")
                failures += 1
                break
        else:
            print(f"ok   {' '.join(args)}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
