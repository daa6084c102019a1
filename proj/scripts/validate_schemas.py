#!/usr/bin/env python3
"""Run each spin7 subcommand once and validate its JSON against schemas/.

usage: validate_schemas.py SPIN7 SCHEMA_DIR GOLDEN_DIR

The admissibility table is only checked through its golden copy: rebuilding it
takes most of the runtime and verify-all already diffs it against the live one.
"""
import json
import subprocess
import sys
from pathlib import Path

import jsonschema

RUNS = [
    ("invariants", ["invariants", "--algebra", "su3", "--space", "forms3"], 0),
    ("invariants", ["invariants", "--algebra", "su3", "--space", "spinors"], 0),
    ("ricci", ["ricci", "--family", "5.1", "--set", "a1=1,b1=2"], 0),
    ("ricci", ["ricci", "--family", "5.1", "--set", "a1=1", "--hol", "su3"], 1),
    ("ricci", ["ricci", "--family", "5.4", "--set", "b1=1"], 0),
    ("curvature", ["curvature", "--case", "5.1.1", "--set", "a1=1,b1=2"], 0),
    ("curvature", ["curvature", "--case", "5.2.1", "--family", "5.2-II", "--set", "a1=1,a2=2,b1=2"], 0),
    ("reconstruct", ["reconstruct", "--example", "1"], 0),
    ("reconstruct", ["reconstruct", "--example", "2", "--sign", "-1"], 0),
    ("reconstruct", ["reconstruct", "--example", "t2"], 0),
    ("iso", ["iso", "--form", "e_135 - e_245 + e_146 + e_236"], 0),
    ("verify-all", ["verify-all", "--seed", "3", "--no-golden"], 0),
]

GOLDEN = ["admissibility_table", "constants", "families", "curvature_cases"]


def load(schema_dir, name):
    schema = json.loads((schema_dir / f"{name}.json").read_text())
    jsonschema.Draft202012Validator.check_schema(schema)
    return jsonschema.Draft202012Validator(schema)


def main():
    if len(sys.argv) != 4:
        print(__doc__, file=sys.stderr)
        return 2
    exe, schema_dir, golden_dir = sys.argv[1], Path(sys.argv[2]), Path(sys.argv[3])
    bad = 0

    def report(label, validator, doc):
        nonlocal bad
        errs = sorted(validator.iter_errors(doc), key=lambda e: list(e.path))
        print(f"{'ok  ' if not errs else 'FAIL'} {label}")
        for e in errs[:5]:
            print(f"     {'/'.join(map(str, e.path))}: {e.message}")
        bad += bool(errs)

    for name, args, want_rc in RUNS:
        label = " ".join(args)
        p = subprocess.run([exe, *args], capture_output=True, text=True)
        if p.returncode != want_rc:
            print(f"FAIL {label}: exit {p.returncode}, expected {want_rc}\n{p.stderr}")
            bad += 1
            continue
        try:
            doc = json.loads(p.stdout)
        except json.JSONDecodeError as e:
            print(f"FAIL {label}: not JSON ({e})")
            bad += 1
            continue
        report(label, load(schema_dir, name), doc)

    for g in GOLDEN:
        path = golden_dir / f"{g}.json"
        if not path.exists():
            print(f"FAIL golden/{g}.json missing")
            bad += 1
            continue
        report(f"golden/{g}.json", load(schema_dir, f"golden.{g}"), json.loads(path.read_text()))

    print(f"{bad} failure(s)")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
