#!/usr/bin/env python3
"""Run every pisot subcommand, validate its JSON against the schema and
compare selected values with golden files."""

import argparse
import json
import math
import os
import subprocess
import sys
import tempfile

import jsonschema

HERE = os.path.dirname(os.path.abspath(__file__))


def run(cli, args, expect_code=0):
    proc = subprocess.run([cli, *args], capture_output=True, text=True, timeout=300)
    if proc.returncode != expect_code:
        raise AssertionError(f"{args}: exit {proc.returncode}, expected {expect_code}\n{proc.stdout}{proc.stderr}")
    return json.loads(proc.stdout)


def lookup(doc, path):
    for key in path.split("."):
        doc = doc[int(key)] if isinstance(doc, list) else doc[key]
    return doc


def compare(doc, expected, label):
    errors = []
    for path, want in expected.items():
        got = lookup(doc, path)
        if isinstance(want, float):
            if not math.isclose(got, want, rel_tol=0.0, abs_tol=1e-5):
                errors.append(f"{label}: {path} = {got}, expected {want}")
        elif got != want:
            errors.append(f"{label}: {path} = {got!r}, expected {want!r}")
    return errors


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--cli", required=True)
    parser.add_argument("--schema", required=True)
    parser.add_argument("--data", required=True)
    opts = parser.parse_args()

    with open(opts.schema) as fh:
        validator = jsonschema.Draft202012Validator(json.load(fh))

    def field(name):
        return os.path.join(opts.data, f"{name}.json")

    tmp = tempfile.mkdtemp()
    cases = [
        ("gen-quadratic", ["gen-quadratic", "--d", "2", "--out", os.path.join(tmp, "q2.json")], 0),
        ("gen-field", ["gen-field", "--name", "zeta5", "--out", os.path.join(tmp, "z5.json")], 0),
        ("pisot", ["pisot", "--field", field("zeta7plus"), "--epsilon", "0.05"], 0),
        ("reduce", ["reduce", "--field", field("qsqrt2"), "--a", "1000,0.001", "--delta", "0.9"], 0),
        ("verify", ["verify", "--field", field("qsqrt2"), "--a", "1000,0.001", "--delta", "0.9",
                    "--unit-exponents", "1"], 0),
        ("facet-bound", ["facet-bound", "--r", "2", "--s", "0", "--regulator", "0.881374"], 0),
        ("enumerate-facets", ["enumerate-facets", "--field", field("qsqrt2")], 0),
        ("lemma6", ["lemma6", "--samples", "200", "--seed", "42", "--bound", "10"], 0),
        ("height-bound", ["height-bound", "--r", "2", "--s", "0", "--regulator", "0.881374", "--gamma", "1",
                          "--epsilon", "0.01", "--field", field("qsqrt2")], 0),
        ("height-bound-zeta5", ["height-bound", "--r", "0", "--s", "2", "--regulator", "0.962424", "--gamma", "2",
                                "--epsilon", "0.01", "--field", field("zeta5")], 0),
        ("sums", ["sums", "--n-max", "12"], 0),
        ("bad-delta", ["reduce", "--field", field("qsqrt2"), "--a", "1,1", "--delta", "1.5"], 2),
        ("bad-a", ["reduce", "--field", field("qsqrt2"), "--a", "1,-1", "--delta", "0.9"], 2),
        ("bad-gamma", ["height-bound", "--r", "2", "--s", "0", "--regulator", "0.88", "--gamma", "2",
                       "--epsilon", "0.01"], 2),
        ("missing-option", ["facet-bound", "--r", "2"], 2),
        ("missing-file", ["enumerate-facets", "--field", os.path.join(tmp, "absent.json")], 2),
    ]

    errors = []
    outputs = {}
    for label, args, code in cases:
        try:
            doc = run(opts.cli, args, code)
        except (AssertionError, json.JSONDecodeError) as exc:
            errors.append(f"{label}: {exc}")
            continue
        for err in validator.iter_errors(doc):
            errors.append(f"{label}: schema: {err.message}")
        outputs[label] = doc

    with open(os.path.join(HERE, "golden", "expected.json")) as fh:
        golden = json.load(fh)
    for label, expected in golden.items():
        if label in outputs:
            errors.extend(compare(outputs[label], expected, label))
        else:
            errors.append(f"{label}: no output to compare")

    for line in errors:
        print(line)
    print(f"{len(cases)} invocations, {len(errors)} problems")
    return 1 if errors else 0


if __name__ == "__main__":
    sys.exit(main())
