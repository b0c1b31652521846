#!/usr/bin/env python3
"""CLI checks: exit codes, spec examples, text/JSON agreement, and schema validation.

usage: cli_check.py <llterm binary> <corpus dir> <schema dir>
"""
import json
import pathlib
import subprocess
import sys
import tempfile

import jsonschema
from referencing import Registry, Resource

binary, corpus, schemas = sys.argv[1], pathlib.Path(sys.argv[2]), pathlib.Path(sys.argv[3])

resources = []
for path in schemas.glob("*.schema.json"):
    doc = json.loads(path.read_text())
    resources.append((doc["$id"], Resource.from_contents(doc)))
registry = Registry().with_resources(resources)
failures = []


def validator(name):
    schema = json.loads((schemas / f"{name}.schema.json").read_text())
    return jsonschema.Draft202012Validator(schema, registry=registry)


def run(*args):
    return subprocess.run([binary, *args], capture_output=True, text=True, timeout=300)


def check(cond, what):
    if not cond:
        failures.append(what)


def validate(name, text, what):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        failures.append(f"{what}: not JSON ({e})")
        return None
    errors = list(validator(name).iter_errors(doc))
    for e in errors[:3]:
        failures.append(f"{what}: {e.message} at {list(e.absolute_path)}")
    return doc


# examples from the interface description
r = run("analyze", str(corpus / "decrement.loop"))
check(r.returncode == 0 and r.stdout.splitlines()[0] == "TERMINATES", "decrement: TERMINATES, exit 0")
r = run("analyze", str(corpus / "increment.loop"), "--format", "json")
doc = validate("verdict", r.stdout, "increment verdict")
check(r.returncode == 0 and doc and doc["outcome"] == "NONTERMINATING" and doc["witness"] == [0],
      "increment: witness 0, exit 0")
r = run("simulate", str(corpus / "decrement.loop"), "--init", "3", "--max-steps", "10", "--output", "json")
doc = validate("trace", r.stdout, "decrement trace")
check(doc and doc["outcome"] == "exited" and doc["steps"] == 4, "decrement from 3 exits at step 4")

# input errors
with tempfile.NamedTemporaryFile("w", suffix=".loop", delete=False) as f:
    f.write("vars x;\nwhile x >= 0 do y := x\n")
check(run("analyze", f.name).returncode == 1, "undeclared variable: exit 1")
check(run("analyze", "/nonexistent.loop").returncode == 1, "missing file: exit 1")
check(run("analyze").returncode == 1, "missing argument: exit 1")

# every corpus loop through every JSON-producing subcommand
for loop in sorted(corpus.glob("*.loop")):
    name = loop.stem
    j = run("analyze", str(loop), "--format", "json")
    t = run("analyze", str(loop))
    doc = validate("verdict", j.stdout, f"{name} verdict")
    if doc:
        check(j.returncode == (2 if doc["outcome"] == "UNKNOWN" else 0), f"{name}: exit code")
        check(t.stdout.splitlines()[0].split()[0] == doc["outcome"], f"{name}: text and JSON verdicts differ")
    validate("spectrum", run("spectrum", str(loop), "--format", "json").stdout, f"{name} spectrum")
    validate("relations", run("relations", str(loop), "--format", "json").stdout, f"{name} relations")
    dim = len(json.loads(run("simulate", str(loop), "--output", "json").stdout)["initial"])
    w = run("witness", str(loop), "--format", "json", "--point", ",".join(["1"] * dim))
    validate("witness", w.stdout, f"{name} witness")
    validate("trace", run("simulate", str(loop), "--box", "-1:1", "--max-steps", "50", "--output", "json").stdout,
             f"{name} box trace")

validate("relations", run("relations", "--tuple", "5,-6,5@0.6,0.8", "--format", "json").stdout, "tuple relations")
validate("relations", run("relations", "--matrix", "0,-1;1,0", "--format", "json").stdout, "matrix relations")
r = run("corpus", str(corpus), "--format", "json")
doc = validate("corpus", r.stdout, "corpus report")
check(r.returncode == 0 and doc and doc["contradictions"] == 0, "corpus: no contradictions")

for f in failures:
    print("FAIL", f)
print(f"{len(list(corpus.glob('*.loop')))} corpus loops checked, {len(failures)} failures")
sys.exit(1 if failures else 0)
