"""Validate live CLI output against the JSON schemas in schemas/."""
import glob
import json
import os
import subprocess
import sys
import tempfile

from jsonschema import Draft202012Validator
from referencing import Registry, Resource

cli, schema_dir = sys.argv[1], sys.argv[2]
schemas = {}
for path in glob.glob(os.path.join(schema_dir, "*.schema.json")):
    with open(path) as f:
        schemas[os.path.basename(path)] = json.load(f)
registry = Registry().with_resources(
    (s["$id"], Resource.from_contents(s)) for s in schemas.values())


def check(name, doc):
    Draft202012Validator(schemas[name], registry=registry).validate(doc)
    print("ok", name)


def run(*args):
    return json.loads(subprocess.run([cli, *args], check=True, capture_output=True,
                                     text=True).stdout)


with tempfile.TemporaryDirectory() as tmp:
    check("closure_report.schema.json", run("close", "--n", "4", "--gens", "G2", "--schur"))
    check("closure_report.schema.json", run("close", "--n", "3", "--gens", "G1", "--method", "dense"))
    check("suite_report.schema.json", run("verify", "thm5", "--n-range", "2..5"))
    notef = run("verify", "noteF", "--n-range", "3..5")
    check("suite_report.schema.json", notef)
    for c in notef["checks"]:
        if "checks" in c["detail"]:
            check("note_f_report.schema.json", c["detail"])
    run("table", "--n", "3", "build", "--cache-dir", tmp)
    with open(glob.glob(os.path.join(tmp, "structure_*.json"))[0]) as f:
        check("structure_cache.schema.json", json.load(f))
    export = os.path.join(tmp, "schur.json")
    run("schur", "--n", "3", "--export", export)
    with open(export) as f:
        check("schur_transform.schema.json", json.load(f))
