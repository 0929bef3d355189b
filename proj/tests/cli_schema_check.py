"""Runs the markgraph CLI and validates every output against docs/*.schema.json.

usage: cli_schema_check.py <markgraph binary> <docs dir> <scratch dir>
"""

import json
import pathlib
import subprocess
import sys

import jsonschema
from referencing import Registry, Resource


def load_registry(docs):
    schemas = {}
    resources = []
    for path in sorted(docs.glob("*.schema.json")):
        schema = json.loads(path.read_text())
        schemas[path.name] = schema
        resource = Resource.from_contents(schema)
        resources.append((schema["$id"], resource))
        resources.append((path.name, resource))
    return schemas, Registry().with_resources(resources)


def run(binary, *args, expect=0):
    proc = subprocess.run([binary, *args], capture_output=True, text=True)
    if proc.returncode != expect:
        raise SystemExit(
            f"{' '.join(args)}: exit {proc.returncode}, expected {expect}\n{proc.stderr}"
        )
    return proc


def main():
    binary, docs, scratch = sys.argv[1], pathlib.Path(sys.argv[2]), pathlib.Path(sys.argv[3])
    scratch.mkdir(parents=True, exist_ok=True)
    schemas, registry = load_registry(docs)

    def validate(path, schema_name):
        doc = json.loads(path.read_text())
        validator = jsonschema.Draft202012Validator(schemas[schema_name], registry=registry)
        errors = sorted(validator.iter_errors(doc), key=lambda e: list(e.path))
        if errors:
            raise SystemExit(f"{path.name} violates {schema_name}: {errors[0].message}")
        print(f"ok {path.name} against {schema_name}")
        return doc

    for mode in ("--legs-labeled", "--legs-unlabeled"):
        out = scratch / f"graphs{mode}.json"
        run(binary, "enumerate", "--r", "3", "--l", "1", mode, "--out", str(out))
        validate(out, "graphs.schema.json")

    empty = scratch / "empty.json"
    run(binary, "enumerate", "--r", "0", "--l", "1", "--out", str(empty))
    if validate(empty, "graphs.schema.json") != []:
        raise SystemExit("r=0 l=1 should enumerate to an empty array")

    coh = scratch / "cohomology.json"
    run(binary, "cohomology", "--r", "2", "--l", "2", "--report", str(coh))
    validate(coh, "cohomology.schema.json")

    graph_file = scratch / "graphs--legs-labeled.json"
    coh_file = scratch / "cohomology_file.json"
    run(binary, "cohomology", "--graph", str(graph_file), "--report", str(coh_file))
    validate(coh_file, "cohomology.schema.json")

    # dumbbell: two bubbles joined by a bridge, one leg on each end
    dumbbell = scratch / "dumbbell.json"
    dumbbell.write_text(json.dumps(
        {"n": 4, "edges": [[0, 1], [0, 1], [1, 2], [2, 3], [2, 3]], "legs": [0, 3]}))
    coh_db = scratch / "cohomology_dumbbell.json"
    run(binary, "cohomology", "--graph", str(dumbbell), "--sectors", "mixed,edge,cycle",
        "--report", str(coh_db))
    doc = validate(coh_db, "cohomology.schema.json")
    for sector, report in doc["aggregate"].items():
        ranks = [d["free_rank"] for d in report["degrees"]]
        if ranks[0] != 1 or any(ranks[1:]) or any(d["torsion"] for d in report["degrees"]):
            raise SystemExit(f"dumbbell {sector} cohomology is not a point: {ranks}")
    print("ok dumbbell cohomology is a point in every sector")

    # usage errors exit 2, bad input exits 1
    run(binary, "enumerate", "--r", "x", "--l", "1", expect=2)
    run(binary, "verify", "--r", "2", "--l", "1", "--checks", "nonsense", expect=2)
    run(binary, "frobnicate", expect=2)
    broken = scratch / "broken.json"
    broken.write_text('{"n": 2, "edges": [[0, 5]], "legs": []}')
    run(binary, "cohomology", "--graph", str(broken), expect=1)
    broken.write_text("not json")
    run(binary, "cohomology", "--graph", str(broken), expect=1)
    print("ok exit codes for malformed flags and inputs")

    for name, extra, code in (
        ("verify.json", [], 0),
        ("verify_timed.json", ["--timings"], 0),
        ("verify_fault.json", ["--inject-fault", "delta-term"], 1),
    ):
        path = scratch / name
        run(binary, "verify", "--r", "2", "--l", "2", *extra, "--report", str(path), expect=code)
        doc = validate(path, "verify.schema.json")
        if doc["passed"] != (code == 0):
            raise SystemExit(f"{name}: 'passed' disagrees with the exit code")

    gen = scratch / "generator.json"
    run(binary, "generator", "--r", "2", "--l", "1", "--per-graph", "--out", str(gen))
    validate(gen, "generator.schema.json")
    for chain in json.loads(gen.read_text())["chains"]:
        validator = jsonschema.Draft202012Validator(schemas["chain.schema.json"], registry=registry)
        validator.validate(chain)

    # identical config and seed give identical bytes
    a, b = scratch / "order_a.json", scratch / "order_b.json"
    for path in (a, b):
        run(binary, "verify", "--r", "3", "--l", "1", "--checks", "order", "--seed", "7",
            "--report", str(path))
    if a.read_bytes() != b.read_bytes():
        raise SystemExit("verify reports differ across identical runs")
    print("ok repeated verify runs are byte-identical")


if __name__ == "__main__":
    main()
