"""Runs every CLI command on a small config and validates the JSON it writes."""
import json
import pathlib
import subprocess
import sys
import tempfile

import jsonschema

SMALL = {
    "mu": 0.5,
    "grid": {"K": 4, "M": 8},
    "forcing": {"benchmark": "oscillatory"},
    "verify": {"samples": 3},
    "probe": {"samples": 4},
    "oracle": {"steps_per_period": 128},
}

# (command, config overrides, expected exit code, output file -> schema)
CASES = [
    ("solve", {}, 0, {"report.json": "report"}),
    ("sweep", {}, 0, {"branch.json": "branch"}),
    ("verify", {}, 0, {"verify.json": "verify"}),
    ("colehopf", {}, 0, {"groundstate.json": "groundstate"}),
    ("oracle-compare", {}, 0, {"compare.json": "compare"}),
    ("solve", {"mu": 0.0}, 2, {"error.json": "error"}),
    ("sweep", {"forcing": {"terms": [{"kind": "modal", "a": 20.0, "k": 0, "m": 1}]}, "mu": 0.25,
               "solve": {"max_newton": 1, "newton_tol": 1e-13}},
     3, {"branch.json": "branch", "error.json": "error"}),
    ("colehopf", {"colehopf": {"drift": "file", "file": "absent.csv"}}, 2, {"error.json": "error"}),
]


def main():
    binary = pathlib.Path(sys.argv[1])
    schema_dir = pathlib.Path(sys.argv[2])
    schemas = {p.name.split(".")[0]: json.loads(p.read_text()) for p in schema_dir.glob("*.schema.json")}
    for s in schemas.values():
        jsonschema.Draft202012Validator.check_schema(s)
    failures = 0
    with tempfile.TemporaryDirectory() as tmp:
        for i, (cmd, overrides, expected, outputs) in enumerate(CASES):
            case = pathlib.Path(tmp) / f"case{i}"
            case.mkdir()
            config = dict(SMALL, **overrides)
            (case / "config.json").write_text(json.dumps(config))
            proc = subprocess.run([str(binary), cmd, "--config", str(case / "config.json"),
                                   "--out", str(case / "out")], capture_output=True, text=True)
            label = f"{cmd} {sorted(overrides)}"
            if proc.returncode != expected:
                print(f"FAIL {label}: exit {proc.returncode}, expected {expected}\n{proc.stderr}")
                failures += 1
                continue
            for name, schema in outputs.items():
                path = case / "out" / name
                try:
                    jsonschema.validate(json.loads(path.read_text()), schemas[schema],
                                        cls=jsonschema.Draft202012Validator)
                    print(f"ok   {label}: {name}")
                except (OSError, jsonschema.ValidationError) as e:
                    print(f"FAIL {label}: {name}: {e}")
                    failures += 1
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
