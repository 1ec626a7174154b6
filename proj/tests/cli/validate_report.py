"""Validate reports emitted by the CLI against the published schema."""

import json
import pathlib
import subprocess
import sys

import jsonschema


def main() -> int:
    cli, schema_path, workdir = sys.argv[1], sys.argv[2], pathlib.Path(sys.argv[3])
    schema = json.loads(pathlib.Path(schema_path).read_text())
    jsonschema.Draft202012Validator.check_schema(schema)
    runs = [
        ["--dim", "6", "--structure", "octonion-s6", "--points", "200", "--seed", "42"],
        ["--dim", "2", "--structure", "s2", "--points", "20", "--sweep"],
        ["--dim", "4", "--structure", "constant", "--points", "0"],
    ]
    for i, args in enumerate(runs):
        out = workdir / f"schema_check_{i}.json"
        subprocess.run([cli, "claims", *args, "--out", str(out)], check=True)
        jsonschema.validate(json.loads(out.read_text()), schema)
        print("valid:", " ".join(args))
    return 0


if __name__ == "__main__":
    sys.exit(main())
