"""Validate every JSON file the CLI tests wrote against the shipped schemas,
and check that SVG outputs parse as XML."""

import argparse
import json
import pathlib
import sys
import xml.etree.ElementTree as ET

import jsonschema

PREFIXES = {
    "bounds_": "bounds.schema.json",
    "boundary_": "boundary.schema.json",
    "convergence_": "convergence.schema.json",
    "omega": "omega.schema.json",
}


def schema_for(name, schemas):
    for prefix, file in PREFIXES.items():
        if name.startswith(prefix):
            return json.loads((schemas / file).read_text())
    raise SystemExit(f"no schema for {name}")


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--schemas", type=pathlib.Path, required=True)
    ap.add_argument("--dir", type=pathlib.Path, required=True)
    args = ap.parse_args()

    checked = 0
    for path in sorted(args.dir.rglob("*.json")):
        jsonschema.validate(json.loads(path.read_text()), schema_for(path.name, args.schemas))
        checked += 1
    for path in sorted(args.dir.rglob("*.svg")):
        root = ET.parse(path).getroot()
        parts = [p.get("data-part") for p in root.iter("{http://www.w3.org/2000/svg}path")]
        if sorted(parts) != ["algebraic", "remainder", "segment"]:
            raise SystemExit(f"{path}: unexpected paths {parts}")
        checked += 1
    if checked == 0:
        raise SystemExit("nothing to check")
    print(f"{checked} files ok")


if __name__ == "__main__":
    sys.exit(main())
