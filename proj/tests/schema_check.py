"""Validates data/*.json against the input schema with the reference validator,
and checks that a few malformed documents are rejected."""
import json
import pathlib
import sys

import jsonschema

root = pathlib.Path(sys.argv[1])
schema = json.loads((root / "schemas" / "input.schema.json").read_text())
jsonschema.Draft7Validator.check_schema(schema)
validator = jsonschema.Draft7Validator(schema)

failures = 0
for path in sorted((root / "data").glob("*.json")):
    errors = list(validator.iter_errors(json.loads(path.read_text())))
    for e in errors:
        print(f"{path.name}: {'/'.join(map(str, e.path))}: {e.message}")
    failures += bool(errors)

bad = [
    {"group": {"orders": [2]}, "g": [[1]]},
    {"group": {"orders": [2]}, "g": [[1]], "chi": [["x"]]},
    {"group": {"orders": [2]}, "g": [[1]], "chi": [[1]], "extra": 1},
    {"group": {"orders": [2]}, "g": [[1]], "chi": [[1]], "lifting": {"mu": ["1/"]}},
]
for doc in bad:
    if validator.is_valid(doc):
        print("accepted malformed document:", json.dumps(doc))
        failures += 1

print("ok" if not failures else f"{failures} failures")
sys.exit(1 if failures else 0)
