"""Validates the fixture documents against the schemas in docs/."""

import json
import pathlib
import sys

from jsonschema import Draft202012Validator
from referencing import Registry, Resource


def schema_for(doc):
    if "maps" in doc or "alpha" in doc:
        return "action.schema.json"
    if "structure_constants" in doc:
        return "algebra.schema.json"
    return "group.schema.json"


def main(docs_dir, fixture_dir):
    schemas = {}
    registry = Registry()
    for path in sorted(pathlib.Path(docs_dir).glob("*.schema.json")):
        schema = json.loads(path.read_text())
        Draft202012Validator.check_schema(schema)
        schemas[path.name] = schema
        registry = registry.with_resource(path.name, Resource.from_contents(schema))
    failures = 0
    for path in sorted(pathlib.Path(fixture_dir).glob("*.json")):
        doc = json.loads(path.read_text())
        name = schema_for(doc)
        errors = list(Draft202012Validator(schemas[name], registry=registry).iter_errors(doc))
        print(f"{path.name}: {name}: {'ok' if not errors else errors[0].message}")
        failures += bool(errors)
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main(sys.argv[1], sys.argv[2]))
