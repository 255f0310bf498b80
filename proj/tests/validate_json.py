#!/usr/bin/env python3
"""Validate kext JSON output against a schema file.

usage: validate_json.py SCHEMA FILE [FILE...]

Files ending in .jsonl are checked line by line; anything else is one
document. Exits 0 when every document validates, 1 otherwise.
"""
import json
import sys

import jsonschema


def documents(path):
    with open(path, encoding="utf-8") as fh:
        if path.endswith(".jsonl"):
            for number, line in enumerate(fh, 1):
                if line.strip():
                    yield f"{path}:{number}", json.loads(line)
        else:
            yield path, json.load(fh)


def main(argv):
    if len(argv) < 3:
        print(__doc__, file=sys.stderr)
        return 2
    with open(argv[1], encoding="utf-8") as fh:
        schema = json.load(fh)
    validator_cls = jsonschema.validators.validator_for(schema)
    validator_cls.check_schema(schema)
    validator = validator_cls(schema)
    failures = 0
    checked = 0
    for path in argv[2:]:
        for where, doc in documents(path):
            checked += 1
            for err in validator.iter_errors(doc):
                failures += 1
                print(f"{where}: {err.json_path}: {err.message}", file=sys.stderr)
    print(f"{checked} document(s) checked, {failures} error(s)")
    return 0 if failures == 0 and checked > 0 else 1


if __name__ == "__main__":
    sys.exit(main(sys.argv))
