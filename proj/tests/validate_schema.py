"""Validate `tangle check` / `tangle witness` output against the published schema."""
import json
import subprocess
import sys

import jsonschema

cli, schema_path = sys.argv[1], sys.argv[2]
with open(schema_path) as f:
    schema = json.load(f)

cases = [
    ["check", "1 | 1"],
    ["check", "((1,2),3) | (3,(1,2))"],
    ["check", "(((1,2),3),4) | (((1,4),3),2)"],
    ["check", "((1,2),(3,4)) | ((1,3),(2,4))"],
    ["witness", "(((1,2),3),4) | (((1,4),3),2)"],
    ["witness", "((a,(b,c)),((d,e),f)) | (((a,d),(b,e)),(c,f))"],
]
for args in cases:
    out = subprocess.run([cli, *args], capture_output=True, text=True)
    if out.returncode not in (0, 1):
        sys.exit(f"{args}: exit {out.returncode}: {out.stderr}")
    jsonschema.validate(json.loads(out.stdout), schema)
    print("ok", *args)
