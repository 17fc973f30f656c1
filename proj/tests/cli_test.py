import json
import os
import pathlib
import subprocess
import sys
import tempfile

import jsonschema

BIN = sys.argv[1]
SCHEMAS = pathlib.Path(sys.argv[2])
failures = []


def run(*args, env=None):
    full_env = dict(os.environ)
    full_env.pop("RADO_MIN_BUDGET", None)
    if env:
        full_env.update(env)
    return subprocess.run([BIN, *args], capture_output=True, text=True, env=full_env)


def check(name, cond, detail=""):
    print(("PASS " if cond else "FAIL ") + name + (f" ({detail})" if detail and not cond else ""))
    if not cond:
        failures.append(name)


def validated(name, schema, proc):
    try:
        doc = json.loads(proc.stdout)
        jsonschema.validate(doc, json.loads((SCHEMAS / f"{schema}.schema.json").read_text()))
    except (json.JSONDecodeError, jsonschema.ValidationError) as e:
        check(name + " schema", False, str(e).splitlines()[0])
        return None
    check(name + " schema", True)
    return doc


with tempfile.TemporaryDirectory() as tmp:
    tmp = pathlib.Path(tmp)

    p = run("count", "--a", "1", "--coloring", "00110")
    d = validated("count a=1", "count", p)
    check("count a=1 exit 0", p.returncode == 0)
    check("count a=1 values", d is not None and d["counts"]["mono"] == 1)

    (tmp / "c.txt").write_text("0:4,1:6,0:1\n")
    p = run("count", "--a", "2", "--file", str(tmp / "c.txt"))
    d = validated("count a=2 file", "count", p)
    check("count a=2 categories", d is not None and d["categories"]["sum"] == 2 * d["counts"]["nonmono"])

    check("count bad a exits 3", run("count", "--a", "0", "--coloring", "0101").returncode == 3)
    check("count bad coloring exits 2", run("count", "--a", "1", "--coloring", "01x1").returncode == 2)
    check("count missing file exits 2", run("count", "--a", "1", "--file", str(tmp / "nope")).returncode == 2)
    check("unknown flag exits 3", run("count", "--a", "1", "--bogus").returncode == 3)

    pat = json.dumps({"r": 2, "blocks": [{"color": 0, "len": "1"}, {"color": 1, "len": "3/2"}, {"color": 0, "len": "1/4"}]})
    p = run("density", "--a", "1", "--pattern", pat, "--n", "100")
    d = validated("density", "density", p)
    check("density value", d is not None and d["density"]["coefficient"]["fraction"] == "1/22")
    check("density malformed exits 2", run("density", "--a", "1", "--pattern", "{").returncode == 2)

    p = run("greedy", "--a", "1", "--colors", "3", "--json")
    d = validated("greedy r=3", "greedy", p)
    check("greedy r=3 lengths", d is not None and d["lengths"] == ["1", "3/2", "1/4", "3", "1/8", "487/440", "47/440"])
    check("greedy r=3 density", d is not None and d["density"]["fraction"] == "47/6238")
    p = run("greedy", "--a", "2", "--colors", "2")
    d = validated("greedy a=2", "greedy", p)
    check("greedy a=2", d is not None and d["lengths"] == ["1", "7/3", "1/3"] and d["density"]["fraction"] == "1/44")
    p = run("greedy", "--a", "1", "--colors", "1")
    d = validated("greedy r=1", "greedy", p)
    check("greedy r=1", d is not None and d["blocks"] == 1 and d["density"]["fraction"] == "1/4")
    p = run("greedy", "--a", "1", "--colors", "3", "--max-blocks", "2")
    check("greedy cap exits 4", p.returncode == 4)
    validated("greedy capped", "greedy", p)

    p = run("search", "--n", "5", "--a", "1", "--colors", "2", "--exact")
    d = validated("search n=5", "search", p)
    check("search n=5 min >= 1", d is not None and d["min_count"] >= 1)
    d = validated("search n=4", "search", run("search", "--n", "4", "--a", "1", "--colors", "2", "--exact"))
    check("search n=4 min = 0", d is not None and d["min_count"] == 0)
    check("search over budget exits 5", run("search", "--n", "20", "--a", "1", "--budget", "10").returncode == 5)
    check("RADO_MIN_BUDGET is honored",
          run("search", "--n", "20", "--a", "1", env={"RADO_MIN_BUDGET": "10"}).returncode == 5)
    check("--budget overrides RADO_MIN_BUDGET",
          run("search", "--n", "12", "--a", "1", "--budget", "1e9", env={"RADO_MIN_BUDGET": "10"}).returncode == 0)
    d = validated("search local", "search", run("search", "--n", "30", "--a", "1", "--local", "--seed", "7"))

    csv = tmp / "out.csv"
    p = run("scan", "--a", "2", "--n-max", "20", "--csv", str(csv))
    lines = csv.read_text().splitlines() if csv.exists() else []
    check("scan exit 0", p.returncode == 0)
    check("scan 20-row CSV", len(lines) == 21 and lines[0] == "n,min_count,min_over_n2", f"{len(lines)} lines")
    validated("scan json", "scan", run("scan", "--a", "2", "--n-max", "8", "--json"))

    p = run("verify", "--a", "2", "--n-max", "14", "--all")
    check("verify n<=14 exits 0", p.returncode == 0, p.stdout[-200:])
    d = validated("verify json", "verify", run("verify", "--a", "3", "--n-max", "8", "--all", "--json"))
    check("verify json passed", d is not None and d["passed"])
    check("verify zero slack exits 1",
          run("verify", "--a", "2", "--n-max", "10", "--all", "--mono-slack", "0").returncode == 1)
    check("verify bad slack exits 3", run("verify", "--a", "2", "--coloring", "0110", "--q-slack", "x").returncode == 3)

    for args in (["greedy", "--a", "1", "--colors", "3"],
                 ["search", "--n", "40", "--a", "1", "--local", "--seed", "3"],
                 ["scan", "--a", "2", "--n-max", "12"],
                 ["count", "--a", "3", "--coloring", "0011101001"]):
        outs = [run(*args, "--threads", "1").stdout for _ in range(2)]
        check("byte-identical " + args[0], outs[0] == outs[1] and outs[0] != "")

    out = tmp / "g.json"
    p = run("greedy", "--a", "2", "--colors", "2", "-o", str(out))
    check("-o writes file", p.returncode == 0 and p.stdout == "" and json.loads(out.read_text())["blocks"] == 3)

print(f"{len(failures)} failure(s)")
sys.exit(1 if failures else 0)
