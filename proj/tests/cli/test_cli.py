"""End-to-end CLI checks: formats, exit codes, and JSON shapes."""

import json
import os
import subprocess
import sys
import tempfile

BIN = os.environ.get("TWINWL_BIN", "twinwl")


def run(*args, expect=0):
    proc = subprocess.run([BIN, *args], capture_output=True, text=True)
    assert proc.returncode == expect, (args, proc.returncode, proc.stderr)
    return proc.stdout


def run_json(*args, expect=0):
    return json.loads(run(*args, expect=expect))


def main():
    tmp = tempfile.mkdtemp(prefix="twinwl_cli_")
    p4 = os.path.join(tmp, "p4.graph")
    with open(p4, "w") as f:
        f.write("p graph 4 3\ne 0 1\ne 1 2\ne 2 3\n")

    # generation round-trips through the parser
    text = run("gen", "halfgraph", "--t", "4")
    assert text.startswith("p graph 8 10")
    run("gen", "cograph", "--n", "9", "--seed", "4", "-o", os.path.join(tmp, "c.graph"))
    run("gen", "tww1", "--n", "12", "--seed", "7", "-o", os.path.join(tmp, "t.graph"),
        "--cert", os.path.join(tmp, "t.seq"))

    # the emitted certificate verifies at width <= 1
    rep = run_json("tww", "verify", "--seq", os.path.join(tmp, "t.seq"))
    assert rep["width"] <= 1

    # exact twin-width of P4 with a verifiable sequence
    res = run_json("tww", "exact", "-g", p4)
    assert res["width"] == 1

    # budget exhaustion exits 3 with bounds
    big = os.path.join(tmp, "big.graph")
    run("gen", "tww1", "--n", "40", "--seed", "3", "-o", big)
    # (a denser hard instance: use a cfi graph instead)
    cfi = os.path.join(tmp, "cfi.graph")
    run("gen", "cfi", "--base", "k4", "--variant", "even", "-o", cfi)
    res = run_json("tww", "exact", "-g", cfi, "--max-nodes", "50", expect=3)
    assert "bounds" in res

    # recognition, canonization, isomorphism
    assert run_json("recognize-tww1", "-g", p4)["twinwidth_le1"] is True
    canon = run_json("canon", "-g", p4)
    assert isinstance(canon["canonical_form"], str) and len(canon["order"]) == 4
    rp4 = os.path.join(tmp, "rp4.graph")
    with open(rp4, "w") as f:
        f.write("p graph 4 3\ne 3 2\ne 2 1\ne 1 0\n")
    iso = run_json("iso", p4, rp4)
    assert iso["isomorphic"] is True and iso["method"] == "canonical-form"

    # modtree
    tree = run_json("modtree", "-g", p4)
    assert tree["label"] == "prime"

    # wl + pebble
    wl = run_json("wl", "refine", "-k", "1", "-g", p4)
    assert wl["num_colors"] == 2
    odd = os.path.join(tmp, "cfiodd.graph")
    run("gen", "cfi", "--base", "k4", "--variant", "odd", "-o", odd)
    assert run_json("wl", "distinguish", "-k", "1", cfi, odd)["distinguished"] is False
    assert run_json("pebble", "-k", "2", cfi, odd)["winner"] == "duplicator"

    # analyze on a chain graph
    chain = os.path.join(tmp, "chain.graph")
    run("gen", "chain", "--a", "5", "--b", "6", "--density", "0.6", "--seed", "2",
        "-o", chain)
    chk = run_json("analyze", "chain", "-g", chain, "--left", "0-4")
    assert chk["is_chain"] is True
    rank = run_json("analyze", "rank", "-g", chain, "--A", "0-4", "--B", "5-10")
    hg = run_json("analyze", "halfgraph", "-g", chain, "--left", "0-4")
    assert rank["rank"] == hg["t"]

    # audit a schedule
    sched = os.path.join(tmp, "h4.seq")
    run("gen", "halfgraph", "--t", "4", "--schedule", "-o", sched)
    assert run_json("analyze", "audit", "--seq", sched)["ok"] is True

    # experiments write reports and bundle nothing on success
    out = os.path.join(tmp, "exp")
    rep = run_json("experiment", "lemma21-suite", "--samples", "30", "--seed", "9",
                   "--out", out)
    assert rep["pass"] is True
    assert os.path.exists(os.path.join(out, "lemma21-suite.json"))
    rep = run_json("experiment", "red-cut-audit", "--samples", "10", "--seed", "9",
                   "--n-max", "16", "--out", out)
    assert rep["pass"] is True

    # usage errors exit 64
    proc = subprocess.run([BIN, "definitely-not-a-command"], capture_output=True)
    assert proc.returncode == 64
    proc = subprocess.run([BIN], capture_output=True)
    assert proc.returncode == 64

    print("cli tests passed")


if __name__ == "__main__":
    sys.exit(main())
