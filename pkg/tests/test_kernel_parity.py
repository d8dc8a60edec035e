"""The compiled and interpreted kernels must give identical answers."""
import json
import os
import subprocess
import sys

import pytest

from minipaint import JIT_ENABLED

SCRIPT = """
import json
from minipaint import io
from minipaint.generators import generate
from minipaint.oracle import flood_optimum
from minipaint.solvers import solve
from minipaint.graph import cogem_witnesses, induced_p4s
out = []
fig = io.figure1()
out.append(io.serialize_plan(solve(fig.graph, fig.template), fig))
out.append(flood_optimum(fig.graph, fig.template)[0])
for seed in range(6):
    inst = generate("cogem-free", 8, 3, seed, connected=True, non_cograph=True)
    out.append(io.serialize_plan(solve(inst.graph, inst.template), inst))
    g = generate("random", 8, 2, seed).graph
    out.append([induced_p4s(g), cogem_witnesses(g, 5)])
print(json.dumps(out))
"""


def run(flag: str):
    env = dict(os.environ, MINIPAINT_JIT=flag)
    proc = subprocess.run([sys.executable, "-c", SCRIPT], env=env, capture_output=True, text=True, check=True)
    return json.loads(proc.stdout)


@pytest.mark.skipif(not JIT_ENABLED, reason="numba not available")
def test_jit_and_fallback_agree():
    assert run("1") == run("0")
