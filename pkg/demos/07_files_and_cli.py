"""
Text files and the command line
===============================

One line with n, then n rows of 0/1 characters.  The ``cyclab`` command
wraps the library; ``cli_dispatch`` runs it in-process and returns the exit
status (0 ok, 1 counterexample found, 2 usage or parse error).
"""

import os
import tempfile

from cyclab import gen_d5, parse_digraph, serialize_digraph
from cyclab.cli import cli_dispatch

text = serialize_digraph(gen_d5())
print(text)
assert parse_digraph(text) == gen_d5()

with tempfile.TemporaryDirectory() as tmp:
    path = os.path.join(tmp, "d5.dg")
    print("status", cli_dispatch(["gen", "--family", "d5", "--out", path]))
    print("status", cli_dispatch(["check", path]))
    print("status", cli_dispatch(["classify", path]))

    bad = os.path.join(tmp, "bad.dg")
    with open(bad, "w") as fh:
        fh.write("2\n01\n11\n")
    print("status", cli_dispatch(["check", bad]))
