# %% [markdown]
# File formats and the command line.

# %%
import json
import subprocess
import sys
import tempfile
from pathlib import Path

from skewsol import io
from skewsol.catalog import get

tmp = Path(tempfile.mkdtemp())
sol = get("lyubashenko3").payload
(tmp / "l3.json").write_text(json.dumps(io.solution_to_dict(sol)))
print((tmp / "l3.json").read_text())


def cli(*args):
    out = subprocess.run([sys.executable, "-m", "skewsol.cli", *args], capture_output=True, text=True)
    print(f"$ skewsol {' '.join(args)}  [exit {out.returncode}]")
    print(out.stdout + out.stderr)


# %%
cli("validate", str(tmp / "l3.json"))
cli("analyze", str(tmp / "l3.json"), "--simple", "--retract", "--permbrace")

# %%
d = io.solution_to_dict(sol)
d["rho"][2] = [1, 1, 1]
(tmp / "bad.json").write_text(json.dumps(d))
cli("validate", str(tmp / "bad.json"))

# %%
cli("soluble", "trivial-S3", "--out", str(tmp / "w.json"))
cli("soluble", "trivial-S3", "--verify", str(tmp / "w.json"), "--strict")
cli("enumerate", "braces", "4", str(tmp / "b4"))
cli("harness", "corollary-4.4")
