from __future__ import annotations

import os
import subprocess
import sys


def test_env_forces_python_fallback():
    env = dict(os.environ, WEDCS_BACKEND="python")
    out = subprocess.run(
        [sys.executable, "-c", "import wedcs, wedcs.hk; print(wedcs.BACKEND, wedcs.hk.core)"],
        env=env, capture_output=True, text=True, check=True,
    ).stdout.split()
    assert out == ["python", "None"]


def test_fallback_cli_runs():
    env = dict(os.environ, WEDCS_BACKEND="python")
    res = subprocess.run(
        [sys.executable, "-m", "wedcs.cli", "-", "--oracle", "--validate"],
        input="bipartite 2 2\nie 0 0\nie 1 1\nie 0 1\n", env=env,
        capture_output=True, text=True,
    )
    assert res.returncode == 0, res.stderr
    assert '"oracleMu": 2' in res.stdout and '"validatorPass": true' in res.stdout
