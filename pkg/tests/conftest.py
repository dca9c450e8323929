from __future__ import annotations

import os
import re
import subprocess
import sys
from pathlib import Path

SRC = Path(__file__).resolve().parents[1] / "src"

# let a bare checkout run pytest without installing first
if str(SRC) not in sys.path:
    sys.path.insert(0, str(SRC))


def run_cli(
    *args: str,
    env_extra: dict[str, str] | None = None,
    cwd: str | Path | None = None,
) -> subprocess.CompletedProcess:
    """Run the CLI black-box in a subprocess, source tree on the path."""
    env = dict(os.environ)
    env["PYTHONPATH"] = str(SRC) + os.pathsep + env.get("PYTHONPATH", "")
    env.pop("QTF_SEED", None)
    if env_extra:
        env.update(env_extra)
    return subprocess.run(
        [sys.executable, "-m", "qtf", *args],
        capture_output=True,
        env=env,
        cwd=cwd,
    )


_ACCEPTANCE_RE = re.compile(r"test_acceptance\.py::test_c(\d+)")


def pytest_runtest_logreport(report):
    """Print one PASS/FAIL line per acceptance criterion."""
    if report.when != "call":
        return
    match = _ACCEPTANCE_RE.search(report.nodeid)
    if not match:
        return
    status = "PASS" if report.passed else ("SKIP" if report.skipped else "FAIL")
    name = report.nodeid.split("::")[-1]
    print(f"\n[criterion {int(match.group(1))}] {status} {name}", flush=True)
