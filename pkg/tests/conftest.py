from __future__ import annotations

import os
import sys
from pathlib import Path

import pytest


PROJECT_DIR = Path(__file__).resolve().parents[1]
SRC_DIR = PROJECT_DIR / "src"
sys.path.insert(0, str(SRC_DIR))


@pytest.fixture(autouse=True)
def _restore_environ():
    # the CLI writes its flags into os.environ before building RunConfig
    saved = dict(os.environ)
    yield
    os.environ.clear()
    os.environ.update(saved)
