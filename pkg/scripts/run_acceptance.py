"""Run the acceptance suite and print one PASS/FAIL line per criterion."""

import sys
from pathlib import Path

import pytest

root = Path(__file__).resolve().parents[1]
sys.exit(pytest.main(["-q", str(root / "tests" / "test_acceptance.py")]))
