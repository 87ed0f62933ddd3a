"""Regenerate the shipped fixture directory.

    python3 demos/make_fixtures.py [DIR]      (default: fixtures/ next to this repo's src)
"""

import sys
from pathlib import Path

from enrichcat.fixtures import write_fixture_dir

target = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).resolve().parent.parent / "fixtures"
for name in write_fixture_dir(target):
    print(target / name)
