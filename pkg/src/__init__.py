"""
Root package. Importing it puts the repository root on sys.path, so that
`python -m src.isolation.cli.main` and the `isolate` script resolve
`src.isolation` and `src.utils` from any working directory.
"""

import sys
from pathlib import Path

REPO_ROOT = Path(__file__).parent.parent.resolve()
if str(REPO_ROOT) not in sys.path:
    sys.path.insert(0, str(REPO_ROOT))
