import sys
from pathlib import Path


def write_output(text: str, out: Path | None) -> None:
    """Write text to `out`, creating parent directories, or to stdout when out is None."""
    if out is None:
        sys.stdout.write(text)
        return
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(text, encoding="utf-8")
