from .file_tools import write_output
from .ulid_tools import new_run_id

__all__ = ["new_run_id", "write_output"]
