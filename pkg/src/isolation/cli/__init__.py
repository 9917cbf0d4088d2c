from .config import CliConfig, load_config
from .main import build_parser, main, run

__all__ = ["CliConfig", "build_parser", "load_config", "main", "run"]
