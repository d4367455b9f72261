"""Command-line interface for Turannical."""

from .parser import build_parser
from .commands import COMMANDS, run_command

__all__ = ["build_parser", "COMMANDS", "run_command"]
