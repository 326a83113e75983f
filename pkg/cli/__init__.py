"""
Command-line front end.
"""

from .commands import COMMAND_HANDLERS, main, run, setup_logging
from .parser import build_parser

__all__ = ['COMMAND_HANDLERS', 'build_parser', 'main', 'run', 'setup_logging']
