"""
Run configuration package.
Merges the JSON defaults, an optional user file and command-line flags.
"""

from .run_config import COMMANDS, RunConfig, load_run_config

__all__ = ['COMMANDS', 'RunConfig', 'load_run_config']
