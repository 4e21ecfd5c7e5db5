"""
Command-line subcommands package
Exports every subcommand module for registration on the main group
"""

from . import check, compute, inspection

__all__ = ["check", "compute", "inspection"]
