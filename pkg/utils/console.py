"""
Status output for long-running commands.

Progress lines go to stderr and only when verbose output is enabled, so that
stdout carries nothing but command results.
"""

import sys

from config.settings import OntoCompConfig


def status(message: str, config: OntoCompConfig) -> None:
    if config.verbose:
        print(message, file=sys.stderr, flush=True)
