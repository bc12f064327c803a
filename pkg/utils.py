"""
Utility Functions
-----------------
Logging setup, YAML config loading and small helpers shared by the features.
"""

import logging
import os
import sys
import time
from contextlib import contextmanager
from typing import Iterator, Tuple

import yaml

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"


def configure_logging(level: str = "WARNING", fmt: str = LOG_FORMAT) -> None:
    """
    Install a single stderr handler on the root logger.

    Calling it again replaces the previous handler.

    Args:
        level (str): Logging level name (DEBUG, INFO, WARNING, ...)
        fmt (str): Record format string
    """
    root = logging.getLogger()
    for handler in list(root.handlers):
        if getattr(handler, "_fermatdescent", False):
            root.removeHandler(handler)

    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter(fmt))
    handler._fermatdescent = True
    root.addHandler(handler)
    root.setLevel(level.upper())


def load_yaml_config(module_file: str, filename: str) -> dict:
    """
    Load a YAML file that lives next to the given module.

    Args:
        module_file (str): ``__file__`` of the calling module
        filename (str): Name of the YAML file in the same directory

    Returns:
        dict: Parsed configuration (empty dict for an empty file)
    """
    yaml_path = os.path.join(os.path.dirname(module_file), filename)
    with open(yaml_path, 'r') as file:
        return yaml.safe_load(file) or {}


def parse_nat(text: str, name: str = "value") -> Tuple[bool, str, int]:
    """
    Parse a decimal natural number from command-line text.

    Args:
        text (str): Raw argument
        name (str): Argument name used in the error message

    Returns:
        Tuple of (is_valid, error_message, value)
    """
    text = text.strip()
    if not (text.isascii() and text.isdigit()):
        return False, f"{name} must be a nonnegative integer, got {text!r}", 0
    return True, "", int(text)


@contextmanager
def stopwatch() -> Iterator[dict]:
    """Measure wall time of a block; the yielded dict gets ``elapsed_ms``."""
    timing = {"elapsed_ms": 0}
    start = time.perf_counter()
    try:
        yield timing
    finally:
        timing["elapsed_ms"] = int((time.perf_counter() - start) * 1000)
