"""
config.py

Configuration and environment variable loading for flipcount.
Handles enumeration caps, logging destinations, parallel worker settings and
the externally cited constants the bound evaluators build on.
"""

import os
import logging
import sys
from dotenv import load_dotenv

from stem.exceptions import ConfigError
from stem.models import Caps

# Set up logging for this module
logger = logging.getLogger(__name__)

load_dotenv()

# --- Enumeration caps ---
DEFAULT_CAPS = Caps()
CAP_KINDS = tuple(Caps.model_fields)


def parse_caps(text: str, base: Caps | None = None) -> Caps:
    """
    Parse a cap override string such as "pg=10,tri=12".

    Args:
        text (str): Comma-separated kind=value pairs; any subset of pg, tri, ps, mis.
        base (Caps | None): Caps to start from. Defaults to DEFAULT_CAPS.

    Returns:
        Caps: The merged caps.

    Raises:
        ConfigError: If any entry is malformed.
    """
    values = (base or DEFAULT_CAPS).model_dump()
    for entry in filter(None, (part.strip() for part in text.split(","))):
        kind, sep, raw = entry.partition("=")
        kind = kind.strip()
        if not sep or kind not in CAP_KINDS:
            raise ConfigError(f"unknown cap entry '{entry}' (expected one of {', '.join(CAP_KINDS)})")
        try:
            value = int(raw)
        except ValueError:
            raise ConfigError(f"cap '{kind}' needs an integer, got '{raw}'") from None
        if value <= 0:
            raise ConfigError(f"cap '{kind}' must be positive, got {value}")
        values[kind] = value
    return Caps(**values)


def load_caps_from_env() -> Caps:
    """Read FLIPCOUNT_CAPS, keeping defaults for every entry that does not parse."""
    raw = os.getenv("FLIPCOUNT_CAPS", "")
    caps = DEFAULT_CAPS
    for entry in filter(None, (part.strip() for part in raw.split(","))):
        try:
            caps = parse_caps(entry, caps)
        except ConfigError as e:
            logger.warning(f"Ignoring FLIPCOUNT_CAPS entry: {e}")
    return caps


CAPS = load_caps_from_env()

# --- Logging ---
LOG_LEVEL = os.getenv("FLIPCOUNT_LOG_LEVEL", "WARNING")
LOG_FILE = os.getenv("FLIPCOUNT_LOG_FILE") or None


def _int_env(key: str, default: int) -> int:
    raw = os.getenv(key)
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        logger.warning(f"{key}={raw!r} is not an integer, using {default}")
        return default


# --- Parallel mode ---
WORKERS = _int_env("FLIPCOUNT_WORKERS", 0)  # 0 lets the executor decide
SPLIT_DEPTH = _int_env("FLIPCOUNT_SPLIT_DEPTH", 6)
if SPLIT_DEPTH < 1:
    logger.warning(f"FLIPCOUNT_SPLIT_DEPTH={SPLIT_DEPTH} must be positive, using 6")
    SPLIT_DEPTH = 6

# --- Cited constants ---
# tri(N) < 30^N over all N-point sets
TRIANGULATION_BOUND_BASE = 30.0
# crossing-free spanning trees per point set, O(5.2852^N)
SPANNING_TREE_BASE = 5.2852

# Use tomllib if available (Python 3.11+), otherwise use tomli
if sys.version_info >= (3, 11):
    import tomllib
else:
    try:
        import tomli
    except ImportError:
        tomli = None


def get_app_version():
    """Reads the application version from pyproject.toml."""
    try:
        toml_path = os.path.join(os.path.dirname(os.path.abspath(__file__)), 'pyproject.toml')
        if sys.version_info >= (3, 11):
            with open(toml_path, "rb") as f:
                data = tomllib.load(f)
        elif tomli:
            with open(toml_path, "rb") as f:
                data = tomli.load(f)
        else:
            return "0.0.0-dev (tomli not installed)"
        return data["project"]["version"]
    except (FileNotFoundError, KeyError):
        return "0.0.0-dev (pyproject.toml not found)"


APP_VERSION = get_app_version()
