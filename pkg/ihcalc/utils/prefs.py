"""
User preferences: CLI defaults stored as JSON in the config directory.
"""
import json
from typing import Any

from .config import DEFAULT_OUTPUT_FORMAT, DEFAULT_SEED, OUTPUT_FORMATS, get_config_dir
from .exceptions import PreferenceError
from .helpers import setup_logger

logger = setup_logger(__name__)

DEFAULT_PREFS = {
    "output_format": DEFAULT_OUTPUT_FORMAT,
    "seed": DEFAULT_SEED,
    "workers": 1,
}


def _get_prefs_file():
    """Get the preferences file path (lazy evaluation)."""
    return get_config_dir() / "prefs.json"


def _valid(key: str, value: Any) -> bool:
    if key == "output_format":
        return value in OUTPUT_FORMATS
    if key == "seed":
        return isinstance(value, int) and not isinstance(value, bool)
    if key == "workers":
        return isinstance(value, int) and not isinstance(value, bool) and value >= 1
    return False


def load_prefs() -> dict[str, Any]:
    """
    Load user preferences merged over DEFAULT_PREFS.

    Unknown keys and ill-typed values are dropped; an unreadable file yields
    the defaults.
    """
    prefs_file = _get_prefs_file()
    if not prefs_file.exists():
        return DEFAULT_PREFS.copy()

    try:
        with open(prefs_file, "r") as f:
            stored = json.load(f)
    except (json.JSONDecodeError, OSError) as e:
        logger.warning(f"ignoring unreadable preferences {prefs_file}: {e}")
        return DEFAULT_PREFS.copy()

    if not isinstance(stored, dict):
        logger.warning(f"ignoring preferences {prefs_file}: not a JSON object")
        return DEFAULT_PREFS.copy()

    prefs = DEFAULT_PREFS.copy()
    for key, value in stored.items():
        if _valid(key, value):
            prefs[key] = value
        else:
            logger.debug(f"dropping preference {key}={value!r}")
    return prefs


def save_prefs(prefs: dict[str, Any]):
    """Save user preferences to JSON file."""
    prefs_file = _get_prefs_file()
    try:
        prefs_file.parent.mkdir(parents=True, exist_ok=True)
        with open(prefs_file, "w") as f:
            json.dump(prefs, f, indent=4)
    except OSError as e:
        logger.warning(f"could not save preferences: {e}")


def set_pref(key: str, text: str) -> dict[str, Any]:
    """
    Parse ``text`` as the value of ``key``, store it, and return the updated
    preferences.

    Raises:
        PreferenceError: for an unknown key or an unusable value
    """
    if key not in DEFAULT_PREFS:
        raise PreferenceError(f"unknown preference {key!r}, expected one of: {', '.join(DEFAULT_PREFS)}")
    value: Any = text
    if key != "output_format":
        try:
            value = int(text)
        except ValueError:
            raise PreferenceError(f"{key} must be an integer, got {text!r}") from None
    if not _valid(key, value):
        raise PreferenceError(f"invalid value for {key}: {text!r}")

    prefs = load_prefs()
    prefs[key] = value
    save_prefs(prefs)
    logger.debug(f"saved preference {key}={value!r}")
    return prefs
