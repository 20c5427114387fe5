"""
ihcalc Configuration Module

Centralizes all configuration constants and settings for the application.
"""
import os
from dataclasses import dataclass, field
from pathlib import Path


# ============================================================================
# Formats
# ============================================================================
COMMENT_CHAR = "#"
DEFAULT_OUTPUT_FORMAT = "text"
OUTPUT_FORMATS = ["text", "json"]


# ============================================================================
# Theory Instantiation
# ============================================================================
DEFAULT_SEED = 2014
AXIOM_SCALAR_RANGE = range(-3, 4)  # Fixed instances of parameterized families
AXIOM_RANDOM_DRAWS = 3
AXIOM_RANDOM_BOUND = 60  # Random scalars drawn from 4..AXIOM_RANDOM_BOUND, either sign


@dataclass
class TheoryConfig:
    """How parameterized axiom families are instantiated."""
    scalars: list[int] = field(default_factory=lambda: list(AXIOM_SCALAR_RANGE))
    random_draws: int = AXIOM_RANDOM_DRAWS
    random_bound: int = AXIOM_RANDOM_BOUND
    seed: int = DEFAULT_SEED
    workers: int = 1


# ============================================================================
# Paths
# ============================================================================
def get_config_dir() -> Path:
    """Get the configuration directory for ihcalc (for preferences)."""
    if os.getenv("IHCALC_CONFIG_DIR"):
        return Path(os.getenv("IHCALC_CONFIG_DIR"))

    if os.name == "posix":
        base = os.getenv("XDG_CONFIG_HOME", os.path.expanduser("~/.config"))
    else:
        base = os.getenv("APPDATA", os.path.expanduser("~/AppData/Roaming"))

    return Path(base) / "ihcalc"


# ============================================================================
# Logging Configuration
# ============================================================================
LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
LOG_DATE_FORMAT = "%Y-%m-%d %H:%M:%S"
DEFAULT_LOG_LEVEL = os.getenv("IHCALC_LOG_LEVEL", "WARNING")
