"""Access to the data files bundled with the package."""

from __future__ import annotations

from importlib import resources
from pathlib import Path

LEXICON_FILE = "lexicon.tsv"
RULES_FILE = "rules.txt"
GOLD_FILE = "gold.tsv"


def bundled_path(name: str) -> Path:
    """Filesystem path of a bundled data file."""
    return Path(str(resources.files(__package__).joinpath("data", name)))
