"""Access to packaged data files, with per-deployment overrides.

Every fixture (transition table, spot catalog, favorite-value lexicon,
scenario traces) ships inside the package; a configured ``data_dir`` may
shadow any of them by holding a file of the same name.
"""

from __future__ import annotations

from importlib.resources import as_file, files
from pathlib import Path

TRANSITION_TABLE = "transition_table.txt"
SPOT_CATALOG = "spots.tsv"
FV_LEXICON = "favorite_values.tsv"
FEELING_CHANGE_TRACE = "feeling_change_trace.txt"


def data_path(name: str, data_dir: Path | None = None) -> Path:
    """Resolve a data file: ``data_dir`` override first, else the packaged copy."""
    if data_dir is not None:
        override = Path(data_dir) / name
        if override.exists():
            return override
    resource = files("mindtour").joinpath("data").joinpath(name)
    with as_file(resource) as concrete:
        return Path(concrete)
