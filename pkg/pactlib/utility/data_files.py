from pathlib import Path

DATA_DIR = Path(__file__).resolve().parent.parent / "data"
TOY_ENVIRONMENT = DATA_DIR / "toy_logic.lean"
TOY_SCRIPTS = DATA_DIR / "toy_logic.script"
CONTAMINATION_PATTERNS = DATA_DIR / "contamination_patterns.txt"


def resolve_data_path(path: str) -> str:
    """Path as given when it exists, otherwise the bundled data file of that name if there is one"""

    if Path(path).exists():
        return path
    bundled = DATA_DIR / Path(path).name
    return str(bundled) if bundled.exists() else path
