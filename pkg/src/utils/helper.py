import json
import logging
import os
import tempfile
from functools import lru_cache

import yaml

from src.configs.path_config import REFERENCE_DIR


@lru_cache(maxsize=None)
def _load_yaml(path: str) -> dict:
    with open(path, "r", encoding="utf-8") as f:
        return yaml.safe_load(f)


def load_reference(name: str) -> dict:
    reference_path = os.path.join(REFERENCE_DIR, f"{name}.yaml")

    if not os.path.exists(reference_path):
        raise FileNotFoundError(f"Reference data file not found: {reference_path}")

    return _load_yaml(os.path.abspath(reference_path))


def atomic_write_text(path: str, content: str, encoding: str = "utf-8"):
    directory = os.path.dirname(os.path.abspath(path))
    os.makedirs(directory, exist_ok=True)
    fd, tmp_path = tempfile.mkstemp(dir=directory, prefix=".tmp-", suffix=os.path.basename(path))
    try:
        with os.fdopen(fd, "w", encoding=encoding, newline="") as f:
            f.write(content)
        os.replace(tmp_path, path)
    except BaseException:
        if os.path.exists(tmp_path):
            os.remove(tmp_path)
        raise
    logging.info(f"Output has been written to {path}")


def save_json(data, path):
    atomic_write_text(path, json.dumps(data, indent=2, ensure_ascii=False) + "\n")


def stringify_ints(value):
    """Recursively turn ints into decimal strings (bools left alone)."""
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, int):
        return str(value)
    if isinstance(value, dict):
        return {k: stringify_ints(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [stringify_ints(v) for v in value]
    return value
