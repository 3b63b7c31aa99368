import json
import os

from src.configs.path_config import REFERENCE_DIR, RESULTS_DIR, default_state_dir
from src.utils.helper import atomic_write_text, load_reference, save_json


def test_state_dir_follows_environment(monkeypatch, tmp_path):
    monkeypatch.setenv("KRED_STATE_DIR", str(tmp_path))
    assert default_state_dir() == str(tmp_path)
    monkeypatch.delenv("KRED_STATE_DIR")
    assert default_state_dir() == os.path.join(RESULTS_DIR, "state")


def test_reference_data_loads():
    assert os.path.exists(os.path.join(REFERENCE_DIR, "paper_data.yaml"))
    data = load_reference("paper_data")
    assert {"formulas", "series", "reductions", "identities", "periods"} <= set(data)


def test_atomic_write_leaves_no_temporaries(tmp_path):
    path = tmp_path / "nested" / "out.txt"
    atomic_write_text(str(path), "a\n")
    assert path.read_text(encoding="utf-8") == "a\n"
    assert os.listdir(path.parent) == ["out.txt"]


def test_save_json_writes_indented_json(tmp_path):
    path = tmp_path / "reports.json"
    save_json({"p": "7"}, str(path))
    with open(path, encoding="utf-8") as f:
        assert json.load(f) == {"p": "7"}
    assert path.read_text(encoding="utf-8").endswith("}\n")
