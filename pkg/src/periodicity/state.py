from __future__ import annotations

import hashlib
import logging
import os
from dataclasses import dataclass

from src.configs.config import STATE_FORMAT_TAG, STATE_FORMAT_VERSION
from src.core import CompleteReducer, SubstitutionMode, Theory
from src.errors import StateCorruption
from src.utils.helper import atomic_write_text

_HEADER_KEYS = ("theory", "p", "mode", "target", "done")


def _digest(body: bytes) -> str:
    return hashlib.sha256(body).hexdigest()


@dataclass(frozen=True)
class ScanState:
    """
    Checkpoint of a truncated reduction: ``coefficients`` holds ``target``
    entries, the first ``done`` of them balanced, the rest the working tail.
    """

    theory: Theory
    p: int
    mode: SubstitutionMode
    target: int
    done: int
    coefficients: tuple

    @classmethod
    def from_reducer(cls, reducer: CompleteReducer) -> "ScanState":
        return cls(
            theory=reducer.theory,
            p=reducer.p.value,
            mode=reducer.mode,
            target=reducer.order,
            done=reducer.position,
            coefficients=tuple(int(c) for c in reducer.work),
        )

    def to_reducer(self) -> CompleteReducer:
        return CompleteReducer.restore(
            self.theory, self.p, self.target, self.mode, self.done, self.coefficients
        )

    def dumps(self) -> str:
        lines = [
            f"{STATE_FORMAT_TAG} {STATE_FORMAT_VERSION}",
            f"theory={self.theory.value} p={self.p} mode={self.mode.value} "
            f"target={self.target} done={self.done}",
            *(str(c) for c in self.coefficients),
        ]
        body = "".join(line + "\n" for line in lines)
        return body + f"sha256={_digest(body.encode('ascii'))}\n"

    @classmethod
    def loads(cls, text: str) -> "ScanState":
        if not text.endswith("\n"):
            raise StateCorruption("state file is truncated (no final newline)")
        cut = text.rfind("sha256=", 0)
        if cut < 0 or (cut > 0 and text[cut - 1] != "\n"):
            raise StateCorruption("state file has no digest line")
        body, digest = text[:cut], text[cut + len("sha256="):].strip()
        if _digest(body.encode("ascii")) != digest:
            raise StateCorruption("state file digest does not match its content")

        lines = body.splitlines()
        if len(lines) < 2 or lines[0] != f"{STATE_FORMAT_TAG} {STATE_FORMAT_VERSION}":
            raise StateCorruption(f"unsupported state header {lines[:1]}")
        try:
            header = dict(item.split("=", 1) for item in lines[1].split())
            if set(header) != set(_HEADER_KEYS):
                raise ValueError(f"header keys {sorted(header)}")
            state = cls(
                theory=Theory.parse(header["theory"]),
                p=int(header["p"]),
                mode=SubstitutionMode.parse(header["mode"]),
                target=int(header["target"]),
                done=int(header["done"]),
                coefficients=tuple(int(line) for line in lines[2:]),
            )
        except ValueError as e:
            raise StateCorruption(f"malformed state file: {e}") from e
        if len(state.coefficients) != state.target or not 0 <= state.done <= state.target:
            raise StateCorruption(
                f"state holds {len(state.coefficients)} coefficients for target {state.target}, done {state.done}"
            )
        return state

    def save(self, path: str) -> None:
        atomic_write_text(path, self.dumps(), encoding="ascii")

    @classmethod
    def load(cls, path: str) -> "ScanState":
        with open(path, "r", encoding="ascii", newline="") as f:
            try:
                text = f.read()
            except UnicodeDecodeError as e:
                raise StateCorruption(f"{path} is not an ASCII state file") from e
        logging.info(f"Loaded state file {path}")
        return cls.loads(text)


def state_file_name(theory: Theory, p: int, mode: SubstitutionMode) -> str:
    return f"{Theory.parse(theory).value}_p{int(p)}_{SubstitutionMode.parse(mode).value}.state"


def state_path(directory: str, theory: Theory, p: int, mode: SubstitutionMode) -> str:
    return os.path.join(directory, state_file_name(theory, p, mode))
