from __future__ import annotations

import csv
import io
import json
from typing import Any, Optional, Sequence

from pydantic import BaseModel, ConfigDict, field_validator

from src.configs.config import TOOL_VERSION

from .helper import stringify_ints


class Timing(BaseModel):
    model_config = ConfigDict(frozen=True)

    elapsed_ms: str


class OutputEnvelope(BaseModel):
    """JSON result of every command. Integers travel as decimal strings."""

    model_config = ConfigDict(frozen=True)

    tool_version: str = TOOL_VERSION
    command: list[str]
    theory: Optional[str] = None
    p: Optional[str] = None
    offset: Optional[str] = None
    payload: Any = None
    timing: Optional[Timing] = None

    @field_validator("p", "offset", mode="before")
    @classmethod
    def _int_as_string(cls, value):
        return None if value is None else str(int(value))

    @field_validator("payload", mode="before")
    @classmethod
    def _stringify_payload(cls, value):
        return stringify_ints(value)

    def canonical_json(self) -> str:
        return json.dumps(
            self.model_dump(exclude={"timing"}), indent=2, sort_keys=True, ensure_ascii=False
        )

    def to_json(self) -> str:
        return json.dumps(self.model_dump(), indent=2, sort_keys=True, ensure_ascii=False)

    @classmethod
    def from_json(cls, text: str) -> "OutputEnvelope":
        return cls.model_validate_json(text)


def coefficients_csv(coefficients: Sequence[int], offset: int) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["index", "exponent", "coefficient"])
    for i, c in enumerate(coefficients):
        writer.writerow([i, offset + i, int(c)])
    return buffer.getvalue()


def coefficients_text(coefficients: Sequence[int], offset: int, generator: str) -> str:
    header = f"# coefficients of {generator}^({offset}+n), n = 0..{len(coefficients) - 1}"
    return header + "\n" + ", ".join(str(int(c)) for c in coefficients) + "\n"
