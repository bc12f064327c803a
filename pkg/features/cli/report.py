"""
Reports and Output
------------------
SearchReport model and the two output formats: JSON lines (one compact
object per line, fixed key order) and text tables rendered with pandas.
"""
import json
from dataclasses import dataclass, field
from enum import Enum
from typing import IO, Iterable, List

import pandas as pd


class Task(str, Enum):
    DIO20 = "dio20"
    FLT4 = "flt4"
    PQ_SQUARE = "pq_square"
    RIGHT_TRIANGLE = "right_triangle"

    @classmethod
    def from_cli(cls, name: str) -> "Task":
        """Command-line spelling (pq-square) to task (pq_square)."""
        return cls(name.replace("-", "_"))


# Fields that describe the run rather than the search result.
RUN_METADATA = ("elapsed_ms", "jobs")


@dataclass(frozen=True)
class SearchReport:
    task: Task
    bound: int
    states_checked: int
    counterexamples: List[dict] = field(default_factory=list)
    elapsed_ms: int = 0
    jobs: int = 1

    def to_dict(self) -> dict:
        return {
            "task": self.task.value,
            "bound": self.bound,
            "states_checked": self.states_checked,
            "counterexamples": list(self.counterexamples),
            "elapsed_ms": self.elapsed_ms,
            "jobs": self.jobs,
        }

    def content(self) -> dict:
        """to_dict without run metadata; equal for any jobs value."""
        return {k: v for k, v in self.to_dict().items() if k not in RUN_METADATA}


def to_json_line(record: dict) -> str:
    return json.dumps(record, separators=(",", ":"), ensure_ascii=False)


def get_table_data(records: Iterable[dict]) -> pd.DataFrame:
    """
    Flatten records into a DataFrame for text output.
    List-valued fields are shown by their length.
    """
    rows = []
    for record in records:
        rows.append({
            key: len(value) if isinstance(value, list) else value
            for key, value in record.items()
        })
    return pd.DataFrame(rows)


def emit(records: List[dict], fmt: str, out: IO[str]) -> None:
    """
    Write records in the requested format.

    Args:
        records: Result objects, already in output order
        fmt (str): "json" for JSON lines, "text" for a table
        out: Destination stream
    """
    if fmt == "json":
        for record in records:
            out.write(to_json_line(record) + "\n")
        return

    if not records:
        out.write("(no results)\n")
        return
    out.write(get_table_data(records).to_string(index=False) + "\n")
