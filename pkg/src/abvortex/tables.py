"""ResultTable and its CSV / JSON file formats.

CSV: '#'-prefixed ``key: <json value>`` metadata lines, a ``units`` line, a
header row, then data rows.  Floats are written with 17 significant digits
in scientific notation.  JSON: ``{"metadata": {...}, "columns": [...],
"units": [...], "rows": [[...], ...]}``.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field


def format_value(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        if math.isnan(value):
            return "nan"
        if math.isinf(value):
            return "inf" if value > 0 else "-inf"
        return f"{value:.16e}"
    return str(value).replace(",", ";").replace("\n", " ")


def _json_value(value) -> str:
    if isinstance(value, float):
        return format_value(value) if math.isfinite(value) else "null"
    return json.dumps(value)


def _parse_value(text: str):
    for cast in (int, float):
        try:
            return cast(text)
        except ValueError:
            pass
    return text


@dataclass
class ResultTable:
    columns: list[str]
    units: list[str]
    rows: list[list] = field(default_factory=list)
    metadata: dict = field(default_factory=dict)

    def __post_init__(self):
        if len(self.units) != len(self.columns):
            raise ValueError("one unit per column")

    def append(self, row):
        row = list(row)
        if len(row) != len(self.columns):
            raise ValueError(f"row has {len(row)} values, schema has {len(self.columns)}")
        self.rows.append(row)

    def column(self, name):
        i = self.columns.index(name)
        return [row[i] for row in self.rows]

    def to_csv(self) -> str:
        lines = [f"# {key}: {json.dumps(self.metadata[key], sort_keys=True)}"
                 for key in sorted(self.metadata)]
        lines.append("# units: " + ",".join(self.units))
        lines.append(",".join(self.columns))
        lines += [",".join(format_value(v) for v in row) for row in self.rows]
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        rows = ",\n    ".join("[" + ", ".join(_json_value(v) for v in row) + "]"
                              for row in self.rows)
        return ("{\n"
                f'  "metadata": {json.dumps(self.metadata, sort_keys=True)},\n'
                f'  "columns": {json.dumps(self.columns)},\n'
                f'  "units": {json.dumps(self.units)},\n'
                f'  "rows": [\n    {rows}\n  ]\n'
                "}\n")

    def dumps(self, fmt: str) -> str:
        return self.to_json() if fmt == "json" else self.to_csv()

    @classmethod
    def from_csv(cls, text: str) -> "ResultTable":
        metadata, units, columns, rows = {}, [], None, []
        for line in text.splitlines():
            if line.startswith("# "):
                key, _, value = line[2:].partition(": ")
                if key == "units":
                    units = value.split(",")
                else:
                    metadata[key] = json.loads(value)
            elif columns is None:
                columns = line.split(",")
            elif line:
                rows.append([_parse_value(v) for v in line.split(",")])
        return cls(columns or [], units, rows, metadata)

    @classmethod
    def from_json(cls, text: str) -> "ResultTable":
        data = json.loads(text)
        rows = [[float("nan") if v is None else v for v in row] for row in data["rows"]]
        return cls(data["columns"], data["units"], rows, data["metadata"])

    @classmethod
    def loads(cls, text: str) -> "ResultTable":
        return cls.from_json(text) if text.lstrip().startswith("{") else cls.from_csv(text)
