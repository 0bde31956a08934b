from __future__ import annotations

import csv
import json
import math
from typing import Iterable, List, Sequence

from domain.entities.resonance import ResonanceCatalog
from domain.entities.sweep import ResultTable
from domain.repositories.interfaces import IMetadataRepository, IOverlayRepository, IResultRepository
from domain.unit_of_work import IUnitOfWork
from helpers.exceptions.config_exceptions import OutputWriteException

NUMBER_FORMAT = "{:.11e}"
FLAGS_COLUMN = "flags"
OVERLAY_COLUMNS = ["kind", "n", "orientation", "x_intercept", "y_intercept", "slope"]


def format_number(value: float) -> str:
    """Scientific notation with 12 significant digits; non-finite values as nan/inf."""
    if math.isnan(value):
        return "nan"
    if math.isinf(value):
        return "inf" if value > 0 else "-inf"
    return NUMBER_FORMAT.format(value)


def header_lines(metadata: dict) -> List[str]:
    """One '# key = json' line per metadata entry, in key order."""
    return [
        f"# {key} = {json.dumps(metadata[key], sort_keys=True, default=str)}"
        for key in sorted(metadata)
    ]


def _write(path: str, lines: Iterable[str], rows: Iterable[Sequence[str]] = ()) -> None:
    """Raw lines first, then CSV rows quoted only where a field needs it."""
    try:
        with open(path, "w", encoding="utf-8", newline="") as handle:
            for line in lines:
                handle.write(line + "\n")
            csv.writer(handle, lineterminator="\n").writerows(rows)
    except OSError as exc:
        raise OutputWriteException(f"No s'ha pogut escriure '{path}': {exc}") from exc


class CsvResultRepository(IResultRepository):
    """Writes sweep tables as UTF-8 CSV with '#'-prefixed metadata lines."""

    def __init__(self, uow: IUnitOfWork):
        self.uow = uow

    def add(self, table: ResultTable, path: str) -> None:
        rows = [table.axis_names + table.columns + [FLAGS_COLUMN]]
        for row in table.rows:
            numbers = [format_number(v) for v in list(row.axis_values) + row.record(table.columns)]
            rows.append(numbers + [";".join(row.flags)])
        _write(self.uow.stage(path), header_lines(table.metadata), rows)


class CsvOverlayRepository(IOverlayRepository):
    """Writes resonance lines in the same conventions as the result tables."""

    def __init__(self, uow: IUnitOfWork):
        self.uow = uow

    def add(self, catalog: ResonanceCatalog, metadata: dict, path: str) -> None:
        rows = [OVERLAY_COLUMNS]
        for line in catalog.lines:
            rows.append([
                line.kind.value,
                str(line.n),
                line.orientation,
                format_number(line.x_intercept),
                format_number(line.y_intercept),
                format_number(line.slope),
            ])
        _write(self.uow.stage(path), header_lines(metadata), rows)


class JsonMetadataRepository(IMetadataRepository):
    def __init__(self, uow: IUnitOfWork):
        self.uow = uow

    def add(self, metadata: dict, path: str) -> None:
        _write(self.uow.stage(path), [json.dumps(metadata, sort_keys=True, indent=2, default=str)])
