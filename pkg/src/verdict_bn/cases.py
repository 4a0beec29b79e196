"""Case-audit records: CSV ingestion, round-trip serialization, tallies.

One record per audited judgment (the same case name may appear twice when a
case had two public-authority defendants). Missing values are explicit:
"-", "", "na", "not cons" and "not considered" all read as unknown, and
unknown is always written back as "-".

``summarize`` reproduces the audit's own tallying convention, which differs
from the learning path: breach columns fold unknown into "no", and the
but-for column keeps unknowns as a separate "not_considered" bucket.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from typing import Iterable

from .errors import BadHeader, BadToken

CSV_COLUMNS = (
    "case_id", "outcome", "duty_established", "duty_breached", "soc_breached",
    "butfor", "ameliorated", "jurisdiction", "authority_level",
    "risk_exists", "knowledge", "notes",
)

UNKNOWN = "unknown"
_UNKNOWN_TOKENS = {"-", "", "na", "not cons", "not considered"}

_YES_NO = {"yes": "yes", "no": "no"}
_OUTCOME = {"won": "won", "lost": "lost"}
_BUTFOR = {"succeeded": "succeeded", "failed": "failed"}
_AUTHORITY = {"l": "L", "s": "S", "f": "F"}


@dataclass(frozen=True)
class CaseRecord:
    """A single audited judgment in the audit-extract schema."""

    case_id: str
    outcome: str            # won | lost
    duty_established: str   # yes | no | unknown
    duty_breached: str      # yes | no | unknown
    soc_breached: str       # yes | no | unknown
    butfor: str             # succeeded | failed | unknown
    ameliorated: str        # yes | no | unknown
    jurisdiction: str       # state code, e.g. NSW, QLD, VIC, NT, SA
    authority_level: str    # L | S | F
    risk_exists: str        # yes | no | unknown
    knowledge: str          # yes | no | unknown
    notes: str = ""         # free text, ignored by learning


@dataclass(frozen=True)
class Dataset:
    """Ordered case records; order preserved from the source file."""

    records: tuple[CaseRecord, ...]

    def __len__(self) -> int:
        return len(self.records)

    def __iter__(self):
        return iter(self.records)


@dataclass(frozen=True)
class TotalsSummary:
    """Per-column tallies mirroring the audit's published TOTALS row.

    Every tally group sums to the record count: unknowns fold into "no"
    for the yes/no columns and into "not_considered" for the but-for column.
    """

    records: int
    outcome: dict[str, int]
    duty_established: dict[str, int]
    duty_breached: dict[str, int]
    soc_breached: dict[str, int]
    butfor: dict[str, int]
    ameliorated: dict[str, int]
    jurisdiction: dict[str, int]
    authority_level: dict[str, int]


def _map_token(raw: str, vocabulary: dict[str, str], allow_unknown: bool,
               row: int, column: str) -> str:
    token = raw.strip()
    lowered = token.lower()
    if lowered in _UNKNOWN_TOKENS:
        if allow_unknown:
            return UNKNOWN
        raise BadToken(f"row {row}, column {column!r}: value required, got {raw!r}")
    try:
        return vocabulary[lowered]
    except KeyError:
        expected = ", ".join(sorted(set(vocabulary.values())))
        raise BadToken(f"row {row}, column {column!r}: {raw!r} not one of {expected}") from None


def parse_case_csv(text: str) -> Dataset:
    """Parse UTF-8 CSV text with the audit-extract header into a Dataset."""
    reader = csv.DictReader(io.StringIO(text))
    header = reader.fieldnames or []
    missing = [c for c in CSV_COLUMNS if c not in header]
    if missing:
        raise BadHeader(f"missing required column(s): {', '.join(missing)}")
    records = []
    for row_number, row in enumerate(reader, start=2):
        case_id = (row["case_id"] or "").strip()
        if not case_id:
            raise BadToken(f"row {row_number}, column 'case_id': must be nonempty")
        records.append(CaseRecord(
            case_id=case_id,
            outcome=_map_token(row["outcome"], _OUTCOME, False, row_number, "outcome"),
            duty_established=_map_token(row["duty_established"], _YES_NO, True,
                                        row_number, "duty_established"),
            duty_breached=_map_token(row["duty_breached"], _YES_NO, True,
                                     row_number, "duty_breached"),
            soc_breached=_map_token(row["soc_breached"], _YES_NO, True,
                                    row_number, "soc_breached"),
            butfor=_map_token(row["butfor"], _BUTFOR, True, row_number, "butfor"),
            ameliorated=_map_token(row["ameliorated"], _YES_NO, True,
                                   row_number, "ameliorated"),
            jurisdiction=(row["jurisdiction"] or "").strip(),
            authority_level=_map_token(row["authority_level"], _AUTHORITY, False,
                                       row_number, "authority_level"),
            risk_exists=_map_token(row["risk_exists"], _YES_NO, True,
                                   row_number, "risk_exists"),
            knowledge=_map_token(row["knowledge"], _YES_NO, True,
                                 row_number, "knowledge"),
            notes=(row["notes"] or "").strip(),
        ))
    return Dataset(records=tuple(records))


def serialize_case_csv(ds: Dataset) -> str:
    """Inverse of parse_case_csv; unknown values are written as "-"."""
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for record in ds:
        cells = []
        for column in CSV_COLUMNS:
            value = getattr(record, column)
            cells.append("-" if value == UNKNOWN else value)
        writer.writerow(cells)
    return out.getvalue()


def _tally(values: Iterable[str], keys: tuple[str, ...], fold_unknown_into: str) -> dict[str, int]:
    counts = {k: 0 for k in keys}
    for v in values:
        counts[fold_unknown_into if v == UNKNOWN else v] += 1
    return counts


def summarize(ds: Dataset) -> TotalsSummary:
    """Tallies under the published convention (see module docstring)."""
    jurisdiction: dict[str, int] = {}
    for record in ds:
        jurisdiction[record.jurisdiction] = jurisdiction.get(record.jurisdiction, 0) + 1
    return TotalsSummary(
        records=len(ds),
        outcome=_tally((r.outcome for r in ds), ("won", "lost"), "lost"),
        duty_established=_tally((r.duty_established for r in ds), ("yes", "no"), "no"),
        duty_breached=_tally((r.duty_breached for r in ds), ("yes", "no"), "no"),
        soc_breached=_tally((r.soc_breached for r in ds), ("yes", "no"), "no"),
        butfor=_tally((r.butfor for r in ds), ("succeeded", "failed", "not_considered"),
                      "not_considered"),
        ameliorated=_tally((r.ameliorated for r in ds), ("yes", "no"), "no"),
        jurisdiction=jurisdiction,
        authority_level=_tally((r.authority_level for r in ds), ("L", "S", "F"), "F"),
    )
