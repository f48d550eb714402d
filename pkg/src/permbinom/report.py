"""JSON / CSV reports for search and validation results.

Every report carries the field model (degree, reduction polynomial,
generator) because valid-coefficient integers only mean something relative
to it.  Field elements are written as lowercase 0x-prefixed hex.
"""
from __future__ import annotations

import csv
import io
import json
from pathlib import Path
from typing import Optional

from .field import FieldSpec
from .search import PBRecord
from .theorems import ValidationReport

CSV_COLUMNS = ["n", "i", "index", "linearized", "valid_count", "sample_a_hex", "theorem_tags"]


def _hex(x: Optional[int]) -> Optional[str]:
    return None if x is None else hex(x)


def _unhex(x: Optional[str]) -> Optional[int]:
    return None if x is None else int(x, 16)


def record_to_dict(r: PBRecord) -> dict:
    return {
        "n": r.n,
        "i": r.i,
        "index": r.index_d,
        "linearized": r.linearized,
        "valid_count": r.valid_count,
        "valid_a": [hex(a) for a in r.valid_a],
        "elided": r.elided,
        "valid_a_min": _hex(r.valid_a_min),
        "valid_a_max": _hex(r.valid_a_max),
        "theorem_tags": list(r.theorem_tags),
    }


def record_from_dict(d: dict) -> PBRecord:
    return PBRecord(
        n=d["n"], i=d["i"], index_d=d["index"], linearized=d["linearized"],
        valid_count=d["valid_count"], valid_a=[int(a, 16) for a in d["valid_a"]],
        elided=d["elided"], valid_a_min=_unhex(d["valid_a_min"]),
        valid_a_max=_unhex(d["valid_a_max"]), theorem_tags=list(d["theorem_tags"]),
    )


def to_json(spec: FieldSpec, records: list[PBRecord], extra: Optional[dict] = None) -> str:
    doc = {"field": spec.header(), "rows": [record_to_dict(r) for r in records]}
    if extra:
        doc.update(extra)
    return json.dumps(doc, indent=2) + "\n"


def to_csv(spec: FieldSpec, records: list[PBRecord]) -> str:
    buf = io.StringIO()
    h = spec.header()
    buf.write(f"# field n={h['n']} reduction_poly={h['reduction_poly']} generator={h['generator']}\n")
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for r in records:
        w.writerow([r.n, r.i, r.index_d, int(r.linearized), r.valid_count,
                    " ".join(hex(a) for a in r.valid_a), " ".join(r.theorem_tags)])
    return buf.getvalue()


def write_report(spec: FieldSpec, records: list[PBRecord], fmt: str, destination,
                 extra: Optional[dict] = None) -> Path:
    if fmt == "json":
        text = to_json(spec, records, extra)
    elif fmt == "csv":
        text = to_csv(spec, records)
    else:
        raise ValueError(f"unknown format {fmt!r}")
    path = Path(destination)
    try:
        path.write_text(text)
    except OSError as exc:
        raise OSError(f"cannot write report to {path}: {exc}") from exc
    return path


def parse_json(text: str) -> tuple[dict, list[PBRecord]]:
    doc = json.loads(text)
    return doc["field"], [record_from_dict(d) for d in doc["rows"]]


def parse_csv(text: str) -> tuple[dict, list[PBRecord]]:
    lines = text.splitlines()
    if not lines or not lines[0].startswith("# field "):
        raise ValueError("missing field-model header")
    header = dict(kv.split("=") for kv in lines[0][len("# field "):].split())
    header["n"] = int(header["n"])
    records = []
    for row in csv.DictReader(lines[1:]):
        valid = [int(a, 16) for a in row["sample_a_hex"].split()]
        count = int(row["valid_count"])
        records.append(PBRecord(
            n=int(row["n"]), i=int(row["i"]), index_d=int(row["index"]),
            linearized=row["linearized"] == "1", valid_count=count, valid_a=valid,
            elided=len(valid) != count,
            valid_a_min=valid[0] if valid and len(valid) == count else None,
            valid_a_max=valid[-1] if valid and len(valid) == count else None,
            theorem_tags=row["theorem_tags"].split(),
        ))
    return header, records


def read_report(path) -> tuple[dict, list[PBRecord]]:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise OSError(f"cannot read report {path}: {exc}") from exc
    return parse_csv(text) if path.suffix == ".csv" else parse_json(text)


def validation_extra(rep: ValidationReport) -> dict:
    c = rep.case
    return {"validation": {
        "case": c.tag, "m": c.m, "base_n": c.base_n, "exponent": c.exponent,
        "predicted_count": len(rep.predicted_set), "brute_count": len(rep.brute_set),
        "predicted_set": [hex(a) for a in rep.predicted_set],
        "brute_set": [hex(a) for a in rep.brute_set],
        "discrepancies": [hex(a) for a in rep.discrepancies],
        "verified": rep.verified, "elapsed_s": round(rep.elapsed, 4), "notes": rep.notes,
    }}
