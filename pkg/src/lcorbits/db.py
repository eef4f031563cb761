"""JSON-lines orbit database and CSV table export."""

from __future__ import annotations

import csv
import io
import json
from typing import Iterable, TextIO

from .canon import canonical_form
from .formats import from_graph6, to_graph6
from .orbit import ClassificationTable, OrbitRecord

FIELDS = ("n", "rep_graph6", "orbit_size", "distance", "lambda", "log2_par",
          "weight_dist", "connected")


class DatabaseError(ValueError):
    pass


def record_to_json(r: OrbitRecord) -> str:
    doc = {
        "n": r.n,
        "rep_graph6": to_graph6(r.rep.graph),
        "orbit_size": r.orbit_size,
        "distance": r.distance,
        "lambda": r.lam,
        "log2_par": r.log2_par,
        "weight_dist": list(r.weight_dist),
        "connected": r.connected,
    }
    return json.dumps(doc, separators=(",", ":"))


def record_from_json(line: str, lineno: int | None = None) -> OrbitRecord:
    try:
        doc = json.loads(line)
        g = from_graph6(doc["rep_graph6"])
        rep = canonical_form(g)
        if rep.graph != g:
            raise DatabaseError(f"line {lineno}: representative is not canonical")
        if doc["log2_par"] != doc["lambda"]:
            raise DatabaseError(f"line {lineno}: log2_par differs from lambda")
        return OrbitRecord(
            n=int(doc["n"]),
            rep=rep,
            orbit_size=int(doc["orbit_size"]),
            distance=int(doc["distance"]),
            lam=int(doc["lambda"]),
            weight_dist=tuple(int(x) for x in doc["weight_dist"]),
            connected=bool(doc["connected"]),
        )
    except (KeyError, ValueError, TypeError) as e:
        if isinstance(e, DatabaseError):
            raise
        raise DatabaseError(f"line {lineno}: {e}") from None


def sort_key(r: OrbitRecord):
    return (r.n, r.rep.cert)


def write_records(records: Iterable[OrbitRecord], fh: TextIO):
    for r in sorted(records, key=sort_key):
        fh.write(record_to_json(r) + "\n")


def read_records(fh: TextIO) -> list[OrbitRecord]:
    out = []
    for k, line in enumerate(fh, 1):
        if line.strip():
            out.append(record_from_json(line, k))
    return out


def load_db(path) -> dict[int, list[OrbitRecord]]:
    with open(path) as fh:
        recs = read_records(fh)
    out: dict[int, list[OrbitRecord]] = {}
    for r in recs:
        out.setdefault(r.n, []).append(r)
    return out


TABLE_NAMES = ("counts", "distance", "par", "lambda")


def tables_csv(tabs: list[ClassificationTable], which=TABLE_NAMES) -> str:
    """The four classification tables as CSV blocks, each after a '#' title."""
    unknown = set(which) - set(TABLE_NAMES)
    if unknown:
        raise DatabaseError(f"unknown tables {sorted(unknown)}; choose from {TABLE_NAMES}")
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    if "counts" in which:
        buf.write("# counts: inequivalent indecomposable (i_n) and total (t_n) codes\n")
        w.writerow(["n", "i_n", "t_n"])
        for t in tabs:
            w.writerow([t.n, t.i_n, t.t_n])
        buf.write("\n")
    ds = sorted({d for t in tabs for d in t.by_distance})
    if "distance" in which:
        buf.write("# distance: indecomposable codes by distance\n")
        w.writerow(["d"] + [t.n for t in tabs])
        for d in ds:
            w.writerow([d] + [t.by_distance.get(d, "") for t in tabs])
        w.writerow(["total"] + [t.i_n for t in tabs])
        buf.write("\n")
    if "par" in which:
        pars = sorted({p for t in tabs for p in t.par_hist})
        buf.write("# par: orbits by PAR_IHN\n")
        w.writerow(["n"] + pars)
        for t in tabs:
            w.writerow([t.n] + [t.par_hist.get(p, "") for p in pars])
        buf.write("\n")
    if "lambda" in which:
        buf.write("# lambda: range of lambda by distance\n")
        w.writerow(["d"] + [t.n for t in tabs])
        for d in ds:
            cells = []
            for t in tabs:
                lo_hi = t.lambda_range.get(d)
                if lo_hi is None:
                    cells.append("")
                elif lo_hi[0] == lo_hi[1]:
                    cells.append(str(lo_hi[0]))
                else:
                    cells.append(f"{lo_hi[0]}-{lo_hi[1]}")
            w.writerow([d] + cells)
        buf.write("\n")
    return buf.getvalue()
