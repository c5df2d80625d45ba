"""Batch classification of cubics over an integer coefficient box.

Work is cut into (a, b) slabs, each slab is classified in coefficient order,
and slabs are merged in order, so the output never depends on scheduling.
"""

from __future__ import annotations

import csv
import io
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import product
from typing import Iterable, Iterator

from .cubicfield import ClassificationReport, classify_cubic
from .polycore import IntPoly, cubic_discriminant, irreducible_over_rationals, is_perfect_square

__all__ = ["ScanConfig", "ScanRecord", "ScanSummary", "run_scan", "summarize", "write_records"]


@dataclass(frozen=True)
class ScanConfig:
    a_range: tuple[int, int]
    b_range: tuple[int, int]
    c_range: tuple[int, int]
    d_range: tuple[int, int]
    require_irreducible: bool = False
    prefix_depth: int = 20
    workers: int = 1
    emit_skipped: bool = False

    def __post_init__(self):
        for name in ("a_range", "b_range", "c_range", "d_range"):
            lo, hi = getattr(self, name)
            if lo > hi:
                raise ValueError(f"{name} is empty: [{lo}, {hi}]")
        lo, hi = self.a_range
        if lo <= 0 <= hi:
            raise ValueError("a_range must exclude 0")
        if self.workers < 1:
            raise ValueError("workers must be at least 1")
        if self.prefix_depth < 0:
            raise ValueError("prefix_depth must be nonnegative")

    @property
    def size(self) -> int:
        n = 1
        for lo, hi in (self.a_range, self.b_range, self.c_range, self.d_range):
            n *= hi - lo + 1
        return n


@dataclass(frozen=True)
class ScanRecord:
    coeffs: tuple[int, int, int, int]
    report: ClassificationReport
    skipped: bool = False

    def to_dict(self) -> dict:
        out = self.report.to_dict(timing=False)
        out["skipped"] = self.skipped
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_dict(cls, data: dict) -> ScanRecord:
        data = dict(data)
        skipped = bool(data.pop("skipped", False))
        report = ClassificationReport.from_dict(data)
        return cls(tuple(report.poly.coeffs), report, skipped)


@dataclass
class ScanSummary:
    total: int = 0
    emitted: int = 0
    square_disc: int = 0
    irreducible: int = 0
    common_tails_true: int = 0
    common_tails_false: int = 0
    skipped: int = 0

    def add(self, rec: ScanRecord):
        self.emitted += 1
        rep = rec.report
        if rec.skipped:
            self.skipped += 1
            return
        self.square_disc += 1
        if rep.irreducible:
            self.irreducible += 1
        if rep.common_tails is True:
            self.common_tails_true += 1
        elif rep.common_tails is False:
            self.common_tails_false += 1

    def to_dict(self) -> dict:
        return dict(self.__dict__)


def _classify_one(coeffs, cfg: ScanConfig) -> ScanRecord | None:
    p = IntPoly(coeffs)
    disc = cubic_discriminant(p)
    root = is_perfect_square(disc)
    # Zero discriminant means a repeated root, hence reducible: treat as skipped.
    keep = bool(root)
    if keep and cfg.require_irreducible and not irreducible_over_rationals(p):
        keep = False
    if keep:
        return ScanRecord(tuple(coeffs), classify_cubic(p, cfg.prefix_depth))
    if not cfg.emit_skipped:
        return None
    rep = ClassificationReport(p, disc, root, irreducible_over_rationals(p))
    return ScanRecord(tuple(coeffs), rep, skipped=True)


def _slab(args) -> list[ScanRecord]:
    a, b, cfg = args
    out = []
    for c in range(cfg.c_range[0], cfg.c_range[1] + 1):
        for d in range(cfg.d_range[0], cfg.d_range[1] + 1):
            rec = _classify_one((a, b, c, d), cfg)
            if rec is not None:
                out.append(rec)
    return out


def run_scan(cfg: ScanConfig) -> Iterator[ScanRecord]:
    """Yield records in lexicographic coefficient order."""
    slabs = [
        (a, b, cfg)
        for a, b in product(range(cfg.a_range[0], cfg.a_range[1] + 1), range(cfg.b_range[0], cfg.b_range[1] + 1))
    ]
    if cfg.workers == 1:
        for s in slabs:
            yield from _slab(s)
        return
    with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
        for recs in pool.map(_slab, slabs):
            yield from recs


def summarize(records: Iterable[ScanRecord], total: int = 0) -> ScanSummary:
    s = ScanSummary(total=total)
    for r in records:
        s.add(r)
    return s


CSV_FIELDS = ["a", "b", "c", "d", "disc", "disc_sqrt", "irreducible", "matrix", "ad", "common_tails", "skipped", "cf_prefixes"]


def _csv_cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def _csv_row(rec: ScanRecord) -> list[str]:
    d = rec.to_dict()
    matrix = "" if d["matrix"] is None else " ".join(map(str, d["matrix"]))
    prefixes = "|".join(" ".join(map(str, t)) for t in d["cf_prefixes"])
    vals = list(rec.coeffs) + [d["disc"], d["disc_sqrt"], d["irreducible"], matrix, d["ad"], d["common_tails"], d["skipped"], prefixes]
    return [_csv_cell(v) for v in vals]


def write_records(records: Iterable[ScanRecord], stream, fmt: str = "json") -> ScanSummary:
    """Write JSON lines or CSV; returns summary counts over what was written."""
    summary = ScanSummary()
    if fmt == "json":
        for rec in records:
            stream.write(rec.to_json() + "\n")
            summary.add(rec)
    elif fmt == "csv":
        w = csv.writer(stream, lineterminator="\n")
        w.writerow(CSV_FIELDS)
        for rec in records:
            w.writerow(_csv_row(rec))
            summary.add(rec)
    else:
        raise ValueError(f"unknown format {fmt!r}")
    return summary


def scan_to_string(cfg: ScanConfig, fmt: str = "json") -> str:
    buf = io.StringIO()
    write_records(run_scan(cfg), buf, fmt)
    return buf.getvalue()
