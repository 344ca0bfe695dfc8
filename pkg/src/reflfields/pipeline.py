"""Enumeration of imaginary quadratic fields admissible for Bianchi reflection groups.

For each negative fundamental discriminant below the limit the covolume
floor

    |d|^{3/2} zeta_k(2) / (8 pi^2 h2)

is compared against the reflection-group covolume ceiling 128 pi^2. Fields
whose floor already exceeds the ceiling with ``zeta_k(2) >= 1`` are rejected
before any L-series work.
"""

from __future__ import annotations

import enum
import logging
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace

from .bounds import COVOLUME_CEILING
from .classgroup import ClassGroupSummary, is_power_of_two, two_class_data
from .lfunc import DEFAULT_MULTIPLIER, PI_SQUARED, ZETA_TWO, RealBracket, dedekind_zeta_two
from .numtheory import (
    FundamentalDiscriminant,
    as_discriminant,
    enumerate_fundamental_discriminants,
)

log = logging.getLogger(__name__)

PAPER_LIMIT = 100_000
EXPECTED_ADMISSIBLE = 882
EXPECTED_MAX_ABS_D = 9240
EXPECTED_VINBERG = 330

_EIGHT_PI_SQUARED = 8 * PI_SQUARED
# zeta_k(2) = zeta(2) L(2, chi) <= zeta(2)^2, used for fields never sent to the L-series
A_PRIORI_ZETA = RealBracket(1.0, (ZETA_TWO * ZETA_TWO).hi)


class H2Definition(str, enum.Enum):
    GENUS_NUMBER = "genus_number"
    SYLOW2_ORDER = "sylow2_order"

    @classmethod
    def parse(cls, value) -> H2Definition:
        if isinstance(value, cls):
            return value
        aliases = {"genus": cls.GENUS_NUMBER, "sylow2": cls.SYLOW2_ORDER}
        return aliases.get(value) or cls(value)


def select_h2(summary: ClassGroupSummary, h2_definition) -> int:
    if H2Definition.parse(h2_definition) is H2Definition.GENUS_NUMBER:
        return summary.genus_number
    return summary.sylow2_order


@dataclass(frozen=True)
class FieldRecord:
    d: FundamentalDiscriminant
    summary: ClassGroupSummary
    h2: int
    zeta2: RealBracket
    volume_floor: RealBracket
    admissible: bool
    borderline: bool
    prefiltered: bool
    vinberg_candidate: bool = False


@dataclass
class EnumerationReport:
    h2_definition: H2Definition
    limit: int
    ceiling: float
    admissible_count: int = 0
    max_admissible_abs_d: int = 0
    vinberg_count: int = 0
    borderline_count: int = 0
    records: list[FieldRecord] = field(default_factory=list)

    def admissible(self) -> list[FieldRecord]:
        return [r for r in self.records if r.admissible]

    def vinberg_candidates(self) -> list[FieldRecord]:
        return [r for r in self.records if r.vinberg_candidate]


def prefilter_floor(d, h2: int) -> float:
    """Covolume floor with ``zeta_k(2)`` replaced by its lower bound 1 (plain float)."""
    fd = as_discriminant(d)
    return fd.abs_d**1.5 / (8 * math.pi**2 * h2)


def _scale(fd: FundamentalDiscriminant, h2: int, zeta2: RealBracket) -> RealBracket:
    root = math.sqrt(fd.abs_d)
    root = RealBracket(math.nextafter(root, -math.inf), math.nextafter(root, math.inf))
    return float(fd.abs_d) * root * zeta2 / (_EIGHT_PI_SQUARED * h2)


def volume_floor(d, h2: int, multiplier: int = DEFAULT_MULTIPLIER) -> RealBracket:
    """Bracket for |d|^{3/2} zeta_k(2) / (8 pi^2 h2)."""
    if h2 < 1:
        raise ValueError(f"h2 must be >= 1, got {h2}")
    fd = as_discriminant(d)
    return _scale(fd, h2, dedekind_zeta_two(fd, multiplier))


def evaluate_field(
    d,
    h2_definition=H2Definition.GENUS_NUMBER,
    multiplier: int = DEFAULT_MULTIPLIER,
    ceiling: float = COVOLUME_CEILING,
    use_prefilter: bool = True,
) -> FieldRecord:
    fd = as_discriminant(d)
    summary = two_class_data(fd)
    h2 = select_h2(summary, h2_definition)
    rough = _scale(fd, h2, A_PRIORI_ZETA)
    if use_prefilter and rough.lo > ceiling:
        zeta2, floor, prefiltered = A_PRIORI_ZETA, rough, True
    else:
        zeta2 = dedekind_zeta_two(fd, multiplier)
        floor, prefiltered = _scale(fd, h2, zeta2), False
    admissible = floor.lo <= ceiling
    borderline = floor.lo <= ceiling < floor.hi
    return FieldRecord(
        d=fd,
        summary=summary,
        h2=h2,
        zeta2=zeta2,
        volume_floor=floor,
        admissible=admissible,
        borderline=borderline,
        prefiltered=prefiltered,
    )


def _evaluate_chunk(ds, h2_definition, multiplier, ceiling):
    return [evaluate_field(d, h2_definition, multiplier, ceiling) for d in ds]


def _chunks(items, n):
    size = max(1, math.ceil(len(items) / n))
    return [items[i : i + size] for i in range(0, len(items), size)]


def tally(report: EnumerationReport) -> EnumerationReport:
    adm = report.admissible()
    report.admissible_count = len(adm)
    report.max_admissible_abs_d = max((r.d.abs_d for r in adm), default=0)
    report.borderline_count = sum(r.borderline for r in report.records)
    report.vinberg_count = sum(r.vinberg_candidate for r in report.records)
    return report


def enumerate_admissible(
    limit: int = PAPER_LIMIT,
    h2_definition=H2Definition.GENUS_NUMBER,
    workers: int = 1,
    multiplier: int = DEFAULT_MULTIPLIER,
    ceiling: float = COVOLUME_CEILING,
) -> EnumerationReport:
    """Evaluate every negative fundamental discriminant with ``|d| < limit``.

    ``workers > 1`` fans the discriminants out over a process pool; the
    merged records are always sorted by ``|d|``.
    """
    h2_definition = H2Definition.parse(h2_definition)
    fds = enumerate_fundamental_discriminants(limit)
    ds = [fd.d for fd in fds]
    if workers is None:
        workers = os.cpu_count() or 1
    if workers <= 1 or len(ds) < 2:
        records = _evaluate_chunk(ds, h2_definition, multiplier, ceiling)
    else:
        chunks = _chunks(ds, workers * 4)
        with ProcessPoolExecutor(workers) as pool:
            parts = pool.map(
                _evaluate_chunk,
                chunks,
                [h2_definition] * len(chunks),
                [multiplier] * len(chunks),
                [ceiling] * len(chunks),
            )
            records = [r for part in parts for r in part]
    records.sort(key=lambda r: r.d.abs_d)
    report = tally(
        EnumerationReport(
            h2_definition=h2_definition, limit=limit, ceiling=ceiling, records=records
        )
    )
    if report.borderline_count:
        log.warning(
            "%d fields have volume brackets straddling the ceiling", report.borderline_count
        )
    return report


def vinberg_filter(report: EnumerationReport) -> EnumerationReport:
    """Mark admissible fields whose class number is a power of two."""
    records = [
        replace(r, vinberg_candidate=r.admissible and is_power_of_two(r.summary.h))
        for r in report.records
    ]
    out = replace(report, records=records)
    return tally(out)


@dataclass(frozen=True)
class Check:
    name: str
    expected: object
    observed: object
    passed: bool
    skipped: bool = False

    def line(self) -> str:
        if self.skipped:
            status = "SKIP"
        else:
            status = "PASS" if self.passed else "FAIL"
        return f"[{status}] {self.name}: expected {self.expected}, observed {self.observed}"


def internal_checks(report: EnumerationReport) -> list[Check]:
    recs = report.records
    sorted_ok = all(a.d.abs_d < b.d.abs_d for a, b in zip(recs, recs[1:]))
    gauss_ok = all(r.summary.ambiguous_count == r.summary.genus_number for r in recs)
    vin_ok = all(
        (not r.vinberg_candidate) or (r.admissible and is_power_of_two(r.summary.h))
        for r in recs
    )
    prefilter_ok = all(r.volume_floor.lo > report.ceiling for r in recs if r.prefiltered)
    zeta_ok = all(r.zeta2.lo >= 1.0 for r in recs)
    return [
        Check("records sorted by |d|", True, sorted_ok, sorted_ok),
        Check("ambiguous forms = 2^(t-1)", True, gauss_ok, gauss_ok),
        Check("Vinberg candidates admissible with h = 2^k", True, vin_ok, vin_ok),
        Check("prefiltered floors above ceiling", True, prefilter_ok, prefilter_ok),
        Check("zeta_k(2) lower endpoints >= 1", True, zeta_ok, zeta_ok),
        Check(
            "borderline_count",
            0,
            report.borderline_count,
            report.borderline_count == 0,
        ),
    ]


def verify_report(report: EnumerationReport) -> list[Check]:
    """Compare a report against the published counts plus internal invariants.

    The count anchors only make sense for the full ``|d| < 10^5`` range; on
    other limits they are returned as skipped.
    """
    skip = report.limit != PAPER_LIMIT
    anchors = [
        ("admissible_count", EXPECTED_ADMISSIBLE, report.admissible_count),
        ("max_admissible_abs_d", EXPECTED_MAX_ABS_D, report.max_admissible_abs_d),
        ("vinberg_count", EXPECTED_VINBERG, report.vinberg_count),
    ]
    checks = [
        Check(name, exp, obs, (not skip) and exp == obs, skipped=skip)
        for name, exp, obs in anchors
    ]
    return checks + internal_checks(report)
