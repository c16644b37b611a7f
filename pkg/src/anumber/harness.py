"""Parameter sweeps that cross-check every independent computation path.

A sweep grid is primes x families x k-range x patterns.  A pattern fixes
how m sits against p ("sp+1" and "sp-1" for family A, "sp" for family
B); each k expands to the s values the closed-form rules cover: s = 2k+1
for every pattern, plus s = 2k (k >= 1) for the two family-A patterns,
whose even-parity rules exist.  Every surviving (family, p, pattern, s)
point is evaluated through all redundant paths:

    sparse and dense coefficient expansions (must agree entry for entry),
    matrix rank, action-transpose rank, congruence rank (must all agree),
    and the closed-form prediction (must equal genus - rank).

Points that fail curve validation become skip records with the reason;
a mismatch is reported, never fatal -- the sweep's job includes finding
out whether the closed forms fail anywhere in range.

Grid points are independent work units and may be evaluated in parallel;
results are merged in the deterministic (family, p, m) order, so output
is byte-identical regardless of the thread count.
"""

from __future__ import annotations

import csv
import io
import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Sequence

from .cartier import (
    cartier_action_on_basis,
    cartier_matrix,
    rank_mod_p,
    rank_of_rows,
)
from .closedform import TheoremPrediction, congruence_rank, predicted_a
from .curves import (
    CurveSpec,
    CurveValidationError,
    CurveFamily,
    Family,
    Strategy,
    half_power_coeffs,
    make_curve,
)
from .ffpoly import LimitExceededError, Prime

PATTERNS = ("sp+1", "sp-1", "sp")

_PATTERN_FAMILY = {"sp+1": Family.A, "sp-1": Family.A, "sp": Family.B}
_PATTERN_OFFSET = {"sp+1": +1, "sp-1": -1, "sp": 0}

#: CSV column order; also the field order of JSON report objects.
REPORT_COLUMNS = (
    "family", "p", "m", "s", "k", "genus", "rank", "a_number",
    "congruence_rank", "predicted_a", "theorem", "match", "paths_agree",
)

Predictor = Callable[[CurveSpec], "TheoremPrediction | None"]


@dataclass(frozen=True)
class SweepGrid:
    """Primes x families x inclusive k-range x pattern subset."""

    primes: tuple[Prime, ...]
    families: tuple[Family, ...]
    k_range: tuple[int, int]
    pattern_set: tuple[str, ...] = PATTERNS

    def __post_init__(self):
        if not self.primes:
            raise ValueError("grid needs at least one prime")
        if not self.families:
            raise ValueError("grid needs at least one family")
        for fam in self.families:
            if fam not in (Family.A, Family.B):
                raise ValueError(f"grid families must be A or B, got {fam}")
        lo, hi = self.k_range
        if lo < 0 or hi < lo:
            raise ValueError(f"bad k range {lo}..{hi}")
        if not self.pattern_set:
            raise ValueError("grid needs at least one pattern")
        for pat in self.pattern_set:
            if pat not in PATTERNS:
                raise ValueError(f"unknown pattern {pat!r}")


@dataclass(frozen=True)
class GridPoint:
    family: Family
    p: Prime
    pattern: str
    s: int
    k: int
    m: int


@dataclass(frozen=True)
class ANumberReport:
    """One curve's results across every computation path."""

    family: str
    p: int
    m: int
    s: int | None
    k: int | None
    genus: int
    rank: int
    a_number: int
    congruence_rank: int | None
    predicted_a: int | None
    theorem: str | None
    match: bool
    paths_agree: bool


@dataclass(frozen=True)
class SkipRecord:
    """A grid point that failed curve validation, with the reason."""

    family: str
    p: int
    m: int
    s: int
    k: int
    pattern: str
    reason: str


@dataclass(frozen=True)
class SweepResult:
    reports: tuple[ANumberReport, ...]
    skips: tuple[SkipRecord, ...]


@dataclass(frozen=True)
class VerifyResult:
    mismatches: tuple[ANumberReport, ...]
    exit_status: int
    sweep: SweepResult


def expand_grid(grid: SweepGrid) -> list[GridPoint]:
    """Expanded, deterministically ordered grid points.

    Sorted by (family, p, m); distinct points always yield distinct m
    for a given family and prime, so the order is total.
    """
    points = []
    for family in grid.families:
        for p in grid.primes:
            for pattern in grid.pattern_set:
                if _PATTERN_FAMILY[pattern] is not family:
                    continue
                offset = _PATTERN_OFFSET[pattern]
                lo, hi = grid.k_range
                for k in range(lo, hi + 1):
                    s_values = [2 * k + 1]
                    if pattern != "sp" and k >= 1:
                        s_values.append(2 * k)
                    for s in s_values:
                        points.append(GridPoint(
                            family=family, p=p, pattern=pattern,
                            s=s, k=k, m=s * p.value + offset,
                        ))
    points.sort(key=lambda pt: (pt.family.value, pt.p.value, pt.m))
    return points


def evaluate_curve(spec: CurveSpec, s: int | None = None, k: int | None = None,
                   predictor: Predictor = predicted_a) -> ANumberReport:
    """Compute one report, running every path the curve supports.

    Family curves run both coefficient expansions and all three rank
    paths; generic curves have no sparse expansion and no congruence
    count, so paths_agree covers the matrix and action ranks only.
    """
    is_family = spec.family.tag is not Family.GENERIC
    p = spec.p.value
    if is_family:
        coeffs_sparse = half_power_coeffs(spec, Strategy.SPARSE)
        coeffs_dense = half_power_coeffs(spec, Strategy.DENSE)
        coeffs_agree = coeffs_sparse == coeffs_dense
        matrix = cartier_matrix(spec, coeffs_sparse)
        action = cartier_action_on_basis(spec, coeffs_dense)
    else:
        coeffs_dense = half_power_coeffs(spec, Strategy.DENSE)
        coeffs_agree = True
        matrix = cartier_matrix(spec, coeffs_dense)
        action = cartier_action_on_basis(spec, coeffs_dense)

    rank = rank_mod_p(matrix)
    action_rank = rank_of_rows(action, p)
    a = spec.g - rank

    if is_family:
        crank = congruence_rank(spec)
        paths_agree = coeffs_agree and rank == action_rank == crank
        prediction = predictor(spec)
    else:
        crank = None
        paths_agree = rank == action_rank
        prediction = None

    if prediction is not None and s is None:
        s, k = prediction.s, prediction.k
    return ANumberReport(
        family=spec.family.tag.value,
        p=p,
        m=spec.d,
        s=s,
        k=k,
        genus=spec.g,
        rank=rank,
        a_number=a,
        congruence_rank=crank,
        predicted_a=None if prediction is None else prediction.predicted_a,
        theorem=None if prediction is None else prediction.theorem_id,
        match=prediction is None or prediction.predicted_a == a,
        paths_agree=paths_agree,
    )


def _evaluate_point(point: GridPoint,
                    predictor: Predictor) -> ANumberReport | SkipRecord:
    try:
        spec = make_curve(point.p, CurveFamily(point.family, m=point.m))
        return evaluate_curve(spec, s=point.s, k=point.k, predictor=predictor)
    except CurveValidationError as err:
        reason = err.reason
    except LimitExceededError:
        reason = "limit-exceeded"
    return SkipRecord(
        family=point.family.value, p=point.p.value, m=point.m,
        s=point.s, k=point.k, pattern=point.pattern, reason=reason,
    )


def sweep(grid: SweepGrid, threads: int | None = None,
          predictor: Predictor = predicted_a) -> SweepResult:
    """Evaluate every grid point; returns reports plus skip records.

    len(reports) + len(skips) == number of expanded grid points, and the
    output order is the deterministic grid order whatever ``threads`` is.
    """
    points = expand_grid(grid)
    if threads and threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            outcomes = list(pool.map(
                lambda pt: _evaluate_point(pt, predictor), points
            ))
    else:
        outcomes = [_evaluate_point(pt, predictor) for pt in points]
    reports = tuple(o for o in outcomes if isinstance(o, ANumberReport))
    skips = tuple(o for o in outcomes if isinstance(o, SkipRecord))
    return SweepResult(reports=reports, skips=skips)


def verify(grid: SweepGrid, threads: int | None = None,
           predictor: Predictor = predicted_a) -> VerifyResult:
    """Sweep, then keep the reports where a check failed.

    exit_status is 0 exactly when every report matches its prediction
    and all computation paths agree.
    """
    result = sweep(grid, threads=threads, predictor=predictor)
    mismatches = tuple(
        r for r in result.reports if not (r.match and r.paths_agree)
    )
    return VerifyResult(
        mismatches=mismatches,
        exit_status=0 if not mismatches else 1,
        sweep=result,
    )


def _report_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def reports_to_csv(reports: Sequence[ANumberReport]) -> str:
    """CSV with one header row; empty cells for absent optional fields."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(REPORT_COLUMNS)
    for r in reports:
        writer.writerow([_report_cell(getattr(r, col)) for col in REPORT_COLUMNS])
    return buf.getvalue()


def reports_to_json(reports: Sequence[ANumberReport]) -> str:
    """JSON array of report objects with the CSV's field names."""
    return json.dumps(
        [{col: getattr(r, col) for col in REPORT_COLUMNS} for r in reports],
        indent=2,
    ) + "\n"
