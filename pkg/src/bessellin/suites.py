"""Grid verification suites behind the batch CLI.

Each suite walks a rectangle of (n, m) pairs, emits one
:class:`~bessellin.report.CheckRecord` per executed check, and is pure:
work items fan out across processes when ``jobs > 1`` and the merged
report is sorted by key, so output is identical regardless of worker
count.
"""

from __future__ import annotations

from fractions import Fraction
from multiprocessing import Pool

from .arith import PoleError
from .bessel import _derivative, bessel_q
from .linearization import (
    berg_vignat_check,
    linearize_closed_form,
    linearize_hypergeometric,
    linearize_oracle,
    verify_shift_recurrences,
)
from .hypergeom import (
    reduction_2f1_lower,
    reduction_2f1_upper,
    reduction_3f2_sum,
)
from .polynomials import UniPoly
from .report import FAIL, NOTE, PASS, CheckRecord

__all__ = ["SUITES", "run_suite", "BESSEL_RECURRENCE_SPAN"]

# The base-family recurrences are cheap, so they are always checked on
# this fixed span rather than on the (n, m) grid.
BESSEL_RECURRENCE_SPAN = 20

REDUCTION_SAMPLES = (
    Fraction(1, 10),
    Fraction(1, 3),
    Fraction(1, 2),
    Fraction(2, 3),
    Fraction(9, 10),
)


def _bessel_family_records() -> list[CheckRecord]:
    records = []
    u_sq = UniPoly([0, 0, Fraction(1)])
    u = UniPoly([0, Fraction(1)])
    for n in range(1, BESSEL_RECURRENCE_SPAN + 1):
        step = bessel_q(n + 1) - bessel_q(n) - u_sq * bessel_q(n - 1) * Fraction(1, 4 * n * n - 1)
        records.append(_poly_record("bessel-recurrence", n, step))
        slope = _derivative(bessel_q(n)) - bessel_q(n) + u * bessel_q(n - 1) * Fraction(1, 2 * n - 1)
        records.append(_poly_record("bessel-derivative", n, slope))
    return records


def _poly_record(check: str, n: int, residual: UniPoly) -> CheckRecord:
    if residual:
        return CheckRecord(check=check, n=n, status=FAIL, detail=f"residual {residual.render()}")
    return CheckRecord(check=check, n=n, status=PASS)


def _engine_agreement_pair(n: int, m: int) -> list[CheckRecord]:
    oracle = linearize_oracle(n, m)
    closed = linearize_closed_form(n, m)
    hyp = linearize_hypergeometric(n, m)
    records = []
    for k in range(n + m + 1):
        mismatches = []
        if closed[k] != oracle[k]:
            mismatches.append(f"closed_form differs: {(closed[k] - oracle[k]).render()}")
        if hyp[k] != oracle[k]:
            mismatches.append(f"hypergeometric differs: {(hyp[k] - oracle[k]).render()}")
        if mismatches:
            records.append(CheckRecord(
                check="engine-agreement", n=n, m=m, k=k,
                status=FAIL, detail="; ".join(mismatches),
            ))
        else:
            records.append(CheckRecord(check="engine-agreement", n=n, m=m, k=k))
    return records


def _reduction_pair(n: int, m: int) -> list[CheckRecord]:
    records = []
    for k in range(n + m + 1):
        lower_ok = 2 * k <= n + m - 1
        upper_ok = 2 * k >= n + m - 1
        for a in REDUCTION_SAMPLES:
            rhs = reduction_3f2_sum(n, m, k, a)
            if upper_ok:
                lhs = reduction_2f1_upper(n, m, k, a)
                records.append(_reduction_record(
                    "reduction-upper", n, m, k, a, lhs, rhs, note_on_mismatch=False,
                ))
            if lower_ok:
                try:
                    lhs = reduction_2f1_lower(n, m, k, a)
                except PoleError as exc:
                    records.append(CheckRecord(
                        check="reduction-lower", n=n, m=m, k=k, where=f"a={a}",
                        status=NOTE, detail=f"no finite gamma convention: {exc}",
                    ))
                else:
                    records.append(_reduction_record(
                        "reduction-lower", n, m, k, a, lhs, rhs, note_on_mismatch=True,
                    ))
    return records


def _reduction_record(check, n, m, k, a, lhs, rhs, note_on_mismatch) -> CheckRecord:
    if lhs == rhs:
        return CheckRecord(check=check, n=n, m=m, k=k, where=f"a={a}")
    status = NOTE if note_on_mismatch else FAIL
    return CheckRecord(
        check=check, n=n, m=m, k=k, where=f"a={a}",
        status=status, detail=f"lhs {lhs} != rhs {rhs}",
    )


def _pair_worker(task: tuple[str, int, int]) -> list[CheckRecord]:
    kind, n, m = task
    if kind == "oracle":
        return _engine_agreement_pair(n, m)
    if kind == "recurrence":
        return verify_shift_recurrences(n, m)
    if kind == "berg-vignat":
        return berg_vignat_check(n, m)
    if kind == "hypergeometric":
        return _reduction_pair(n, m)
    raise ValueError(f"unknown work item kind {kind!r}")


def _grid(kind: str, max_n: int, max_m: int) -> list[tuple[str, int, int]]:
    start = 0 if kind == "oracle" else 1
    return [
        (kind, n, m)
        for n in range(start, max_n + 1)
        for m in range(start, max_m + 1)
    ]


def _run_tasks(tasks, jobs: int) -> list[CheckRecord]:
    if jobs <= 1 or len(tasks) <= 1:
        chunks = [_pair_worker(task) for task in tasks]
    else:
        with Pool(processes=jobs) as pool:
            chunks = pool.map(_pair_worker, tasks)
    merged = [record for chunk in chunks for record in chunk]
    merged.sort(key=CheckRecord.sort_key)
    return merged


def _run_oracle(max_n, max_m, jobs):
    return _run_tasks(_grid("oracle", max_n, max_m), jobs)


def _run_recurrence(max_n, max_m, jobs):
    records = _bessel_family_records()
    records.extend(_run_tasks(_grid("recurrence", max_n, max_m), jobs))
    return records


def _run_berg_vignat(max_n, max_m, jobs):
    return _run_tasks(_grid("berg-vignat", max_n, max_m), jobs)


def _run_hypergeometric(max_n, max_m, jobs):
    return _run_tasks(_grid("hypergeometric", max_n, max_m), jobs)


SUITES = {
    "oracle": _run_oracle,
    "recurrence": _run_recurrence,
    "berg-vignat": _run_berg_vignat,
    "hypergeometric": _run_hypergeometric,
}


def run_suite(name: str, max_n: int, max_m: int, jobs: int = 1) -> list[CheckRecord]:
    """Run one named suite (or ``all``) over the (n, m) grid."""
    if name == "all":
        records = []
        for suite in ("recurrence", "oracle", "berg-vignat", "hypergeometric"):
            records.extend(SUITES[suite](max_n, max_m, jobs))
        return records
    try:
        runner = SUITES[name]
    except KeyError:
        raise ValueError(f"unknown suite {name!r}; pick one of {['all', *sorted(SUITES)]}")
    return runner(max_n, max_m, jobs)
