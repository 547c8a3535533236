"""
Run configuration and report schema.

Reports are JSON documents; every exact number (polynomial coefficients,
numeric residuals) is written as a string so nothing is lost on the way
through a consumer's float parser.  Field order is fixed by the models, so
two runs with the same configuration serialize byte-identically apart from
the elapsed-time fields.
"""
import sys
from pathlib import Path
from typing import List, Literal, Optional

from pydantic import BaseModel, Field, field_validator, model_validator

from qharmonic.congruence import CheckResult
from qharmonic.errors import ReportIoError
from qharmonic.polyring import coeff_strings
from qharmonic.zetacheck import NumericCheck

EXACT_CHECK_NAMES = (
    'wolstenholme', 'squares', 'andrews', 'theorem1', 'lemma2w', 'lemma2p',
    'limit', 'telescope', 'symmetrize', 'gfactor', 'reduction', 'specialize',
)
NUMERIC_CHECK_NAMES = ('zeta', 'closedform', 'cycloprod')
ALL_CHECK_NAMES = EXACT_CHECK_NAMES + NUMERIC_CHECK_NAMES


def expand_checks(names) -> List[str]:
    """Resolve ``all``/``exact`` and return the selection in canonical order"""
    wanted = set()
    for name in names:
        name = name.strip().lower()
        if not name:
            continue
        if name == 'all':
            wanted.update(ALL_CHECK_NAMES)
        elif name == 'exact':
            wanted.update(EXACT_CHECK_NAMES)
        else:
            wanted.add(name)
    return sorted(wanted, key=lambda n: ALL_CHECK_NAMES.index(n) if n in ALL_CHECK_NAMES else len(ALL_CHECK_NAMES))


class RunConfig(BaseModel):
    """One sweep: which checks, over which primes"""

    min_p: int = 5
    max_p: int = 23
    explicit_list: Optional[List[int]] = None
    checks: List[str] = Field(default_factory=lambda: list(ALL_CHECK_NAMES))
    out_path: Optional[str] = None
    parallelism: int = Field(default=1, ge=1)
    seed: int = Field(default=20240601, ge=0)
    mutate: bool = False

    @field_validator('checks')
    @classmethod
    def _known_checks(cls, value):
        value = expand_checks(value)
        if not value:
            raise ValueError("at least one check must be selected")
        unknown = [name for name in value if name not in ALL_CHECK_NAMES]
        if unknown:
            raise ValueError(f"unknown checks: {', '.join(unknown)}")
        return value

    @model_validator(mode='after')
    def _range_ordered(self):
        if self.explicit_list is not None and not self.explicit_list:
            raise ValueError("explicit input list is empty")
        if self.explicit_list is None and self.min_p > self.max_p:
            raise ValueError(f"empty range: min {self.min_p} > max {self.max_p}")
        return self


class ReportEntry(BaseModel):
    check_id: str
    p: int
    kind: Literal['exact', 'numeric']
    status: Literal['pass', 'fail', 'error']
    passed: bool
    lhs: Optional[List[str]] = None
    rhs: Optional[List[str]] = None
    detail: str = ""
    elapsed_ms: float = 0.0
    residual: Optional[str] = None
    tolerance: Optional[str] = None
    denominators: List[str] = Field(default_factory=list)
    seed: Optional[int] = None
    samples: List[str] = Field(default_factory=list)


class Summary(BaseModel):
    total: int = 0
    passed: int = 0
    failed: int = 0
    errors: int = 0


class Report(BaseModel):
    tool_version: str
    config: RunConfig
    results: List[ReportEntry] = Field(default_factory=list)
    summary: Summary = Field(default_factory=Summary)
    notes: List[str] = Field(default_factory=list)
    total_elapsed_ms: float = 0.0


def entry_from_check(result: CheckResult) -> ReportEntry:
    return ReportEntry(
        check_id=result.check_id,
        p=result.p,
        kind='exact',
        status='pass' if result.passed else 'fail',
        passed=result.passed,
        lhs=coeff_strings(result.lhs_rep),
        rhs=coeff_strings(result.rhs_rep),
        detail=result.detail,
        elapsed_ms=round(result.elapsed, 3),
        denominators=[str(d) for d in result.denominators],
    )


def entry_from_numeric(check: NumericCheck) -> ReportEntry:
    return ReportEntry(
        check_id=check.check_id,
        p=check.p,
        kind='numeric',
        status='pass' if check.passed else 'fail',
        passed=check.passed,
        detail=check.detail,
        elapsed_ms=round(check.elapsed, 3),
        residual=repr(check.residual),
        tolerance=repr(check.tolerance),
        seed=check.seed,
        samples=list(check.samples),
    )


def error_entry(check_id: str, p: int, kind: str, exc: Exception) -> ReportEntry:
    return ReportEntry(
        check_id=check_id,
        p=p,
        kind=kind,
        status='error',
        passed=False,
        detail=f"{type(exc).__name__}: {exc}",
    )


def summarize(entries) -> Summary:
    summary = Summary(total=len(entries))
    for entry in entries:
        if entry.status == 'pass':
            summary.passed += 1
        elif entry.status == 'fail':
            summary.failed += 1
        else:
            summary.errors += 1
    return summary


def build_report(config: RunConfig, entries, notes=(), total_elapsed_ms=0.0, version=None) -> Report:
    if version is None:
        from qharmonic import __version__ as version
    ordered = sorted(entries, key=lambda e: (e.p, e.check_id))
    return Report(
        tool_version=version,
        config=config,
        results=ordered,
        summary=summarize(ordered),
        notes=list(notes),
        total_elapsed_ms=round(total_elapsed_ms, 3),
    )


def render_report(report: Report) -> str:
    return report.model_dump_json(indent=2) + "\n"


def write_report(report: Report, path=None):
    """Write to ``path``, or standard output when no path is given"""
    text = render_report(report)
    if path is None or str(path) == '-':
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    try:
        Path(path).write_text(text, encoding='utf-8')
    except OSError as e:
        raise ReportIoError(path, e.strerror or str(e)) from e


def parse_report(text: str) -> Report:
    return Report.model_validate_json(text)


def read_report(path) -> Report:
    return parse_report(Path(path).read_text(encoding='utf-8'))
