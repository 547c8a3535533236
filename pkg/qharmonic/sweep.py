"""
Sweep runner: fans (prime, check) tasks out over worker processes.

Workers only compute entries; the parent collects them into one results
table and assembles the report in (p, check_id) order, so completion order
never shows in the output.
"""
import logging
import os
import time
import traceback
from dataclasses import dataclass
from multiprocessing import Pool
from pathlib import Path
from typing import Callable, List, Tuple

from qharmonic.congruence import EXACT_CHECKS, sweep_primes
from qharmonic.errors import ConfigError, QHarmonicError
from qharmonic.progress import ProgressLogger
from qharmonic.report import (
    EXACT_CHECK_NAMES,
    Report,
    RunConfig,
    build_report,
    entry_from_check,
    entry_from_numeric,
    error_entry,
)
from qharmonic.zetacheck import NUMERIC_CHECKS, ZETA_MAX_P

logger = logging.getLogger(__name__)

# smallest prime each check is stated for; range sweeps skip smaller ones
MIN_PRIME = {
    'wolstenholme': 5,
    'squares': 5,
    'andrews': 3,
    'theorem1': 5,
    'lemma2w': 5,
    'lemma2p': 5,
    'limit': 2,
    'telescope': 3,
    'symmetrize': 3,
    'gfactor': 3,
    'reduction': 5,
    'specialize': 5,
    'zeta': 5,
    'closedform': 5,
    'cycloprod': 2,
}

NUMERIC_IDS = {
    'zeta': ('zeta', 'zeta-rootsum'),
    'closedform': ('closedform',),
    'cycloprod': ('cycloprod',),
}


@dataclass(frozen=True)
class SweepTask:
    p: int
    check: str


def _runners(check: str, config: RunConfig) -> List[Tuple[str, str, Callable]]:
    """(check_id, kind, thunk taking p) for one selected check name"""
    if check in EXACT_CHECKS:
        verify = EXACT_CHECKS[check]
        return [(check, 'exact', lambda p: entry_from_check(verify(p, mutate=config.mutate)))]
    runners = []
    for check_id, fn in zip(NUMERIC_IDS[check], NUMERIC_CHECKS[check]):
        runners.append((check_id, 'numeric',
                        lambda p, fn=fn: entry_from_numeric(fn(p, config.seed))))
    return runners


def plan_tasks(config: RunConfig):
    """Tasks to run plus the notes explaining what was left out"""
    notes = []
    tasks = []
    skipped = {}
    capped = 0
    explicit = config.explicit_list is not None
    primes = list(dict.fromkeys(config.explicit_list)) if explicit else list(sweep_primes(config.min_p, config.max_p))
    for p in primes:
        for check in config.checks:
            if check not in EXACT_CHECK_NAMES and p > ZETA_MAX_P:
                capped += 1
                continue
            if not explicit and p < MIN_PRIME[check]:
                skipped[check] = skipped.get(check, 0) + 1
                continue
            tasks.append(SweepTask(p, check))
    if any(check not in EXACT_CHECK_NAMES for check in config.checks):
        notes.append(f"numeric checks run only for p <= {ZETA_MAX_P}; {capped} cells above the cap skipped")
    for check, count in sorted(skipped.items()):
        notes.append(f"{check}: {count} primes below {MIN_PRIME[check]} skipped")
    if config.mutate:
        notes.append("mutation mode: every right-hand constant perturbed by +1")
    return tasks, notes


def _process_task(task: SweepTask, config: RunConfig):
    entries = []
    for check_id, kind, run in _runners(task.check, config):
        try:
            entries.append(run(task.p))
        except QHarmonicError as e:
            entries.append(error_entry(check_id, task.p, kind, e))
        except Exception as e:
            logger.debug("unexpected failure in %s at p=%d\n%s", check_id, task.p, traceback.format_exc())
            entries.append(error_entry(check_id, task.p, kind, e))
    return entries


def _pool_worker(job):
    """Worker function for the process pool; must stay at module level"""
    task, config = job
    return _process_task(task, config)


class SweepRunner:
    """Runs sweep tasks in-process, or on a pool of ``parallelism`` worker processes"""

    def __init__(self, config: RunConfig, progress: ProgressLogger = None):
        self.config = config
        self.progress = progress or ProgressLogger(enabled=False)
        self._results = {}

    def run(self, tasks):
        self._results = {}
        processes = min(self.config.parallelism, len(tasks))
        if processes > 1:
            logger.debug("starting %d worker processes for %d tasks", processes, len(tasks))
            jobs = [(task, self.config) for task in tasks]
            with Pool(processes=processes) as pool:
                for entries in pool.imap_unordered(_pool_worker, jobs):
                    self._collect(entries)
        else:
            for task in tasks:
                self._collect(_process_task(task, self.config))
        return [self._results[key] for key in sorted(self._results)]

    def _collect(self, entries):
        for entry in entries:
            self._results[(entry.p, entry.check_id)] = entry
            label = f"p={entry.p} {entry.check_id}"
            if entry.status == 'error':
                self.progress.error(f"{label}: {entry.detail}")
            elif entry.passed:
                self.progress.step_complete(label, f"{entry.elapsed_ms:.0f} ms")
                if entry.detail:
                    self.progress.step_detail(entry.detail)
            else:
                self.progress.step_complete(label, entry.detail, ok=False)


def _check_out_path(path):
    if path is None or path == '-':
        return
    target = Path(path)
    parent = target.parent if str(target.parent) else Path('.')
    if target.is_dir():
        raise ConfigError(f"output path {path} is a directory")
    if not parent.is_dir() or not os.access(parent, os.W_OK):
        raise ConfigError(f"output path {path} is not writable")
    if target.exists() and not os.access(target, os.W_OK):
        raise ConfigError(f"output path {path} is not writable")


def run_verify(config: RunConfig, progress: ProgressLogger = None) -> Tuple[Report, int]:
    """
    Apply every selected check to every prime in scope.

    Returns the report and the exit status: 0 when every entry passed,
    1 otherwise.  Configuration problems raise ConfigError (exit status 2).
    """
    _check_out_path(config.out_path)
    started = time.perf_counter()
    tasks, notes = plan_tasks(config)
    logger.debug("planned %d tasks over %d workers", len(tasks), config.parallelism)
    runner = SweepRunner(config, progress)
    entries = runner.run(tasks)
    report = build_report(config, entries, notes, (time.perf_counter() - started) * 1000.0)
    status = 0 if report.summary.passed == report.summary.total else 1
    return report, status
