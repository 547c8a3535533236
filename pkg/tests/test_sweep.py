import io

import pytest

from qharmonic.errors import ConfigError
from qharmonic.progress import ProgressLogger
from qharmonic.report import RunConfig, render_report
from qharmonic.sweep import SweepRunner, plan_tasks, run_verify

CORE_CHECKS = ['wolstenholme', 'squares', 'andrews', 'theorem1', 'lemma2w', 'lemma2p',
               'limit', 'telescope', 'symmetrize']


def _without_timings(report):
    results = [e.model_copy(update={'elapsed_ms': 0.0}) for e in report.results]
    return report.model_copy(update={'results': results, 'total_elapsed_ms': 0.0})


class TestPlan:
    def test_core_range(self):
        tasks, notes = plan_tasks(RunConfig(min_p=5, max_p=23, checks=CORE_CHECKS))
        assert len(tasks) == 7 * 9
        assert notes == []

    def test_range_skips_small_primes(self):
        tasks, notes = plan_tasks(RunConfig(min_p=2, max_p=7, checks=['theorem1', 'andrews']))
        assert [(t.p, t.check) for t in tasks] == [(3, 'andrews'), (5, 'andrews'), (5, 'theorem1'),
                                                   (7, 'andrews'), (7, 'theorem1')]
        assert "andrews: 1 primes below 3 skipped" in notes
        assert "theorem1: 2 primes below 5 skipped" in notes

    def test_explicit_list_runs_every_cell(self):
        tasks, _ = plan_tasks(RunConfig(explicit_list=[9, 3, 9], checks=['theorem1']))
        assert [(t.p, t.check) for t in tasks] == [(9, 'theorem1'), (3, 'theorem1')]

    def test_numeric_cap(self):
        tasks, notes = plan_tasks(RunConfig(min_p=47, max_p=61, checks=['cycloprod']))
        assert [t.p for t in tasks] == [47, 53]
        assert any("p <= 53" in note for note in notes)

    def test_mutation_noted(self):
        _, notes = plan_tasks(RunConfig(checks=['andrews'], mutate=True))
        assert any(note.startswith("mutation mode") for note in notes)


class TestRunVerify:
    def test_core_range_passes(self):
        report, status = run_verify(RunConfig(min_p=5, max_p=23, checks=CORE_CHECKS))
        assert status == 0
        assert report.summary.total == 63
        assert report.summary.passed == 63
        keys = [(e.p, e.check_id) for e in report.results]
        assert keys == sorted(keys)

    def test_composite_is_an_entry(self):
        report, status = run_verify(RunConfig(explicit_list=[9], checks=['theorem1']))
        assert status == 1
        assert len(report.results) == 1
        entry = report.results[0]
        assert entry.status == 'error'
        assert entry.detail.startswith("NotPrime")

    def test_composites_in_a_list(self):
        report, status = run_verify(RunConfig(explicit_list=[9, 15, 7], checks=['andrews', 'theorem1']))
        assert status == 1
        errors = {(e.p, e.check_id) for e in report.results if e.status == 'error'}
        assert errors == {(9, 'andrews'), (9, 'theorem1'), (15, 'andrews'), (15, 'theorem1')}
        assert report.summary.passed == 2

    def test_below_range_in_explicit_mode(self):
        report, _ = run_verify(RunConfig(explicit_list=[3], checks=['theorem1']))
        assert report.results[0].detail.startswith("PrimeTooSmall")

    def test_mutation_fails_at_p7(self):
        report, status = run_verify(RunConfig(explicit_list=[7], checks=['exact'], mutate=True))
        assert status == 1
        failed = {e.check_id for e in report.results if e.status == 'fail'}
        assert failed == {'wolstenholme', 'squares', 'andrews', 'theorem1', 'lemma2w', 'lemma2p',
                          'limit', 'reduction', 'specialize'}

    def test_parallel_matches_serial(self):
        checks = ['andrews', 'theorem1', 'lemma2w', 'telescope', 'zeta']
        serial, _ = run_verify(RunConfig(min_p=5, max_p=19, checks=checks, parallelism=1))
        parallel, _ = run_verify(RunConfig(min_p=5, max_p=19, checks=checks, parallelism=4))
        assert _without_timings(serial).results == _without_timings(parallel).results

    def test_deterministic(self):
        config = RunConfig(min_p=5, max_p=13, checks=['theorem1', 'closedform', 'cycloprod'], parallelism=3)
        first, _ = run_verify(config)
        second, _ = run_verify(config)
        assert render_report(_without_timings(first)) == render_report(_without_timings(second))

    def test_zeta_suite_has_two_entries(self):
        report, status = run_verify(RunConfig(explicit_list=[11], checks=['zeta']))
        assert status == 0
        assert [e.check_id for e in report.results] == ['zeta', 'zeta-rootsum']

    def test_out_path_is_directory(self, tmp_path):
        with pytest.raises(ConfigError):
            run_verify(RunConfig(checks=['andrews'], out_path=str(tmp_path)))

    def test_out_path_missing_parent(self, tmp_path):
        with pytest.raises(ConfigError):
            run_verify(RunConfig(checks=['andrews'], out_path=str(tmp_path / 'nope' / 'r.json')))


def test_runner_reports_progress(capsys):
    stream = io.StringIO()
    runner = SweepRunner(RunConfig(checks=['andrews']), ProgressLogger(stream=stream))
    tasks, _ = plan_tasks(RunConfig(min_p=5, max_p=7, checks=['andrews']))
    entries = runner.run(tasks)
    assert [e.p for e in entries] == [5, 7]
    assert "▸ p=5 andrews... ✓" in stream.getvalue()
    assert capsys.readouterr().err == ""


def test_runner_verbose_detail_for_passing_cell():
    stream = io.StringIO()
    config = RunConfig(explicit_list=[5], checks=['limit'])
    runner = SweepRunner(config, ProgressLogger(verbose=True, stream=stream))
    tasks, _ = plan_tasks(config)
    runner.run(tasks)
    lines = stream.getvalue().splitlines()
    assert lines[0].startswith("▸ p=5 limit... ✓")
    assert lines[1] == "  limit = -2"


def test_runner_error_line_for_raising_cell():
    stream = io.StringIO()
    config = RunConfig(explicit_list=[9], checks=['andrews'])
    runner = SweepRunner(config, ProgressLogger(stream=stream))
    tasks, _ = plan_tasks(config)
    runner.run(tasks)
    assert stream.getvalue() == "✗ p=9 andrews: NotPrime: 9 is not prime\n"


def test_process_pool_reports_every_cell():
    stream = io.StringIO()
    config = RunConfig(min_p=5, max_p=13, checks=['andrews', 'zeta'], parallelism=3)
    runner = SweepRunner(config, ProgressLogger(stream=stream))
    tasks, _ = plan_tasks(config)
    entries = runner.run(tasks)
    assert [(e.p, e.check_id) for e in entries] == [
        (p, check_id) for p in (5, 7, 11, 13) for check_id in ('andrews', 'zeta', 'zeta-rootsum')]
    assert stream.getvalue().count("✓") == 12
