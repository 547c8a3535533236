import logging

import pytest
from hypothesis import settings

from qharmonic.congruence import sweep_primes

# reproducible property runs
settings.register_profile("repro", derandomize=True, deadline=None)
settings.load_profile("repro")


@pytest.fixture
def primes_to_97():
    return list(sweep_primes(2, 97))


@pytest.fixture(autouse=True)
def _restore_root_logging():
    # main() calls logging.basicConfig(force=True), which binds a root handler
    # to the per-test capsys stream; restore the root logger so it cannot leak
    root = logging.getLogger()
    handlers, level = root.handlers[:], root.level
    yield
    root.handlers[:] = handlers
    root.setLevel(level)
