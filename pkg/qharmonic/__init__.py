"""
q-Harmonic Verification Engine - Simple Configuration
"""
import logging
import os
from dataclasses import dataclass
from logging.handlers import RotatingFileHandler
from typing import Optional

# Try to load environment variables from .env file (optional)
try:
    from dotenv import load_dotenv
    load_dotenv()
except ImportError:
    # dotenv not installed, skip loading .env file
    pass

__version__ = "0.1.0"


@dataclass(frozen=True)
class Settings:
    """Defaults for a sweep, each overridable from the environment"""

    min_p: int
    max_p: int
    checks: str
    parallelism: int
    seed: int
    log_file: Optional[str]
    verbose: bool


def load_settings() -> Settings:
    """Read settings with optional environment variable overrides"""
    return Settings(
        min_p=int(os.environ.get('QHARMONIC_MIN_P', 5)),
        max_p=int(os.environ.get('QHARMONIC_MAX_P', 23)),
        checks=os.environ.get('QHARMONIC_CHECKS', 'all'),
        parallelism=int(os.environ.get('QHARMONIC_PARALLEL', 1)),
        seed=int(os.environ.get('QHARMONIC_SEED', 20240601)),
        log_file=os.environ.get('QHARMONIC_LOG_FILE') or None,
        verbose=os.environ.get('VERBOSE', 'false').lower() == 'true',
    )


def configure_logging(verbose=False, log_file=None):
    """Configure logging based on the verbose flag"""
    if verbose:
        # Verbose mode: show all debug logs
        logging.basicConfig(level=logging.DEBUG, force=True)
    else:
        # Normal mode: only show warnings and errors
        logging.basicConfig(level=logging.WARNING, force=True)

    if log_file:
        package_logger = logging.getLogger('qharmonic')
        path = os.path.abspath(log_file)
        file_handler = next((h for h in package_logger.handlers
                             if isinstance(h, RotatingFileHandler) and h.baseFilename == path), None)
        if file_handler is None:
            file_handler = RotatingFileHandler(log_file, maxBytes=10240, backupCount=10)
            file_handler.setFormatter(logging.Formatter(
                '%(asctime)s %(levelname)s: %(message)s [in %(pathname)s:%(lineno)d]'))
            package_logger.addHandler(file_handler)
        file_handler.setLevel(logging.DEBUG if verbose else logging.INFO)
        package_logger.setLevel(logging.DEBUG if verbose else logging.INFO)
        package_logger.info('qharmonic %s startup', __version__)
