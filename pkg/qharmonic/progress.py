"""
Minimal progress logging for clean terminal output.

Everything goes to standard error; standard output carries the report.
"""
import sys
import time


class ProgressLogger:
    """Clean, minimal progress logger; only the parent process writes to it"""

    def __init__(self, verbose=False, stream=None, enabled=True):
        self.verbose = verbose
        self.enabled = enabled
        self.stream = stream
        self.start_time = None

    def _print(self, text, end="\n"):
        if not self.enabled:
            return
        stream = self.stream or sys.stderr
        print(text, end=end, file=stream, flush=True)

    def start(self, title):
        """Start a sweep"""
        self.start_time = time.time()
        self._print("\n" + "━" * 60)
        self._print(f"Verifying: {title}")
        self._print("━" * 60 + "\n")

    def step_complete(self, message, info="", ok=True):
        """One finished task on a single line"""
        mark = "✓" if ok else "✗"
        suffix = f" ({info})" if info else ""
        self._print(f"▸ {message}... {mark}{suffix}")

    def step_detail(self, detail):
        """Detail line (only in verbose mode)"""
        if self.verbose:
            self._print(f"  {detail}")

    def warning(self, message):
        """Show warning (only in verbose mode)"""
        if self.verbose:
            self._print(f"⚠ {message}")

    def error(self, message):
        """Show error"""
        self._print(f"✗ {message}")

    def complete(self, summary=""):
        """Show completion"""
        if self.start_time:
            elapsed = time.time() - self.start_time
            minutes = int(elapsed // 60)
            seconds = elapsed % 60

            self._print("\n" + "━" * 60)
            tail = f" - {summary}" if summary else ""
            self._print(f"Complete in {minutes}m {seconds:.1f}s{tail}")
            self._print("━" * 60 + "\n")

