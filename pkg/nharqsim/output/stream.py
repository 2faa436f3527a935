"""Output stream management."""
import os
import sys
from contextlib import contextmanager
from typing import Iterator, TextIO

from ..errors import OutputError
from ..models import OutputSpec


@contextmanager
def open_output(spec: OutputSpec) -> Iterator[TextIO]:
    """Context manager yielding the destination stream.

    Standard output is flushed but never closed. File errors are re-raised as
    OutputError naming the path.
    """
    if spec.to_stdout:
        yield sys.stdout
        sys.stdout.flush()
        return

    directory = os.path.dirname(spec.path)
    try:
        if directory:
            os.makedirs(directory, exist_ok=True)
        fh = open(spec.path, "w", newline="", encoding="utf-8")
    except OSError as e:
        raise OutputError(f"Cannot open {spec.path}: {e.strerror or e}") from e

    try:
        yield fh
    except OSError as e:
        raise OutputError(f"Cannot write {spec.path}: {e.strerror or e}") from e
    finally:
        fh.close()
