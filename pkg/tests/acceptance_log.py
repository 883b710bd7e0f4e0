"""Collects one PASS/FAIL line per acceptance criterion for the terminal summary."""

import time
from contextlib import contextmanager

LINES: list[str] = []


@contextmanager
def criterion(number: int, title: str):
    info: dict = {}
    start = time.perf_counter()
    try:
        yield info
    except BaseException as exc:
        line = f"FAIL criterion {number:2d}: {title} -- {type(exc).__name__}: {exc}"
        LINES.append(line)
        print(line)
        raise
    detail = ", ".join(f"{k}={v}" for k, v in info.items())
    line = f"PASS criterion {number:2d}: {title} ({detail}; {time.perf_counter() - start:.1f}s)"
    LINES.append(line)
    print(line)
