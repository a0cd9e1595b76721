"""Collects one pass/fail line per acceptance criterion."""

RESULTS: list[tuple[int, bool, str]] = []


def record(number: int, passed: bool, detail: str) -> str:
    line = f"CRITERION {number}: {'PASS' if passed else 'FAIL'} ({detail})"
    RESULTS[:] = [r for r in RESULTS if r[0] != number]
    RESULTS.append((number, passed, line))
    print(line, flush=True)
    return line
