"""Collects one summary line per acceptance criterion for the terminal report."""

LINES = {}


def record(number, ok, detail):
    line = f"criterion {number}: {'PASS' if ok else 'FAIL'} {detail}"
    LINES[number] = line
    print(line)
    return ok
