"""Collects one verdict line per acceptance criterion."""

_results = {}
# every dependent verdict produced by the acceptance run, with its inputs
dependent_verdicts = []


def record(number, ok, detail):
    _results[number] = (ok, detail)
    line = f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {detail}"
    print(line)
    return line


def summary_lines():
    return [f"criterion {k:2d}: {'PASS' if ok else 'FAIL'}  {d}" for k, (ok, d) in sorted(_results.items())]
