"""Shared sink for the acceptance checklist lines.

test_acceptance records one line per criterion here; conftest prints the
collected lines in the terminal summary so the checklist is visible in a
plain pytest run.
"""

LINES: list[str] = []


def record(num: int, name: str, ok: bool, detail: str = "") -> bool:
    verdict = "PASS" if ok else "FAIL"
    line = f"criterion {num} ({name}): {verdict}"
    if detail:
        line += f" - {detail}"
    LINES.append(line)
    print(line)
    return ok
