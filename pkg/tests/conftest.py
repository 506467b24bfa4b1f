import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

from gjlinalg import GF2, Matrix, Rationals, Reals  # noqa: E402

Q = Rationals()
Z2 = GF2()
R = Reals()


def qm(rows):
    return Matrix.from_rows(Q, rows)


def zm(rows):
    return Matrix.from_rows(Z2, rows)


# -- acceptance summary ---------------------------------------------------------

ACCEPTANCE_RESULTS: list[str] = []


def record_criterion(number: int, title: str, ok: bool, detail: str = "") -> None:
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number:>2}: {title}"
    if detail:
        line += f" ({detail})"
    ACCEPTANCE_RESULTS.append(line)
    print(line)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_RESULTS, key=lambda s: int(s.split("criterion")[1].split(":")[0])):
            terminalreporter.write_line(line)
