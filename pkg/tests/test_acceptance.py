"""Acceptance criteria, one test per criterion.

Each test prints a PASS/FAIL line (visible with ``pytest -s`` or in the
captured output of ``pytest -v -rA``).
"""

import pytest

from semistrong import bounds, repro

GOLDEN = repro.golden_table_text()


@pytest.mark.parametrize("criterion", repro.CRITERIA, ids=lambda f: f.__name__)
def test_criterion(criterion):
    result = criterion()
    print(result.line())
    assert result.passed, result.line()


def test_golden_table_contents():
    # hand-checked rows of the frozen table
    rows = {tuple(line.split(",")[:2]): line for line in GOLDEN.splitlines()[1:]}
    assert rows[("0", "2")].startswith("0,2,inf,inf,infinite")
    assert rows[("1", "2")].startswith("1,2,3,3,exact")
    assert all(rows[(str(t), "2")].startswith(f"{t},2,2,2,exact") for t in range(2, 9))
    for c in range(3, 7):
        for t in range(0, c - 1):
            assert rows[(str(t), str(c))].startswith(f"{t},{c},inf,inf,infinite")
        assert rows[(str(c - 1), str(c))].startswith(f"{c - 1},{c},{2 * c - 1},open (Problem 1),open")
    assert rows[("3", "3")].startswith("3,3,4,9,gap")
    assert rows[("6", "3")].startswith("6,3,4,15,gap")
    assert bounds.render_table_csv(bounds.bounds_table(repro.GOLDEN_TMAX, repro.GOLDEN_CMAX)) == GOLDEN


def test_repro_command(capsys):
    from semistrong.cli import main

    assert main(["repro"]) == 0
    out = capsys.readouterr().out
    assert out.count("[PASS]") == len(repro.CRITERIA)
    assert "10/10 criteria passed" in out
