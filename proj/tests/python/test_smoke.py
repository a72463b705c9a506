import os
import sys

_dir = os.environ.get("SQ_MODULE_DIR")
if _dir:
    sys.path.insert(0, _dir)
    import _sq as sq
else:
    import squish as sq

import pytest


def test_counts():
    assert sq.box_count((2, 2, 2)) == "20"
    assert len(sq.enumerate_boxed((2, 2, 2))) == 20
    assert sq.box_count((4, 4, 4)) == "232848"


def test_downsample_pair():
    lo, hi = sq.downsample([[3, 3, 3, 0], [3, 2, 1, 0], [3, 1, 1, 0], [0, 0, 0, 0]])
    assert lo == [[1]]
    assert hi == [[2, 2], [2, 1]]


def test_squish_is_overlay():
    p = [[2, 1], [1]]
    lo, hi = sq.downsample(p)
    assert sq.squish(p, (2, 2, 2)) == sq.overlay(lo, hi, (1, 1, 1))


def test_hexagon_trace():
    t = sq.loop_trace_rst([(0, 0)])
    assert t.count(" + ") == 14
    assert " + 4 + " in t


def test_monodromy_at_roots():
    m = sq.monodromy_at([(0, 0)], 8)
    assert m == [["-1", "0"], ["0", "-1"]]


def test_series():
    assert sq.zq_series(2) == "1 + q + q*t + q*s + q*r"
    assert sq.colored_gf((1, 1, 2)) == "1 + q + q*t"


def test_verdicts():
    v = sq.conjecture_verdict([(0, 0)])
    assert v["tiling"] == "none"
    assert v["classification"] == "consistent-zero"
    b = sq.conjecture_verdict([(0, 0), (1, 0), (2, 0)])
    assert b["classification"] == "consistent-tiled"


def test_errors():
    with pytest.raises(ValueError):
        sq.downsample([[1, 2]])


def test_criterion():
    lines = sq.run_criterion(3)
    assert [l[0] for l in lines] == ["3a", "3b", "3c", "3d"]
    assert all(l[1] for l in lines[1:])
