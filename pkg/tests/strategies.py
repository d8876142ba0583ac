"""Hypothesis strategies shared by the property tests."""

from __future__ import annotations

import numpy as np
from hypothesis import strategies as hst

from absorbsets.tanner import TannerGraph


@hst.composite
def bit_matrices(draw, max_rows: int = 6, max_cols: int = 6, min_rows: int = 0, min_cols: int = 1):
    r = draw(hst.integers(min_rows, max_rows))
    c = draw(hst.integers(min_cols, max_cols))
    bits = draw(hst.lists(hst.integers(0, 1), min_size=r * c, max_size=r * c))
    return np.array(bits, dtype=np.uint8).reshape(r, c)


@hst.composite
def tanner_graphs(draw, max_vars: int = 7, max_checks: int = 7):
    n = draw(hst.integers(1, max_vars))
    k = draw(hst.integers(1, max_checks))
    nbrs = tuple(tuple(sorted(draw(hst.sets(hst.integers(0, n - 1), min_size=1, max_size=min(n, 4))))) for _ in range(k))
    return TannerGraph(n, nbrs, "random")
