"""All-pairs min-max (bottleneck) distances and the single-edge zeroing update.

The distance between u and v is the minimum over u-v paths of the largest
edge weight on the path.  Over a complete weight table it is computed by a
Floyd-Warshall style recurrence using one min and one max per unordered
vertex pair per round; zeroing one edge afterwards needs only O(n^2) extra
min/max operations on the previous matrix.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .counting import OpCounter
from .graphs import (
    ExtendedWeighting,
    Graph,
    GraphError,
    Weighting,
    _check_square_symmetric,
    _check_weighting,
)


@dataclass(frozen=True, eq=False, init=False)
class DistanceMatrix:
    """Symmetric n x n table of min-max distances (zero diagonal)."""

    values: np.ndarray

    def __init__(self, values: np.ndarray | Sequence[Sequence[float]]):
        arr = np.array(values, dtype=float)
        _check_square_symmetric(arr)
        arr.setflags(write=False)
        object.__setattr__(self, "values", arr)

    @property
    def n(self) -> int:
        return self.values.shape[0]

    def dist(self, u: int, v: int) -> float:
        """Min-max distance between vertices u and v, 1-based."""
        return float(self.values[u - 1, v - 1])


def _fw_rows(rows: list[list[float]], counter: OpCounter | None = None) -> None:
    """In-place bottleneck Floyd-Warshall over mutable rows.

    Round k relaxes every unordered pair {i,j} through vertex k with one max
    and one min; entries in row/column k never change during round k, so the
    in-place sweep realizes the round-by-round recurrence exactly.
    """
    n = len(rows)
    for k in range(n):
        rk = rows[k]
        for i in range(n - 1):
            ri = rows[i]
            rik = ri[k]
            for j in range(i + 1, n):
                cand = rk[j]
                if rik > cand:
                    cand = rik  # max(D[i][k], D[k][j])
                if cand < ri[j]:  # min with D[i][j]
                    ri[j] = cand
                    rows[j][i] = cand
    if counter is not None:
        pairs = n * (n - 1) // 2
        counter.min_count += n * pairs
        counter.max_count += n * pairs


def _zero_update_rows(
    rows: list[list[float]], a0: int, b0: int, counter: OpCounter | None = None
) -> list[list[float]]:
    """Distance rows after pair {a0,b0} (0-based) gets weight zero.

    Reads only the old matrix and writes a fresh one: for every unordered
    pair, take min(D[i][j], max(D[i][a], D[b][j]), max(D[i][b], D[a][j])),
    two maxes and two left-associated mins per pair.
    """
    n = len(rows)
    out = [row[:] for row in rows]
    ca = [rows[i][a0] for i in range(n)]
    cb = [rows[i][b0] for i in range(n)]
    for i in range(n - 1):
        ri = rows[i]
        oi = out[i]
        via_a = ca[i]
        via_b = cb[i]
        for j in range(i + 1, n):
            best = ri[j]
            cand = cb[j]
            if via_a > cand:
                cand = via_a  # max(D[i][a], D[b][j])
            if cand < best:
                best = cand
            cand = ca[j]
            if via_b > cand:
                cand = via_b  # max(D[i][b], D[a][j])
            if cand < best:
                best = cand
            if best != ri[j]:
                oi[j] = best
                out[j][i] = best
    if counter is not None:
        pairs = n * (n - 1) // 2
        counter.min_count += 2 * pairs
        counter.max_count += 2 * pairs
    return out


def _as_rows(table: ExtendedWeighting | DistanceMatrix | np.ndarray) -> list[list[float]]:
    values = getattr(table, "values", table)
    arr = np.asarray(values, dtype=float)
    _check_square_symmetric(arr)
    return arr.tolist()


def all_pairs_minmax(
    xbar: ExtendedWeighting | np.ndarray, counter: OpCounter | None = None
) -> DistanceMatrix:
    """All-pairs min-max distances of a complete weight table.

    Initial values are the pair weights; n rounds of the pair recurrence
    perform exactly n * n(n-1)/2 min and as many max operations.
    """
    rows = _as_rows(xbar)
    _fw_rows(rows, counter)
    return DistanceMatrix(rows)


def zero_edge_update(
    d: DistanceMatrix, a: int, b: int, counter: OpCounter | None = None
) -> DistanceMatrix:
    """Distance matrix after the single pair {a,b} is given weight zero.

    a and b are 1-based vertices.  Uses 2 * n(n-1)/2 min and as many max
    operations; the input matrix is not modified.
    """
    n = d.n
    if a == b:
        raise GraphError("zeroed pair needs two distinct vertices")
    if not (1 <= a <= n and 1 <= b <= n):
        raise GraphError(f"vertex out of range: {{{a},{b}}} for n={n}")
    return DistanceMatrix(_zero_update_rows(d.values.tolist(), a - 1, b - 1, counter))


def minmax_distance_bruteforce(g: Graph, x: Weighting, u: int, v: int) -> float:
    """Reference bottleneck distance by enumerating all simple u-v paths.

    Exponential; meant for small graphs as an independent check of
    `all_pairs_minmax`.
    """
    _check_weighting(g, x)
    if not (1 <= u <= g.n and 1 <= v <= g.n):
        raise GraphError(f"vertex out of range: {u} or {v} for n={g.n}")
    if u == v:
        return 0.0
    adj = g.adjacency
    index = g.edge_index
    best = float("inf")
    visited = [False] * (g.n + 1)
    visited[u] = True

    def walk(w: int, path_max: float) -> None:
        nonlocal best
        if w == v:
            if path_max < best:
                best = path_max
            return
        for nb in adj[w]:
            if not visited[nb]:
                ew = x.values[index[(w, nb) if w < nb else (nb, w)]]
                visited[nb] = True
                walk(nb, path_max if path_max >= ew else ew)
                visited[nb] = False

    walk(u, 0.0)
    return best
