"""Tallies of (min, max, +) operations performed by the branch-free solvers."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class OpCounts:
    """Immutable record of how many min/max/add operations a run performed."""

    min_count: int
    max_count: int
    add_count: int

    @property
    def total(self) -> int:
        return self.min_count + self.max_count + self.add_count

    def as_dict(self) -> dict[str, int]:
        return {
            "min": self.min_count,
            "max": self.max_count,
            "add": self.add_count,
            "total": self.total,
        }


class OpCounter:
    """Mutable accumulator threaded through the numeric kernels.

    The kernels bump the counters by their actual loop trip counts, so the
    final numbers reflect what a run really executed (the closed forms in
    `solver` and the node tallies in `circuit` must agree with them exactly).
    """

    __slots__ = ("min_count", "max_count", "add_count")

    def __init__(self) -> None:
        self.min_count = 0
        self.max_count = 0
        self.add_count = 0

    def snapshot(self) -> OpCounts:
        return OpCounts(self.min_count, self.max_count, self.add_count)
