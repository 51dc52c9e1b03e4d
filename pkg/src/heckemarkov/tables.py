"""Partition-indexed matrices and verification reports.

Every matrix in this package is square over the canonical partition order
(descending lex), rows first index, columns second.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .partitions import enumerate_partitions, format_partition
from .ratfun import RatFun


@dataclass
class PartitionTable:
    """Square matrix of RatFun entries indexed by partitions of n."""

    n: int
    kind: str
    entries: list  # list of rows, each a list of RatFun
    order: tuple = None

    def __post_init__(self):
        if self.order is None:
            self.order = enumerate_partitions(self.n)
        self._index = {p: i for i, p in enumerate(self.order)}

    def value(self, row, col) -> RatFun:
        return self.entries[self._index[row]][self._index[col]]

    def row(self, p) -> list:
        return list(self.entries[self._index[p]])

    def map_entries(self, fn) -> "PartitionTable":
        return PartitionTable(
            self.n,
            self.kind,
            [[fn(e) for e in row] for row in self.entries],
            self.order,
        )

    def matmul(self, other: "PartitionTable", kind=None) -> "PartitionTable":
        assert self.order == other.order
        size = len(self.order)
        rows = []
        for i in range(size):
            row = []
            for j in range(size):
                acc = RatFun.const(0)
                for k in range(size):
                    term = self.entries[i][k] * other.entries[k][j]
                    if not term.is_zero():
                        acc = acc + term
                row.append(acc)
            rows.append(row)
        return PartitionTable(self.n, kind or self.kind, rows, self.order)

    def equals(self, other: "PartitionTable") -> bool:
        return self.order == other.order and all(
            a == b
            for ra, rb in zip(self.entries, other.entries)
            for a, b in zip(ra, rb)
        )

    def first_difference(self, other: "PartitionTable"):
        for i, p in enumerate(self.order):
            for j, q in enumerate(self.order):
                if self.entries[i][j] != other.entries[i][j]:
                    return p, q
        return None

    def to_json(self):
        from .serialize import ratfun_to_json

        return {
            "n": self.n,
            "kind": self.kind,
            "order": [format_partition(p) for p in self.order],
            "entries": [[ratfun_to_json(e) for e in row] for row in self.entries],
        }


@dataclass
class Report:
    """Outcome of one named verification at a given n."""

    check: str
    n: int
    failures: list = field(default_factory=list)
    notes: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures

    def add_failure(self, lam, beta, lhs, rhs):
        self.failures.append(
            {
                "lambda": format_partition(lam),
                "beta": format_partition(beta),
                "lhs": str(lhs),
                "rhs": str(rhs),
            }
        )

    def to_json(self):
        out = {
            "check": self.check,
            "n": self.n,
            "status": "pass" if self.passed else "fail",
            "failures": self.failures,
        }
        if self.notes:
            out["notes"] = self.notes
        return out
