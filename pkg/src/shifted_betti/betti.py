"""Graded Betti tables and their text/JSON renderings."""

from __future__ import annotations

from collections.abc import Mapping
from typing import Iterable, Iterator


class BettiTable(Mapping):
    """Sparse map ``(i, j) -> beta_{i,j}`` with ``j`` the internal degree.

    Missing keys read as 0, and zero entries are never stored, so two tables
    compare equal exactly when they agree everywhere.
    """

    def __init__(self, entries: Mapping[tuple[int, int], int] | Iterable = ()):
        items = entries.items() if isinstance(entries, Mapping) else entries
        self._data: dict[tuple[int, int], int] = {}
        for (i, j), beta in items:
            if beta < 0:
                raise ValueError(f"negative Betti number at {(i, j)}")
            if beta:
                self._data[(i, j)] = self._data.get((i, j), 0) + beta

    def __getitem__(self, key: tuple[int, int]) -> int:
        return self._data.get(key, 0)

    def __contains__(self, key: object) -> bool:
        return key in self._data

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(sorted(self._data, key=lambda ij: (ij[1], ij[0])))

    def __len__(self) -> int:
        return len(self._data)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, BettiTable):
            return self._data == other._data
        if isinstance(other, Mapping):
            return self._data == {k: v for k, v in other.items() if v}
        return NotImplemented

    def __repr__(self) -> str:
        body = ", ".join(f"{k}: {self._data[k]}" for k in self)
        return f"BettiTable({{{body}}})"

    def __add__(self, other: "BettiTable") -> "BettiTable":
        return BettiTable(list(self._data.items()) + list(other._data.items()))

    def strand(self, i: int, d: int) -> int:
        """``beta_{i, i+d}``: entry at row ``d``, column ``i`` of the table."""
        return self[(i, i + d)]

    @property
    def rows(self) -> list[int]:
        return sorted({j - i for i, j in self._data})

    @property
    def max_index(self) -> int:
        return max((i for i, _ in self._data), default=-1)

    def row(self, d: int) -> list[int]:
        return [self.strand(i, d) for i in range(self.max_index + 1)]

    def totals(self) -> list[int]:
        out = [0] * (self.max_index + 1)
        for (i, _), beta in self._data.items():
            out[i] += beta
        return out

    def regularity(self) -> int | None:
        return max(self.rows, default=None)

    def to_text(self) -> str:
        """Layout of the usual Betti diagram: columns are homological
        degrees, rows are strands ``j - i``, ``.`` marks a zero."""
        if not self._data:
            return "total: 0"
        rows = self.rows
        ncols = self.max_index + 1
        labels = ["total:"] + [f"{d}:" for d in range(rows[0], rows[-1] + 1)]
        body = [self.totals()] + [self.row(d) for d in range(rows[0], rows[-1] + 1)]
        cells = [[str(b) if b else "." for b in r] for r in body]
        width = max(len(c) for r in cells for c in r)
        width = max(width, len(str(ncols - 1)))
        lw = max(len(label) for label in labels)
        lines = [" " * lw + " " + " ".join(str(i).rjust(width) for i in range(ncols))]
        for label, r in zip(labels, cells):
            lines.append(label.rjust(lw) + " " + " ".join(c.rjust(width) for c in r))
        return "\n".join(lines)

    def to_json(self) -> dict:
        return {"entries": [{"i": i, "j": j, "beta": self._data[(i, j)]} for i, j in self]}

    @classmethod
    def from_json(cls, doc: Mapping) -> "BettiTable":
        return cls(((e["i"], e["j"]), e["beta"]) for e in doc["entries"])
