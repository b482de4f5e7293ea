"""Byte-oriented frequency analysis."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterator, Tuple

from .errors import EmptyInput


@dataclass(frozen=True)
class FreqEntry:
    symbol: int
    count: int
    first_pos: int


@dataclass(frozen=True)
class FrequencyTable:
    """Distinct input bytes sorted by (count descending, first occurrence ascending)."""

    entries: Tuple[FreqEntry, ...]

    def __iter__(self) -> Iterator[FreqEntry]:
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    @property
    def total(self) -> int:
        return sum(e.count for e in self.entries)

    @property
    def symbols(self) -> list[int]:
        return [e.symbol for e in self.entries]

    def counts(self) -> dict[int, int]:
        return {e.symbol: e.count for e in self.entries}

    def pairs(self) -> list[tuple[int, int]]:
        return [(e.symbol, e.count) for e in self.entries]

    @classmethod
    def from_counts(cls, counts) -> "FrequencyTable":
        """Build a table from (symbol, count) pairs; pair order stands in for first occurrence."""
        seen = set()
        entries = []
        for pos, (sym, count) in enumerate(counts):
            if not 0 <= sym <= 255:
                raise ValueError(f"symbol {sym!r} is not a byte")
            if count < 1:
                raise ValueError(f"count for symbol {sym} must be positive")
            if sym in seen:
                raise ValueError(f"duplicate symbol {sym}")
            seen.add(sym)
            entries.append(FreqEntry(sym, count, pos))
        if not entries:
            raise EmptyInput("frequency table needs at least one symbol")
        entries.sort(key=lambda e: (-e.count, e.first_pos))
        return cls(tuple(entries))


def build_frequency_table(data: bytes) -> FrequencyTable:
    if not data:
        raise EmptyInput("nothing to code: input is empty")
    entries = [FreqEntry(b, c, data.index(b)) for b, c in Counter(data).items()]
    entries.sort(key=lambda e: (-e.count, e.first_pos))
    return FrequencyTable(tuple(entries))
