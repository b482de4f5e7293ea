"""Static Huffman construction with deterministic tie-breaking and canonical codes.

Bit strings are plain ``str`` objects over ``"0"``/``"1"``, first bit first.
"""
from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Hashable, Iterable, Sequence, Tuple

from .errors import KraftViolation, MissingSymbol, NoLeaves
from .freq import FrequencyTable

CLASSIC = "classic"
GROUPED_LITERAL = "grouped-literal"
GROUPED_PREFIX_FREE = "grouped-prefix-free"
MODES = (CLASSIC, GROUPED_LITERAL, GROUPED_PREFIX_FREE)


@dataclass(frozen=True)
class Codebook:
    """Symbol to bit string assignment plus how it was produced.

    ``codes`` follows the frequency-table order for classic books and group
    order (rank order inside each group) for grouped books. ``groups`` and
    ``group_codes`` are empty for classic books.
    """

    mode: str
    k: int
    codes: Tuple[Tuple[int, str], ...]
    groups: Tuple[Tuple[int, ...], ...] = ()
    group_codes: Tuple[str, ...] = ()
    _lookup: dict = field(default=None, init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.mode not in MODES:
            raise ValueError(f"unknown mode {self.mode!r}")
        object.__setattr__(self, "_lookup", dict(self.codes))

    def as_dict(self) -> dict[int, str]:
        return dict(self._lookup)

    def code_for(self, symbol: int) -> str:
        try:
            return self._lookup[symbol]
        except KeyError:
            raise MissingSymbol(f"symbol {symbol} has no code") from None

    @property
    def symbols(self) -> list[int]:
        return [s for s, _ in self.codes]

    def __len__(self) -> int:
        return len(self.codes)


def build_code_lengths(leaves: Sequence[Tuple[Hashable, int]]) -> list[Tuple[Hashable, int]]:
    """Optimal code lengths for ``(key, weight)`` leaves by repeated minimum-pair merging.

    Equal weights are resolved in favour of the node created first; input
    leaves count as created before any internal node, in input order. The
    first node popped becomes the left child. A single leaf gets length 1.
    """
    if not leaves:
        raise NoLeaves("cannot build a code over zero leaves")
    for key, w in leaves:
        if w < 1:
            raise ValueError(f"leaf {key!r} has non-positive weight {w}")
    n = len(leaves)
    if n == 1:
        return [(leaves[0][0], 1)]

    parent = [-1] * (2 * n - 1)
    heap = [(w, i) for i, (_, w) in enumerate(leaves)]
    heapq.heapify(heap)
    next_id = n
    while len(heap) > 1:
        w1, a = heapq.heappop(heap)
        w2, b = heapq.heappop(heap)
        parent[a] = parent[b] = next_id
        heapq.heappush(heap, (w1 + w2, next_id))
        next_id += 1

    # internal nodes are numbered after their children, so walk ids downward
    depth = [0] * (2 * n - 1)
    for node in range(2 * n - 3, -1, -1):
        depth[node] = depth[parent[node]] + 1
    return [(key, depth[i]) for i, (key, _) in enumerate(leaves)]


def kraft_sum_of_lengths(lengths: Iterable[int]) -> Fraction:
    return sum((Fraction(1, 2**L) for L in lengths), Fraction(0))


def assign_canonical_codes(lengths: Sequence[Tuple[Hashable, int]]) -> list[Tuple[Hashable, str]]:
    """Canonical code values for ``(key, length)`` pairs.

    Keys are ranked by length, then by their position in ``lengths``; codes
    count upward and shift left whenever the length grows. Output keeps the
    input order.
    """
    if not lengths:
        return []
    for key, L in lengths:
        if L < 1:
            raise KraftViolation(f"code length for {key!r} must be at least 1, got {L}")
    if kraft_sum_of_lengths(L for _, L in lengths) > 1:
        raise KraftViolation("code lengths violate the Kraft inequality")

    order = sorted(range(len(lengths)), key=lambda i: (lengths[i][1], i))
    out: list = [None] * len(lengths)
    code = 0
    prev_len = lengths[order[0]][1]
    for i in order:
        L = lengths[i][1]
        code <<= L - prev_len
        out[i] = (lengths[i][0], format(code, f"0{L}b"))
        code += 1
        prev_len = L
    return out


def weighted_code_cost(codes, table: FrequencyTable) -> int:
    """Total payload bits: sum of count times code length over the table."""
    lookup = codes.as_dict() if isinstance(codes, Codebook) else dict(codes)
    total = 0
    for e in table:
        if e.symbol not in lookup:
            raise MissingSymbol(f"symbol {e.symbol} has no code")
        total += e.count * len(lookup[e.symbol])
    return total


def classic_codebook(table: FrequencyTable) -> Codebook:
    lengths = build_code_lengths(table.pairs())
    return Codebook(CLASSIC, 1, tuple(assign_canonical_codes(lengths)))


def canonical_from_lengths(symbol_lengths: Sequence[Tuple[int, int]]) -> Codebook:
    """Rebuild a classic code book from stored ``(symbol, length)`` records."""
    return Codebook(CLASSIC, 1, tuple(assign_canonical_codes(symbol_lengths)))
