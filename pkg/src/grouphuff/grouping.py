"""Grouped Huffman coding.

Symbols are chunked in frequency order into groups of ``k``, a Huffman code
is built over the group totals, and every member code is derived from its
group's code. Two expansions are provided:

* literal: rank 1 keeps the group code, rank 2 gets ``"0"`` prepended and
  rank 3 gets ``"1"`` prepended. This is generally *not* uniquely decodable.
* prefix-free: each member gets the group code followed by a rank suffix
  drawn from a complete prefix code, which keeps the book decodable.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Tuple

from .errors import BadGroupSize, UnsupportedLiteralK
from .freq import FrequencyTable
from .huffman import (
    GROUPED_LITERAL,
    GROUPED_PREFIX_FREE,
    Codebook,
    assign_canonical_codes,
    build_code_lengths,
)

LITERAL_PREFIXES = ("", "0", "1")


@dataclass(frozen=True)
class SymbolGroup:
    index: int
    members: Tuple[Tuple[int, int], ...]  # (symbol, count) in rank order

    @property
    def aggregate(self) -> int:
        return sum(c for _, c in self.members)

    @property
    def symbols(self) -> Tuple[int, ...]:
        return tuple(s for s, _ in self.members)


@dataclass(frozen=True)
class GroupedPlan:
    k: int
    groups: Tuple[SymbolGroup, ...]
    group_codes: Tuple[str, ...]


def form_groups(table: FrequencyTable, k: int) -> list[SymbolGroup]:
    if k < 2:
        raise BadGroupSize(f"group size must be at least 2, got {k}")
    pairs = table.pairs()
    return [
        SymbolGroup(i, tuple(pairs[start:start + k]))
        for i, start in enumerate(range(0, len(pairs), k))
    ]


def plan_groups(table: FrequencyTable, k: int) -> GroupedPlan:
    groups = form_groups(table, k)
    lengths = build_code_lengths([(g.index, g.aggregate) for g in groups])
    codes = assign_canonical_codes(lengths)
    return GroupedPlan(k, tuple(groups), tuple(c for _, c in codes))


def suffix_code(m: int) -> list[str]:
    """Complete prefix code over ``m`` ranks, shortest words to the highest ranks.

    This is truncated binary: with ``b = ceil(log2 m)``, the first
    ``2**b - m`` ranks get ``b - 1`` bits and the rest get ``b``.
    """
    if m < 1:
        raise ValueError("a group needs at least one member")
    if m == 1:
        return [""]
    b = (m - 1).bit_length()
    short = 2**b - m
    lengths = [(r, b - 1 if r < short else b) for r in range(m)]
    return [c for _, c in assign_canonical_codes(lengths)]


def expand_literal(plan: GroupedPlan) -> Codebook:
    if plan.k not in (2, 3):
        raise UnsupportedLiteralK(f"literal expansion is only defined for k in {{2, 3}}, got {plan.k}")
    codes = []
    for group, gc in zip(plan.groups, plan.group_codes):
        for rank, sym in enumerate(group.symbols):
            codes.append((sym, LITERAL_PREFIXES[rank] + gc))
    return Codebook(
        GROUPED_LITERAL, plan.k, tuple(codes),
        tuple(g.symbols for g in plan.groups), plan.group_codes,
    )


def expand_prefix_free(plan: GroupedPlan) -> Codebook:
    codes = []
    for group, gc in zip(plan.groups, plan.group_codes):
        for sym, suffix in zip(group.symbols, suffix_code(len(group.members))):
            codes.append((sym, gc + suffix))
    return Codebook(
        GROUPED_PREFIX_FREE, plan.k, tuple(codes),
        tuple(g.symbols for g in plan.groups), plan.group_codes,
    )


def grouped_codebook(table: FrequencyTable, k: int, mode: str) -> Codebook:
    if mode == GROUPED_LITERAL:
        # fail before doing any work on an unsupported k
        if k not in (2, 3):
            raise UnsupportedLiteralK(f"literal expansion is only defined for k in {{2, 3}}, got {k}")
        return expand_literal(plan_groups(table, k))
    if mode == GROUPED_PREFIX_FREE:
        return expand_prefix_free(plan_groups(table, k))
    raise ValueError(f"{mode!r} is not a grouped mode")


def rebuild_grouped(mode: str, k: int, groups: Sequence[Sequence[int]], group_lengths: Sequence[int]) -> Codebook:
    """Reconstruct a grouped book from member lists and group code lengths alone."""
    group_codes = tuple(c for _, c in assign_canonical_codes(list(enumerate(group_lengths))))
    plan = GroupedPlan(
        k,
        tuple(SymbolGroup(i, tuple((s, 1) for s in g)) for i, g in enumerate(groups)),
        group_codes,
    )
    if mode == GROUPED_LITERAL:
        return expand_literal(plan)
    if mode == GROUPED_PREFIX_FREE:
        return expand_prefix_free(plan)
    raise ValueError(f"{mode!r} is not a grouped mode")
