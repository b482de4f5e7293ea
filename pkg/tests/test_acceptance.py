"""Exit criteria for the package, one test per criterion.

A PASS/FAIL line per criterion is printed in the terminal summary.
"""
import random
import time
from fractions import Fraction

import pytest

from grouphuff import (
    CLASSIC,
    GROUPED_LITERAL,
    GROUPED_PREFIX_FREE,
    AmbiguousCodebook,
    FrequencyTable,
    build_frequency_table,
    classic_codebook,
    compress,
    compression_report,
    decompress,
    deserialize_header,
    form_groups,
    grouped_codebook,
    header_overhead,
    kraft_sum,
    prefix_violations,
    serialize_header,
    weighted_code_cost,
)
from grouphuff.analysis import compression_ratio
from grouphuff.grouping import plan_groups
from grouphuff.huffman import kraft_sum_of_lengths
from oracles import brute_force_min_cost, merge_cost

PAPER = b"IEEECOMPUTATIONALINTELLIGENCE"

# books produced by criteria 7 and 8, checked by criterion 9
EMITTED = []


def _named(groups):
    return [("".join(map(chr, g.symbols)), g.aggregate) for g in groups]


def test_criterion_01_frequency_table():
    expected = [("E", 6), ("I", 4), ("T", 3), ("N", 3), ("L", 3), ("C", 2),
                ("O", 2), ("A", 2), ("M", 1), ("P", 1), ("U", 1), ("G", 1)]
    best = float("inf")
    for _ in range(20):
        t0 = time.perf_counter()
        table = build_frequency_table(PAPER)
        best = min(best, time.perf_counter() - t0)
    assert [(chr(s), c) for s, c in table.pairs()] == expected
    assert best < 1e-3


def test_criterion_02_grouping_tables():
    table = build_frequency_table(PAPER)
    assert _named(form_groups(table, 2)) == [("EI", 10), ("TN", 6), ("LC", 5), ("OA", 4), ("MP", 2), ("UG", 2)]
    assert _named(form_groups(table, 3)) == [("EIT", 13), ("NLC", 8), ("OAM", 5), ("PUG", 3)]


def test_criterion_03_group_codes():
    assert plan_groups(build_frequency_table(PAPER), 3).group_codes == ("0", "10", "110", "111")


def test_criterion_04_bit_totals():
    table = build_frequency_table(PAPER)
    # independent arithmetic, frozen before the library was written
    assert merge_cost([c for _, c in table.pairs()]) == 98
    expected = {
        (CLASSIC, 1): 98,
        (GROUPED_LITERAL, 2): 83,
        (GROUPED_LITERAL, 3): 70,
        (GROUPED_PREFIX_FREE, 2): 99,
        (GROUPED_PREFIX_FREE, 3): 99,
    }
    for (mode, k), bits in expected.items():
        book = classic_codebook(table) if mode == CLASSIC else grouped_codebook(table, k, mode)
        assert weighted_code_cost(book, table) == bits, (mode, k)

    doc = compression_report(PAPER).to_dict()
    rows = {r["scheme"]: r for r in doc["rows"]}
    assert (rows["classic"]["payload_bits"], rows["classic"]["paper_bits"]) == (98, [100, 99])
    assert (rows["grouped-literal k=2"]["payload_bits"], rows["grouped-literal k=2"]["paper_bits"]) == (83, [82])
    assert (rows["grouped-literal k=3"]["payload_bits"], rows["grouped-literal k=3"]["paper_bits"]) == (70, [77])


def test_criterion_05_ratio_reproduction():
    report = compression_report(PAPER)
    assert report.baseline_bits == 232
    assert round(compression_ratio(232, 99), 2) == Fraction(5733, 100)
    classic = report.row("classic")
    assert classic.ratio == Fraction(232 - 98, 232) * 100
    assert round(classic.ratio, 2) == Fraction(5776, 100)


def test_criterion_06_flaw_detection(tmp_path):
    book = grouped_codebook(build_frequency_table(PAPER), 3, GROUPED_LITERAL)
    report = prefix_violations(book)
    assert (ord("T"), ord("N")) in report.duplicate_pairs
    assert len(report.prefix_pairs) >= 1
    for k in (2, 3):
        with pytest.raises(AmbiguousCodebook):
            decompress(compress(PAPER, GROUPED_LITERAL, k))


def test_criterion_07_round_trip_suite():
    rnd = random.Random(20261016)
    schemes = [(CLASSIC, 1)] + [(GROUPED_PREFIX_FREE, k) for k in (2, 3, 4, 5)]
    t0 = time.perf_counter()
    for _ in range(1000):
        alphabet = rnd.sample(range(256), rnd.randint(1, 64))
        weights = [rnd.random() ** 3 + 1e-3 for _ in alphabet]
        data = bytes(rnd.choices(alphabet, weights, k=rnd.randint(1, 4096)))
        table = build_frequency_table(data)
        for mode, k in schemes:
            book = classic_codebook(table) if mode == CLASSIC else grouped_codebook(table, k, mode)
            EMITTED.append(book)
            assert decompress(compress(data, mode, k)) == data
    assert time.perf_counter() - t0 < 30


def test_criterion_08_optimality_suite():
    rnd = random.Random(8)
    for _ in range(200):
        counts = [rnd.randint(1, 6) for _ in range(rnd.randint(1, 8))]
        table = FrequencyTable.from_counts(list(enumerate(counts)))
        classic = classic_codebook(table)
        cost = weighted_code_cost(classic, table)
        assert cost == brute_force_min_cost(counts), counts
        EMITTED.append(classic)
        for k in (2, 3, 4, 5):
            book = grouped_codebook(table, k, GROUPED_PREFIX_FREE)
            EMITTED.append(book)
            assert weighted_code_cost(book, table) >= cost


def test_criterion_09_kraft_suite():
    if not EMITTED:
        test_criterion_07_round_trip_suite()
        test_criterion_08_optimality_suite()
    for book in EMITTED:
        if book.mode == CLASSIC:
            if len(book) >= 2:
                assert kraft_sum(book) == 1
        elif len(book.groups) >= 2:
            assert kraft_sum_of_lengths(map(len, book.group_codes)) == 1
            assert kraft_sum(book) == 1
        assert prefix_violations(book).decodable


def test_criterion_10_header_accounting():
    table = build_frequency_table(PAPER)
    classic = classic_codebook(table)
    assert 8 * len(serialize_header(classic)) == header_overhead(classic) == 224
    k3 = grouped_codebook(table, 3, GROUPED_PREFIX_FREE)
    assert 8 * len(serialize_header(k3)) == header_overhead(k3) == 208
    golden = [classic] + [grouped_codebook(table, k, m) for m in (GROUPED_LITERAL, GROUPED_PREFIX_FREE) for k in (2, 3)]
    for book in golden:
        raw = serialize_header(book)
        assert 8 * len(raw) == header_overhead(book)
        assert deserialize_header(raw) == book
        assert serialize_header(deserialize_header(raw)) == raw
