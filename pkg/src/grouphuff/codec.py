"""Container format, payload bit packing and tree-walk decoding.

Layout, all integers big-endian::

    magic "GHC1" | version (1) | code-book header | payload_bit_count (u64) | payload

The code-book header is ``mode (u8) | k (u8) | n (u16)`` followed by either
``n x (symbol u8, length u8)`` for classic books, or for grouped books
``g (u16)`` and ``g x (m u8, m member bytes, group code length u8)``. Code
values are never stored; they are rebuilt canonically from the lengths.
"""
from __future__ import annotations

import struct
from dataclasses import dataclass

from .analysis import build_codebook, prefix_violations
from .errors import (
    AmbiguousCodebook,
    BadMagic,
    BadVersion,
    HuffmanError,
    InvalidCodeword,
    MalformedHeader,
    MissingSymbol,
    TrailingGarbage,
    TruncatedPayload,
)
from .freq import build_frequency_table
from .grouping import rebuild_grouped
from .huffman import CLASSIC, GROUPED_LITERAL, GROUPED_PREFIX_FREE, Codebook, canonical_from_lengths

MAGIC = b"GHC1"
VERSION = 1
MODE_IDS = {CLASSIC: 0, GROUPED_LITERAL: 1, GROUPED_PREFIX_FREE: 2}
MODE_NAMES = {v: k for k, v in MODE_IDS.items()}


@dataclass(frozen=True)
class Container:
    codebook: Codebook
    payload_bit_count: int
    payload: bytes

    def to_bytes(self) -> bytes:
        return b"".join((
            MAGIC,
            bytes([VERSION]),
            serialize_header(self.codebook),
            struct.pack(">Q", self.payload_bit_count),
            self.payload,
        ))

    @classmethod
    def from_bytes(cls, data: bytes) -> "Container":
        if data[:4] != MAGIC:
            raise BadMagic(f"expected magic {MAGIC!r}, got {bytes(data[:4])!r}")
        if len(data) < 5:
            raise MalformedHeader("container ends before the version byte")
        if data[4] != VERSION:
            raise BadVersion(f"unsupported container version {data[4]}")
        book, pos = _parse_header(data, 5)
        if len(data) < pos + 8:
            raise MalformedHeader("container ends before the payload bit count")
        (nbits,) = struct.unpack_from(">Q", data, pos)
        payload = bytes(data[pos + 8:])
        if len(payload) != (nbits + 7) // 8:
            if len(payload) < (nbits + 7) // 8:
                raise TruncatedPayload(f"payload holds {len(payload)} bytes, {nbits} bits declared")
            raise TrailingGarbage(f"{len(payload) - (nbits + 7) // 8} bytes beyond the declared payload")
        return cls(book, nbits, payload)


def serialize_header(codebook: Codebook) -> bytes:
    out = bytearray(struct.pack(">BBH", MODE_IDS[codebook.mode], codebook.k, len(codebook.codes)))
    if codebook.mode == CLASSIC:
        for sym, code in codebook.codes:
            out += bytes((sym, len(code)))
    else:
        out += struct.pack(">H", len(codebook.groups))
        for members, gc in zip(codebook.groups, codebook.group_codes):
            out.append(len(members))
            out += bytes(members)
            out.append(len(gc))
    return bytes(out)


def deserialize_header(data: bytes) -> Codebook:
    book, pos = _parse_header(data, 0)
    if pos != len(data):
        raise MalformedHeader(f"{len(data) - pos} unexpected bytes after the header")
    return book


def _take(data: bytes, pos: int, size: int) -> bytes:
    if pos + size > len(data):
        raise MalformedHeader("header is truncated")
    return bytes(data[pos:pos + size])


def _parse_header(data: bytes, pos: int) -> tuple[Codebook, int]:
    mode_id, k, n = struct.unpack(">BBH", _take(data, pos, 4))
    pos += 4
    if mode_id not in MODE_NAMES:
        raise MalformedHeader(f"unknown mode byte {mode_id}")
    mode = MODE_NAMES[mode_id]
    if n == 0 or n > 256:
        raise MalformedHeader(f"symbol count {n} is out of range")

    if mode == CLASSIC:
        if k != 1:
            raise MalformedHeader(f"classic header must carry k=1, got {k}")
        raw = _take(data, pos, 2 * n)
        pos += 2 * n
        records = [(raw[i], raw[i + 1]) for i in range(0, 2 * n, 2)]
        symbols = [s for s, _ in records]
        lengths = [L for _, L in records]
    else:
        if k < 2 or (mode == GROUPED_LITERAL and k > 3):
            raise MalformedHeader(f"group size {k} is invalid for mode {mode}")
        (g,) = struct.unpack(">H", _take(data, pos, 2))
        pos += 2
        groups, lengths = [], []
        for _ in range(g):
            m = _take(data, pos, 1)[0]
            if not 1 <= m <= k:
                raise MalformedHeader(f"group of {m} members with k={k}")
            members = _take(data, pos + 1, m)
            lengths.append(_take(data, pos + 1 + m, 1)[0])
            groups.append(tuple(members))
            pos += m + 2
        symbols = [s for grp in groups for s in grp]
        if len(symbols) != n:
            raise MalformedHeader(f"groups hold {len(symbols)} symbols, header says {n}")

    if len(set(symbols)) != len(symbols):
        raise MalformedHeader("a symbol appears more than once")
    try:
        if mode == CLASSIC:
            book = canonical_from_lengths(records)
        else:
            book = rebuild_grouped(mode, k, groups, lengths)
    except HuffmanError as exc:
        raise MalformedHeader(f"stored code lengths are unusable: {exc}") from exc
    return book, pos


def pack_bits(bits: str) -> bytes:
    if not bits:
        return b""
    pad = -len(bits) % 8
    return int(bits + "0" * pad, 2).to_bytes((len(bits) + pad) // 8, "big")


def unpack_bits(payload: bytes, nbits: int) -> str:
    if not payload:
        return ""
    bits = format(int.from_bytes(payload, "big"), f"0{8 * len(payload)}b")
    if "1" in bits[nbits:]:
        raise TrailingGarbage("padding bits after the payload are not zero")
    return bits[:nbits]


def encode_payload(data: bytes, codebook: Codebook) -> Container:
    table = [None] * 256
    for sym, code in codebook.codes:
        table[sym] = code
    try:
        bits = "".join([table[b] for b in data])
    except TypeError:
        missing = next(b for b in data if table[b] is None)
        raise MissingSymbol(f"byte {missing} has no code in the code book") from None
    return Container(codebook, len(bits), pack_bits(bits))


def build_decoding_tree(codebook: Codebook) -> list:
    """Binary trie as nested ``[left, right]`` lists with symbol ints at the leaves."""
    report = prefix_violations(codebook)
    if not report.decodable:
        raise AmbiguousCodebook(
            f"code book is not uniquely decodable: {len(report.duplicate_pairs)} duplicate and "
            f"{len(report.prefix_pairs)} prefix conflicts"
        )
    root = [None, None]
    for sym, code in codebook.codes:
        node = root
        for bit in code[:-1]:
            b = bit == "1"
            if node[b] is None:
                node[b] = [None, None]
            node = node[b]
        node[code[-1] == "1"] = sym
    return root


def decode_payload(container: Container) -> bytes:
    root = build_decoding_tree(container.codebook)
    bits = unpack_bits(container.payload, container.payload_bit_count)
    if len(bits) < container.payload_bit_count:
        raise TruncatedPayload("payload is shorter than its declared bit count")
    out = bytearray()
    node = root
    for bit in bits:
        node = node[bit == "1"]
        if node is None:
            raise InvalidCodeword(f"bit path leaves the decoding tree after {len(out)} symbols")
        if type(node) is int:
            out.append(node)
            node = root
    if node is not root:
        raise TruncatedPayload("payload ends in the middle of a codeword")
    return bytes(out)


def compress(data: bytes, mode: str = CLASSIC, k: int = 1) -> bytes:
    book = build_codebook(build_frequency_table(data), mode, k)
    return encode_payload(data, book).to_bytes()


def decompress(blob: bytes) -> bytes:
    return decode_payload(Container.from_bytes(blob))
