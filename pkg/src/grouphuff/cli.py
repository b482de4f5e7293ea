"""Command-line entry point: ``grouphuff {analyze,encode,decode,bench}``."""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from .analysis import (
    SCHEMES,
    build_codebook,
    compression_ratio,
    compression_report,
    format_percent,
    prefix_violations,
)
from .codec import Container, decode_payload, encode_payload
from .errors import AmbiguousCodebook, ContainerError, EmptyInput, HuffmanError, KraftViolation
from .freq import build_frequency_table
from .huffman import CLASSIC, MODES

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_CODEBOOK = 2
EXIT_IO = 3
EXIT_CONTAINER = 4


class UsageError(Exception):
    pass


@dataclass
class CliConfig:
    command: str
    inputs: list
    output: Optional[str] = None
    mode: str = CLASSIC
    k: Optional[int] = None
    format: str = "text"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="grouphuff", description="Classic and grouped Huffman coding.")
    parser.add_argument("command", choices=["analyze", "encode", "decode", "bench"])
    parser.add_argument("--input", "-i", action="append", required=True,
                        help="input file (a corpus directory for bench); repeatable for analyze")
    parser.add_argument("--output", "-o", help="output file; defaults to stdout")
    parser.add_argument("--mode", choices=MODES, default=CLASSIC)
    parser.add_argument("--k", type=int, help="group size for grouped modes")
    parser.add_argument("--format", choices=["text", "json"], default="text")
    return parser


def parse_config(argv) -> CliConfig:
    ns = build_parser().parse_args(argv)
    cfg = CliConfig(ns.command, ns.input, ns.output, ns.mode, ns.k, ns.format)
    if cfg.command == "encode":
        if len(cfg.inputs) != 1:
            raise UsageError("encode takes exactly one --input")
        if cfg.mode == CLASSIC:
            cfg.k = 1
        elif cfg.k is None:
            raise UsageError(f"--k is required for mode {cfg.mode}")
    if cfg.command in ("decode", "bench") and len(cfg.inputs) != 1:
        raise UsageError(f"{cfg.command} takes exactly one --input")
    return cfg


def symbol_label(sym: int) -> str:
    ch = chr(sym)
    return ch if 0x21 <= sym <= 0x7E else f"0x{sym:02X}"


def analyze_document(data: bytes, name: str = "") -> dict:
    table = build_frequency_table(data)
    report = compression_report(data)
    books = []
    for row in report.rows:
        if row.codebook is None:
            continue
        v = prefix_violations(row.codebook)
        books.append({
            "scheme": row.scheme,
            "codes": [[symbol_label(s), c] for s, c in row.codebook.codes],
            "groups": [[symbol_label(s) for s in g] for g in row.codebook.groups],
            "group_codes": list(row.codebook.group_codes),
            "kraft_sum": str(v.kraft_sum),
            "duplicate_pairs": [[symbol_label(a), symbol_label(b)] for a, b in v.duplicate_pairs],
            "prefix_pairs": [[symbol_label(a), symbol_label(b)] for a, b in v.prefix_pairs],
            "decodable": v.decodable,
        })
    return {
        "file": name,
        "frequency_table": [[symbol_label(e.symbol), e.count] for e in table],
        "codebooks": books,
        "report": report.to_dict(),
    }


def render_report_text(rep: dict) -> list[str]:
    lines = [f"input bytes: {rep['input_bytes']}  baseline bits: {rep['baseline_bits']}"]
    paper = any("paper_bits" in r for r in rep["rows"])
    head = f"  {'scheme':<24} {'payload':>8} {'header':>7} {'total':>7} {'ratio':>8}  {'exact':<10} decodable"
    if paper:
        head += "  | paper bits  paper ratio  paper recomputed"
    lines.append(head)
    for r in rep["rows"]:
        line = (f"  {r['scheme']:<24} {r['payload_bits']:>8} {r['header_bits']:>7} {r['total_bits']:>7} "
                f"{r['ratio_percent']:>8}  {r['ratio_percent_exact']:<10} {str(r['decodable']).lower():<9}")
        if "paper_bits" in r:
            line += (f"  | {'/'.join(map(str, r['paper_bits'])):<10}  {r['paper_ratio']:<11}  "
                     f"{' / '.join(r['paper_ratio_recomputed'])}")
        lines.append(line.rstrip())
    return lines


def render_analysis_text(doc: dict) -> str:
    lines = []
    if doc["file"]:
        lines.append(f"== {doc['file']}")
    lines.append("frequency table:")
    lines.append("  " + " ".join(f"{s}:{c}" for s, c in doc["frequency_table"]))
    for b in doc["codebooks"]:
        lines.append(f"code book [{b['scheme']}]:")
        if b["groups"]:
            lines.append("  groups: " + " ".join(
                f"{''.join(g) if all(len(s) == 1 for s in g) else ','.join(g)}={gc}"
                for g, gc in zip(b["groups"], b["group_codes"])))
        lines.append("  codes: " + " ".join(f"{s}={c}" for s, c in b["codes"]))
        lines.append(f"  kraft sum: {b['kraft_sum']}  decodable: {str(b['decodable']).lower()}")
        if b["duplicate_pairs"]:
            lines.append("  duplicate pairs: " + " ".join(f"({a},{c})" for a, c in b["duplicate_pairs"]))
        if b["prefix_pairs"]:
            lines.append("  prefix pairs: " + " ".join(f"({a},{c})" for a, c in b["prefix_pairs"]))
    lines.append("comparison:")
    lines.extend(render_report_text(doc["report"]))
    return "\n".join(lines) + "\n"


def bench_document(directory: Path) -> dict:
    files = []
    totals = {name: {"payload_bits": 0, "header_bits": 0} for name, _, _ in SCHEMES}
    baseline = 0
    skipped = []
    for path in sorted(p for p in directory.rglob("*") if p.is_file()):
        data = path.read_bytes()
        if not data:
            skipped.append(str(path))
            continue
        rep = compression_report(data).to_dict()
        files.append({"file": str(path), "report": rep})
        baseline += rep["baseline_bits"]
        for r in rep["rows"]:
            totals[r["scheme"]]["payload_bits"] += r["payload_bits"]
            totals[r["scheme"]]["header_bits"] += r["header_bits"]
    aggregate = []
    for name, t in totals.items():
        row = {"scheme": name, **t, "total_bits": t["payload_bits"] + t["header_bits"]}
        if baseline:
            row["ratio_percent"] = format_percent(compression_ratio(baseline, t["payload_bits"]))
        aggregate.append(row)
    return {"files": files, "skipped_empty": skipped, "baseline_bits": baseline, "aggregate": aggregate}


def render_bench_text(doc: dict) -> str:
    lines = []
    for f in doc["files"]:
        lines.append(f"== {f['file']}")
        lines.extend(render_report_text(f["report"]))
    for s in doc["skipped_empty"]:
        lines.append(f"== {s} (empty, skipped)")
    lines.append(f"== aggregate (baseline bits: {doc['baseline_bits']})")
    for r in doc["aggregate"]:
        lines.append(f"  {r['scheme']:<24} {r['payload_bits']:>10} {r['header_bits']:>8} "
                     f"{r['total_bits']:>10} {r.get('ratio_percent', '-'):>8}")
    return "\n".join(lines) + "\n"


def _emit(cfg: CliConfig, payload) -> None:
    if isinstance(payload, str):
        payload = payload.encode()
    if cfg.output:
        Path(cfg.output).write_bytes(payload)
    else:
        sys.stdout.buffer.write(payload)
        sys.stdout.flush()


def _render(cfg: CliConfig, doc, text_renderer) -> str:
    if cfg.format == "json":
        return json.dumps(doc, indent=2) + "\n"
    return text_renderer(doc)


def run(cfg: CliConfig) -> int:
    try:
        if cfg.command == "analyze":
            docs = [analyze_document(Path(p).read_bytes(), p) for p in cfg.inputs]
            if cfg.format == "json":
                out = json.dumps(docs[0] if len(docs) == 1 else docs, indent=2) + "\n"
            else:
                out = "".join(render_analysis_text(d) for d in docs)
            _emit(cfg, out)
        elif cfg.command == "encode":
            data = Path(cfg.inputs[0]).read_bytes()
            book = build_codebook(build_frequency_table(data), cfg.mode, cfg.k)
            if not prefix_violations(book).decodable:
                print(f"warning: {cfg.mode} k={cfg.k} code book is not uniquely decodable; "
                      "the container cannot be decoded", file=sys.stderr)
            _emit(cfg, encode_payload(data, book).to_bytes())
        elif cfg.command == "decode":
            container = Container.from_bytes(Path(cfg.inputs[0]).read_bytes())
            _emit(cfg, decode_payload(container))
        elif cfg.command == "bench":
            directory = Path(cfg.inputs[0])
            if not directory.is_dir():
                raise NotADirectoryError(f"{directory} is not a directory")
            _emit(cfg, _render(cfg, bench_document(directory), render_bench_text))
    except (AmbiguousCodebook, KraftViolation) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_CODEBOOK
    except ContainerError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_CONTAINER
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (EmptyInput, HuffmanError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


def main(argv=None) -> int:
    try:
        cfg = parse_config(sys.argv[1:] if argv is None else argv)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
