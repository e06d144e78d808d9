"""Command-line front end.

Exit status: 0 success, 1 I/O failure, 2 usage or format error, 3 decoded
with uncorrectable blocks. ``-`` names standard input/output; binary data
goes to the output stream and diagnostics to standard error only.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from .channel import MAX_COVERAGE_M, SplitMix64, analyze
from .errors import HammingError
from .matrices import (
    find_column_permutation,
    parity_check_interleaved,
    parity_check_systematic,
)
from .params import BitBlock, CodeParams, derive_params
from .stream import decode_stream, encode_stream, pack_stream, unpack_stream
from .trace import render_trace

EXIT_OK = 0
EXIT_IO = 1
EXIT_USAGE = 2
EXIT_DEGRADED = 3


class UsageError(Exception):
    pass


def _read(path: str) -> bytes:
    if path == "-":
        return sys.stdin.buffer.read()
    with open(path, "rb") as fh:
        return fh.read()


def _write(path: str, data: bytes) -> None:
    if path == "-":
        sys.stdout.buffer.write(data)
        sys.stdout.buffer.flush()
    else:
        with open(path, "wb") as fh:
            fh.write(data)


def _text(data: str) -> None:
    # fixed encoding: output must not depend on the locale
    sys.stdout.buffer.write(data.encode("utf-8"))
    sys.stdout.buffer.flush()


def _diag(msg: str) -> None:
    print(msg, file=sys.stderr)


def _params(args: argparse.Namespace) -> CodeParams:
    if args.m is None:
        raise UsageError("--m is required" if args.k is None else "--k requires --m")
    if args.k is None:
        return derive_params(args.m)
    return CodeParams(args.m, args.k)


def _flip_spec(text: str) -> tuple[int, int]:
    block, sep, pos = text.partition(":")
    try:
        if not sep:
            raise ValueError
        return int(block), int(pos)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected BLOCK:POS, got {text!r}") from None


def cmd_encode(args: argparse.Namespace) -> int:
    params = _params(args)
    _write(args.output, encode_stream(_read(args.input), params))
    return EXIT_OK


def cmd_decode(args: argparse.Namespace) -> int:
    payload, report = decode_stream(_read(args.input))
    _write(args.output, payload)
    if args.report:
        for block, status, c in report.events():
            if c <= report.params.n:
                _diag(f"block {block}: corrected position {c}")
            else:
                _diag(f"block {block}: uncorrectable (checking number {c})")
        _diag(report.summary())
    elif report.degraded:
        _diag(f"warning: {report.uncorrectable_count} uncorrectable blocks")
    return EXIT_DEGRADED if report.degraded else EXIT_OK


def cmd_corrupt(args: argparse.Namespace) -> int:
    header, words = unpack_stream(_read(args.input))
    words = words.copy()
    blocks, n = words.shape
    if args.flip:
        for block, pos in args.flip:
            if not 0 <= block < blocks:
                raise UsageError(f"block {block} outside 0..{blocks - 1}")
            if not 1 <= pos <= n:
                raise UsageError(f"position {pos} outside 1..{n}")
            words[block, pos - 1] ^= 1
    else:
        words ^= SplitMix64(args.seed).bsc_mask(blocks, n, args.bsc)
    _write(args.output, pack_stream(header, words))
    return EXIT_OK


def cmd_analyze(args: argparse.Namespace) -> int:
    params = _params(args)
    if params.m > MAX_COVERAGE_M and not args.force:
        raise UsageError(f"m={params.m} exceeds the brute-force limit {MAX_COVERAGE_M}; use --force")
    report = analyze(params, force=args.force)
    h = parity_check_interleaved(params)
    hs = parity_check_systematic(params)
    perm = find_column_permutation(h, hs)
    out = [
        report.to_text().rstrip("\n"),
        "parity_check_interleaved:",
        h.to_grid(),
        "parity_check_systematic:",
        hs.to_grid(),
        "column_permutation: " + ",".join(map(str, perm.mapping)),
    ]
    _text("\n".join(out) + "\n")
    return EXIT_OK


def cmd_trace(args: argparse.Namespace) -> int:
    params = _params(args)
    word = BitBlock.parse(args.word)
    if len(word) != params.n:
        raise UsageError(f"--word must have {params.n} bits, got {len(word)}")
    _text(render_trace(word, params))
    return EXIT_OK


def _add_params(p: argparse.ArgumentParser) -> None:
    p.add_argument("--m", type=int, help="data bits per block")
    p.add_argument("--k", type=int, help="check bits per block (default: smallest valid)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hammingcode", description="Single-error-correcting Hamming block codes."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("encode", help="encode bytes into a coded stream")
    p.add_argument("input", nargs="?", default="-")
    p.add_argument("-o", "--output", default="-")
    _add_params(p)
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("decode", help="decode a coded stream back to bytes")
    p.add_argument("input", nargs="?", default="-")
    p.add_argument("-o", "--output", default="-")
    p.add_argument("--report", action="store_true", help="print per-block outcomes to stderr")
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("corrupt", help="flip bits in the codewords of a coded stream")
    p.add_argument("input", nargs="?", default="-")
    p.add_argument("-o", "--output", default="-")
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument(
        "--flip", type=_flip_spec, action="append", metavar="BLOCK:POS",
        help="flip 1-indexed position POS of 0-indexed block BLOCK (repeatable)",
    )
    mode.add_argument("--bsc", type=float, metavar="P", help="binary symmetric channel noise")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_corrupt)

    p = sub.add_parser("analyze", help="print code properties and matrices")
    _add_params(p)
    p.add_argument("--force", action="store_true", help="ignore brute-force size limits")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("trace", help="show the checking-number derivation for one word")
    _add_params(p)
    p.add_argument("--word", required=True, metavar="BITS")
    p.set_defaults(func=cmd_trace)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, HammingError) as exc:
        _diag(f"hammingcode {args.command}: error: {exc}")
        return EXIT_USAGE
    except OSError as exc:
        _diag(f"hammingcode {args.command}: I/O error: {exc}")
        return EXIT_IO


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
