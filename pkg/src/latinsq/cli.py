"""Command-line surface: generate, validate, convert, count, bench.

Formats
    grid  n lines of n space-separated symbols in 1..n
    exp   same layout, cells as the powers of two 2**0 .. 2**(n-1)
    json  {"order": n, "cells": [[...]]} with standard symbols; several
          squares become an array of such objects
Text output is newline-terminated ASCII; multiple squares are separated
by one blank line.

Exit codes
    0  success / square is valid
    1  square is invalid
    2  usage or input error
    3  row-restart budget exhausted
"""

import argparse
import json
import secrets
import statistics
import sys
import time
from pathlib import Path

from .errors import LatinSqError, MalformedMatrix, RestartBudgetExhausted
from .latin_gen import (
    DEFAULT_RESTART_BUDGET,
    ExponentialLatinSquare,
    LatinSquare,
    generate,
    to_exponential,
    to_standard,
)
from .mask_set import check_order
from .oracle_enum import count_all
from .rng_choice import RandomSource
from .validator import is_exponential_latin, is_latin

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_USAGE = 2
EXIT_RESTART_BUDGET = 3


# ---------------------------------------------------------------- formats


def _read_source(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text(encoding="utf-8")


def _looks_like_json(text: str) -> bool:
    head = text.lstrip()[:1]
    return head in ("{", "[")


def _parse_text(text: str) -> list[list[list[int]]]:
    """Blank-line separated blocks of whitespace-separated integer rows."""
    blocks: list[list[list[int]]] = []
    current: list[list[int]] = []
    for line in text.splitlines():
        if line.strip():
            try:
                current.append([int(tok) for tok in line.split()])
            except ValueError:
                raise MalformedMatrix(f"not an integer row: {line.strip()!r}") from None
        elif current:
            blocks.append(current)
            current = []
    if current:
        blocks.append(current)
    if not blocks:
        raise MalformedMatrix("no matrix found in input")
    return blocks


def _parse_json(text: str) -> list[list[list[int]]]:
    data = json.loads(text)
    items = data if isinstance(data, list) else [data]
    matrices = []
    for item in items:
        if not isinstance(item, dict) or "order" not in item or "cells" not in item:
            raise MalformedMatrix('JSON square must be {"order": n, "cells": [[...]]}')
        order, cells = item["order"], item["cells"]
        if (
            not isinstance(order, int)
            or not isinstance(cells, list)
            or len(cells) != order
            or any(not isinstance(row, list) or len(row) != order for row in cells)
        ):
            raise MalformedMatrix("JSON cells do not match the declared order")
        matrices.append(cells)
    if not matrices:
        raise MalformedMatrix("no matrix found in input")
    return matrices


def _load_matrices(path: str) -> tuple[list[list[list[int]]], bool]:
    """Parse an input file; returns (matrices, came_from_json)."""
    text = _read_source(path)
    if _looks_like_json(text):
        return _parse_json(text), True
    return _parse_text(text), False


def _render_text(cells) -> str:
    return "".join(" ".join(str(v) for v in row) + "\n" for row in cells)


def _emit_blocks(blocks: list[str]) -> None:
    sys.stdout.write("\n".join(blocks))


# ---------------------------------------------------------------- commands


def _cmd_generate(args) -> int:
    base_seed = args.seed
    if base_seed is None:
        base_seed = secrets.randbits(64)
        print(f"# seed: {base_seed}", file=sys.stderr)
    base = RandomSource(base_seed)
    # one derived source per square (seed + index) so any square in a
    # batch can be regenerated on its own
    reports = [
        generate(args.order, base.spawn(i), max_row_restarts=args.max_restarts)
        for i in range(args.count)
    ]
    if args.format == "json":
        payload = [
            {
                "order": report.square.order,
                "cells": [list(row) for row in to_standard(report.square).cells],
            }
            for report in reports
        ]
        body = payload[0] if len(payload) == 1 else payload
        sys.stdout.write(json.dumps(body) + "\n")
    else:
        blocks = []
        for report in reports:
            square = report.square
            cells = square.cells if args.format == "exp" else to_standard(square).cells
            blocks.append(_render_text(cells))
        _emit_blocks(blocks)
    return EXIT_OK


def _cmd_validate(args) -> int:
    matrices, from_json = _load_matrices(args.file)
    exponential = args.exp and not from_json  # JSON always carries symbols
    for idx, cells in enumerate(matrices, start=1):
        verdict = is_exponential_latin(cells) if exponential else is_latin(cells)
        if not verdict:
            prefix = f"square {idx}: " if len(matrices) > 1 else ""
            print(f"{prefix}{verdict.message}")
            return EXIT_INVALID
    print("VALID")
    return EXIT_OK


def _cmd_convert(args) -> int:
    matrices, from_json = _load_matrices(args.file)
    # text input is taken to be in the form opposite the target
    source_is_exp = args.to == "grid" and not from_json
    blocks = []
    for idx, cells in enumerate(matrices, start=1):
        verdict = is_exponential_latin(cells) if source_is_exp else is_latin(cells)
        if not verdict:
            prefix = f"square {idx}: " if len(matrices) > 1 else ""
            print(f"{prefix}{verdict.message}", file=sys.stderr)
            return EXIT_INVALID
        if args.to == "exp":
            out = to_exponential(LatinSquare.from_rows(cells)).cells
        elif source_is_exp:
            out = to_standard(ExponentialLatinSquare.from_rows(cells)).cells
        else:
            out = cells
        blocks.append(_render_text(out))
    _emit_blocks(blocks)
    return EXIT_OK


def _cmd_count(args) -> int:
    print(count_all(args.order, allow_order_six=args.allow_slow))
    return EXIT_OK


def _cmd_bench(args) -> int:
    seed = args.seed
    if seed is None:
        seed = secrets.randbits(64)
        print(f"# seed: {seed}", file=sys.stderr)
    base = RandomSource(seed)
    restarts = []
    started = time.perf_counter()
    for i in range(args.iterations):
        report = generate(args.order, base.spawn(i), max_row_restarts=args.max_restarts)
        restarts.append(report.row_restarts)
    mask_total = time.perf_counter() - started
    started = time.perf_counter()
    for i in range(args.iterations):
        _naive_generate(args.order, base.spawn(i), args.max_restarts)
    naive_total = time.perf_counter() - started
    per = 1000.0 / args.iterations
    print(f"order {args.order}, {args.iterations} squares per implementation, seed {seed}")
    print(f"bitmask     total {mask_total:.4f} s   {mask_total * per:.3f} ms/square")
    print(f"bool array  total {naive_total:.4f} s   {naive_total * per:.3f} ms/square")
    print(f"speedup     {naive_total / mask_total:.2f}x (bitmask over bool array)")
    print(
        f"restarts    total {sum(restarts)}, mean {statistics.fmean(restarts):.2f}, "
        f"max {max(restarts)} per square"
    )
    return EXIT_OK


def _naive_generate(n, src, max_row_restarts=DEFAULT_RESTART_BUDGET):
    """Row-restart fill with an n-slot boolean availability list per cell.

    Bench baseline: same algorithm and same draw sequence as
    latin_gen.generate, with the packed masks replaced by the obvious
    list-of-flags bookkeeping.  Returns (rows of symbols 1..n, restarts).
    """
    check_order(n)
    grid = [[0] * n for _ in range(n)]
    restarts = 0
    for row in range(n):
        col = 0
        while col < n:
            avail = [True] * n
            for i in range(row):
                avail[grid[i][col] - 1] = False
            for j in range(col):
                avail[grid[row][j] - 1] = False
            live = sum(avail)
            if live == 0:
                restarts += 1
                if max_row_restarts is not None and restarts > max_row_restarts:
                    raise RestartBudgetExhausted(n, src.seed, restarts, row)
                col = 0  # stale cells to the right are overwritten, never read
                continue
            rank = src.next_below(live) + 1
            symbol = 0
            seen = 0
            while seen < rank:
                if avail[symbol]:
                    seen += 1
                symbol += 1
            grid[row][col] = symbol
            col += 1
    return grid, restarts


# ---------------------------------------------------------------- parser


def _seed_arg(text: str) -> int:
    value = int(text)
    if not 0 <= value < (1 << 64):
        raise argparse.ArgumentTypeError("seed must be an unsigned 64-bit value")
    return value


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="latinsq",
        description="Generate, validate, convert, count and benchmark Latin squares.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="generate random squares")
    gen.add_argument("--order", "-n", type=int, required=True, help="square order, 1..64")
    gen.add_argument(
        "--seed",
        type=_seed_arg,
        help="unsigned 64-bit seed; drawn from OS entropy and echoed to stderr when omitted",
    )
    gen.add_argument("--count", type=_positive_int, default=1, help="squares to emit (default 1)")
    gen.add_argument(
        "--format", choices=("grid", "exp", "json"), default="grid", help="output form (default grid)"
    )
    gen.add_argument(
        "--max-restarts",
        type=_positive_int,
        default=DEFAULT_RESTART_BUDGET,
        metavar="N",
        help=f"row-restart cap per square (default {DEFAULT_RESTART_BUDGET})",
    )
    gen.set_defaults(func=_cmd_generate)

    val = sub.add_parser("validate", help="check a square file")
    val.add_argument("file", help="input path, or - for stdin")
    val.add_argument(
        "--exp", action="store_true", help="text input holds exponential cells (powers of two)"
    )
    val.set_defaults(func=_cmd_validate)

    conv = sub.add_parser("convert", help="convert between grid and exp forms")
    conv.add_argument("file", help="input path, or - for stdin")
    conv.add_argument("--to", choices=("exp", "grid"), required=True, help="target form")
    conv.set_defaults(func=_cmd_convert)

    cnt = sub.add_parser("count", help="exact number of Latin squares of an order")
    cnt.add_argument("--order", "-n", type=int, required=True, help="order, 1..5")
    cnt.add_argument(
        "--allow-slow", action="store_true", help="permit order 6 (expect around an hour)"
    )
    cnt.set_defaults(func=_cmd_count)

    bench = sub.add_parser("bench", help="time bitmask against boolean-array generation")
    bench.add_argument("--order", "-n", type=int, required=True, help="square order, 1..64")
    bench.add_argument(
        "--iterations", type=_positive_int, default=10, help="squares per implementation (default 10)"
    )
    bench.add_argument("--seed", type=_seed_arg, help="base seed (entropy when omitted)")
    bench.add_argument(
        "--max-restarts",
        type=_positive_int,
        default=DEFAULT_RESTART_BUDGET,
        metavar="N",
        help=f"row-restart cap per square (default {DEFAULT_RESTART_BUDGET})",
    )
    bench.set_defaults(func=_cmd_bench)

    return parser


def main(argv: list[str] | None = None) -> int:
    try:
        args = _build_parser().parse_args(argv)
    except SystemExit as exc:  # argparse has already printed its message
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except RestartBudgetExhausted as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESTART_BUDGET
    except (LatinSqError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
