"""Brute-force enumeration of all Latin squares of small order.

Ground truth for counting and reachability tests, kept deliberately
independent of the random generator: a plain depth-first search over
cells in row-major order, trying symbols in ascending order, with
packed-set pruning but none of the generator's machinery.
"""

from .errors import OrderTooLargeForEnumeration
from .latin_gen import LatinSquare
from .mask_set import check_order

ENUMERATION_CAP = 4  # full materialization
COUNT_CAP = 5  # counting without materialization


def enumerate_all(n: int) -> list[LatinSquare]:
    """All Latin squares of order n, in lexicographic row-major order."""
    check_order(n)
    if n > ENUMERATION_CAP:
        raise OrderTooLargeForEnumeration(
            f"enumeration materializes every square; capped at order {ENUMERATION_CAP}"
        )
    full = (1 << n) - 1
    col_used = [0] * n
    grid = [[0] * n for _ in range(n)]
    found: list[LatinSquare] = []

    def fill(row: int, col: int, row_used: int) -> None:
        if col == n:
            if row == n - 1:
                found.append(LatinSquare.from_rows(grid))
            else:
                fill(row + 1, 0, 0)
            return
        avail = full ^ (row_used | col_used[col])
        while avail:
            bit = avail & -avail
            avail ^= bit
            grid[row][col] = bit.bit_length()
            col_used[col] |= bit
            fill(row, col + 1, row_used | bit)
            col_used[col] ^= bit

    fill(0, 0, 0)
    return found


def count_all(n: int, allow_order_six: bool = False) -> int:
    """Exact number of Latin squares of order n.

    Capped at order 5 (161280 squares, a few seconds).  Order 6 counts
    812851200 squares and is only reachable behind ``allow_order_six``;
    expect on the order of an hour.
    """
    check_order(n)
    cap = 6 if allow_order_six else COUNT_CAP
    if n > cap:
        raise OrderTooLargeForEnumeration(f"counting is capped at order {cap}")
    return _count_squares(n)


def _count_squares(n: int, descending: bool = False) -> int:
    """DFS count; ``descending`` flips the symbol visit order (the total
    must not depend on it)."""
    full = (1 << n) - 1
    col_used = [0] * n

    def fill(row: int, col: int, row_used: int) -> int:
        if col == n:
            if row == n - 1:
                return 1
            return fill(row + 1, 0, 0)
        avail = full ^ (row_used | col_used[col])
        total = 0
        while avail:
            if descending:
                bit = 1 << (avail.bit_length() - 1)
            else:
                bit = avail & -avail
            avail ^= bit
            col_used[col] |= bit
            total += fill(row, col + 1, row_used | bit)
            col_used[col] ^= bit
        return total

    return fill(0, 0, 0)
