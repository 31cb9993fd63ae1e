"""Shared fixtures: a known-good order-12 exponential square."""

import pytest

# Reference 12x12 exponential Latin square used across the suite.
ORDER12_EXP = (
    (32, 1, 16, 8, 512, 256, 2048, 128, 2, 1024, 4, 64),
    (4, 256, 512, 16, 8, 64, 1024, 2, 32, 1, 2048, 128),
    (8, 32, 1, 2, 64, 4, 16, 256, 128, 512, 1024, 2048),
    (16, 4, 8, 32, 2048, 1024, 512, 64, 256, 128, 2, 1),
    (256, 128, 32, 64, 4, 8, 1, 16, 2048, 2, 512, 1024),
    (512, 2048, 1024, 256, 1, 128, 2, 32, 64, 16, 8, 4),
    (1024, 16, 256, 128, 32, 2048, 8, 4, 512, 64, 1, 2),
    (2, 64, 128, 4, 1024, 16, 256, 8, 1, 2048, 32, 512),
    (1, 2, 4, 512, 16, 32, 128, 2048, 1024, 256, 64, 8),
    (64, 8, 2048, 1024, 2, 512, 32, 1, 16, 4, 128, 256),
    (2048, 1024, 64, 1, 128, 2, 4, 512, 8, 32, 256, 16),
    (128, 512, 2, 2048, 256, 1, 64, 1024, 4, 8, 16, 32),
)

# Its first row in standard symbols (log2 + 1 of the row above).
ORDER12_STD_ROW1 = (6, 1, 5, 4, 10, 9, 12, 8, 2, 11, 3, 7)


def render_rows(rows) -> str:
    return "".join(" ".join(str(v) for v in row) + "\n" for row in rows)


@pytest.fixture
def order12_exp():
    return [list(row) for row in ORDER12_EXP]


@pytest.fixture
def order12_exp_file(tmp_path):
    path = tmp_path / "order12.exp"
    path.write_text(render_rows(ORDER12_EXP))
    return path
