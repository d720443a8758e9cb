"""Shared fixture loaders and reference builders.

The fixtures directory holds independently published reference data,
transcribed row for row: two orthogonal arrays in the package text format,
a three-class block family over 12 binary points, and a 19-block system
over Z_2^12 x Z_5 written as four bit-groups plus a final symbol.
"""

from __future__ import annotations

from itertools import product
from pathlib import Path

import pytest

from design_forge import (
    Codeword,
    LargeSet,
    MixedAlphabet,
    MixedDesign,
    OrthogonalArray,
    oa_from_text,
)

FIXTURES = Path(__file__).parent / "fixtures"


def load_oa(name: str) -> OrthogonalArray:
    return oa_from_text((FIXTURES / name).read_text())


def load_block_classes(name: str, width: int = 3) -> list[list[frozenset[int]]]:
    """Parse groups of bit-strings separated by '---' lines: bit j of group i
    set means point i*width + j is in the block."""
    classes: list[list[frozenset[int]]] = [[]]
    for line in (FIXTURES / name).read_text().splitlines():
        line = line.strip()
        if not line:
            continue
        if line == "---":
            classes.append([])
            continue
        groups = line.split()
        points = frozenset(
            i * width + j
            for i, bits in enumerate(groups)
            for j, bit in enumerate(bits)
            if bit == "1"
        )
        classes[-1].append(points)
    return classes


def load_mixed_rows(name: str, width: int = 3) -> MixedDesign:
    """Parse rows of bit-groups followed by one symbol for a final larger
    coordinate (0 = absent) into a design over Z_2^{groups*width} x Z_m."""
    blocks = []
    max_symbol = 1
    n_binary = None
    for line in (FIXTURES / name).read_text().splitlines():
        parts = line.split()
        if not parts:
            continue
        groups, last = parts[:-1], int(parts[-1])
        n_binary = len(groups) * width
        support = [
            (i * width + j, 1)
            for i, bits in enumerate(groups)
            for j, bit in enumerate(bits)
            if bit == "1"
        ]
        if last != 0:
            support.append((n_binary, last))
            max_symbol = max(max_symbol, last)
        blocks.append(Codeword(tuple(support)))
    alphabet = MixedAlphabet((2,) * n_binary + (max_symbol + 1,))
    k = blocks[0].weight
    return MixedDesign(alphabet, 2, k, tuple(blocks), meta=f"fixture {name}")


def build_toy_large_set() -> LargeSet:
    """The two-copy large set on (Z_3)^3 at strength 2: the eight transversal
    triples split by symbol-sum parity, each half covering every weight-2
    word exactly once."""
    copies: list[list[Codeword]] = [[], []]
    for s in product((1, 2), repeat=3):
        word = Codeword(((0, s[0]), (1, s[1]), (2, s[2])))
        copies[sum(s) % 2].append(word)
    return LargeSet(
        MixedAlphabet((3, 3, 3)), 2, 3, (tuple(copies[0]), tuple(copies[1]))
    )


@pytest.fixture
def toy_large_set() -> LargeSet:
    return build_toy_large_set()


@pytest.fixture
def fixture_a() -> OrthogonalArray:
    return load_oa("a_k4.oa")


@pytest.fixture
def fixture_d() -> OrthogonalArray:
    return load_oa("d_k4.oa")


@pytest.fixture
def fixture_b3() -> list[list[frozenset[int]]]:
    return load_block_classes("b3_k4.txt")


@pytest.fixture
def fixture_s_prime() -> MixedDesign:
    return load_mixed_rows("s_prime_k4.txt")
