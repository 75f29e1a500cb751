"""Tests for the counter-based SplitMix64 stream"""

import numpy as np

from app.splitmix import SplitMixStream, splitmix64, splitmix64_block


def test_reference_value():
    assert splitmix64(0, 0) == 0xE220A8397B1DCDAF


def test_block_matches_scalar():
    block = splitmix64_block(12345, 10, 8)
    assert block.dtype == np.uint64
    assert [int(v) for v in block] == [splitmix64(12345, c) for c in range(10, 18)]


def test_block_handles_large_seed():
    seed = (1 << 64) - 3
    assert int(splitmix64_block(seed, 0, 1)[0]) == splitmix64(seed, 0)


def test_stream_reads_in_order():
    stream = SplitMixStream(7)
    assert [stream.next_u64() for _ in range(3)] == [splitmix64(7, c) for c in range(3)]
    assert stream.position == 3


def test_residues_in_range():
    values = list(SplitMixStream(1, start=100).residues(67, 50))
    assert len(values) == 50
    assert all(0 <= v < 67 for v in values)
