"""Tests for chunked map-reduce"""

import pytest

from app.census import chunk_ranges, exact_distribution, resolve_workers
from app.settings import reset_settings
from helpers import poly


def test_chunk_ranges_cover_everything():
    assert chunk_ranges(10, 4) == [(0, 4), (4, 8), (8, 10)]
    assert chunk_ranges(0, 4) == []
    with pytest.raises(ValueError):
        chunk_ranges(10, 0)


def test_workers_capped_by_threads(monkeypatch):
    monkeypatch.setenv("EUCLAB_THREADS", "3")
    reset_settings()
    assert resolve_workers(None) == 3
    assert resolve_workers(8) == 3
    assert resolve_workers(2) == 2
    assert resolve_workers(0) == 1


@pytest.mark.slow
def test_result_independent_of_worker_count(monkeypatch):
    g = poly(5, 1, 0, 2, 0, 1)
    single = exact_distribution(g, 3, workers=1)

    monkeypatch.setenv("EUCLAB_THREADS", "2")
    monkeypatch.setenv("EUCLAB_CHUNK_SIZE", "17")
    reset_settings()
    pooled = exact_distribution(g, 3, workers=2)

    assert pooled.B == single.B
    assert pooled.E_t == single.E_t
    assert pooled.generic_count == single.generic_count
