"""Exhaustive census over all monic f of degree d"""

from app.census.parallel import chunk_ranges, map_chunks, resolve_workers
from app.census.distribution import (
    COST_KEYS,
    CensusAccumulator,
    CensusReport,
    accumulate_census,
    census_chunk,
    check_enumeration_size,
    exact_distribution,
    index_to_coeffs,
    index_to_point,
)
from app.census.characterize import CharacterizationReport, verify_characterizations
from app.census.checks import check_census

__all__ = [
    "chunk_ranges",
    "map_chunks",
    "resolve_workers",
    "COST_KEYS",
    "CensusAccumulator",
    "CensusReport",
    "accumulate_census",
    "census_chunk",
    "check_enumeration_size",
    "exact_distribution",
    "index_to_coeffs",
    "index_to_point",
    "CharacterizationReport",
    "verify_characterizations",
    "check_census",
]
