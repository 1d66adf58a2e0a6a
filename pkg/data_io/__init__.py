"""Fixture records, the fixture grammar and report emission (data_io.reports)."""

from data_io.fixtures import (
    dump_character,
    dump_newforms,
    dump_series,
    dump_space,
    load_character,
    load_newforms,
    load_series,
    load_space,
    parse_character,
    parse_newforms,
    parse_series,
    parse_space,
)
from data_io.records import NewformRecord, SpaceFixture

__all__ = [
    "NewformRecord",
    "SpaceFixture",
    "dump_character",
    "dump_newforms",
    "dump_series",
    "dump_space",
    "load_character",
    "load_newforms",
    "load_series",
    "load_space",
    "parse_character",
    "parse_newforms",
    "parse_series",
    "parse_space",
]
