"""Kinship extraction from classical Chinese epitaphs."""

from ._core import (
    ConfigError,
    DictionaryError,
    EncodingError,
    Error,
    IoError,
    PatternCompileError,
    Pipeline,
    UnparsableNumeral,
    format_numeral,
    parse_numeral,
    run_pipeline,
    split_sentences,
)

__all__ = [
    "ConfigError",
    "DictionaryError",
    "EncodingError",
    "Error",
    "IoError",
    "PatternCompileError",
    "Pipeline",
    "UnparsableNumeral",
    "format_numeral",
    "parse_numeral",
    "run_pipeline",
    "split_sentences",
]
