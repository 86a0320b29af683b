from ._dgenv import (
    Enveloping,
    ParseError,
    Presentation,
    ValidationError,
    oracle_dimensions,
    run_cli,
)

__all__ = [
    "Enveloping",
    "ParseError",
    "Presentation",
    "ValidationError",
    "oracle_dimensions",
    "run_cli",
]
