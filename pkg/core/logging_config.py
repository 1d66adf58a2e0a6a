"""
Structured logging configuration using structlog.

Log lines are key=value pairs on stderr; stdout is reserved for reports, which
must be byte-identical between runs.
"""

import logging
import sys
from fractions import Fraction
from typing import Any, List

import structlog
from structlog.types import EventDict, Processor

APP_NAME = "pw1-search"

_PLAIN_TYPES = (str, int, float, bool, type(None))


def add_app_context(logger: Any, method_name: str, event_dict: EventDict) -> EventDict:
    """Stamp every entry with the application name."""
    event_dict["app"] = APP_NAME
    return event_dict


def render_exact_values(logger: Any, method_name: str, event_dict: EventDict) -> EventDict:
    """
    Render ideals, field elements, bounds and Fractions through str().

    KeyValueRenderer would otherwise print their repr, which for a
    FieldElement spells out every Fraction.
    """
    for key, value in event_dict.items():
        if key in ("exc_info", "stack_info"):
            continue
        if isinstance(value, Fraction) or not isinstance(value, _PLAIN_TYPES + (list, tuple, dict)):
            event_dict[key] = str(value)
        elif isinstance(value, (list, tuple)):
            event_dict[key] = [v if isinstance(v, _PLAIN_TYPES) else str(v) for v in value]
    return event_dict


def _processors() -> List[Processor]:
    return [
        structlog.contextvars.merge_contextvars,
        structlog.stdlib.filter_by_level,
        structlog.stdlib.add_logger_name,
        structlog.stdlib.add_log_level,
        add_app_context,
        structlog.stdlib.PositionalArgumentsFormatter(),
        render_exact_values,
        structlog.processors.TimeStamper(fmt="iso"),
        structlog.processors.StackInfoRenderer(),
        structlog.processors.format_exc_info,
        structlog.processors.UnicodeDecoder(),
        structlog.processors.KeyValueRenderer(key_order=["event", "level", "logger"]),
    ]


def configure_logging(log_level: str = "INFO") -> None:
    """
    Route structlog through the standard library to stderr.

    Safe to call more than once; the last call wins. Every CLI run configures
    afresh from --log-level or PW1_LOG_LEVEL.
    """
    logging.basicConfig(
        format="%(message)s",
        stream=sys.stderr,
        level=getattr(logging, log_level.upper()),
        force=True,
    )
    structlog.configure(
        processors=_processors(),
        logger_factory=structlog.stdlib.LoggerFactory(),
        wrapper_class=structlog.stdlib.BoundLogger,
        cache_logger_on_first_use=False,
    )


def get_logger(name: str) -> structlog.stdlib.BoundLogger:
    return structlog.get_logger(name)
