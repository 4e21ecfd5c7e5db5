"""
Runtime configuration and logging setup
Values come from the environment (optionally a .env file) with safe defaults
"""

import logging
import os
import sys

import structlog
from dotenv import load_dotenv

load_dotenv()

# Fixpoint engine
ITERATION_FUSE = int(os.getenv("BILAT_ITERATION_FUSE", "10000"))

# Brute-force oracles and enumeration
SUPPORT_ORACLE_LIMIT = int(os.getenv("BILAT_SUPPORT_ORACLE_LIMIT", "12"))
UNFOUNDED_ORACLE_LIMIT = int(os.getenv("BILAT_UNFOUNDED_ORACLE_LIMIT", "10"))
CLASSIFY_LIMIT = int(os.getenv("BILAT_CLASSIFY_LIMIT", "8"))
WORKERS = int(os.getenv("BILAT_WORKERS", "1"))

# Random corpus
DEFAULT_SEED = int(os.getenv("BILAT_SEED", "0"))
CORPUS_SIZE = int(os.getenv("BILAT_CORPUS_SIZE", "200"))

# Logging
LOG_LEVEL = os.getenv("BILAT_LOG_LEVEL", "WARNING").upper()
LOG_FORMAT = os.getenv("BILAT_LOG_FORMAT", "console")


def configure_logging(level: str = LOG_LEVEL, fmt: str = LOG_FORMAT) -> None:
    """
    Configure structlog to write to stderr
    stdout is reserved for command output
    """
    renderer = (
        structlog.processors.JSONRenderer()
        if fmt == "json"
        else structlog.dev.ConsoleRenderer(colors=False)
    )
    structlog.configure(
        processors=[
            structlog.processors.add_log_level,
            structlog.processors.TimeStamper(fmt="iso"),
            renderer,
        ],
        wrapper_class=structlog.make_filtering_bound_logger(
            logging.getLevelName(level) if isinstance(level, str) else level
        ),
        logger_factory=structlog.PrintLoggerFactory(sys.stderr),
        cache_logger_on_first_use=False,
    )


configure_logging()
