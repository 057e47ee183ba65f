import json
import logging
import os
import sys
from typing import Optional

try:
    from rich.console import Console  # type: ignore
    from rich.logging import RichHandler  # type: ignore
except Exception:  # pragma: no cover
    RichHandler = None

ENV_LEVEL = "STEINER_CHAINS_LOG_LEVEL"


class JsonLineFormatter(logging.Formatter):
    """One JSON object per record: time, level, logger name, message"""

    def format(self, record: logging.LogRecord) -> str:
        doc = {
            "t": self.formatTime(record),
            "lvl": record.levelname,
            "name": record.name,
            "msg": record.getMessage(),
        }
        if record.exc_info:
            doc["exc"] = self.formatException(record.exc_info)
        return json.dumps(doc, sort_keys=True)


def setup_logging(level: Optional[str] = None, use_json: bool = False) -> None:
    """Configure the root logger for the CLI.

    The level comes from ``level``, then ``STEINER_CHAINS_LOG_LEVEL``, then WARNING.
    Every handler writes to stderr; stdout carries the emitted document only.
    Calling it again replaces the previous handler.
    """
    log_level = (level or os.getenv(ENV_LEVEL) or "WARNING").upper()

    root_logger = logging.getLogger()
    for handler in list(root_logger.handlers):
        root_logger.removeHandler(handler)
    root_logger.setLevel(getattr(logging, log_level, logging.WARNING))

    if use_json:
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(JsonLineFormatter())
    elif RichHandler is not None:
        handler = RichHandler(
            console=Console(stderr=True), rich_tracebacks=False, show_time=False, show_path=False
        )
        handler.setFormatter(logging.Formatter("%(message)s"))
    else:
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(logging.Formatter("[%(levelname)s] %(name)s: %(message)s"))

    root_logger.addHandler(handler)


def get_logger(name: Optional[str] = None) -> logging.Logger:
    """Namespaced logger, ``steiner_chains`` when no name is given"""
    return logging.getLogger(name or "steiner_chains")
