import sys
import logging
from pathlib import Path
from typing import Optional

from loguru import logger

from randic.errors import ParameterError
from randic.settings import LOG_LEVELS, settings


# ==========================
# LOG FORMAT (one trace id per CLI run)
# ==========================

LOG_FORMAT = (
    "<green>{time:YYYY-MM-DD HH:mm:ss.SSS}</green> | "
    "<level>{level: <8}</level> | "
    "<cyan>{name}:{function}:{line}</cyan> | "
    "<yellow>run={extra[trace_id]}</yellow> | "
    "<level>{message}</level>"
)

logger.configure(extra={"trace_id": "system"})


# ==========================
# stdlib logging (networkx) -> loguru
# ==========================

class InterceptHandler(logging.Handler):
    def emit(self, record):
        try:
            level = logger.level(record.levelname).name
        except Exception:
            level = record.levelno

        logger.bind(trace_id=record.name).opt(
            depth=6,
            exception=record.exc_info
        ).log(level, record.getMessage())


# ==========================
# SETUP LOGGING
# ==========================

def setup_logging(level: Optional[str] = None, log_file: Optional[str] = None) -> None:
    """
    Configure global logging once per process.
    stdout belongs to command output, so the console sink writes to stderr.
    """
    level = (level or settings.log_level).strip().upper()
    if level not in LOG_LEVELS:
        raise ParameterError(
            f"unknown log level {level!r}; expected one of {', '.join(LOG_LEVELS)}",
            code="log_level",
            level=level,
        )
    log_file = log_file or settings.log_file

    logger.remove()

    logger.add(
        sys.stderr,
        level=level,
        colorize=False,
        format=LOG_FORMAT,
        backtrace=False,
        diagnose=False,
    )

    if log_file:
        path = Path(log_file)
        path.parent.mkdir(parents=True, exist_ok=True)
        logger.add(
            path,
            level=level,
            rotation="1 day",
            retention="14 days",
            compression="zip",
            enqueue=True,
            format=LOG_FORMAT,
            backtrace=False,
            diagnose=False,
        )

    root_logger = logging.getLogger()
    root_logger.handlers = [InterceptHandler()]
    root_logger.setLevel(level)

    # networkx is chatty at debug level
    logging.getLogger("networkx").setLevel(logging.WARNING)


def get_logger(trace_id: str = "system"):
    """Logger bound to a run id; library code may also use the bare `logger`."""
    return logger.bind(trace_id=trace_id)
