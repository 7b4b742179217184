"""
bigcell 로깅 설정

Console output goes to stderr so stdout stays machine-parseable for the CLI
and the sweep scripts. The optional file log keeps file:line detail.
"""
import logging
import sys
from datetime import datetime
from pathlib import Path
from typing import Optional, Union

CONSOLE_FORMAT = "%(asctime)s - %(levelname)s - %(name)s: %(message)s"
FILE_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(filename)s:%(lineno)d - %(message)s"
DATE_FORMAT = "%Y-%m-%d %H:%M:%S"

# Solver loggers emit one line per disjunct at DEBUG
SOLVER_LOGGERS = ("src.spectral.solver", "src.bigcell.topology")


def _level(name: str) -> int:
    level = logging.getLevelName(str(name).upper())
    return level if isinstance(level, int) else logging.INFO


def log_file_path(log_dir: Union[str, Path], day: Optional[datetime] = None) -> Path:
    """logs/bigcell_YYYYMMDD.log"""
    day = day or datetime.now()
    return Path(log_dir) / f"bigcell_{day.strftime('%Y%m%d')}.log"


def setup_logging(
    log_level: str = "INFO",
    log_dir: Optional[Union[str, Path]] = None,
    solver_debug: bool = False,
) -> logging.Logger:
    """
    Configure the root logger once per process

    Args:
        log_level: DEBUG, INFO, WARNING, ERROR or CRITICAL (unknown names fall back to INFO)
        log_dir: directory for the dated log file; no file handler when None
        solver_debug: keep per-disjunct solver lines on the console at DEBUG
    """
    level = _level(log_level)
    root = logging.getLogger()
    root.setLevel(level)
    root.handlers.clear()

    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setLevel(level)
    console_handler.setFormatter(logging.Formatter(CONSOLE_FORMAT, datefmt=DATE_FORMAT))
    root.addHandler(console_handler)

    if log_dir:
        path = log_file_path(log_dir)
        path.parent.mkdir(parents=True, exist_ok=True)
        file_handler = logging.FileHandler(path, encoding="utf-8")
        file_handler.setLevel(logging.DEBUG)
        file_handler.setFormatter(logging.Formatter(FILE_FORMAT, datefmt=DATE_FORMAT))
        root.addHandler(file_handler)

    if level <= logging.DEBUG and not solver_debug:
        for name in SOLVER_LOGGERS:
            logging.getLogger(name).setLevel(logging.INFO)

    logging.getLogger("hypothesis").setLevel(logging.WARNING)
    return root
