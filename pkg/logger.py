import logging
import sys
from pathlib import Path
from typing import Dict, Optional
import settings

CATEGORIES = ("algebra", "group", "cli")


class Logger:
    """按计算类别划分的日志。

    控制台输出走 stderr，stdout 只留给报告；
    SHAM_DEBUG_CATEGORIES 中列出的类别不受 SHAM_LOG_LEVEL 限制，直接输出 DEBUG。
    """

    def __init__(self, category: str, log_dir: Optional[str] = None):
        self.category = category
        self.log_dir = Path(log_dir) if log_dir else Path(settings.LOG_DIR)
        self.logger = logging.getLogger(f"sham.{category}")
        self.setup_logger()

    def default_level(self) -> int:
        if self.category in settings.DEBUG_CATEGORIES:
            return logging.DEBUG
        return getattr(logging, settings.LOG_LEVEL.upper(), logging.WARNING)

    def setup_logger(self):
        self.logger.handlers.clear()
        self.logger.propagate = False
        self.logger.setLevel(self.default_level())

        formatter = logging.Formatter(settings.LOG_FORMAT)

        console_handler = logging.StreamHandler(sys.stderr)
        console_handler.setFormatter(formatter)
        self.logger.addHandler(console_handler)

        if settings.LOG_TO_FILE:
            self.log_dir.mkdir(parents=True, exist_ok=True)
            file_handler = logging.FileHandler(self.log_dir / f"sham-{self.category}.log", encoding='utf-8')
            file_handler.setFormatter(formatter)
            self.logger.addHandler(file_handler)

    def set_level(self, level: int):
        self.logger.setLevel(level)

    def debug(self, message: str):
        self.logger.debug(message)

    def info(self, message: str):
        self.logger.info(message)

    def warning(self, message: str):
        self.logger.warning(message)

    def exception(self, message: str):
        self.logger.exception(message)


LOGGERS: Dict[str, Logger] = {name: Logger(name) for name in CATEGORIES}

algebra_logger = LOGGERS["algebra"]  # poly / numfield / derivation / series
group_logger = LOGGERS["group"]      # automorphism / isotropy
cli_logger = LOGGERS["cli"]          # expr / jobs / main


def set_verbose(enabled: bool = True):
    """命令行 --verbose：所有类别切到 DEBUG；关闭时恢复各自的配置级别。"""
    for lg in LOGGERS.values():
        lg.set_level(logging.DEBUG if enabled else lg.default_level())
