import sys
from logging import DEBUG, ERROR, INFO, WARNING, Logger, basicConfig, getLogger
from typing import Optional

from hzoo.core.config import config

LEVELS: dict[str, int] = {"DEBUG": DEBUG, "INFO": INFO, "WARNING": WARNING, "ERROR": ERROR}


class Log:
    """Process-wide logging setup; stdout stays reserved for reports and CSV."""

    def __init__(self):
        self.__logger: Optional[Logger] = None
        basicConfig(
            level=self.level(),
            stream=sys.stderr,
            format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        )

    @staticmethod
    def level() -> int:
        """Level named by LOG_LEVEL; unknown names fall back to INFO."""
        return LEVELS.get(config.LOG_LEVEL.upper(), INFO)

    def get(self, name: str) -> Logger:
        if self.__logger is None:
            self.__logger = getLogger(name)
        return self.__logger


logger: Logger = Log().get("hzoo")
