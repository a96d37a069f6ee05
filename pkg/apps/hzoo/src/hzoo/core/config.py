from enum import Enum
from os import cpu_count
from typing import Optional

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict

TOOL_VERSION: str = "0.1.0"
"""Version string written into every report."""

DEFAULT_NODAL_RESOLUTION: int = 41
"""Default number of grid points per axis for nodal-set sampling."""
MAX_NODAL_DIM: int = 4
"""Largest ambient dimension accepted by the nodal sampler."""

MAX_PARSE_DEPTH: int = 100
"""Maximum nesting depth of parentheses and unary minus accepted by the parser."""
MAX_PARSE_EXPONENT: int = 1000
"""Largest power literal accepted by the parser."""
MAX_COEFFICIENT_DIGITS: int = 4000
"""Largest decimal size of an integer literal or of a lowered coefficient's numerator or denominator."""

RICHARDSON_RANGE: tuple[float, float] = (3.5, 4.5)
"""Accepted residual(h) / residual(h/2) for a second-order stencil."""


class Env(str, Enum):
    DEV = "dev"
    PROD = "prod"


class Config(BaseSettings):
    """Configuration settings for the verification toolkit."""

    # Logging configuration
    LOG_LEVEL: str = "INFO"
    ENV: Env = Env.DEV
    """Application environment, either 'dev' or 'prod'."""

    HZOO_THREADS: Optional[int] = Field(default=None, ge=1)
    """Max worker parallelism for per-face and per-member checks. Unset means machine parallelism."""

    # Numeric tolerances
    HZOO_F0_EPS_DEN: float = 1e-9
    """Half-strip function: points where the denominator is below this are reported invalid."""
    HZOO_TOL_BOUNDARY: float = 1e-10
    """Max |f| accepted by boundary scans."""
    HZOO_FD_STEP: float = 1e-3
    """Stencil step of the finite-difference Laplacian."""
    HZOO_FD_RESIDUAL_BOUND: float = 1e-5
    """Max finite-difference residual accepted for functions claimed harmonic."""
    HZOO_FD_RATIO_STEP: float = 1e-2
    """Coarse step h of the Richardson ratio residual(h) / residual(h/2)."""

    model_config = SettingsConfigDict(env_file=".env", extra="ignore")

    def workers(self) -> int:
        """Effective worker count for parallel checks."""
        if self.HZOO_THREADS:
            return self.HZOO_THREADS
        return max(cpu_count() or 1, 1)


config: Config = Config()
"""Singleton instance of the toolkit configuration loaded from environment variables."""
