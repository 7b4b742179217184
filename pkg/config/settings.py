"""
Application configuration settings
"""

from pathlib import Path
from typing import List, Optional, Tuple

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Application settings loaded from environment variables"""

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=True,
        extra="ignore",  # Ignore extra fields from .env that aren't defined in Settings
    )

    # Project paths
    BASE_DIR: Path = Path(__file__).parent.parent
    LOG_DIR: Optional[Path] = None

    # Application Settings
    DEBUG: bool = False
    LOG_LEVEL: str = "INFO"
    MAX_WORKERS: int = 4

    # Bounded universe (oracle sizing)
    UNIVERSE_PRIMES: str = "2,3,5"
    UNIVERSE_MAX_EXP: int = 2
    BIGCELL_UNIVERSE: Optional[str] = Field(
        None, description="Override in the form '2,3,5:2' (primes:max_exp)"
    )
    UNIVERSE_WIDENED: bool = Field(
        False, description="Add a stand-in outside prime and default ∞ elements to the oracle"
    )
    MAX_UNIVERSE_SIZE: int = 1_000_000

    # Solver limits
    MAX_DISJUNCTS: int = 1_000_000
    POINT_ITERATION_CAP: int = 1000

    # Corpus generation (acceptance suites)
    CORPUS_SEED: int = 20240611
    CORPUS_PATCHES: int = 200
    CORPUS_SIEVES: int = 500

    def universe_spec(self) -> Tuple[List[int], int]:
        """
        Resolve the bounded universe parameters

        Returns:
            (primes, max_exp); BIGCELL_UNIVERSE wins over the separate fields
        """
        if self.BIGCELL_UNIVERSE:
            primes_part, _, exp_part = self.BIGCELL_UNIVERSE.partition(":")
            primes = [int(p) for p in primes_part.split(",") if p.strip()]
            max_exp = int(exp_part) if exp_part.strip() else self.UNIVERSE_MAX_EXP
            return primes, max_exp
        primes = [int(p) for p in self.UNIVERSE_PRIMES.split(",") if p.strip()]
        return primes, self.UNIVERSE_MAX_EXP


# Global settings instance
settings = Settings()
