import os
from typing import Optional

from dotenv import load_dotenv

load_dotenv()


class Settings:
    VERSION: str = "1.0.0"

    # --- Output ---
    DEFAULT_FORMAT: str = "plain"
    # Default expansion order is EXPANSION_FACTOR * pole order
    EXPANSION_FACTOR: int = 2

    # --- Contracts ---
    # Post-assertions against the closed forms; the CLI turns them off with --benchmark
    ASSERT_CONTRACTS: bool = True

    # --- Series engine ---
    MAX_SERIES_ORDER: int = 100_000

    # --- Verification ---
    DEFAULT_WORKERS: int = 1
    # Only environment-driven setting; parsed and validated by middleware.grid_guard
    MAX_GRID: Optional[str] = os.getenv("HWV_MAX_GRID")

    # --- Logging ---
    LOG_LEVEL: str = "WARNING"


settings = Settings()
