import os
from dataclasses import dataclass

from dotenv import load_dotenv

load_dotenv()


@dataclass(frozen=True)
class Settings:
    """Defaults read from the environment (or a .env file); CLI flags override them."""

    threads: int = 1
    log_level: str = "WARNING"
    results_dir: str = "results"

    @classmethod
    def from_env(cls) -> "Settings":
        raw_threads = os.getenv("TDV_THREADS", "1")
        try:
            threads = int(raw_threads)
        except ValueError:
            raise ValueError(f"TDV_THREADS must be an integer, got '{raw_threads}'") from None
        if threads < 1:
            raise ValueError(f"TDV_THREADS must be at least 1, got {threads}")
        return cls(
            threads=threads,
            log_level=os.getenv("TDV_LOG_LEVEL", "WARNING"),
            results_dir=os.getenv("TDV_RESULTS_DIR", "results"),
        )
