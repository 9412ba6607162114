import logging
import os
from functools import lru_cache
from typing import List, Optional

from dotenv import load_dotenv
from pydantic import BaseModel, ConfigDict

load_dotenv()

DEFAULT_ORIGINS = ["http://localhost:5173", "http://localhost:3000"]


class Settings(BaseModel):
    model_config = ConfigDict(frozen=True)

    threads: int = 0
    order: int = 16
    log_level: Optional[str] = None
    api_prefix: str = "/api"
    cors_origins: List[str] = DEFAULT_ORIGINS

    def logging_level(self, default: str) -> str:
        """FS_LAB_LOG_LEVEL if set; the CLI defaults to WARNING, the app to INFO."""
        return self.log_level or default

    def worker_count(self) -> int:
        """0 means auto: one worker per CPU."""
        if self.threads == 0:
            return os.cpu_count() or 1
        return self.threads


def _int_env(name: str, default: int, minimum: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        raise RuntimeError(f"{name} must be an integer (got {raw!r})")
    if value < minimum:
        raise RuntimeError(f"{name} must be >= {minimum} (got {value})")
    return value


def load_settings() -> Settings:
    log_level = (os.getenv("FS_LAB_LOG_LEVEL") or "").strip().upper() or None
    if log_level is not None and not isinstance(logging.getLevelName(log_level), int):
        raise RuntimeError(f"FS_LAB_LOG_LEVEL is not a logging level: {log_level!r}")

    cors_origins_env = os.getenv("CORS_ORIGINS", "")
    origins = (
        [o.strip() for o in cors_origins_env.split(",") if o.strip()]
        if cors_origins_env
        else DEFAULT_ORIGINS
    )

    return Settings(
        threads=_int_env("FS_LAB_THREADS", 0, 0),
        order=_int_env("FS_LAB_ORDER", 16, 3),
        log_level=log_level,
        api_prefix=os.getenv("API_PREFIX", "/api"),
        cors_origins=origins,
    )


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    return load_settings()
