# adversarial_balancing/shared/settings.py

import os

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class BalancingSettings(BaseSettings):
    """
    Process-wide runtime settings, read from ``ADVBAL_*`` environment variables.
    """

    model_config = SettingsConfigDict(env_prefix="ADVBAL_", extra="ignore")

    # Worker-pool size for replication runs (None -> available CPUs)
    workers: int | None = Field(default=None, ge=1)

    log_level: str = "INFO"

    def resolved_workers(self) -> int:
        if self.workers is not None:
            return self.workers
        return os.cpu_count() or 1


def get_settings() -> BalancingSettings:
    return BalancingSettings()
