"""Configuration settings for the toughness/hamiltonicity toolkit."""

from functools import lru_cache
from pathlib import Path
from typing import Any, Dict

import yaml
from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Application settings loaded from environment variables."""

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )

    # Logging
    log_level: str = Field("INFO", alias="LOG_LEVEL")
    debug_mode: bool = Field(False, alias="DEBUG_MODE")

    # Harness parallelism
    threads: int = Field(1, alias="TOUGHHAM_THREADS", ge=1)

    # Exact search envelopes
    exact_toughness_max_n: int = Field(20, alias="TOUGHHAM_EXACT_TOUGHNESS_MAX_N")
    oracle_dp_max_n: int = Field(20, alias="TOUGHHAM_ORACLE_DP_MAX_N")
    oracle_max_n: int = Field(24, alias="TOUGHHAM_ORACLE_MAX_N")
    cover_oracle_max_n: int = Field(14, alias="TOUGHHAM_COVER_ORACLE_MAX_N")
    longest_path_max_n: int = Field(20, alias="TOUGHHAM_LONGEST_PATH_MAX_N")
    heavy_clique_max_n: int = Field(20, alias="TOUGHHAM_HEAVY_CLIQUE_MAX_N")
    heavy_clique_budget: int = Field(200_000, alias="TOUGHHAM_HEAVY_CLIQUE_BUDGET")
    balance_exhaustive_max_d: int = Field(12, alias="TOUGHHAM_BALANCE_EXHAUSTIVE_MAX_D")
    insertion_search_max_n: int = Field(20, alias="TOUGHHAM_INSERTION_SEARCH_MAX_N")

    # Monitoring & Metrics
    enable_prometheus: bool = Field(False, alias="ENABLE_PROMETHEUS")
    prometheus_port: int = Field(9090, alias="PROMETHEUS_PORT")

    # Config file paths
    config_file: str = Field("config/harness.yaml", alias="CONFIG_FILE")

    def load_suite_defaults(self) -> Dict[str, Any]:
        """
        Load per-lemma suite defaults from the YAML config file.

        Returns:
            Mapping of lemma id to its default source parameters; empty when
            the file is absent.
        """
        path = Path(self.config_file)
        if not path.is_file():
            return {}
        with path.open("r", encoding="utf-8") as handle:
            data = yaml.safe_load(handle) or {}
        return dict(data.get("lemmas", {}))


@lru_cache()
def get_settings() -> Settings:
    """Get cached settings instance."""
    return Settings()
