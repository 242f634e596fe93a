"""
Configuration schema for querelle.

Every value comes from explicit arguments (the CLI flags); no environment
variables or files are read, so an invocation is reproducible from its command
line alone.
"""

from typing import Literal

from pydantic import BaseModel, Field
from pydantic_settings import BaseSettings, PydanticBaseSettingsSource, SettingsConfigDict

from ..leibniz import SubtangentConvention
from ..logging_config import LogLevel
from ..models import PlotSpec

# ==============================================================================
# NESTED CONFIG MODELS (use BaseModel, not BaseSettings)
# ==============================================================================


class GeneralConfig(BaseModel):
    """General settings."""

    log_level: LogLevel = "WARNING"


class DisplayConfig(BaseModel):
    """How exact numbers are printed."""

    precision: int = Field(default=12, ge=1, le=60)


class AnalysisConfig(BaseModel):
    """Which methods run and how subtangents are read."""

    method: Literal["leibniz", "rolle", "cone", "all"] = "all"
    convention: SubtangentConvention = SubtangentConvention.PROJECTION
    trace: bool = False


# ==============================================================================
# MAIN SETTINGS CLASS
# ==============================================================================


class QuerelleSettings(BaseSettings):
    """
    Unified querelle configuration.

    Only explicit init arguments are honored; field defaults fill the rest.
    """

    model_config = SettingsConfigDict(extra="forbid", validate_default=True)

    general: GeneralConfig = Field(default_factory=GeneralConfig)
    display: DisplayConfig = Field(default_factory=DisplayConfig)
    analysis: AnalysisConfig = Field(default_factory=AnalysisConfig)
    plot: PlotSpec = Field(default_factory=PlotSpec)

    @classmethod
    def settings_customise_sources(
        cls,
        settings_cls: type[BaseSettings],
        init_settings: PydanticBaseSettingsSource,
        env_settings: PydanticBaseSettingsSource,
        dotenv_settings: PydanticBaseSettingsSource,
        file_secret_settings: PydanticBaseSettingsSource,
    ) -> tuple[PydanticBaseSettingsSource, ...]:
        """Restrict sources to init arguments."""
        return (init_settings,)
