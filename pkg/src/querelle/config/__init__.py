"""
Querelle configuration module.
"""

from .schema import AnalysisConfig, DisplayConfig, GeneralConfig, QuerelleSettings

__all__ = [
    "AnalysisConfig",
    "DisplayConfig",
    "GeneralConfig",
    "QuerelleSettings",
]
