"""
Tests for configuration and logging setup.
"""

import logging
from fractions import Fraction

import pytest
from pydantic import ValidationError
from rich.logging import RichHandler

from querelle.config import AnalysisConfig, DisplayConfig, GeneralConfig, QuerelleSettings
from querelle.leibniz import SubtangentConvention
from querelle.logging_config import LOG_LEVELS, get_logger, setup_logging
from querelle.models import PlotSpec


@pytest.mark.unit
class TestQuerelleSettings:
    """Test the unified settings object."""

    def test_defaults(self):
        settings = QuerelleSettings()

        assert settings.general.log_level == "WARNING"
        assert settings.display.precision == 12
        assert settings.analysis.method == "all"
        assert settings.analysis.convention is SubtangentConvention.PROJECTION
        assert settings.analysis.trace is False
        assert settings.plot.grid == 512
        assert settings.plot.bbox == (Fraction(-2), Fraction(10), Fraction(-4), Fraction(10))

    def test_nested_overrides(self):
        settings = QuerelleSettings(
            display={"precision": 30},
            analysis={"method": "rolle", "convention": "alternate_x_dydx"},
        )

        assert settings.display.precision == 30
        assert settings.analysis.method == "rolle"
        assert settings.analysis.convention is SubtangentConvention.ALTERNATE

    def test_unknown_key_rejected(self):
        with pytest.raises(ValidationError):
            QuerelleSettings(colour="blue")

    def test_environment_ignored(self, monkeypatch):
        monkeypatch.setenv("GENERAL", '{"log_level": "DEBUG"}')
        monkeypatch.setenv("DISPLAY__PRECISION", "3")

        settings = QuerelleSettings()

        assert settings.general.log_level == "WARNING"
        assert settings.display.precision == 12


@pytest.mark.unit
class TestSectionModels:
    def test_precision_bounds(self):
        assert DisplayConfig(precision=1).precision == 1
        with pytest.raises(ValidationError):
            DisplayConfig(precision=0)
        with pytest.raises(ValidationError):
            DisplayConfig(precision=61)

    def test_log_level_choices(self):
        assert GeneralConfig(log_level="DEBUG").log_level == "DEBUG"
        with pytest.raises(ValidationError):
            GeneralConfig(log_level="VERBOSE")

    def test_method_choices(self):
        with pytest.raises(ValidationError):
            AnalysisConfig(method="newton")


@pytest.mark.unit
class TestPlotSpec:
    def test_bbox_must_be_ordered(self):
        with pytest.raises(ValidationError):
            PlotSpec(bbox=(Fraction(1), Fraction(0), Fraction(0), Fraction(1)))
        with pytest.raises(ValidationError):
            PlotSpec(bbox=(Fraction(0), Fraction(1), Fraction(2), Fraction(2)))

    def test_grid_minimum(self):
        assert PlotSpec(grid=16).grid == 16
        with pytest.raises(ValidationError):
            PlotSpec(grid=15)

    def test_size_positive(self):
        with pytest.raises(ValidationError):
            PlotSpec(width=0)


@pytest.mark.unit
class TestLogging:
    def test_logger_namespace(self):
        assert get_logger("querelle.cone").name == "querelle.cone"
        assert get_logger("elsewhere").name == "querelle.elsewhere"

    def test_setup_sets_level(self):
        setup_logging("DEBUG")
        assert logging.getLogger("querelle").level == logging.DEBUG
        setup_logging("WARNING")
        assert logging.getLogger("querelle").level == logging.WARNING

    def test_single_handler(self):
        setup_logging("INFO")
        setup_logging("INFO")
        assert len(logging.getLogger("querelle").handlers) == 1
        setup_logging("WARNING")

    def test_level_is_case_insensitive(self):
        setup_logging("info")
        assert logging.getLogger("querelle").level == logging.INFO
        setup_logging("WARNING")

    def test_unknown_level_rejected(self):
        with pytest.raises(ValueError, match="unknown log level 'VERBOSE'"):
            setup_logging("VERBOSE")

    def test_handler_writes_to_stderr(self):
        setup_logging("WARNING")
        (handler,) = logging.getLogger("querelle").handlers
        assert isinstance(handler, RichHandler)
        assert handler.console.stderr

    def test_levels_match_settings_choices(self):
        for level in LOG_LEVELS:
            assert GeneralConfig(log_level=level).log_level == level
