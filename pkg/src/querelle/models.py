"""
Report models.

Exact values are carried as strings (rationals as "p/q", algebraic numbers as
annihilator plus isolating interval) next to a decimal rendering, so no
precision claim is implicit in the JSON output.
"""

from fractions import Fraction

from pydantic import BaseModel, Field, field_validator


class CurveModel(BaseModel):
    """A parsed curve."""

    source: str
    canonical: str


class PointModel(BaseModel):
    x: str
    y: str


class ExactNumber(BaseModel):
    """
    An exact real number.

    Attributes:
        exact: "p/q" for a rational, "root of P in [lo, hi]" otherwise
        annihilator: Square-free polynomial vanishing at the number
        interval: Isolating interval ends as rationals
        decimal: Rendering at the requested precision
    """

    exact: str
    annihilator: str
    interval: tuple[str, str]
    decimal: str


class DirectionReport(BaseModel):
    """A tangent direction; slope is None for the vertical one."""

    vertical: bool
    multiplicity: int
    slope: ExactNumber | None = None


class SubtangentReport(BaseModel):
    """A subtangent, or the reason none exists for that direction."""

    convention: str
    vertical: bool = False
    value: ExactNumber | None = None
    error: str | None = None


class MethodReport(BaseModel):
    """Result of one method at one point."""

    equation: str
    vertical_multiplicity: int
    iterations_used: int
    directions: list[DirectionReport] = Field(default_factory=list)
    subtangents: list[SubtangentReport] = Field(default_factory=list)


class MethodsReport(BaseModel):
    leibniz: MethodReport | None = None
    rolle: MethodReport | None = None
    cone: MethodReport | None = None


class CurveAnalysis(BaseModel):
    """
    Per-point analysis.

    agreement is true iff every method that ran produced the same slope equation and
    the same direction multiset; it is None when fewer than two methods ran.
    """

    curve: CurveModel
    point: PointModel
    multiplicity: int
    methods: MethodsReport
    agreement: bool | None
    trace: list[str] | None = None


class SingularPointModel(BaseModel):
    point: PointModel
    multiplicity: int
    kind: str
    cone: str
    directions: list[DirectionReport] = Field(default_factory=list)


class SingularReport(BaseModel):
    curve: CurveModel
    singular_points: list[SingularPointModel] = Field(default_factory=list)


class PlotSpec(BaseModel):
    """
    Figure parameters.

    bbox is (xmin, xmax, ymin, ymax); grid is the number of cells per axis.
    """

    bbox: tuple[Fraction, Fraction, Fraction, Fraction] = (
        Fraction(-2),
        Fraction(10),
        Fraction(-4),
        Fraction(10),
    )
    grid: int = Field(default=512, ge=16)
    width: int = Field(default=640, gt=0)
    height: int = Field(default=640, gt=0)
    margin: int = Field(default=40, ge=0)

    @field_validator("bbox")
    @classmethod
    def _ordered(
        cls, value: tuple[Fraction, Fraction, Fraction, Fraction]
    ) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        xmin, xmax, ymin, ymax = value
        if not (xmin < xmax and ymin < ymax):
            raise ValueError("bbox needs xmin < xmax and ymin < ymax")
        return value
