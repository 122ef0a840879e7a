from fractions import Fraction
from typing import Any, ClassVar, Dict, List, Literal, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_serializer, model_validator

from algebra.exact import to_decimal_string

# --- Wire helpers ---


def to_wire(value: Any) -> Any:
    """Numbers become decimal strings so no consumer loses precision."""
    if isinstance(value, bool):
        return value
    if isinstance(value, (int, Fraction)):
        return to_decimal_string(value)
    if isinstance(value, dict):
        return {str(k): to_wire(v) for k, v in value.items() if v is not None}
    if isinstance(value, (list, tuple)):
        return [to_wire(v) for v in value]
    return value


# --- Verification ---

class VerificationReport(BaseModel):
    """One identity checked at one parameter point."""
    model_config = ConfigDict(frozen=True)

    identity: str
    point: Dict[str, int]
    status: Literal["pass", "fail"]
    left: Optional[str] = None
    right: Optional[str] = None

    @model_validator(mode="after")
    def _failures_carry_witness(self):
        if self.status == "fail" and (self.left is None or self.right is None):
            raise ValueError("a failed report must carry both sides")
        return self

    @field_serializer("point")
    def _serialize_point(self, point: Dict[str, int]) -> Dict[str, str]:
        return {name: str(value) for name, value in point.items()}

    @property
    def passed(self) -> bool:
        return self.status == "pass"


class SuiteRanges(BaseModel):
    """Upper bounds of a verification grid; None means the suite's default."""
    n_max: Optional[int] = Field(None, ge=0)
    m_max: Optional[int] = Field(None, ge=0)
    d_max: Optional[int] = Field(None, ge=1)
    k_max: Optional[int] = Field(None, ge=0)
    order: Optional[int] = Field(None, ge=0)
    rank_max: Optional[int] = Field(None, ge=1)
    workers: int = Field(1, ge=1)

    GRID_FIELDS: ClassVar[Tuple[str, ...]] = ("n_max", "m_max", "d_max", "k_max", "order", "rank_max")

    @classmethod
    def base_field(cls, name: str) -> str:
        """Grid field a suite bound follows; "orbit_n_max" follows "n_max"."""
        if name in cls.GRID_FIELDS:
            return name
        return next(field for field in cls.GRID_FIELDS if name.endswith(f"_{field}"))

    def resolve(self, defaults: Dict[str, int]) -> Dict[str, int]:
        """Requested bounds with the suite defaults filled in.

        A secondary bound such as "orbit_n_max" keeps its own default until its
        base field is requested, then takes the requested value.
        """
        resolved = {}
        for name, default in defaults.items():
            requested = getattr(self, self.base_field(name))
            resolved[name] = requested if requested is not None else default
        return resolved


# --- Output ---

class SeriesPayload(BaseModel):
    order: int
    coefficients: List[str]

    @field_serializer("order")
    def _serialize_order(self, order: int) -> str:
        return str(order)


class OutputDocument(BaseModel):
    """Everything one command prints; JSON field order is fixed by the declaration order."""
    command: str
    params: Dict[str, Any] = Field(default_factory=dict)
    format: str = "plain"
    result: Any = None
    pole_order: Optional[str] = None
    numerator: Optional[List[str]] = None
    series: Optional[SeriesPayload] = None
    reports: Optional[List[VerificationReport]] = None
    metadata: Optional[Dict[str, Any]] = None

    @property
    def failures(self) -> List[VerificationReport]:
        return [report for report in self.reports or [] if not report.passed]
