"""
Input validation utilities.
"""
from fractions import Fraction
from typing import Any, Dict, List, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator, model_validator

from algebra import QContext
from config import config
from families import FamilyTag, WeightFamily

Command = Literal["table", "verify", "quadcheck", "oracle"]
OutputFormat = Literal["json", "csv", "text"]

EXACT_COMMANDS = ("table", "verify", "oracle")


class RunConfig(BaseModel):
    """One validated CLI invocation."""

    model_config = ConfigDict(frozen=True)

    command: Command
    family: FamilyTag
    sqrt_q: str
    alpha: Optional[int] = None
    nmax: int = Field(default=config.DEFAULT_NMAX, ge=0, le=config.NMAX_LIMIT)
    precision: int = Field(default=config.DEFAULT_PRECISION_BITS, ge=config.MIN_PRECISION_BITS)
    tolerance: int = Field(default=config.DEFAULT_TOLERANCE_EXPONENT, ge=1)
    format: OutputFormat = "text"
    out: Optional[str] = None
    log_level: str = "INFO"

    @field_validator("sqrt_q", mode="before")
    @classmethod
    def _exact_sqrt_q(cls, value: Any) -> str:
        try:
            s = Fraction(str(value).strip())
        except (ValueError, ZeroDivisionError):
            raise ValueError(f"sqrt-q must be an exact rational p/r, got {value!r}")
        if not 0 < s < 1:
            raise ValueError("sqrt-q must lie in (0,1)")
        return str(s)

    @field_validator("log_level")
    @classmethod
    def _known_level(cls, value: str) -> str:
        value = value.upper()
        if value not in ("TRACE", "DEBUG", "INFO", "SUCCESS", "WARNING", "ERROR", "CRITICAL"):
            raise ValueError(f"unknown log level {value!r}")
        return value

    @model_validator(mode="after")
    def _family_parameters(self) -> "RunConfig":
        if self.family is FamilyTag.STIELTJES_WIGERT:
            if self.alpha is not None:
                raise ValueError("--alpha only applies to --family qlaguerre")
        else:
            if self.alpha is None:
                raise ValueError("--family qlaguerre needs --alpha")
            if self.alpha <= -1:
                raise ValueError(f"q-Laguerre needs alpha > -1, got {self.alpha}")
            if self.command in EXACT_COMMANDS and self.alpha < 1:
                raise ValueError(
                    f"{self.command} needs alpha >= 1 for q-Laguerre, got {self.alpha}: the "
                    "integral of w(y)/y must converge for the integration-by-parts lemma "
                    "behind the ladder operators"
                )
        if self.command == "quadcheck" and self.precision < config.QUADCHECK_MIN_PRECISION_BITS:
            raise ValueError(
                f"quadcheck needs --precision >= {config.QUADCHECK_MIN_PRECISION_BITS}, "
                f"got {self.precision}"
            )
        return self

    @property
    def ctx(self) -> QContext:
        return QContext.from_sqrt_q(self.sqrt_q)

    @property
    def weight_family(self) -> WeightFamily:
        if self.family is FamilyTag.STIELTJES_WIGERT:
            return WeightFamily.stieltjes_wigert()
        return WeightFamily.q_laguerre(self.alpha)

    @property
    def run_label(self) -> str:
        return f"{self.command} {self.weight_family.label} sqrt-q={self.sqrt_q}"

    def summary_fields(self) -> Dict[str, Any]:
        """The parameters echoed into every report (no output or logging options)."""
        return self.model_dump(mode="json", exclude={"out", "log_level", "format"})


def _message(error: Dict[str, Any]) -> str:
    cause = error.get("ctx", {}).get("error")
    if cause is not None:
        return str(cause)
    location = ".".join(str(part) for part in error.get("loc", ()))
    return f"{location}: {error['msg']}" if location else error["msg"]


def validate_run_config(raw: Dict[str, Any]) -> tuple[bool, List[str]]:
    """
    Validate CLI parameters.

    Args:
        raw: parsed arguments, keyed like RunConfig fields

    Returns:
        Tuple of (is_valid, error_messages)
    """
    try:
        RunConfig(**raw)
    except ValidationError as exc:
        return False, [_message(error) for error in exc.errors()]
    return True, []
