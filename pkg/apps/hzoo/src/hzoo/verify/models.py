from typing import Literal, Optional

from pydantic import BaseModel, Field

from hzoo.core.config import TOOL_VERSION

Verdict = Literal["pass", "fail"]


class Subcase(BaseModel):
    name: str = Field(..., description="What was checked, e.g. a face label or a family member")
    verdict: Verdict = Field(..., description="Outcome of this subcase")
    note: Optional[str] = Field(default=None, description="Extra facts: quotient degree, residual, rank")


class Certificate(BaseModel):
    """Machine-checkable record of one claim.

    The verdict is "pass" exactly when every subcase passed; a failing
    certificate always carries a witness.
    """

    claim_id: str = Field(..., description="Identifier of the checked claim")
    inputs_digest: str = Field(..., description="sha256 of the canonical inputs")
    verdict: Verdict
    witness: Optional[str] = Field(
        default=None, description="Residual polynomial or failing subcase, present on fail"
    )
    detail: list[Subcase] = Field(
        default_factory=list, serialization_alias="subcases", description="Per-subcase verdicts, serialized as subcases"
    )
    tool_version: str = TOOL_VERSION

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"


class Report(BaseModel):
    """JSON envelope written by the command line."""

    command: str
    tool_version: str = TOOL_VERSION
    generated_at: Optional[str] = Field(default=None, description="UTC ISO-8601 time, omitted with --no-timestamp")
    certificates: list[Certificate] = Field(default_factory=list)
    artifacts: list[str] = Field(default_factory=list, description="Polynomials or files produced")

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.certificates)
