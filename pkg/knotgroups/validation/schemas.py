"""Pydantic validation schemas."""
from typing import Dict, List, Literal, Optional

from pydantic import BaseModel, Field, field_validator, model_validator

from knotgroups.freegroup.words import LABEL_PATTERN
from knotgroups.ncalg.series import AlgebraSpec
from knotgroups.presentation.presentation import GroupPresentation


class PresentationPayload(BaseModel):
    """Generators plus relator words, e.g. {"generators": ["x", "y"], "relators": ["x*y*x^-1*y^-1"]}."""
    generators: List[str] = Field(..., min_length=1)
    relators: List[str] = Field(default_factory=list)
    relations: Optional[List[str]] = None

    @field_validator('generators')
    @classmethod
    def validate_generators(cls, v):
        for label in v:
            if not LABEL_PATTERN.match(label):
                raise ValueError(f"invalid generator label '{label}'")
        if len(set(v)) != len(v):
            raise ValueError('generator labels must be unique')
        return v

    @model_validator(mode='after')
    def validate_relators(self):
        self.to_presentation()
        return self

    def to_presentation(self) -> GroupPresentation:
        return GroupPresentation.from_strings(self.generators, self.relators)

    @classmethod
    def from_presentation(cls, p: GroupPresentation) -> 'PresentationPayload':
        relations = p.relation_strings() if p.sides else None
        return cls(generators=list(p.alphabet.labels), relators=p.relator_strings(), relations=relations)


class AbelianPayload(BaseModel):
    """Abelianization Z^rank x Z/t1 x ..."""
    rank: int = Field(..., ge=0)
    torsion: List[int] = Field(default_factory=list)
    structure: str


class AnnihilatorPayload(BaseModel):
    """Laurent polynomial killing [x, y] in the metabelianized group."""
    source: str
    polynomial: str
    normalized: str
    factored: str


class LayerPayload(BaseModel):
    """γ_k/γ_{k+1} of a finitely presented group."""
    k: int = Field(..., ge=1)
    rank: int = Field(..., ge=0)
    torsion: List[int] = Field(default_factory=list)
    structure: str
    basis: List[str] = Field(default_factory=list)
    relationMatrix: List[List[int]] = Field(default_factory=list)
    relations: Optional[Dict[str, bool]] = None


class FoxPayload(BaseModel):
    word: str
    convention: Literal['left', 'right']
    derivatives: Dict[str, str]


class AlgebraSpecRequest(BaseModel):
    """Algebra from letters, comma-separated forbidden words and flags."""
    letters: List[str] = Field(default_factory=lambda: ['X', 'Y'])
    ideal: str = 'XX,YY'
    commutative: bool = False
    truncate: Optional[int] = Field(None, ge=0)

    @field_validator('letters')
    @classmethod
    def validate_letters(cls, v):
        if not v:
            raise ValueError('at least one letter is required')
        for letter in v:
            if len(letter) != 1 or not letter.isupper():
                raise ValueError(f"letters must be single uppercase characters, got '{letter}'")
        return v

    @model_validator(mode='after')
    def validate_ideal(self):
        self.to_spec()
        return self

    def to_spec(self) -> AlgebraSpec:
        return AlgebraSpec.from_text(self.letters, self.ideal, self.commutative, self.truncate)


class AlgebraReportPayload(BaseModel):
    spec: str
    saturated: bool
    dimension: Optional[int] = None
    perDegree: List[int] = Field(default_factory=list)
    basis: List[str] = Field(default_factory=list)


class RelationCheckPayload(BaseModel):
    spec: str
    holds: bool
    residuals: List[str] = Field(default_factory=list)
    representation: Optional[List[bool]] = None


class TietzeCheckPayload(BaseModel):
    move: str
    checks: Dict[str, bool] = Field(default_factory=dict)
    notes: Dict[str, bool] = Field(default_factory=dict)
    holdsBefore: bool
    holdsAfter: bool
    consistent: bool


class TietzeReportPayload(BaseModel):
    truncate: int = Field(..., ge=1)
    moves: List[TietzeCheckPayload]
    abelianizationPreserved: bool
    consistent: bool


class RewriteCheckPayload(BaseModel):
    family: str
    relation: str
    substituted: str
    fixtureRelator: str
    matches: bool


class CertificatePayload(BaseModel):
    """Evidence that the Fox gradient of the Kishino quotient relator is not unimodular."""
    foxConvention: Literal['left', 'right']
    foxDerivatives: Dict[str, str]
    printedMatches: Dict[str, bool] = Field(default_factory=dict)
    clearedVector: List[str] = Field(..., min_length=3, max_length=3)
    minimalPolynomial: str
    point: Dict[str, str]
    evaluations: List[str]
    nonzeroChecks: Dict[str, bool] = Field(default_factory=dict)
    verdict: Literal['NOT-UNIMODULAR']
    conclusion: str

    @field_validator('evaluations')
    @classmethod
    def validate_evaluations(cls, v):
        if len(v) != 3:
            raise ValueError('evaluations must have one entry per cleared component')
        return v


class RelationFatePayload(BaseModel):
    index: int = Field(..., ge=0)
    relator: str
    fate: str


class KishinoPayload(BaseModel):
    abelianRows: List[List[int]]
    abelianization: str
    aEqualsCInverseCubed: bool
    bEqualsC: bool
    moduleResidual: str
    productsAgree: bool
    quotientRelators: List[str]
    fates: List[RelationFatePayload]
    certificate: CertificatePayload
    verified: bool


class CheckResultPayload(BaseModel):
    name: str
    passed: bool
    trials: int = Field(..., ge=0)
    detail: Optional[str] = None


class SelftestPayload(BaseModel):
    seed: int
    iterations: int = Field(..., ge=1)
    results: List[CheckResultPayload]
    passed: bool
