"""Pydantic request/response models for the HTTP API.

A word argument is either literal ``word`` text or a ``family`` descriptor
plus ``length``; exactly one form must be given.
"""

from __future__ import annotations

from pydantic import BaseModel, Field, model_validator

from ..errors import PreconditionError
from ..wordgen import parse_family
from ..words import Word


class WordInput(BaseModel):
    word: str | None = None
    family: str | None = None
    length: int | None = Field(default=None, ge=0)

    @model_validator(mode="after")
    def _one_form(self) -> "WordInput":
        if self.word is None and self.family is None:
            raise ValueError("provide either word or family")
        if self.word is not None and self.family is not None:
            raise ValueError("word and family are mutually exclusive")
        if self.family is not None and self.length is None:
            raise ValueError("family input needs a length")
        return self

    def resolve(self) -> Word:
        if self.word is not None:
            return Word.parse(self.word)
        try:
            fam = parse_family(self.family)
        except PreconditionError as exc:
            raise ValueError(str(exc)) from exc
        return fam.generate(self.length)


class HealthResponse(BaseModel):
    status: str
    version: str


class PLRequest(WordInput):
    factorize: bool = False
    all_mpf: bool = False
    limit: int | None = Field(default=None, ge=1)


class PLResponse(BaseModel):
    word: str
    pl: int
    factorizations: list[list[str]] | None = None


class ProfileRequest(WordInput):
    pass


class ProfileResponse(BaseModel):
    length: int
    pl: list[int]
    running_max: list[int]


class GenerateRequest(BaseModel):
    family: str
    length: int = Field(ge=0)


class GenerateResponse(BaseModel):
    word: str
    length: int


class OmegaScanRequest(WordInput):
    k: int = Field(ge=1)
    strict: bool = False
    max_scan_length: int = Field(default=10_000, ge=1)


class OmegaMemberModel(BaseModel):
    start: int
    end: int
    length: int
    count_with_eps: int
    count_without_eps: int
    threshold_num: int
    threshold_den_power: int


class OmegaScanResponse(BaseModel):
    k: int
    scanned_prefix_length: int
    strict: bool
    member_count: int
    max_count_with_eps: int
    k_covers_factor_pl: bool | None
    members: list[OmegaMemberModel]


class HuntRequest(WordInput):
    k: int = Field(ge=1)
    j: int = Field(ge=1)
    strict: bool = False
    max_scan_length: int = Field(default=10_000, ge=1)


class HuntResponse(BaseModel):
    found: bool
    a: str | None = None
    b: str | None = None
    exponent: int | None = None
    period: int | None = None
    host: str | None = None
    host_start: int | None = None
    host_end: int | None = None


class DeltaCheckRequest(BaseModel):
    u: str
    v: str = ""
    d: str
    n: int


class DeltaCheckResponse(BaseModel):
    ok: bool
    conditions: dict[str, bool]
    pl_u: int


class VerifyRequest(BaseModel):
    suite: str
    max_len: int | None = Field(default=None, ge=1)
    alphabet_size: int = Field(default=2, ge=2)
    max_d: int = Field(default=4, ge=1)
    max_v: int = Field(default=3, ge=0)
    n_slack: int = Field(default=2, ge=0)
    random_words: int = Field(default=0, ge=0)
    random_len: int = Field(default=0, ge=0)
    seed: int = 0


class VerifyResponse(BaseModel):
    suite: str
    cases: int
    passed: bool
    failures: list[dict]
    records: list[dict]
