"""Isotropy verdicts and the certificates that back them."""

from dataclasses import dataclass, field
from typing import Optional

ISOTROPIC, ANISOTROPIC, UNDECIDED = "isotropic", "anisotropic", "undecided"

CERT_TAGS = ("DimBound", "ArfRule", "SymbolRule", "F2Rank", "NormFormRule", "DirectSum",
             "SearchWitness", "SearchExhausted")


@dataclass(frozen=True, eq=False)
class Certificate:
    tag: str
    data: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.tag not in CERT_TAGS:
            raise ValueError(f"unknown certificate tag {self.tag!r}")

    def to_json(self):
        return {"tag": self.tag, **{k: _jsonable(v) for k, v in self.data.items()}}

    def __str__(self):
        inner = ", ".join(f"{k}={_text(v)}" for k, v in self.data.items())
        return f"{self.tag}({inner})"


def _jsonable(v):
    if hasattr(v, "to_json"):
        return v.to_json()
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    if isinstance(v, dict):
        return {k: _jsonable(x) for k, x in v.items()}
    if isinstance(v, (int, str, bool)) or v is None:
        return v
    return str(v)


def _text(v):
    if isinstance(v, (list, tuple)):
        return "[" + ", ".join(_text(x) for x in v) + "]"
    return str(v)


@dataclass(frozen=True, eq=False)
class IsotropyVerdict:
    status: str
    certificate: Certificate
    theorem: str
    witness: Optional[tuple] = None
    precision: Optional[int] = None  # set when the witness is a truncated series

    def __post_init__(self):
        if self.status == ANISOTROPIC and self.certificate.tag in ("SearchExhausted", "SearchWitness"):
            raise ValueError("anisotropy cannot rest on search alone")
        if self.witness is not None and self.status != ISOTROPIC:
            raise ValueError("only isotropic verdicts carry a witness")

    @property
    def is_isotropic(self):
        return self.status == ISOTROPIC

    @property
    def is_anisotropic(self):
        return self.status == ANISOTROPIC

    @property
    def is_decided(self):
        return self.status != UNDECIDED

    @property
    def exact_witness(self):
        return self.witness is not None and self.precision is None

    def with_witness(self, witness, precision=None):
        return IsotropyVerdict(self.status, self.certificate, self.theorem, tuple(witness), precision)

    def to_json(self):
        out = {"status": self.status}
        if self.witness is not None:
            out["witness"] = [str(w) for w in self.witness]
            if self.precision is not None:
                out["witness_precision"] = self.precision
        out["certificate"] = self.certificate.to_json()
        out["theorem"] = self.theorem
        return out


def isotropic(certificate, theorem, witness=None, precision=None):
    return IsotropyVerdict(ISOTROPIC, certificate, theorem,
                           None if witness is None else tuple(witness), precision)


def anisotropic(certificate, theorem):
    return IsotropyVerdict(ANISOTROPIC, certificate, theorem)


def undecided(bound, theorem="no decision rule applies; bounded search found no witness"):
    return IsotropyVerdict(UNDECIDED, Certificate("SearchExhausted", {"bound": bound}), theorem)
