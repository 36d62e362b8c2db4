"""JSON documents (``"schema": 1``) for elements, quaternions, forms, classes and verdicts.

Every element string is in the parser syntax, so documents re-parse to equal
objects.  Verdict certificates round-trip at the JSON level.
"""

import re

from .artin_schreier import TruncatedSeries, WpClass
from .field import FieldDescriptor, FieldElem, FieldError, KINDS
from .forms import HermForm, QBase, QuadFormF, QuadFormQ
from .parsing import parse, parse_element, parse_quaternion
from .printing import format_elem, format_form
from .quaternion import InvolutionDesc, Quaternion, QuaternionAlgebra
from .verdict import Certificate, IsotropyVerdict, CERT_TAGS

SCHEMA = 1
FIELD_TAGS = {"local": "local", "ratfunc": "ratfunc", "gf": "finite"}


def parse_field(text, precision=None):
    """``local:k``, ``ratfunc:k`` or ``gf:k``, optionally ``:0b<modulus>``."""
    parts = text.split(":")
    if len(parts) not in (2, 3) or parts[0] not in FIELD_TAGS:
        raise FieldError(f"bad field {text!r}: use local:k, ratfunc:k or gf:k")
    kind = FIELD_TAGS[parts[0]]
    assert kind in KINDS
    try:
        k = int(parts[1])
        modulus = int(parts[2], 0) if len(parts) == 3 else None
    except ValueError as e:
        raise FieldError(f"bad field {text!r}: {e}") from e
    if k < 1:
        raise FieldError("k must be positive")
    if precision is None:
        return FieldDescriptor.make(kind, k, modulus)
    return FieldDescriptor.make(kind, k, modulus, precision)


def _algebra_json(Q):
    return {"a": format_elem(Q.a), "b": format_elem(Q.b)}


def _header(kind, desc):
    return {"schema": SCHEMA, "type": kind, "field": str(desc)}


def _base_json(base):
    out = {"algebra": _algebra_json(base.algebra)}
    if not base.is_canonical:
        out["involution"] = str(base.theta.u)
    return out


def to_json(obj):
    if isinstance(obj, FieldElem):
        return {**_header("element", obj.desc), "value": format_elem(obj)}
    if isinstance(obj, Quaternion):
        Q = obj.algebra
        return {**_header("quaternion", Q.desc), "algebra": _algebra_json(Q), "value": str(obj)}
    if isinstance(obj, (HermForm, QuadFormQ, QuadFormF)):
        out = {**_header("form", obj.desc), "kind": obj.kind, "dim": obj.dim}
        if isinstance(obj, QuadFormQ) or (isinstance(obj, HermForm) and not obj.is_bilinear):
            out.update(_base_json(obj.base))
        out["value"] = format_form(obj)
        return out
    if isinstance(obj, WpClass):
        return {"schema": SCHEMA, "type": "wp_class", **obj.to_json()}
    if isinstance(obj, IsotropyVerdict):
        return {"schema": SCHEMA, "type": "verdict", **obj.to_json()}
    raise TypeError(f"no JSON schema for {type(obj).__name__}")


def _field_of(d):
    return parse_field(d["field"])


def _algebra_of(d, desc):
    a = d["algebra"]
    return QuaternionAlgebra(desc, parse_element(a["a"], desc), parse_element(a["b"], desc))


def _base_of(d, desc):
    Q = _algebra_of(d, desc)
    if "involution" in d:
        return QBase(Q, InvolutionDesc(parse_quaternion(d["involution"], Q)))
    return QBase.canonical(Q)


def from_json(d, desc=None, algebra=None):
    """Inverse of :func:`to_json`; verdict witnesses need ``desc`` (and ``algebra``)."""
    if d.get("schema") != SCHEMA:
        raise ValueError(f"unsupported schema {d.get('schema')!r}")
    kind = d.get("type")
    if kind == "element":
        return parse_element(d["value"], _field_of(d))
    if kind == "quaternion":
        desc = _field_of(d)
        return parse_quaternion(d["value"], _algebra_of(d, desc))
    if kind == "form":
        desc = _field_of(d)
        if "algebra" in d:
            base = _base_of(d, desc)
            return parse(d["value"], desc, base.algebra, base.theta)
        return parse(d["value"], desc)
    if kind == "wp_class":
        return WpClass.from_json(d)
    if kind == "verdict":
        return verdict_from_json(d, desc, algebra)
    raise ValueError(f"unknown document type {kind!r}")


_SERIES = re.compile(r"^(?P<body>.*) \+ O\(t\^(?P<p>-?\d+)\)$")


def parse_witness_entry(text, desc, algebra=None):
    m = _SERIES.match(text)
    if m:
        x = parse_element(m.group("body"), desc)
        return TruncatedSeries.from_elem(x, int(m.group("p")))
    if algebra is not None and ("q{" in text or any(c in text for c in "ijk")):
        return parse_quaternion(text, algebra)
    return parse(text, desc, algebra)


def verdict_from_json(d, desc=None, algebra=None):
    cert = d["certificate"]
    tag = cert["tag"]
    if tag not in CERT_TAGS:
        raise ValueError(f"unknown certificate tag {tag!r}")
    data = {k: v for k, v in cert.items() if k != "tag"}
    witness = None
    if "witness" in d:
        if desc is None:
            raise ValueError("a field is needed to read witness entries")
        witness = tuple(parse_witness_entry(w, desc, algebra) for w in d["witness"])
    return IsotropyVerdict(d["status"], Certificate(tag, data), d["theorem"], witness,
                           d.get("witness_precision"))
