"""Command line interface: ``c2f <command> [flags] [args]``.

Exit codes: 0 for decided results, 3 for undecided verdicts, 1 for errors
(and for a failing ``verify-paper`` run).
"""

import argparse
import json
import sys

from . import acceptance
from .artin_schreier import WpClassUndetermined, abs_trace
from .field import LOCAL, RATFUNC, FieldElem, FieldError, residue_dlog
from .forms import FormError, HermForm, QuadFormF, QuadFormQ, diagonalize_gram
from .forms import DiagonalizationError
from .invariants import SingularFormError, arf
from .isotropy import Context, decide, is_division_verdict
from .parsing import ParseError, parse, parse_element, parse_quaternion
from .printing import format_entry, format_form
from .quaternion import (DescentError, InvolutionDesc, Quaternion, QuaternionAlgebra,
                         default_division_algebra, hilbert_symbol)
from .serialize import SCHEMA, parse_field, to_json
from .utable import SplitAlgebraError, format_table, u_table

EXIT_OK, EXIT_ERROR, EXIT_UNDECIDED = 0, 1, 3

ERRORS = (ParseError, FormError, FieldError, ZeroDivisionError, DescentError, SingularFormError,
          WpClassUndetermined, DiagonalizationError, SplitAlgebraError, ValueError, TypeError)


class CliError(Exception):
    pass


# -- setup ----------------------------------------------------------------------------

def _common():
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--field", default="local:1",
                   help="local:k, ratfunc:k or gf:k, optionally :0b<modulus> (default local:1)")
    p.add_argument("--quat", metavar="a=...,b=...", help="quaternion algebra [a, b)")
    p.add_argument("--invol", metavar="u=...", help="involution Int(u) o gamma (default gamma)")
    p.add_argument("--precision", type=int, help="Laurent coefficients for series witnesses")
    p.add_argument("--search-bound", type=int, default=3, help="degree bound for witness search")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=acceptance.Options.samples)
    return p


def build_parser():
    common = _common()
    p = argparse.ArgumentParser(prog="c2f", description="Forms over characteristic-2 fields "
                                "and quaternion algebras with involution.")
    sub = p.add_subparsers(dest="command", required=True)
    sub.add_parser("eval", parents=[common], help="parse and print an element, quaternion or form") \
        .add_argument("expr")
    sub.add_parser("arf", parents=[common], help="Arf invariant of a nonsingular quadratic form") \
        .add_argument("form")
    sub.add_parser("isotropy", parents=[common], help="isotropy verdict with certificate") \
        .add_argument("form")
    sub.add_parser("diagonalize", parents=[common], help="diagonalize a gram[...] form") \
        .add_argument("form")
    sub.add_parser("division", parents=[common], help="is the --quat algebra a division algebra")
    sp = sub.add_parser("symbol", parents=[common], help="residue symbol of [a, b)")
    sp.add_argument("a")
    sp.add_argument("b")
    sub.add_parser("utable", parents=[common], help="u-invariant table with verified witnesses")
    vp = sub.add_parser("verify-paper", parents=[common], help="run the acceptance suite")
    vp.add_argument("--fuzz-seconds", type=float,
                    help="time budget of the fuzz check (default $C2F_FUZZ_SECONDS or 600)")
    vp.add_argument("--fuzz-cases", type=int, help="fixed number of fuzz cases instead of a time budget")
    vp.add_argument("--only", help="comma-separated criterion numbers")
    return p


def _key_values(text, keys):
    out = {}
    for part in text.split(","):
        if "=" not in part:
            raise CliError(f"expected key=value in {text!r}")
        k, v = part.split("=", 1)
        k = k.strip()
        if k not in keys:
            raise CliError(f"unknown key {k!r}; expected {', '.join(keys)}")
        out[k] = v.strip()
    missing = [k for k in keys if k not in out]
    if missing:
        raise CliError(f"missing {', '.join(missing)} in {text!r}")
    return out


class Env:
    """Field, algebra and involution selected by the flags."""

    def __init__(self, args):
        self.desc = parse_field(args.field, args.precision)
        self.algebra = None
        self.theta = None
        if args.quat:
            kv = _key_values(args.quat, ("a", "b"))
            self.algebra = QuaternionAlgebra(self.desc, parse_element(kv["a"], self.desc),
                                             parse_element(kv["b"], self.desc))
        if args.invol:
            if self.algebra is None:
                raise CliError("--invol needs --quat")
            u = parse_quaternion(_key_values(args.invol, ("u",))["u"], self.algebra)
            self.theta = InvolutionDesc(u)
        self.ctx = Context(search_bound=args.search_bound, precision=args.precision)

    def parse(self, text):
        return parse(text, self.desc, self.algebra, self.theta)

    def require_algebra(self, default=False):
        if self.algebra is None:
            if not default:
                raise CliError("this command needs --quat a=...,b=...")
            self.algebra = default_division_algebra(self.desc)
        return self.algebra


# -- rendering --------------------------------------------------------------------------

def _show(x):
    if isinstance(x, (HermForm, QuadFormQ, QuadFormF)):
        return format_form(x)
    if isinstance(x, (Quaternion, FieldElem)):
        return format_entry(x)
    return str(x)


def _emit(args, text_lines, doc):
    if args.format == "json":
        print(json.dumps({"schema": SCHEMA, **doc}, indent=2, ensure_ascii=False))
    else:
        print("\n".join(text_lines))


def describe_form(f):
    if isinstance(f, HermForm):
        kind = "symmetric bilinear form" if f.is_bilinear else f"hermitian form over {f.base}"
        if f.is_alternating:
            return f"alternating {kind}, dimension {f.dim}"
        return f"{kind}, dimension {f.dim}"
    if isinstance(f, QuadFormF):
        return (f"quadratic form over F, {len(f.blocks)} nonsingular blocks, "
                f"{len(f.diag)} totally singular slots")
    n, m = f.type
    shape = "diagonal" if f.is_diagonal else "Gram"
    return f"{shape} quadratic form over {f.base}, type ({n},{m})"


def _verdict_lines(v):
    lines = [f"status: {v.status}", f"certificate: {v.certificate}", f"theorem: {v.theorem}"]
    if v.witness is not None:
        lines.append("witness: (" + ", ".join(_show(w) for w in v.witness) + ")")
        if v.precision is not None:
            lines.append(f"witness precision: t^{v.precision}")
    return lines


# -- commands ---------------------------------------------------------------------------

def cmd_eval(args, env):
    x = env.parse(args.expr)
    lines = [_show(x)]
    doc = to_json(x)
    doc.pop("schema", None)
    if isinstance(x, Quaternion):
        lines.append(f"Trd = {_show(x.trd())}, Nrd = {_show(x.nrd())}")
    elif isinstance(x, (HermForm, QuadFormQ, QuadFormF)):
        lines.append(describe_form(x))
        doc["description"] = lines[-1]
    _emit(args, lines, doc)
    return EXIT_OK


def cmd_arf(args, env):
    f = env.parse(args.form)
    if not isinstance(f, (QuadFormQ, QuadFormF)):
        raise CliError("arf expects quad[...], gram[...] or fquad[...]")
    v = arf(f)
    lines = [f"Arf invariant of {_show(f)}: {v.cls}",
             "trivial" if v.cls.is_trivial else "nontrivial"]
    _emit(args, lines, {"type": "arf", "form": _show(f), "class": v.cls.to_json(),
                        "trivial": v.cls.is_trivial})
    return EXIT_OK


def cmd_isotropy(args, env):
    f = env.parse(args.form)
    if not isinstance(f, (HermForm, QuadFormQ, QuadFormF)):
        raise CliError("isotropy expects a form")
    v = decide(f, env.ctx)
    _emit(args, [_show(f)] + _verdict_lines(v), {"form": _show(f), **to_json(v)})
    return EXIT_OK if v.is_decided else EXIT_UNDECIDED


def cmd_diagonalize(args, env):
    f = env.parse(args.form)
    if not isinstance(f, QuadFormQ):
        raise CliError("diagonalize expects a quad[...] or gram[...] form")
    d = diagonalize_gram(f)
    basis = ["(" + ", ".join(_show(c) for c in b) + ")" for b in d.basis]
    lines = [f"diagonal form: {_show(d.form)}" if d.form.dim else "diagonal form: (empty)",
             "basis: " + "; ".join(basis)]
    if d.defect:
        lines.append("isotropic radical vectors: " +
                     "; ".join("(" + ", ".join(_show(c) for c in v) + ")" for v in d.defect))
    _emit(args, lines, {"type": "diagonalization",
                        "form": _show(d.form) if d.form.dim else None,
                        "basis": [[_show(c) for c in b] for b in d.basis],
                        "defect": [[_show(c) for c in v] for v in d.defect]})
    return EXIT_OK


def cmd_division(args, env):
    Q = env.require_algebra()
    res = is_division_verdict(Q, env.ctx)
    lines = [str(res)] + _verdict_lines(res.verdict)[1:]
    _emit(args, lines, {"type": "division", "algebra": {"a": _show(Q.a), "b": _show(Q.b)},
                        "result": str(res), **{k: v for k, v in to_json(res.verdict).items()
                                               if k not in ("schema", "type")}})
    return EXIT_OK if res.division is not None else EXIT_UNDECIDED


def cmd_symbol(args, env):
    a = parse_element(args.a, env.desc)
    b = parse_element(args.b, env.desc)
    if env.desc.kind == LOCAL:
        bit = hilbert_symbol(a, b)
        note = "division" if bit else "split"
    elif env.desc.kind == RATFUNC:
        if not b:
            raise ZeroDivisionError("symbol: b = 0")
        bit = abs_trace(residue_dlog(a, b), env.desc)
        note = "local symbol at t = 0 only"
    else:
        raise CliError("the residue symbol needs a field with t (local or ratfunc)")
    _emit(args, [f"{bit}  ({note})"], {"type": "symbol", "a": _show(a), "b": _show(b),
                                       "bit": bit, "note": note})
    return EXIT_OK


def cmd_utable(args, env):
    Q = env.require_algebra(default=True)
    T = u_table(env.desc, Q, samples=args.samples, seed=args.seed)
    _emit(args, [format_table(T)], {"type": "utable", **T.to_json()})
    return EXIT_OK if T.verified else EXIT_ERROR


def cmd_verify_paper(args, env):
    Q = env.require_algebra(default=True)
    fuzz = args.fuzz_seconds if args.fuzz_seconds is not None else acceptance.fuzz_seconds_from_env()
    opts = acceptance.Options(desc=env.desc, algebra=Q, seed=args.seed, samples=args.samples,
                              fuzz_seconds=fuzz, fuzz_cases=args.fuzz_cases)
    only = None
    if args.only:
        only = {int(x) for x in args.only.split(",")}
    def report(res):
        print(res.line(), flush=True)
    results = acceptance.run_all(opts, only, report if args.format == "text" else None)
    failed = [r.number for r in results if not r.passed]
    if args.format == "json":
        print(json.dumps({"schema": SCHEMA, "type": "verify-paper", "field": str(env.desc),
                          "seed": args.seed, "results": [r.to_json() for r in results],
                          "failed": failed}, indent=2, ensure_ascii=False))
    else:
        print(f"{len(results) - len(failed)}/{len(results)} criteria passed"
              + (f"; failed: {', '.join(map(str, failed))}" if failed else ""))
    return EXIT_ERROR if failed else EXIT_OK


COMMANDS = {"eval": cmd_eval, "arf": cmd_arf, "isotropy": cmd_isotropy,
            "diagonalize": cmd_diagonalize, "division": cmd_division, "symbol": cmd_symbol,
            "utable": cmd_utable, "verify-paper": cmd_verify_paper}


def _provenance(e):
    module = type(e).__module__.rsplit(".", 1)[-1]
    rule = getattr(e, "rule", None)
    return f"{module}/{rule}" if rule else f"{module}/{type(e).__name__}"


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        env = Env(args)
        return COMMANDS[args.command](args, env)
    except CliError as e:
        print(f"error [cli]: {e}", file=sys.stderr)
    except ERRORS as e:
        print(f"error [{_provenance(e)}]: {e}", file=sys.stderr)
    return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
