"""Acceptance suite: ten reproducibility checks shared by ``c2f verify-paper`` and the tests.

Each check returns a :class:`CriterionResult` with the expected and computed
values, so a failing line states exactly what disagreed.
"""

import os
import time
from dataclasses import dataclass, field

from . import sampling
from .artin_schreier import TRIVIAL
from .field import FieldDescriptor
from .forms import (HermForm, QBase, QuadFormQ, diagonalize_gram, norm_form, orth_sum,
                    scale, trace_form_coords, trace_form_F)
from .invariants import SingularFormError, arf, arf_diagonal, arf_gram
from .isotropy import T_Q_NS3, Context, decide, is_direct, verify_series_witness
from .quaternion import QuaternionAlgebra, default_division_algebra, hilbert_symbol
from .search import search_oracle, verify_witness
from .utable import u_table, cor3_form

EXPECTED_TABLE = {"u+(F)": 2, "u_d+(F)": 2, "u-(F)": 0, "u~(F)": 4, "u-(Q)": 1,
                  "u_d+(Q)": 1, "u+(Q)": 2, "u~(Q)": 3, "u(Q)": 3}
DEFAULT_FUZZ_SECONDS = 600


@dataclass
class Options:
    desc: FieldDescriptor = None
    algebra: QuaternionAlgebra = None
    seed: int = 0
    samples: int = 50
    fuzz_seconds: float = DEFAULT_FUZZ_SECONDS
    fuzz_cases: int = None  # fixed case count instead of a time budget
    symbol_pairs: int = 200
    symbol_bound: int = 6

    def __post_init__(self):
        if self.desc is None:
            self.desc = FieldDescriptor.local(1)
        if self.algebra is None:
            self.algebra = default_division_algebra(self.desc)


@dataclass
class CriterionResult:
    number: int
    name: str
    passed: bool
    expected: str
    computed: str
    seconds: float = 0.0
    details: dict = field(default_factory=dict)

    def line(self):
        mark = "PASS" if self.passed else "FAIL"
        return (f"[{mark}] {self.number:>2} {self.name}: expected {self.expected}; "
                f"computed {self.computed} ({self.seconds:.1f} s)")

    def to_json(self):
        return {"number": self.number, "name": self.name, "passed": self.passed,
                "expected": self.expected, "computed": self.computed,
                "seconds": round(self.seconds, 3), "details": self.details}


def _timed(fn):
    def run(opts):
        start = time.monotonic()
        res = fn(opts)
        res.seconds = time.monotonic() - start
        return res
    run.__name__ = fn.__name__
    run.__doc__ = fn.__doc__
    return run


def _within(res, limit):
    if res.seconds >= limit:
        res.passed = False
        res.computed += f"; runtime {res.seconds:.1f} s exceeds {limit} s"
    return res


# -- 1 ------------------------------------------------------------------------------

def u_table_check(opts):
    start = time.monotonic()
    T = u_table(opts.desc, opts.algebra, samples=opts.samples, seed=opts.seed)
    values = {k: v for k, v in T.values().items() if k in EXPECTED_TABLE}
    bad = [k for k, e in T.entries.items() if not e.verified]
    ok = values == EXPECTED_TABLE and not bad
    comp = ", ".join(f"{k}={v}" for k, v in values.items())
    if bad:
        comp += f"; unverified entries {bad}"
    res = CriterionResult(1, "u-invariant table", ok,
                          ", ".join(f"{k}={v}" for k, v in EXPECTED_TABLE.items()), comp,
                          details={"table": T.to_json()})
    res.seconds = time.monotonic() - start
    return _within(res, 60)


# -- 2 ------------------------------------------------------------------------------

@_timed
def _cor3(opts):
    rho = cor3_form(opts.algebra)
    delta = arf_diagonal(rho).cls
    v = decide(rho)
    w = search_oracle(rho, 4)
    ok = delta == TRIVIAL and v.is_anisotropic and v.theorem == T_Q_NS3 and w is None
    comp = f"Arf {delta}, verdict {v.status} by {v.certificate}, search(4) {'none' if w is None else w}"
    return CriterionResult(2, "trivial-Arf anisotropic 3-dimensional form", ok,
                           "Arf trivial, anisotropic, no witness at bound 4", comp)


def cor3_check(opts):
    return _within(_cor3(opts), 10)


# -- 3 ------------------------------------------------------------------------------

def symbol_corpus(desc, n, seed):
    """``n`` pairs (a, b) with numerator and denominator of degree <= 4."""
    r = sampling.rng(seed)
    return [(sampling.rand_elem(r, desc, 4), sampling.rand_elem(r, desc, 4, nonzero=True))
            for _ in range(n)]


@_timed
def symbol_check(opts):
    desc = opts.desc
    split_found, split_missed, div_contradictions = 0, [], []
    for a, b in symbol_corpus(desc, opts.symbol_pairs, opts.seed):
        Q = QuaternionAlgebra(desc, a, b)
        nf = norm_form(Q)
        s = hilbert_symbol(a, b)
        w = search_oracle(nf, opts.symbol_bound)
        if s == 0:
            if w is not None and verify_witness(nf, w):
                split_found += 1
            else:
                split_missed.append((str(a), str(b)))
        elif w is not None:
            div_contradictions.append((str(a), str(b), [str(x) for x in w]))
    nsplit = split_found + len(split_missed)
    ok = not split_missed and not div_contradictions
    comp = (f"split pairs with a search zero {split_found}/{nsplit}; "
            f"division pairs with a zero {len(div_contradictions)}")
    return CriterionResult(3, "division/symbol consistency", ok,
                           "every split pair has a zero at bound 6, no division pair has one",
                           comp, details={"missed": split_missed[:20],
                                          "contradictions": div_contradictions})


# -- 4 ------------------------------------------------------------------------------

def _rand_nonsingular_gram(r, base, n):
    while True:
        M = sampling.rand_gram(r, base, n)
        for i in range(n):
            if not M.gram[i][i].trd():
                break
        else:
            try:
                arf_gram(M)
                return M
            except SingularFormError:
                continue


@_timed
def arf_check_run(opts):
    A = opts.algebra
    base = QBase.canonical(A)
    r = sampling.rng(opts.seed + 4)
    fails = {"scaling": 0, "additivity": 0, "gram": 0, "diagonalize": 0}
    for _ in range(500):
        n1, n2 = r.randint(1, 3), r.randint(1, 3)
        rho1 = sampling.rand_quad_Q(r, base, n1, 0)
        rho2 = sampling.rand_quad_Q(r, base, n2, 0)
        lam = sampling.rand_elem(r, A.desc, 2, nonzero=True)
        d1 = arf_diagonal(rho1).cls
        if arf_diagonal(scale(rho1, lam)).cls != d1:
            fails["scaling"] += 1
        if arf_diagonal(orth_sum(rho1, rho2)).cls != d1 + arf_diagonal(rho2).cls:
            fails["additivity"] += 1
        if arf_gram(QuadFormQ(base, gram=rho1.gram_matrix())).cls != d1:
            fails["gram"] += 1
        M = _rand_nonsingular_gram(r, base, r.randint(1, 3))
        if arf(diagonalize_gram(M).form).cls != arf_gram(M).cls:
            fails["diagonalize"] += 1
    ok = not any(fails.values())
    return CriterionResult(4, "Arf invariant properties", ok, "0 failures of each identity",
                           ", ".join(f"{k} {v}" for k, v in fails.items()))


def arf_check(opts):
    return _within(arf_check_run(opts), 120)


# -- 5 ------------------------------------------------------------------------------

@_timed
def one_dim_arf_check(opts):
    A = opts.algebra
    base = QBase.canonical(A)
    r = sampling.rng(opts.seed + 5)
    trivial = sum(arf_diagonal(sampling.rand_quad_Q(r, base, 1, 0)).cls.is_trivial
                  for _ in range(200))
    return CriterionResult(5, "one-dimensional nonsingular forms", trivial == 0,
                           "200/200 nontrivial Arf", f"{200 - trivial}/200 nontrivial Arf")


# -- 6 ------------------------------------------------------------------------------

@_timed
def symmetric_values_check(opts):
    from .forms import polar_form

    A = opts.algebra
    base = QBase.canonical(A)
    r = sampling.rng(opts.seed + 6)
    forms = []
    while len(forms) < 50:
        rho = sampling.rand_quad_Q(r, base, r.randint(1, 2), 0)
        if decide(polar_form(rho), Context(attach=False)).is_anisotropic:
            forms.append(rho)
    violations = 0
    for rho in forms:
        for _ in range(1000):
            x = [sampling.rand_quat(r, A, 1, nonzero=False) for _ in range(rho.dim)]
            if not any(x):
                continue
            if base.in_sym(rho.value(x)):
                violations += 1
    return CriterionResult(6, "anisotropic polar form avoids symmetric values", violations == 0,
                           "0 of 50000 evaluations symmetric", f"{violations} symmetric values")


# -- 7 ------------------------------------------------------------------------------

@_timed
def directness_check(opts):
    A = opts.algebra
    base = QBase.canonical(A)
    one = A.desc.one
    d = is_direct(HermForm(base, [A.j]))
    v2 = decide(HermForm(base, [one, A.j]))
    v3 = decide(HermForm(base, [one, one, A.j]))
    ok = d.is_anisotropic and v2.is_anisotropic and v3.is_isotropic
    comp = (f"<j>^h direct={d.is_anisotropic}, <1,j>^h {v2.status}, "
            f"<1,1,j>^h {v3.status} ({v3.certificate.tag})")
    return CriterionResult(7, "direct and anisotropic hermitian forms", ok,
                           "<j>^h direct, <1,j>^h anisotropic, <1,1,j>^h isotropic", comp)


# -- 8 ------------------------------------------------------------------------------

@_timed
def trace_form_check(opts):
    A = opts.algebra
    desc = A.desc
    base = QBase.canonical(A)
    blockwise = trace_form_F(HermForm(base, [desc.one])) == norm_form(A)
    r = sampling.rng(opts.seed + 8)
    bad = 0
    for _ in range(200):
        c = sampling.rand_elem(r, desc, 2, nonzero=True)
        x = sampling.rand_quat(r, A, 2, nonzero=False)
        phi = HermForm(base, [c])
        if trace_form_F(phi).value(trace_form_coords(phi, [x])) != c * x.nrd():
            bad += 1
    return CriterionResult(8, "trace form of <c>^h", blockwise and bad == 0,
                           "equal to the norm form for c = 1; 200/200 pointwise c*Nrd(x)",
                           f"blockwise {'equal' if blockwise else 'different'}; "
                           f"{200 - bad}/200 pointwise")


# -- 9 ------------------------------------------------------------------------------

@_timed
def table_identity_check(opts):
    tables = [u_table(opts.desc, opts.algebra, samples=3, seed=opts.seed)]
    for k in (1, 2):
        desc = FieldDescriptor.local(k)
        if desc != opts.desc:
            tables.append(u_table(desc, default_division_algebra(desc), samples=3, seed=opts.seed))
    failed = [(str(T.desc), name) for T in tables for name, ok in T.identities().items() if not ok]
    return CriterionResult(9, "u-table identities", not failed,
                           "u+ = u_d+ + u- (F and Q) and u(Q) <= u+(Q) + u_d+(Q)",
                           f"{len(tables)} tables, failing identities {failed or 'none'}")


# -- 10 -----------------------------------------------------------------------------

def random_form(r, desc, base):
    """A random form of any supported kind, dimension <= 5, entries of degree <= 3."""
    kind = r.choice(["fts", "fns", "fmixed", "bilin", "quad", "herm", "gram"])
    if kind == "fts":
        return sampling.rand_quad_F(r, desc, 0, r.randint(1, 5), 3)
    if kind == "fns":
        return sampling.rand_quad_F(r, desc, r.randint(1, 2), 0, 3)
    if kind == "fmixed":
        nb = r.randint(1, 2)
        return sampling.rand_quad_F(r, desc, nb, r.randint(1, 5 - 2 * nb), 3)
    if kind == "bilin":
        return sampling.rand_bilinear(r, desc, r.randint(1, 5), 3)
    if kind == "quad":
        dim = r.randint(1, 5)
        n = r.randint(0, dim)
        return sampling.rand_quad_Q(r, base, n, dim - n, 3)
    if kind == "herm":
        return sampling.rand_herm_Q(r, base, r.randint(1, 5), 3)
    return sampling.rand_gram(r, base, r.randint(1, 3), 3)


def _unknowns(form):
    return form.dim if hasattr(form, "blocks") or getattr(form, "is_bilinear", False) \
        else 4 * form.dim


def fuzz_case(form, verdict_bound=3):
    """``(status, problem)``; ``problem`` is None when engine and oracle agree."""
    v = decide(form, Context(search_bound=verdict_bound))
    if v.witness is not None:
        if v.precision is None:
            if not verify_witness(form, v.witness):
                return v.status, f"witness fails: {form} {[str(x) for x in v.witness]}"
        elif not verify_series_witness(form, v.witness):
            return v.status, f"series witness fails: {form}"
    if v.is_anisotropic:
        bound = 3 if _unknowns(form) <= 8 else 2
        w = search_oracle(form, bound)
        if w is not None:
            return v.status, f"search witness against anisotropic verdict: {form} {[str(x) for x in w]}"
    return v.status, None


@_timed
def fuzz_check(opts):
    desc = opts.desc
    A = opts.algebra
    base = QBase.canonical(A)
    r = sampling.rng(opts.seed + 10)
    deadline = time.monotonic() + opts.fuzz_seconds
    cases, problems = 0, []
    counts = {"isotropic": 0, "anisotropic": 0, "undecided": 0}
    while True:
        if opts.fuzz_cases is not None:
            if cases >= opts.fuzz_cases:
                break
        elif time.monotonic() >= deadline:
            break
        form = random_form(r, desc, base)
        cases += 1
        status, p = fuzz_case(form)
        counts[status] += 1
        if p is not None:
            problems.append(p)
    budget = f"{opts.fuzz_cases} cases" if opts.fuzz_cases is not None else f"{opts.fuzz_seconds:g} s"
    return CriterionResult(10, "engine/oracle non-contradiction", not problems,
                           "0 contradictions", f"{len(problems)} contradictions in {cases} cases "
                           f"({budget})", details={"problems": problems[:20], "counts": counts})


CRITERIA = (u_table_check, cor3_check, symbol_check, arf_check, one_dim_arf_check,
            symmetric_values_check, directness_check, trace_form_check, table_identity_check,
            fuzz_check)


def run_all(opts=None, only=None, report=None):
    """Run the selected criteria (all by default); ``report`` receives each result."""
    opts = opts or Options()
    out = []
    for n, check in enumerate(CRITERIA, 1):
        if only and n not in only:
            continue
        res = check(opts)
        out.append(res)
        if report:
            report(res)
    return out


def fuzz_seconds_from_env(default=DEFAULT_FUZZ_SECONDS):
    return float(os.environ.get("C2F_FUZZ_SECONDS", default))
