"""u-invariant tables over a local field with a quaternion division algebra.

Each entry carries an anisotropic witness form of the stated dimension (a
lower bound, re-verified by the engine) and a seeded sample of forms one
dimension higher, all of which must be verdicted isotropic.
"""

from dataclasses import dataclass, field

from .field import LOCAL, FieldError
from .forms import HermForm, QBase, QuadFormQ, norm_form
from .isotropy import Context, decide, is_direct
from .printing import format_form
from .quaternion import hilbert_symbol
from . import sampling

DEFAULT_SAMPLES = 50

# (key, label, algebra row)
NAMES = (
    ("u+(F)", "u⁺(F)", "F"),
    ("u_d+(F)", "u_d⁺(F)", "F"),
    ("u-(F)", "u⁻(F)", "F"),
    ("u~(F)", "ũ(F)", "F"),
    ("u(F)-lower", "u(F)-lower", "F"),
    ("u-(Q)", "u⁻(Q)", "Q"),
    ("u_d+(Q)", "u_d⁺(Q)", "Q"),
    ("u+(Q)", "u⁺(Q)", "Q"),
    ("u~(Q)", "ũ(Q)", "Q"),
    ("u(Q)", "u(Q)", "Q"),
)
LABELS = {key: label for key, label, _ in NAMES}


class SplitAlgebraError(FieldError):
    """u-invariant tables are only produced for quaternion division algebras."""


@dataclass
class UEntry:
    key: str
    value: int
    witness: object  # form of dimension ``value``, or None when value = 0
    witness_verdict: object
    sample_dim: int
    sample_verdicts: list = field(default_factory=list)
    note: str = ""

    @property
    def witness_ok(self):
        return self.witness_verdict is None or self.witness_verdict.is_anisotropic

    @property
    def samples_ok(self):
        return all(v.is_isotropic for v in self.sample_verdicts)

    @property
    def verified(self):
        return self.witness_ok and self.samples_ok

    def to_json(self):
        return {
            "value": self.value,
            "witness": None if self.witness is None else format_form(self.witness),
            "witness_verdict": None if self.witness_verdict is None else self.witness_verdict.status,
            "sample_dim": self.sample_dim,
            "samples": len(self.sample_verdicts),
            "samples_isotropic": sum(v.is_isotropic for v in self.sample_verdicts),
            "verified": self.verified,
            "note": self.note,
        }


@dataclass
class UTable:
    desc: object
    algebra: object
    entries: dict
    seed: int
    samples: int

    def __getitem__(self, key):
        return self.entries[key].value

    def values(self):
        return {k: e.value for k, e in self.entries.items()}

    def identities(self):
        """The structural identities every table must satisfy."""
        v = self.values()
        return {
            "u+(F) = u_d+(F) + u-(F)": v["u+(F)"] == v["u_d+(F)"] + v["u-(F)"],
            "u+(Q) = u_d+(Q) + u-(Q)": v["u+(Q)"] == v["u_d+(Q)"] + v["u-(Q)"],
            "u(Q) <= u+(Q) + u_d+(Q)": v["u(Q)"] <= v["u+(Q)"] + v["u_d+(Q)"],
        }

    @property
    def verified(self):
        return all(e.verified for e in self.entries.values()) and all(self.identities().values())

    def to_json(self):
        return {
            "field": str(self.desc),
            "algebra": {"a": str(self.algebra.a), "b": str(self.algebra.b)},
            "seed": self.seed,
            "samples": self.samples,
            "entries": {k: e.to_json() for k, e in self.entries.items()},
            "identities": self.identities(),
            "verified": self.verified,
        }


def cor3_form(Q):
    """``<i+k, i+(a/b)j, i+(a/b)j+k>``: nonsingular, trivial Arf, anisotropic for Q division."""
    base = QBase.canonical(Q)
    c = Q.a / Q.b
    return QuadFormQ(base, [Q.i + Q.k, Q.i + Q.j * c, Q.i + Q.j * c + Q.k])


def u_table(desc, Q, samples=DEFAULT_SAMPLES, seed=0, ctx=None):
    if desc.kind != LOCAL:
        raise FieldError("u-invariant tables are produced over GF(2^k)((t)) only")
    if Q.desc != desc:
        raise FieldError("algebra defined over another field")
    if not hilbert_symbol(Q.a, Q.b):
        raise SplitAlgebraError(f"{Q} is split")
    ctx = ctx or Context(attach=False)
    r = sampling.rng(seed)
    base = QBase.canonical(Q)
    one, t = desc.one, desc.t
    entries = {}

    def entry(key, witness, check, sample_dim, make_sample, note=""):
        wv = None if witness is None else check(witness, ctx)
        verdicts = [check(make_sample(), ctx) for _ in range(samples)]
        value = 0 if witness is None else witness.dim
        entries[key] = UEntry(key, value, witness, wv, sample_dim, verdicts, note)

    bil = HermForm(desc, [one, t])
    entry("u+(F)", bil, decide, 3, lambda: sampling.rand_bilinear(r, desc, 3))
    entry("u_d+(F)", bil, decide, 3, lambda: sampling.rand_bilinear(r, desc, 3),
          "Alt(F, id) = 0, so direct means anisotropic")
    entry("u-(F)", None, decide, 1, lambda: HermForm(desc, [desc.zero], degenerate=True),
          "the only one-dimensional alternating bilinear form is zero")
    nf = norm_form(Q)
    entry("u~(F)", nf, decide, 6, lambda: sampling.rand_quad_F(r, desc, 3, 0),
          "nonsingular forms have even dimension; samples have dimension 6")
    entry("u(F)-lower", nf, decide, 5, lambda: _rand_quad_F_mixed(r, desc, 5))
    entry("u-(Q)", HermForm(base, [one]), decide, 2,
          lambda: sampling.rand_herm_Q(r, base, 2, kinds=("alt",)))
    entry("u_d+(Q)", HermForm(base, [Q.j]), is_direct, 2,
          lambda: sampling.rand_herm_Q(r, base, 2, kinds=("sym",)),
          "verdicts on the associated totally singular form")
    entry("u+(Q)", HermForm(base, [one, Q.j]), decide, 3, lambda: sampling.rand_herm_Q(r, base, 3))
    c3 = cor3_form(Q)
    entry("u~(Q)", c3, decide, 4, lambda: sampling.rand_quad_Q(r, base, 4, 0))
    entry("u(Q)", c3, decide, 4, lambda: _rand_quad_Q_mixed(r, base, 4))
    return UTable(desc, Q, entries, seed, samples)


def _rand_quad_F_mixed(r, desc, dim):
    blocks = r.randrange(dim // 2 + 1)
    return sampling.rand_quad_F(r, desc, blocks, dim - 2 * blocks)


def _rand_quad_Q_mixed(r, base, dim):
    n = r.randrange(dim + 1)
    return sampling.rand_quad_Q(r, base, n, dim - n)


def format_table(table):
    lines = [f"u-invariants over {table.desc}, Q = [{table.algebra.a}, {table.algebra.b})"]
    for key, label, _ in NAMES:
        e = table.entries[key]
        w = "-" if e.witness is None else format_form(e.witness)
        iso = sum(v.is_isotropic for v in e.sample_verdicts)
        mark = "ok" if e.verified else "FAILED"
        lines.append(f"  {label:<11} = {e.value}   witness {w}   "
                     f"dim {e.sample_dim}: {iso}/{len(e.sample_verdicts)} isotropic   {mark}")
    for name, ok in table.identities().items():
        lines.append(f"  {name}: {'holds' if ok else 'FAILS'}")
    return "\n".join(lines)
