"""Text rendering in the element syntax accepted by :mod:`c2f.parsing`."""


def _coef(c, k):
    if k == 1 or c == 1:
        return str(c)
    return bin(c)


def format_poly(p, k):
    if not p:
        return "0"
    terms = []
    for e in range(len(p) - 1, -1, -1):
        c = p[e]
        if not c:
            continue
        if e == 0:
            terms.append(_coef(c, k))
            continue
        mono = "t" if e == 1 else f"t^{e}"
        terms.append(mono if c == 1 else f"{_coef(c, k)}*{mono}")
    return " + ".join(terms)


def format_elem(x):
    k = x.desc.k
    num = format_poly(x.num, k)
    if x.den == (1,):
        return num
    den = format_poly(x.den, k)
    if len([c for c in x.num if c]) > 1:
        num = f"({num})"
    if len([c for c in x.den if c]) > 1 or (x.den[-1] != 1):
        den = f"({den})"
    return f"{num}/{den}"


def format_quat(q):
    return "q{" + "; ".join(format_elem(c) for c in q.coords) + "}"


def format_series(s):
    k = s.desc.k
    terms = []
    for i, c in enumerate(s.coeffs):
        if not c:
            continue
        e = s.start + i
        mono = "1" if e == 0 else ("t" if e == 1 else f"t^{e}")
        if c == 1:
            terms.append(mono)
        elif e == 0:
            terms.append(_coef(c, k))
        else:
            terms.append(f"{_coef(c, k)}*{mono}")
    body = " + ".join(terms) if terms else "0"
    return f"{body} + O(t^{s.precision})"


def format_entry(e):
    """Quaternion entries print as plain elements when they are scalars."""
    if hasattr(e, "coords"):
        return format_elem(e.coords[0]) if e.is_scalar else format_quat(e)
    return format_elem(e)


def format_form(f):
    if f.kind == "fquad":
        blocks = ";".join(f"[{format_elem(b)}, {format_elem(c)}]" for b, c in f.blocks)
        diag = "; ".join(format_elem(d) for d in f.diag)
        if blocks and diag:
            return f"fquad[{blocks} | {diag}]"
        return f"fquad[{blocks}]" if blocks else f"fquad[| {diag}]"
    if f.kind == "herm":
        tag = "bilin" if f.is_bilinear else "herm"
        return f"{tag}[" + "; ".join(format_entry(e) for e in f.entries) + "]"
    if f.is_diagonal:
        return "quad[" + "; ".join(format_entry(e) for e in f.entries) + "]"
    rows = "; ".join(", ".join(format_entry(e) for e in row) for row in f.gram)
    return f"gram[[{rows}]]"
