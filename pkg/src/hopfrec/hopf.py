"""Finite dimensional algebra and Hopf algebra presentations by structure
tensors, with exact axiom checkers.

Conventions, fixed once for the whole package:
  e_i * e_j     = sum_k mult[i][j][k] e_k
  Delta(e_i)    = sum_{j,k} comult[i][j][k] e_j (x) e_k
  S(e_i)        = sum_j antipode[j][i] e_j   (columns are images)
  unit, counit  = coefficient sequences of length dim

Checkers return a CheckReport listing every failing index tuple with both
sides of the identity; they never raise on honest axiom violations.
Tensors are stored dense but the checkers iterate over nonzero entries, so
sparse inputs (group algebras, doubles) stay cheap.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ShapeError
from .matrices import Matrix
from .reports import CheckReport
from .scalars import ONE, ZERO, Scalar, sc


def _tensor3(data, n: int):
    t = tuple(tuple(tuple(sc(x) for x in row) for row in plane) for plane in data)
    if len(t) != n or any(len(p) != n or any(len(r) != n for r in p) for p in t):
        raise ShapeError(f"structure tensor is not {n}x{n}x{n}")
    return t


def _vector(data, n: int):
    v = tuple(sc(x) for x in data)
    if len(v) != n:
        raise ShapeError(f"coefficient sequence has length {len(v)}, expected {n}")
    return v


@dataclass(frozen=True)
class AlgebraPresentation:
    dim: int
    mult: tuple  # mult[i][j][k]
    unit: tuple  # length dim

    def __post_init__(self):
        object.__setattr__(self, "mult", _tensor3(self.mult, self.dim))
        object.__setattr__(self, "unit", _vector(self.unit, self.dim))


@dataclass(frozen=True)
class HopfPresentation:
    alg: AlgebraPresentation
    comult: tuple  # comult[i][j][k]
    counit: tuple  # length dim
    antipode: Matrix  # dim x dim

    def __post_init__(self):
        n = self.alg.dim
        object.__setattr__(self, "comult", _tensor3(self.comult, n))
        object.__setattr__(self, "counit", _vector(self.counit, n))
        if not isinstance(self.antipode, Matrix) or self.antipode.rows != n or self.antipode.cols != n:
            raise ShapeError(f"antipode must be a {n}x{n} Matrix")

    @property
    def dim(self) -> int:
        return self.alg.dim


# -- sparse views ---------------------------------------------------------

def _nz3(tensor):
    """tensor[i][j] -> list of (k, coeff) skipping zeros, for all (i, j)."""
    return [
        [[(k, x) for k, x in enumerate(row) if not x.is_zero()] for row in plane]
        for plane in tensor
    ]


def _nz_pairs(tensor):
    """comult view: i -> list of (j, k, coeff) skipping zeros."""
    return [
        [(j, k, x) for j, row in enumerate(plane) for k, x in enumerate(row) if not x.is_zero()]
        for plane in tensor
    ]


def _acc(d: dict, key, val: Scalar):
    cur = d.get(key)
    cur = val if cur is None else cur + val
    if cur.is_zero():
        d.pop(key, None)
    else:
        d[key] = cur


def _dict_eq(a: dict, b: dict) -> bool:
    if len(a) != len(b):
        return False
    for k, v in a.items():
        w = b.get(k)
        if w is None or v != w:
            return False
    return True


def _render(d: dict) -> str:
    if not d:
        return "0"
    return " + ".join(f"({v})e{k}" for k, v in sorted(d.items()))


# -- checkers -------------------------------------------------------------

def check_algebra(a: AlgebraPresentation) -> CheckReport:
    """Associativity and the two unit laws, every basis index tuple."""
    n = a.dim
    rep = CheckReport("algebra")
    m = _nz3(a.mult)

    for i in range(n):
        for j in range(n):
            mij = m[i][j]
            for l in range(n):
                lhs: dict = {}
                for k, c in mij:
                    for p, d in m[k][l]:
                        _acc(lhs, p, c * d)
                rhs: dict = {}
                for k, c in m[j][l]:
                    for p, d in m[i][k]:
                        _acc(rhs, p, c * d)
                if not _dict_eq(lhs, rhs):
                    rep.add("associativity", (i, j, l), _render(lhs), _render(rhs))

    u = a.unit
    for i in range(n):
        left: dict = {}
        right: dict = {}
        for j in range(n):
            if not u[j].is_zero():
                for k, c in m[j][i]:
                    _acc(left, k, u[j] * c)
                for k, c in m[i][j]:
                    _acc(right, k, u[j] * c)
        want = {i: ONE}
        if not _dict_eq(left, want):
            rep.add("left-unit", (i,), _render(left), _render(want))
        if not _dict_eq(right, want):
            rep.add("right-unit", (i,), _render(right), _render(want))
    return rep


def check_bialgebra(h: HopfPresentation) -> CheckReport:
    """Coassociativity, counit laws, and compatibility of Delta, counit
    with multiplication and unit."""
    n = h.dim
    rep = CheckReport("bialgebra")
    m = _nz3(h.alg.mult)
    dl = _nz_pairs(h.comult)
    eps = h.counit
    u = h.alg.unit

    for i in range(n):
        lhs: dict = {}
        rhs: dict = {}
        for j, k, c in dl[i]:
            for p, q, d in dl[j]:
                _acc(lhs, (p, q, k), c * d)
            for p, q, d in dl[k]:
                _acc(rhs, (j, p, q), c * d)
        if not _dict_eq(lhs, rhs):
            rep.add("coassociativity", (i,), _render(lhs), _render(rhs))

    for i in range(n):
        left: dict = {}
        right: dict = {}
        for j, k, c in dl[i]:
            if not eps[j].is_zero():
                _acc(left, k, eps[j] * c)
            if not eps[k].is_zero():
                _acc(right, j, eps[k] * c)
        want = {i: ONE}
        if not _dict_eq(left, want):
            rep.add("left-counit", (i,), _render(left), _render(want))
        if not _dict_eq(right, want):
            rep.add("right-counit", (i,), _render(right), _render(want))

    # group each Delta by its first tensor leg and precompute which first
    # legs can multiply, so the product loop skips dead branches wholesale
    targets = [[a2 for a2 in range(n) if m[a1][a2]] for a1 in range(n)]
    by_first = []
    for i in range(n):
        grp: dict = {}
        for j, k, c in dl[i]:
            grp.setdefault(j, []).append((k, c))
        by_first.append(grp)

    for i in range(n):
        for j in range(n):
            lhs = {}
            for k, c in m[i][j]:
                for p, q, d in dl[k]:
                    _acc(lhs, (p, q), c * d)
            rhs = {}
            grp_j = by_first[j]
            for a1, b1, c1 in dl[i]:
                row = m[a1]
                mb = m[b1]
                for a2 in targets[a1]:
                    second = grp_j.get(a2)
                    if not second:
                        continue
                    prods = row[a2]
                    for b2, c2 in second:
                        t2 = mb[b2]
                        if not t2:
                            continue
                        c12 = c1 * c2
                        for p, d1 in prods:
                            for q, d2 in t2:
                                _acc(rhs, (p, q), c12 * d1 * d2)
            if not _dict_eq(lhs, rhs):
                rep.add("comult-multiplicative", (i, j), _render(lhs), _render(rhs))

            e_lhs = ZERO
            for k, c in m[i][j]:
                e_lhs = e_lhs + c * eps[k]
            e_rhs = eps[i] * eps[j]
            if e_lhs != e_rhs:
                rep.add("counit-multiplicative", (i, j), e_lhs, e_rhs)

    du: dict = {}
    for i in range(n):
        if not u[i].is_zero():
            for j, k, c in dl[i]:
                _acc(du, (j, k), u[i] * c)
    uu: dict = {}
    for j in range(n):
        for k in range(n):
            v = u[j] * u[k]
            if not v.is_zero():
                uu[(j, k)] = v
    if not _dict_eq(du, uu):
        rep.add("comult-of-unit", (), _render(du), _render(uu))

    eu = ZERO
    for i in range(n):
        eu = eu + u[i] * eps[i]
    if eu != ONE:
        rep.add("counit-of-unit", (), eu, ONE)
    return rep


def check_antipode(h: HopfPresentation) -> CheckReport:
    """Both antipode identities m(S x id)Delta = u eps = m(id x S)Delta.

    Pass or fail is decided by those two alone.  The report also carries
    informational flags: whether S is an algebra antihomomorphism, a
    coalgebra antihomomorphism, and an involution.
    """
    n = h.dim
    rep = CheckReport("antipode")
    m = _nz3(h.alg.mult)
    dl = _nz_pairs(h.comult)
    s = h.antipode
    scol = [[(l, s.at(l, i)) for l in range(n) if not s.at(l, i).is_zero()] for i in range(n)]

    for i in range(n):
        left: dict = {}
        right: dict = {}
        for j, k, c in dl[i]:
            for l, sl in scol[j]:
                for p, d in m[l][k]:
                    _acc(left, p, c * sl * d)
            for l, sl in scol[k]:
                for p, d in m[j][l]:
                    _acc(right, p, c * sl * d)
        want: dict = {}
        for p in range(n):
            v = h.alg.unit[p] * h.counit[i]
            if not v.is_zero():
                want[p] = v
        if not _dict_eq(left, want):
            rep.add("left-snake", (i,), _render(left), _render(want))
        if not _dict_eq(right, want):
            rep.add("right-snake", (i,), _render(right), _render(want))

    antihom = True
    for i in range(n):
        for j in range(n):
            lhs: dict = {}
            for k, c in m[i][j]:
                for l, sl in scol[k]:
                    _acc(lhs, l, c * sl)
            rhs: dict = {}
            for l, sl in scol[j]:
                for p, sp in scol[i]:
                    for q, d in m[l][p]:
                        _acc(rhs, q, sl * sp * d)
            if not _dict_eq(lhs, rhs):
                antihom = False
                break
        if not antihom:
            break

    co_antihom = True
    for i in range(n):
        lhs = {}
        for l, sl in scol[i]:
            for p, q, c in dl[l]:
                _acc(lhs, (p, q), sl * c)
        rhs = {}
        for j, k, c in dl[i]:
            for p, sp in scol[k]:
                for q, sq in scol[j]:
                    _acc(rhs, (p, q), c * sp * sq)
        if not _dict_eq(lhs, rhs):
            co_antihom = False
            break

    rep.flags["algebra-antihomomorphism"] = antihom
    rep.flags["coalgebra-antihomomorphism"] = co_antihom
    rep.flags["involutive"] = s * s == Matrix.identity(n)
    return rep


def run_hopf_checks(h: HopfPresentation) -> list[CheckReport]:
    """The full axiom suite in dependency order."""
    return [check_algebra(h.alg), check_bialgebra(h), check_antipode(h)]


def check_hopf_morphism(src: HopfPresentation, dst: HopfPresentation, m: Matrix) -> CheckReport:
    """m, whose columns are the images of the source basis, respects every
    piece of structure.  Bijectivity is recorded as a flag so callers can
    decide whether they demand an isomorphism."""
    if m.rows != dst.dim or m.cols != src.dim:
        raise ShapeError(f"morphism matrix must be {dst.dim}x{src.dim}")
    rep = CheckReport("hopf-morphism")
    ns, nd = src.dim, dst.dim
    cols = [[m.at(p, i) for p in range(nd)] for i in range(ns)]
    md = _nz3(dst.alg.mult)
    dld = _nz_pairs(dst.comult)

    for i in range(ns):
        for j in range(ns):
            lhs: dict = {}
            for k in range(ns):
                c = src.alg.mult[i][j][k]
                if not c.is_zero():
                    for p in range(nd):
                        if not cols[k][p].is_zero():
                            _acc(lhs, p, c * cols[k][p])
            rhs: dict = {}
            for p in range(nd):
                ci = cols[i][p]
                if ci.is_zero():
                    continue
                for q in range(nd):
                    cj = cols[j][q]
                    if cj.is_zero():
                        continue
                    for t, d in md[p][q]:
                        _acc(rhs, t, ci * cj * d)
            if not _dict_eq(lhs, rhs):
                rep.add("morphism-multiplicative", (i, j), _render(lhs), _render(rhs))

    img_u: dict = {}
    for i in range(ns):
        if not src.alg.unit[i].is_zero():
            for p in range(nd):
                if not cols[i][p].is_zero():
                    _acc(img_u, p, src.alg.unit[i] * cols[i][p])
    want_u: dict = {}
    for p in range(nd):
        if not dst.alg.unit[p].is_zero():
            want_u[p] = dst.alg.unit[p]
    if not _dict_eq(img_u, want_u):
        rep.add("morphism-unit", (), _render(img_u), _render(want_u))

    for i in range(ns):
        lhs = {}
        for j in range(ns):
            for k in range(ns):
                c = src.comult[i][j][k]
                if c.is_zero():
                    continue
                for p in range(nd):
                    cj = cols[j][p]
                    if cj.is_zero():
                        continue
                    for q in range(nd):
                        ck = cols[k][q]
                        if not ck.is_zero():
                            _acc(lhs, (p, q), c * cj * ck)
        rhs = {}
        for p in range(nd):
            ci = cols[i][p]
            if ci.is_zero():
                continue
            for a1, b1, d in dld[p]:
                _acc(rhs, (a1, b1), ci * d)
        if not _dict_eq(lhs, rhs):
            rep.add("morphism-comultiplicative", (i,), _render(lhs), _render(rhs))

        e_lhs = src.counit[i]
        e_rhs = ZERO
        for p in range(nd):
            if not cols[i][p].is_zero():
                e_rhs = e_rhs + cols[i][p] * dst.counit[p]
        if e_lhs != e_rhs:
            rep.add("morphism-counit", (i,), e_lhs, e_rhs)

    ms = m * src.antipode
    sm = dst.antipode * m
    if ms != sm:
        for i in range(ns):
            li = [ms.at(p, i) for p in range(nd)]
            ri = [sm.at(p, i) for p in range(nd)]
            if li != ri:
                rep.add(
                    "morphism-antipode",
                    (i,),
                    _render({p: x for p, x in enumerate(li) if not x.is_zero()}),
                    _render({p: x for p, x in enumerate(ri) if not x.is_zero()}),
                )

    rep.flags["bijective"] = m.rows == m.cols and m.rank() == m.rows
    return rep


def tensor_hopf(h1: HopfPresentation, h2: HopfPresentation) -> HopfPresentation:
    """Tensor product Hopf algebra on basis e_i (x) f_j, index i*dim2 + j."""
    n1, n2 = h1.dim, h2.dim
    n = n1 * n2

    def idx(i, j):
        return i * n2 + j

    mult = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
    for i1 in range(n1):
        for j1 in range(n1):
            row1 = h1.alg.mult[i1][j1]
            for k1 in range(n1):
                c1 = row1[k1]
                if c1.is_zero():
                    continue
                for i2 in range(n2):
                    for j2 in range(n2):
                        row2 = h2.alg.mult[i2][j2]
                        for k2 in range(n2):
                            c2 = row2[k2]
                            if not c2.is_zero():
                                mult[idx(i1, i2)][idx(j1, j2)][idx(k1, k2)] = c1 * c2

    unit = [h1.alg.unit[i] * h2.alg.unit[j] for i in range(n1) for j in range(n2)]

    comult = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
    for i1 in range(n1):
        for a1 in range(n1):
            for b1 in range(n1):
                c1 = h1.comult[i1][a1][b1]
                if c1.is_zero():
                    continue
                for i2 in range(n2):
                    for a2 in range(n2):
                        for b2 in range(n2):
                            c2 = h2.comult[i2][a2][b2]
                            if not c2.is_zero():
                                comult[idx(i1, i2)][idx(a1, a2)][idx(b1, b2)] = c1 * c2

    counit = [h1.counit[i] * h2.counit[j] for i in range(n1) for j in range(n2)]
    antipode = h1.antipode.kron(h2.antipode)
    return HopfPresentation(AlgebraPresentation(n, mult, unit), comult, counit, antipode)
