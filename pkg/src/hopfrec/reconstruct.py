"""Rebuilding a Hopf algebra from skeletal category data with a fiber
functor, as the endomorphisms of the functor.

An endomorphism of the functor is a tuple of blocks, one d_a x d_a matrix
per simple a.  The basis is the matrix units of the blocks in simple
order, index(a, i, j) = offset_a + i * d_a + j, so multiplication is
blockwise matrix multiplication.  Comultiplication conjugates the block
sum through J and reads tensor coordinates off the result; the counit is
the unit block; the antipode conjugates the dual block through the
transpose pairing and transposes.
"""

from __future__ import annotations

from typing import NamedTuple

from .errors import ReconstructionAxiomFailure, ShapeError
from .fusion import FiberData, FusionSkeleton, compute_delta, validate_fiber, verify_category
from .hopf import AlgebraPresentation, HopfPresentation, run_hopf_checks
from .matrices import Matrix, block_diag, mat_inverse
from .repcat import ModuleRep, SliceMorphismData
from .scalars import ONE, ZERO


def endf_basis(dims) -> list:
    """Basis labels (simple, row, col) in layout order."""
    return [(a, i, j) for a, d in enumerate(dims) for i in range(d) for j in range(d)]


def endf_offsets(dims) -> list:
    out = []
    off = 0
    for d in dims:
        out.append(off)
        off += d * d
    return out


class ReconstructionResult(NamedTuple):
    hopf: HopfPresentation
    basis: tuple  # (simple, row, col) per basis element
    dims: tuple
    unit: int
    names: tuple


def _matrix_unit(d: int, i: int, j: int) -> Matrix:
    return Matrix(d, d, [ONE if (r, c) == (i, j) else ZERO for r in range(d) for c in range(d)])


def endf_algebra(skel: FusionSkeleton, fiber: FiberData):
    """The block algebra of endomorphisms of the fiber functor: one full
    matrix block per simple, on the matrix unit basis (a, i, j) with rows
    outer.  Returns the presentation and the basis label list."""
    validate_fiber(skel, fiber)
    r = skel.rank
    d = fiber.dims
    basis = endf_basis(d)
    offs = endf_offsets(d)
    n = len(basis)

    def idx(a, i, j):
        return offs[a] + i * d[a] + j

    mult = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
    for a in range(r):
        for i in range(d[a]):
            for j in range(d[a]):
                for k in range(d[a]):
                    # E_ij E_jk = E_ik within the block of a
                    mult[idx(a, i, j)][idx(a, j, k)][idx(a, i, k)] = ONE
    unit = [ZERO] * n
    for a in range(r):
        for i in range(d[a]):
            unit[idx(a, i, i)] = ONE
    return AlgebraPresentation(n, mult, unit), tuple(basis)


def reconstruct_hopf(
    skel: FusionSkeleton, fiber: FiberData, verify: bool = True
) -> ReconstructionResult:
    """The Hopf algebra presentation of End of the fiber functor.

    With verify on (the default), the category data is checked first and
    the assembled presentation is re-checked against every Hopf axiom;
    any failure raises ReconstructionAxiomFailure carrying the reports.
    """
    validate_fiber(skel, fiber)
    if verify:
        reports = verify_category(skel, fiber)
        bad = [r for r in reports if not r.passed]
        if bad:
            raise ReconstructionAxiomFailure("category data fails coherence", bad)

    r = skel.rank
    d = fiber.dims
    N = skel.fusion
    alg, basis = endf_algebra(skel, fiber)
    offs = endf_offsets(d)
    n = len(basis)

    def idx(a, i, j):
        return offs[a] + i * d[a] + j

    jinv = {key: mat_inverse(m) for key, m in fiber.J.items()}
    comult = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
    for c0 in range(r):
        for i in range(d[c0]):
            for j in range(d[c0]):
                p = idx(c0, i, j)
                eij = _matrix_unit(d[c0], i, j)
                for a in range(r):
                    for b in range(r):
                        size = d[a] * d[b]
                        mid = [[ZERO] * size for _ in range(size)]
                        off = 0
                        for c in range(r):
                            for _mu in range(N[a][b][c]):
                                if c == c0:
                                    for s in range(d[c]):
                                        for t in range(d[c]):
                                            if not eij.at(s, t).is_zero():
                                                mid[off + s][off + t] = eij.at(s, t)
                                off += d[c]
                        m = jinv[(a, b)] * (Matrix.from_rows(mid) * fiber.J[(a, b)])
                        for i1 in range(d[a]):
                            for j1 in range(d[a]):
                                for k1 in range(d[b]):
                                    for l1 in range(d[b]):
                                        v = m.at(i1 * d[b] + k1, j1 * d[b] + l1)
                                        if not v.is_zero():
                                            comult[p][idx(a, i1, j1)][idx(b, k1, l1)] = v

    counit = [ZERO] * n
    for i, (a, _k, _l) in enumerate(basis):
        if a == skel.unit:
            counit[i] = ONE

    delta = compute_delta(skel, fiber)
    anti = [[ZERO] * n for _ in range(n)]
    for a in range(r):
        ad = skel.dual[a]
        dinv = mat_inverse(delta[ad])
        for i in range(d[a]):
            for j in range(d[a]):
                blk = (delta[ad] * (_matrix_unit(d[a], i, j) * dinv)).transpose()
                for k in range(d[ad]):
                    for l in range(d[ad]):
                        v = blk.at(k, l)
                        if not v.is_zero():
                            anti[idx(ad, k, l)][idx(a, i, j)] = v
    hopf = HopfPresentation(alg, comult, counit, Matrix.from_rows(anti))

    if verify:
        checks = run_hopf_checks(hopf)
        bad = [rep for rep in checks if not rep.passed]
        if bad:
            raise ReconstructionAxiomFailure(
                "assembled presentation fails the Hopf axioms", bad
            )
    return ReconstructionResult(hopf, tuple(basis), tuple(d), skel.unit, skel.names)


def zeta_modules(recon: ReconstructionResult) -> list:
    """Each simple's underlying space as a module over the rebuilt algebra:
    a basis element (b, k, l) acts on the a-th space by the matrix unit
    E_kl when b equals a and by zero otherwise."""
    out = []
    for a, da in enumerate(recon.dims):
        action = []
        for (b, k, l) in recon.basis:
            if b == a:
                action.append(_matrix_unit(da, k, l))
            else:
                action.append(Matrix.zeros(da, da))
        out.append(ModuleRep(da, tuple(action), recon.names[a]))
    return out


def transport_along(t: SliceMorphismData, eta) -> list:
    """Pull an endomorphism of the target functor back along a functor.

    eta is a block tuple over the target simples.  Each source block is
    tau_a^{-1} (sum over b ascending, mult[a][b] copies of eta_b) tau_a;
    functor composition corresponds to composing transports in the
    opposite order.  Raises ShapeError when tau sizes do not match the
    realized decompositions.
    """
    eta = list(eta)
    out = []
    for a, row in enumerate(t.mult):
        if len(row) != len(eta):
            raise ShapeError(f"multiplicity row {a} covers {len(row)} simples, eta has {len(eta)}")
        blocks = []
        for b, m in enumerate(row):
            blocks.extend([eta[b]] * m)
        mid = block_diag(blocks) if blocks else Matrix.zeros(0, 0)
        if mid.rows != t.tau[a].rows:
            raise ShapeError(
                f"decomposition of source space {a} has size {mid.rows}, not {t.tau[a].rows}"
            )
        out.append(mat_inverse(t.tau[a]) * (mid * t.tau[a]))
    return out


def transport_matrix(t: SliceMorphismData, dims_in) -> Matrix:
    """The matrix of transport_along over the matrix unit bases: rows are
    indexed by the source layout, columns by the target layout."""
    dims_out = tuple(m.rows for m in t.tau)
    n_out = sum(x * x for x in dims_out)
    offs_out = endf_offsets(dims_out)
    cols = []
    for (b, k, l) in endf_basis(dims_in):
        eta = [
            _matrix_unit(dims_in[bb], k, l) if bb == b else Matrix.zeros(dims_in[bb], dims_in[bb])
            for bb in range(len(dims_in))
        ]
        blocks = transport_along(t, eta)
        col = [ZERO] * n_out
        for a, da in enumerate(dims_out):
            blk = blocks[a]
            for i in range(da):
                for j in range(da):
                    v = blk.at(i, j)
                    if not v.is_zero():
                        col[offs_out[a] + i * da + j] = v
        cols.append(col)
    n_in = sum(x * x for x in dims_in)
    return Matrix.from_rows(cols).transpose() if cols else Matrix.zeros(n_out, n_in)
