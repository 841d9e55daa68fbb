"""Building a Hopf presentation from skeletal category data and back.

The two concrete anchors: pointed Z/2 data must reconstruct the function
algebra on Z/2 entrywise, and skeletalized group-algebra data must
reconstruct something isomorphic to the group algebra via the evaluation
map gamma.
"""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hopfrec.errors import ReconstructionAxiomFailure, ShapeError
from hopfrec.examples import (
    EXAMPLES,
    gen_function_algebra,
    gen_group_algebra,
    gen_pointed_category,
    gen_pointed_fiber,
)
from hopfrec.groups import cyclic_group, symmetric_group
from hopfrec.hopf import check_hopf_morphism, run_hopf_checks
from hopfrec.matrices import Matrix, block_diag, mat_inverse
from hopfrec.reconstruct import (
    endf_basis,
    endf_offsets,
    reconstruct_hopf,
    transport_along,
    transport_matrix,
    zeta_modules,
)
from hopfrec.repcat import (
    SliceMorphismData,
    gamma_roundtrip,
    skeletalize,
    verify_irreps,
)
from hopfrec.scalars import ONE, Scalar, sc

Z2 = cyclic_group(2)
S3 = symmetric_group(3)


def test_pointed_z2_reconstructs_function_algebra():
    skel = gen_pointed_category(Z2)
    fiber = gen_pointed_fiber(Z2)
    recon = reconstruct_hopf(skel, fiber)
    want = gen_function_algebra(Z2)
    got = recon.hopf
    assert got.alg.mult == want.alg.mult
    assert got.alg.unit == want.alg.unit
    assert got.comult == want.comult
    assert got.counit == want.counit
    assert got.antipode == want.antipode


def test_reconstruction_from_rep_z2_is_group_algebra():
    h = gen_group_algebra(Z2)
    skel, fiber = skeletalize(h, EXAMPLES["kz2-modules"][1]())
    recon = reconstruct_hopf(skel, fiber)
    # basis: one matrix unit per 1-dim block, e_+ then e_-
    assert recon.basis == ((0, 0, 0), (1, 0, 0))
    # Delta(e_+) = e_+ x e_+ + e_- x e_-  (image of (e + g)/2 in K[Z/2])
    d0 = recon.hopf.comult[0]
    assert d0[0][0] == ONE and d0[1][1] == ONE
    assert d0[0][1].is_zero() and d0[1][0].is_zero()
    assert recon.hopf.counit == (ONE, sc(0))
    # gamma is an explicit Hopf isomorphism onto the reconstruction
    m = Matrix.from_rows([[1, 1], [1, -1]])
    rep = check_hopf_morphism(h, recon.hopf, m)
    assert rep.passed, [f.line() for f in rep.failures]


def test_antipode_transports_group_inversion():
    h = gen_group_algebra(S3)
    mods = EXAMPLES["ks3-modules"][1]()
    skel, fiber = skeletalize(h, mods)
    recon = reconstruct_hopf(skel, fiber)
    _, gamma = gamma_roundtrip(h, mods)
    s = recon.hopf.antipode
    n = 6
    for g in range(n):
        img = Matrix.column([gamma.at(r, g) for r in range(n)])
        want = Matrix.column([gamma.at(r, S3.inv(g)) for r in range(n)])
        assert s * img == want


def test_zeta_modules_of_pointed_z2():
    recon = reconstruct_hopf(gen_pointed_category(Z2), gen_pointed_fiber(Z2))
    mods = zeta_modules(recon)
    assert [m.dim for m in mods] == [1, 1]
    assert verify_irreps(recon.hopf.alg, mods).passed


def test_zeta_modules_of_rep_s3():
    h = gen_group_algebra(S3)
    skel, fiber = skeletalize(h, EXAMPLES["ks3-modules"][1]())
    recon = reconstruct_hopf(skel, fiber)
    mods = zeta_modules(recon)
    assert sorted(m.dim for m in mods) == [1, 1, 2]
    assert verify_irreps(recon.hopf.alg, mods).passed


def test_incoherent_data_is_rejected():
    # nontrivial associator with the identity tensorator cannot satisfy
    # the compatibility hexagon, so reconstruction must refuse
    skel = EXAMPLES["vec-z2-omega"][1]()
    fiber = gen_pointed_fiber(Z2)
    with pytest.raises(ReconstructionAxiomFailure, match="coherence"):
        reconstruct_hopf(skel, fiber)


def test_reconstruct_verify_flag_still_checks_output():
    # verify=False skips the category precheck but the assembled Hopf data
    # of coherent input still passes the axiom suite
    skel = gen_pointed_category(Z2)
    fiber = gen_pointed_fiber(Z2)
    recon = reconstruct_hopf(skel, fiber, verify=False)
    assert all(r.passed for r in run_hopf_checks(recon.hopf))


@given(st.lists(st.integers(min_value=1, max_value=4), min_size=1, max_size=5))
@settings(max_examples=60, deadline=None)
def test_endf_layout_is_a_pure_index_bijection(dims):
    basis = endf_basis(dims)
    offs = endf_offsets(dims)
    assert len(basis) == sum(d * d for d in dims)
    assert len(set(basis)) == len(basis)
    for pos, (a, i, j) in enumerate(basis):
        assert 0 <= i < dims[a] and 0 <= j < dims[a]
        assert pos == offs[a] + i * dims[a] + j


# -- transport along functor-shaped decomposition data -----------------------


def unit_inclusion(target_dims):
    # the simple of Vec maps to the first simple of the target
    mult = (tuple(1 if b == 0 else 0 for b in range(len(target_dims))),)
    return SliceMorphismData(mult=mult, tau=(Matrix.identity(target_dims[0]),))


def test_transport_identity_functor():
    dims = (1, 1)
    ident = SliceMorphismData(
        mult=((1, 0), (0, 1)), tau=(Matrix.identity(1), Matrix.identity(1))
    )
    eta = [Matrix(1, 1, [sc(5)]), Matrix(1, 1, [sc(7)])]
    assert transport_along(ident, eta) == eta
    assert transport_matrix(ident, dims) == Matrix.identity(2)


def test_transport_composition_on_swap_chain():
    # Vec -> Rep(Z/2) -> Rep(Z/2), the second leg swapping the characters
    t1 = SliceMorphismData(mult=((1, 0),), tau=(Matrix.identity(1),))
    t2 = SliceMorphismData(
        mult=((0, 1), (1, 0)),
        tau=(Matrix(1, 1, [sc(2)]), Matrix(1, 1, [sc(3)])),
    )
    tc = SliceMorphismData(mult=((0, 1),), tau=(Matrix(1, 1, [sc(2)]),))
    eta = [Matrix(1, 1, [sc(5)]), Matrix(1, 1, [sc(7)])]
    # contravariant: the composite transports target data through t2 first
    via_chain = transport_along(t1, transport_along(t2, eta))
    assert via_chain == transport_along(tc, eta)


def test_transport_unital_and_multiplicative():
    rng = random.Random(2)
    dims = (1, 1, 2)
    tau = Matrix.from_rows(
        [[rng.randint(-3, 3) for _ in range(3)] for _ in range(3)]
    )
    assert not tau.det().is_zero()
    t = SliceMorphismData(mult=((1, 0, 1),), tau=(tau,))

    def rnd_eta():
        return [
            Matrix.from_rows([[rng.randint(-3, 3)]]),
            Matrix.from_rows([[rng.randint(-3, 3)]]),
            Matrix.from_rows([[rng.randint(-3, 3) for _ in range(2)] for _ in range(2)]),
        ]

    ident = [Matrix.identity(1), Matrix.identity(1), Matrix.identity(2)]
    assert transport_along(t, ident) == [Matrix.identity(3)]
    for _ in range(5):
        eta, zeta = rnd_eta(), rnd_eta()
        prod = [e * z for e, z in zip(eta, zeta)]
        lhs = transport_along(t, prod)
        rhs = [a * b for a, b in zip(transport_along(t, eta), transport_along(t, zeta))]
        assert lhs == rhs


def test_transport_to_counit_on_group_algebra():
    # the unit functor Vec -> Rep(G) transports the canonical action of H
    # on its modules down to the counit
    h = gen_group_algebra(S3)
    mods = EXAMPLES["ks3-modules"][1]()
    _, gamma = gamma_roundtrip(h, mods)
    dims = tuple(m.dim for m in mods)
    offs = endf_offsets(dims)
    t = unit_inclusion(dims)
    for x in range(6):
        # slice the column gamma(e_x) back into its diagonal blocks
        col = [gamma.at(r, x) for r in range(6)]
        eta = []
        for a, d in enumerate(dims):
            eta.append(Matrix(d, d, [col[offs[a] + i * d + j] for i in range(d) for j in range(d)]))
        out = transport_along(t, eta)
        assert out == [Matrix(1, 1, [h.counit[x]])]


def test_transport_shape_mismatch():
    t = SliceMorphismData(mult=((1, 1),), tau=(Matrix.identity(3),))
    eta = [Matrix.identity(1), Matrix.identity(1)]  # total size 2, tau wants 3
    with pytest.raises(ShapeError):
        transport_along(t, eta)


def test_transport_matrix_matches_elementwise_transport():
    rng = random.Random(4)
    tau = Matrix.from_rows([[1, 1], [0, 1]])
    t = SliceMorphismData(mult=((2,),), tau=(tau,))
    dims_in = (1,)
    tm = transport_matrix(t, dims_in)
    # columns of tm are the transports of the matrix-unit basis
    eta = [Matrix(1, 1, [ONE])]
    out = transport_along(t, eta)[0]
    flat = [out.at(i, j) for i in range(2) for j in range(2)]
    assert [tm.at(r, 0) for r in range(4)] == flat
