from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from conftest import staircase_band
from vertexmod.configuration import Configuration, random_config
from vertexmod.lattice import Lattice
from vertexmod.linalg import SparseMat
from vertexmod.representation import (
    balanced_words,
    build_module,
    casimir,
    check_order_product,
    crossing_order,
    loop_matrix,
    order_product,
    path_poly_product,
    path_sqrt_product,
    verify_relations,
    word_matrix,
)
from vertexmod.scalar import Radical
from vertexmod.topology import components
from vertexmod.unitarity import gram_matrix

lattices = st.sampled_from([(1, 1), (2, 1), (3, 2), (5, 2)])


def finite_comps(cfg):
    return [c for c in components(cfg) if c.finite]


def test_balanced_words():
    assert balanced_words(1, 1) == ["12", "21"]
    assert balanced_words(2, 1) == ["112", "121", "211"]
    assert len(balanced_words(5, 2)) == 21
    assert len(balanced_words(7, 3)) == 120
    with pytest.raises(ValueError):
        balanced_words(15, 6)


def test_build_module_example2(example2):
    comps = components(example2)
    d2, d1 = comps[0], comps[1]
    rep1 = build_module(example2, d1)
    assert rep1.dim == 1 and rep1.weights == [1]
    assert all(not rep1.mats[g] for g in rep1.mats)  # every boundary edge is supported
    rep2 = build_module(example2, d2)
    assert rep2.weights == [0, 2, 4]
    # the step from weight 2 to weight 4 crosses the midpoint-3 edge
    assert rep2.mats["X1-"][(2, 1)] == Radical.make(phase=1, root=24)
    assert verify_relations(rep2).ok


def test_window_required_for_infinite(example2):
    inf = [c for c in components(example2) if not c.finite][0]
    with pytest.raises(ValueError):
        build_module(example2, inf)


def test_band_winding_gauge(example1_d4):
    # around each face pair loop of the band the winding exponents sum to 1,
    # whatever the gauge spread over individual entries
    band = finite_comps(example1_d4)[0]
    rep = build_module(example1_d4, band)
    for w in range(1, 4):
        up = rep.mats["X2+"][(rep.index(w + 1), rep.index(w))]
        back = rep.mats["X1+"][(rep.index(w), rep.index(w + 1))]
        assert up.xi_exp + back.xi_exp == 1
    assert verify_relations(rep).ok


def test_contractible_module_has_no_winding(example2, example3):
    for cfg in (example2, example3):
        for comp in finite_comps(cfg):
            if not comp.contractible:
                continue
            rep = build_module(cfg, comp)
            assert all(v.xi_exp == 0 for g in rep.mats for v in rep.mats[g].values())


def test_empty_window_module(lat52):
    cfg = Configuration(lat52, {})
    comp = components(cfg)[0]
    rep = build_module(cfg, comp, window=(-5, 5))
    assert rep.dim == 11
    report = verify_relations(rep)
    assert report.ok and report.skipped  # boundary rows are skipped, not asserted
    # interior product relations reduce to the identity
    prod = rep.matrix("X1+") @ rep.matrix("X1-")
    mid = rep.index(0)
    assert prod.entry(mid, mid).as_radical() == Radical.one()


def test_crossing_order(example1_d4, lat52):
    assert crossing_order(Configuration(lat52, {}), "1112112", 3) == 0
    # loop from weight 0 crosses the two supported midpoint-1/2 edges
    assert crossing_order(example1_d4, "21", 0) == 1
    # loop inside the band never meets the support
    assert crossing_order(example1_d4, "21", 2) == 0
    with pytest.raises(ValueError):
        crossing_order(example1_d4, "211", 0)


def test_path_products(example1_d4, lat52):
    assert path_sqrt_product(Configuration(lat52, {}), "12121", 7) == Radical.one()
    # both crossed edges are supported, so the product vanishes
    assert path_sqrt_product(example1_d4, "21", 0) == Radical.zero()
    # inside the band the product is a nonzero rational, possibly negative:
    # both crossings carry one supported edge above them
    assert path_sqrt_product(example1_d4, "21", 1) == Radical.from_rational(-3)
    assert order_product(example1_d4, "21", 1) == Fraction(-3)
    assert path_poly_product(example1_d4, "21", 1) == Fraction(9)


@given(lattices, st.integers(1, 3), st.integers(0, 10**6))
@settings(max_examples=25, deadline=None)
def test_order_product_identity(mn, k, seed):
    cfg = random_config(Lattice(*mn), k, seed)
    for word in balanced_words(*mn):
        report = check_order_product(cfg, word, (-15, 15))
        assert report.identity_ok, report.identity_failures[:3] + report.crossing_failures[:3]


def test_order_product_sign_clause_not_a_theorem(example1_d4):
    # the signed identity holds, but the common value can be negative; the
    # canonical counterexample sits inside the width-4 band
    report = check_order_product(example1_d4, "12", (-20, 20))
    assert report.identity_ok
    assert any("at 2" in f for f in report.sign_failures)
    assert path_sqrt_product(example1_d4, "12", 2) == Radical.from_rational(-3)


def test_relations_on_examples(example2, example3, example4, example1_d4):
    for cfg in (example2, example3, example4, example1_d4):
        for comp in finite_comps(cfg):
            report = verify_relations(build_module(cfg, comp))
            assert report.ok and not report.skipped


@given(lattices, st.integers(1, 2), st.integers(0, 10**6))
@settings(max_examples=50, deadline=None)
def test_relations_on_random_configs(mn, k, seed):
    cfg = random_config(Lattice(*mn), k, seed)
    for comp in finite_comps(cfg):
        assert verify_relations(build_module(cfg, comp)).ok


def test_word_matrix(example2):
    d2 = components(example2)[0]
    rep = build_module(example2, d2)
    assert word_matrix(rep, []) == SparseMat.identity(3)
    assert word_matrix(rep, ["H"]) == SparseMat.diagonal([Fraction(w) for w in rep.weights])
    # composition order: rightmost acts first
    assert word_matrix(rep, ["X1+", "X1-"]) == rep.matrix("X1+") @ rep.matrix("X1-")


def test_loop_operator_adjoint_identity(example1_d4, example2):
    # the raising loop word satisfies adjoint(X(w)) X(w) = poly product of H
    for cfg in (example1_d4, example2):
        for comp in finite_comps(cfg):
            rep = build_module(cfg, comp)
            G = gram_matrix(rep)
            for word in balanced_words(cfg.lat.m, cfg.lat.n)[:3]:
                X = loop_matrix(rep, word)
                lhs = (G @ X.conj_transpose() @ G) @ X
                rhs = SparseMat.diagonal(
                    [path_poly_product(cfg, word, w) for w in rep.weights])
                assert lhs == rhs


def test_casimir_band_family():
    for d in range(1, 9):
        cfg = staircase_band(d)
        band = finite_comps(cfg)[0]
        rep = build_module(cfg, band)
        scalars = [casimir(rep, w).scalar for w in ("12", "21")]
        assert scalars[0] == scalars[1]
        if d == 1:
            assert band.contractible and scalars[0] == Radical.zero()
        else:
            assert scalars[0] == Radical.xi_power(1)


def test_casimir_contractible_is_zero(example2):
    d2 = components(example2)[0]
    rep = build_module(example2, d2)
    res = casimir(rep, "1121112")
    assert res.scalar == Radical.zero()
    assert res.determinate == []


def test_casimir_empty_window(lat52):
    cfg = Configuration(lat52, {})
    rep = build_module(cfg, components(cfg)[0], window=(-20, 20))
    for word in balanced_words(5, 2):
        res = casimir(rep, word)
        assert res.scalar == Radical.xi_power(1)
        assert res.determinate  # interior faces certify the value


def test_casimir_unitary(example3):
    # form-adjoint of the Casimir matrix times itself is the identity
    comp = [c for c in finite_comps(example3) if not c.contractible][0]
    rep = build_module(example3, comp)
    res = casimir(rep, "1111122")
    C = SparseMat.diagonal([res.scalar] * rep.dim)
    G = gram_matrix(rep)
    assert (G @ C.conj_transpose() @ G) @ C == SparseMat.identity(rep.dim)


def test_export_triplets(example2):
    rep = build_module(example2, components(example2)[0])
    text = rep.export_triplets("X1-")
    assert "2 1 i^1 * 2*sqrt(6)" in text.splitlines()
    assert rep.export_triplets("H").splitlines()[0] == "0 0 0"
