"""Cocycle spaces, multiplier dimensions, covers, Z*, capability."""

import random
from fractions import Fraction

import pytest

from extraspecial.algebra import (
    Algebra,
    IdentityKind,
    center,
    check_identity,
    derived_ideal,
)
from extraspecial.catalog import BlockDescriptor, central_sum, make_canonical
from extraspecial.cohomology import (
    VALIDATED_LEIBNIZ,
    central_extension_by_cocycles,
    cocycle_space,
    cover,
    is_capable,
    is_unicentral,
    multiplier_dim,
    z_star,
)
from extraspecial.errors import IdentityViolated, NotAssociative
from extraspecial.scalars import Field

Q = Field.rationals()


def j(n):
    return make_canonical(BlockDescriptor("j", n), Q)


def gamma(n):
    return make_canonical(BlockDescriptor("gamma", n), Q)


def h(n, lam):
    return make_canonical(BlockDescriptor("h", n, lam), Q)


# -- cocycle spaces -------------------------------------------------------------


def test_j1_cocycle_dimensions():
    # hand solve: constraints force f(z,z) = 0 and f(x,z) = f(z,x)
    cs = cocycle_space(j(1), IdentityKind.ASSOCIATIVE)
    assert (cs.z2.dim, cs.b2.dim, cs.h2_dim) == (2, 1, 1)


def test_one_dimensional_zero_algebra_cocycles():
    cs = cocycle_space(Algebra.zero(Q, 1), IdentityKind.ASSOCIATIVE)
    assert (cs.z2.dim, cs.b2.dim, cs.h2_dim) == (1, 0, 1)


def test_j2_associative_multiplier():
    assert multiplier_dim(j(2), IdentityKind.ASSOCIATIVE) == 3


def test_b2_dim_equals_derived_dim():
    for a in [j(1), j(3), gamma(2), h(1, 3), central_sum(j(2), j(2))]:
        cs = cocycle_space(a, IdentityKind.ASSOCIATIVE)
        assert cs.b2.dim == derived_ideal(a).dim


def test_cocycle_space_rejects_wrong_theory():
    bad = Algebra(Q, 2, {(0, 1): (1, 0)})  # not associative
    with pytest.raises(IdentityViolated):
        cocycle_space(bad, IdentityKind.ASSOCIATIVE)


# -- multiplier dimensions -------------------------------------------------------


def test_gamma3_multiplier_is_eight():
    assert multiplier_dim(gamma(3), IdentityKind.ASSOCIATIVE) == 8


def test_leibniz_exceptional_values():
    assert multiplier_dim(h(1, -1), VALIDATED_LEIBNIZ) == 5
    assert multiplier_dim(j(2), VALIDATED_LEIBNIZ) == 4
    assert multiplier_dim(j(1), VALIDATED_LEIBNIZ) == 1


def test_leibniz_orientation_is_fixed_empirically():
    """Both orientations must reproduce the published low-dimensional values
    on the probes that could distinguish them; the exported constant has to
    be one of the validated orientations."""
    probes = {
        j(1): 1,
        j(2): 4,
        h(1, -1): 5,
        j(3): 8,
        gamma(2): 3,
        h(1, 3): 3,
    }
    validated = []
    for kind in (IdentityKind.LEIBNIZ_LEFT, IdentityKind.LEIBNIZ_RIGHT):
        if all(multiplier_dim(a, kind) == want for a, want in probes.items()):
            validated.append(kind)
    assert VALIDATED_LEIBNIZ in validated


# -- covers ---------------------------------------------------------------------


def test_cover_of_j1_shape():
    ext = cover(j(1))
    assert ext.total.dim == 3
    prods = {(i, jj): vec for i, jj, vec in ext.total.nonzero_products()}
    z, m = (0, 1, 0), (0, 0, 1)
    assert prods == {
        (0, 0): tuple(Fraction(x) for x in z),
        (0, 1): tuple(Fraction(x) for x in m),
        (1, 0): tuple(Fraction(x) for x in m),
    }
    assert center(ext.total).basis == ((Fraction(0), Fraction(0), Fraction(1)),)


def test_cover_of_j2():
    ext = cover(j(2))
    total = ext.total
    assert total.dim == 6
    assert ext.kernel.dim == 3
    # x_i z = z x_i = 0 in the total algebra
    for i in range(3):
        assert not any(total.product(i, 2)) and not any(total.product(2, i))
    # the three kernel coordinates are realized by squares and the reversed product
    realized = {
        (i, jj) for i, jj, vec in total.nonzero_products() if any(vec[3:])
    }
    assert realized == {(0, 0), (1, 0), (1, 1)}


def test_cover_dimension_formula():
    for a in [j(1), j(3), gamma(2), h(1, 3), central_sum(j(1), j(2))]:
        ext = cover(a)
        assert ext.total.dim == a.dim + multiplier_dim(a, IdentityKind.ASSOCIATIVE)


def test_cover_is_stem():
    for a in [j(1), j(2), gamma(2), h(1, -1)]:
        ext = cover(a)
        c = center(ext.total)
        d = derived_ideal(ext.total)
        for v in ext.kernel.basis:
            assert c.contains(v)
            assert d.contains(v)


def test_cover_quotient_reproduces_input():
    for a in [j(2), gamma(3), h(1, 3)]:
        ext = cover(a)
        for i in range(a.dim):
            for jj in range(a.dim):
                assert ext.project(ext.total.product(i, jj)) == a.product(i, jj)


def test_cover_total_is_associative_on_small_inputs():
    for a in [j(1), j(2), Algebra.zero(Q, 1)]:
        assert check_identity(cover(a).total, IdentityKind.ASSOCIATIVE)


def test_cover_of_zero_algebra_is_j1():
    ext = cover(Algebra.zero(Q, 1))
    assert ext.total.dim == 2
    prods = list(ext.total.nonzero_products())
    assert len(prods) == 1
    i, jj, vec = prods[0]
    assert (i, jj) == (0, 0)
    assert not vec[0] and vec[1]


def test_cover_requires_associativity():
    bad = Algebra(Q, 2, {(0, 1): (1, 0)})
    with pytest.raises(NotAssociative):
        cover(bad)


def test_cover_class_invariant_under_coboundary_shift():
    """Shifting the chosen complement by coboundaries must not change any
    dimension data of the extension (covers are unique up to isomorphism)."""
    rng = random.Random(77)
    for a in [j(2), gamma(2), h(1, 3)]:
        cs = cocycle_space(a, IdentityKind.ASSOCIATIVE)
        complement = [
            v
            for v in cs.z2.basis
            if next(i for i, x in enumerate(v) if x)
            not in {next(i for i, x in enumerate(w) if x) for w in cs.b2.basis}
        ]
        shifted = []
        for v in complement:
            acc = list(v)
            for w in cs.b2.basis:
                coef = Fraction(rng.randint(-3, 3))
                acc = [x + coef * y for x, y in zip(acc, w)]
            shifted.append(tuple(acc))
        reference = cover(a).total
        candidate = central_extension_by_cocycles(a, shifted)
        assert candidate.dim == reference.dim
        assert center(candidate).dim == center(reference).dim
        assert derived_ideal(candidate).dim == derived_ideal(reference).dim
        # quotient structure constants agree with the input either way
        for i in range(a.dim):
            for jj in range(a.dim):
                assert candidate.product(i, jj)[: a.dim] == a.product(i, jj)


# -- Z*, capability ---------------------------------------------------------------


def test_z_star_values():
    assert z_star(j(1)).dim == 0
    zs = z_star(j(2))
    assert zs.basis == ((Fraction(0), Fraction(0), Fraction(1)),)
    assert zs == center(j(2))
    assert z_star(Algebra.zero(Q, 1)).dim == 0


def test_z_star_contained_in_center():
    for a in [j(1), j(4), gamma(2), h(1, -1), Algebra.zero(Q, 2)]:
        assert center(a).contains_subspace(z_star(a))


def test_capability_dichotomy():
    assert is_capable(j(1)) and not is_unicentral(j(1))
    for a in [j(2), j(4), gamma(2), h(1, -1), central_sum(j(2), j(2))]:
        assert not is_capable(a)
        assert is_unicentral(a)


def test_multiplier_matches_central_sum_formula():
    s = central_sum(j(2), j(2))
    assert multiplier_dim(s, IdentityKind.ASSOCIATIVE) == 15  # (5-1)^2 - 1
