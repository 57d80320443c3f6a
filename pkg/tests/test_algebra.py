"""Products, identity checks, center, derived ideal, extra special predicate."""

import itertools
import random
from fractions import Fraction

import pytest

from extraspecial.algebra import (
    Algebra,
    IdentityKind,
    center,
    check_identity,
    derived_ideal,
    identity_violation,
    is_extra_special,
    multiply,
)
from extraspecial.catalog import BlockDescriptor, make_canonical
from extraspecial.errors import DimensionMismatch
from extraspecial.scalars import Field

Q = Field.rationals()


def j(n):
    return make_canonical(BlockDescriptor("j", n), Q)


def gamma(n):
    return make_canonical(BlockDescriptor("gamma", n), Q)


def h(n, lam):
    return make_canonical(BlockDescriptor("h", n, lam), Q)


def cover_of_j1():
    # 3-dimensional algebra with xx = z, xz = zx = m
    return Algebra(
        Q,
        3,
        {(0, 0): (0, 1, 0), (0, 1): (0, 0, 1), (1, 0): (0, 0, 1)},
        ["x", "z", "m"],
    )


# -- multiply -----------------------------------------------------------------


def test_multiply_j1_square():
    a = j(1)
    assert multiply(a, [1, 0], [1, 0]) == (Fraction(0), Fraction(1))


def test_multiply_by_zero_vector():
    a = gamma(3)
    zero = [0] * a.dim
    assert multiply(a, zero, [1] * a.dim) == tuple([Q.zero] * a.dim)


def test_multiply_h2_lambda():
    a = h(1, 3)
    # x2 * x1 = 3 z
    assert multiply(a, [0, 1, 0], [1, 0, 0]) == (Fraction(0), Fraction(0), Fraction(3))


def test_multiply_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        multiply(j(1), [1, 0, 0], [1, 0])


# -- identity checks ------------------------------------------------------------


def test_catalog_algebra_is_associative():
    assert check_identity(j(5), IdentityKind.ASSOCIATIVE)


def test_zero_algebra_satisfies_everything():
    a = Algebra.zero(Q, 3)
    for kind in IdentityKind:
        assert check_identity(a, kind)


def test_violating_algebra_reports_first_triple():
    # dim 2 with x*y = x only: (xy)y = x but x(yy) = 0
    a = Algebra(Q, 2, {(0, 1): (1, 0)}, ["x", "y"])
    assert identity_violation(a, IdentityKind.ASSOCIATIVE) == (0, 1, 1)


def test_leibniz_orientations_are_genuinely_different():
    # x*x = y, x*y = z: x(xx) = z but (xx)x = 0, so only the left identity fails
    left_breaker = Algebra(Q, 3, {(0, 0): (0, 1, 0), (0, 1): (0, 0, 1)}, ["x", "y", "z"])
    assert not check_identity(left_breaker, IdentityKind.LEIBNIZ_LEFT)
    assert check_identity(left_breaker, IdentityKind.LEIBNIZ_RIGHT)
    # x*x = y, y*x = z: (xx)x = z but x(xx) = 0, mirrored situation
    right_breaker = Algebra(Q, 3, {(0, 0): (0, 1, 0), (1, 0): (0, 0, 1)}, ["x", "y", "z"])
    assert check_identity(right_breaker, IdentityKind.LEIBNIZ_LEFT)
    assert not check_identity(right_breaker, IdentityKind.LEIBNIZ_RIGHT)
    assert identity_violation(right_breaker, IdentityKind.LEIBNIZ_RIGHT) == (0, 0, 0)


# -- derived ideal ----------------------------------------------------------------


def test_derived_ideal_j2_is_center_line():
    d = derived_ideal(j(2))
    assert d.dim == 1
    assert d.contains([0, 0, 1])


def test_derived_ideal_zero_algebra():
    assert derived_ideal(Algebra.zero(Q, 2)).dim == 0


def test_derived_ideal_of_j1_cover():
    d = derived_ideal(cover_of_j1())
    assert d.dim == 2
    assert d.contains([0, 1, 0]) and d.contains([0, 0, 1])


# -- center ------------------------------------------------------------------------


def test_center_h2_is_z_line():
    c = center(h(1, 3))
    assert c.dim == 1
    assert c.contains([0, 0, 1])


def test_center_zero_algebra_is_everything():
    assert center(Algebra.zero(Q, 2)).dim == 2


def test_center_of_j1_cover_excludes_z():
    # z * x = m is nonzero, so only m survives the annihilator solve
    c = center(cover_of_j1())
    assert c.dim == 1
    assert c.contains([0, 0, 1])
    assert not c.contains([0, 1, 0])


# -- extra special -----------------------------------------------------------------


def test_gamma4_is_extra_special():
    assert is_extra_special(gamma(4))


def test_zero_algebra_is_not_extra_special():
    assert not is_extra_special(Algebra.zero(Q, 2))


def test_unglued_direct_sum_is_not_extra_special():
    # two copies of J1 with separate central lines: center is 2-dimensional
    a = Algebra(
        Q,
        4,
        {(0, 0): (0, 1, 0, 0), (2, 2): (0, 0, 0, 1)},
        ["x1", "z1", "x2", "z2"],
    )
    assert center(a).dim == 2
    assert not is_extra_special(a)


# -- structural invariants -----------------------------------------------------------


CATALOG_SAMPLE = [
    BlockDescriptor("j", 1),
    BlockDescriptor("j", 3),
    BlockDescriptor("gamma", 2),
    BlockDescriptor("gamma", 4),
    BlockDescriptor("h", 1, -1),
    BlockDescriptor("h", 1, 3),
    BlockDescriptor("h", 2, 2),
]


@pytest.mark.parametrize("descriptor", CATALOG_SAMPLE, ids=lambda d: d.text(Q))
def test_catalog_satisfies_all_three_identities(descriptor):
    a = make_canonical(descriptor, Q)
    for kind in IdentityKind:
        assert check_identity(a, kind)
    assert is_extra_special(a)


@pytest.mark.parametrize("descriptor", CATALOG_SAMPLE, ids=lambda d: d.text(Q))
def test_triple_products_vanish(descriptor):
    a = make_canonical(descriptor, Q)
    for i, jdx, k in itertools.product(range(a.dim), repeat=3):
        left = multiply(a, a.product(i, jdx), a.basis_vector(k))
        right = multiply(a, a.basis_vector(i), a.product(jdx, k))
        assert not any(left) and not any(right)


def test_center_and_derived_invariant_under_basis_permutation():
    rng = random.Random(3)
    a = h(2, 3)
    perm = list(range(a.dim))
    rng.shuffle(perm)
    inv = [perm.index(i) for i in range(a.dim)]
    products = {}
    for i, jdx, vec in a.nonzero_products():
        moved = [Q.zero] * a.dim
        for k, x in enumerate(vec):
            moved[inv[k]] = x
        products[(inv[i], inv[jdx])] = tuple(moved)
    permuted = Algebra(Q, a.dim, products)
    assert center(permuted).dim == center(a).dim
    assert derived_ideal(permuted).dim == derived_ideal(a).dim
    assert is_extra_special(permuted) == is_extra_special(a)
