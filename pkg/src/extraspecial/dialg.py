"""Diassociative algebras: the five-axiom checker and the induced bracket.

A dialgebra carries two products, written left (-|) and right (|-), tied by
five associativity-like axioms.  Any associative algebra embeds by using
its product for both, and every dialgebra induces a Leibniz algebra via
x * y = x -| y  -  y |- x.

The center and derived ideal of a dialgebra admit several inequivalent
candidate definitions (two-sided annihilator of either product, of both, or
of the induced bracket); none is adopted here, so no extra special
predicate is offered for dialgebras.  Only the axioms, the embedding, and
the induced bracket are implemented.
"""

from __future__ import annotations

from .algebra import Algebra, IdentityKind, check_identity
from .errors import DimensionMismatch, NotAssociative, NotDiassociative
from .scalars import Field


class Dialgebra:
    """Two structure tensors over one field: left (-|) and right (|-)."""

    __slots__ = ("field", "dim", "basis_names", "left", "right")

    def __init__(self, field: Field, dim: int, left_products, right_products, basis_names=None):
        self.field = field
        self.dim = dim
        self.left = Algebra(field, dim, left_products, basis_names)
        self.right = Algebra(field, dim, right_products, basis_names)
        self.basis_names = self.left.basis_names

    def __eq__(self, other):
        return (
            isinstance(other, Dialgebra)
            and self.left == other.left
            and self.right == other.right
        )

    def __repr__(self):
        return f"Dialgebra(dim {self.dim} over {self.field})"


#: The five defining axioms as (label, lhs, rhs); each side is a pair
#: (outer, inner) of product tags applied as outer(inner(x, y), z) on the
#: left side and outer(x, inner(y, z)) on the right side.
_AXIOMS = (
    ("(x-|y)-|z = x-|(y-|z)", ("L", "L"), ("L", "L")),
    ("(x-|y)-|z = x-|(y|-z)", ("L", "L"), ("L", "R")),
    ("(x|-y)-|z = x|-(y-|z)", ("L", "R"), ("R", "L")),
    ("(x-|y)|-z = x|-(y|-z)", ("R", "L"), ("R", "R")),
    ("(x|-y)|-z = x|-(y|-z)", ("R", "R"), ("R", "R")),
)


def _axiom_defect(d: Dialgebra, axiom, i: int, j: int, k: int) -> tuple:
    """Coordinates of lhs - rhs of one axiom on basis triple (i, j, k)."""
    label, (l_outer, l_inner), (r_outer, r_inner) = axiom
    tables = {"L": d.left, "R": d.right}
    zero = d.field.zero
    out = [zero] * d.dim
    inner = tables[l_inner].product(i, j)
    for m, x in enumerate(inner):
        if x:
            for t, y in enumerate(tables[l_outer].product(m, k)):
                if y:
                    out[t] = out[t] + x * y
    inner = tables[r_inner].product(j, k)
    for m, x in enumerate(inner):
        if x:
            for t, y in enumerate(tables[r_outer].product(i, m)):
                if y:
                    out[t] = out[t] - x * y
    return tuple(out)


def diassociativity_violation(d: Dialgebra) -> tuple | None:
    """First failing (axiom label, basis triple), or None when all five hold."""
    for axiom in _AXIOMS:
        for i in range(d.dim):
            for j in range(d.dim):
                for k in range(d.dim):
                    if any(_axiom_defect(d, axiom, i, j, k)):
                        return (axiom[0], (i, j, k))
    return None


def is_diassociative(d: Dialgebra) -> bool:
    return diassociativity_violation(d) is None


def embed_associative(a: Algebra) -> Dialgebra:
    """View an associative algebra as a dialgebra with both products equal."""
    if not check_identity(a, IdentityKind.ASSOCIATIVE):
        raise NotAssociative("only associative algebras embed as dialgebras")
    products = {(i, j): vec for i, j, vec in a.nonzero_products()}
    return Dialgebra(a.field, a.dim, products, dict(products), a.basis_names)


def induced_leibniz(d: Dialgebra) -> Algebra:
    """The Leibniz algebra with product x * y = x -| y - y |- x."""
    if not is_diassociative(d):
        raise NotDiassociative("the induced bracket needs the five axioms")
    field = d.field
    products = {}
    for i in range(d.dim):
        for j in range(d.dim):
            left = d.left.product(i, j)
            right = d.right.product(j, i)
            vec = tuple(x - y for x, y in zip(left, right))
            if any(vec):
                products[(i, j)] = vec
    return Algebra(field, d.dim, products, d.basis_names)
