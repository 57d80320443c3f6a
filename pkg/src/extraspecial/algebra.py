"""Structure-constant algebras: products, identity checkers, center, derived ideal.

An `Algebra` is a finite-dimensional vector space with a bilinear product
given by a structure tensor: `product(i, j)` is the coordinate vector of
(basis i) * (basis j).  Tensors are stored row-sparse (all-zero product
vectors share one tuple), which keeps the large central extensions built by
the cohomology layer cheap to create and scan.

The center used throughout is the two-sided annihilator
{z : za = az = 0 for all a} - not the set of commuting elements.  Every
result downstream (extra special recognition, multipliers, capability)
depends on this choice.
"""

from __future__ import annotations

from enum import Enum

from .errors import DimensionMismatch, FieldMismatch
from .linalg import Subspace, kernel_basis, reduce_vectors
from .scalars import Field


class IdentityKind(Enum):
    """Which defining identity a product is measured against.

    ASSOCIATIVE     (xy)z = x(yz)
    LEIBNIZ_LEFT    x(yz) = (xy)z - (xz)y
    LEIBNIZ_RIGHT   (xy)z = x(yz) - y(xz)
    """

    ASSOCIATIVE = "assoc"
    LEIBNIZ_LEFT = "leibniz-left"
    LEIBNIZ_RIGHT = "leibniz-right"


class Algebra:
    """A finite-dimensional algebra presented by structure constants."""

    __slots__ = ("field", "dim", "basis_names", "_tensor", "_zero_row")

    def __init__(self, field: Field, dim: int, products, basis_names=None):
        """`products` maps (i, j) pairs to coordinate vectors of basis products.

        Accepts either a dict {(i, j): vector} or a full dim x dim x dim
        nested sequence.  Unlisted products are zero.
        """
        if dim < 0:
            raise ValueError("dimension must be nonnegative")
        self.field = field
        self.dim = dim
        if basis_names is None:
            basis_names = [f"e{i + 1}" for i in range(dim)]
        if len(basis_names) != dim:
            raise ValueError("need one basis name per dimension")
        self.basis_names = tuple(basis_names)
        zero_row = tuple([field.zero] * dim)
        self._zero_row = zero_row
        if isinstance(products, dict):
            table = [[zero_row] * dim for _ in range(dim)]
            for (i, j), vec in products.items():
                if not (0 <= i < dim and 0 <= j < dim):
                    raise DimensionMismatch(f"product index ({i}, {j}) out of range")
                row = tuple(field.coerce(x) for x in vec)
                if len(row) != dim:
                    raise DimensionMismatch("product vector has wrong length")
                table[i][j] = row if any(row) else zero_row
        else:
            table = []
            for i, plane in enumerate(products):
                row_list = []
                for j, vec in enumerate(plane):
                    row = tuple(field.coerce(x) for x in vec)
                    if len(row) != dim:
                        raise DimensionMismatch("structure tensor is not cubical")
                    row_list.append(row if any(row) else zero_row)
                table.append(row_list)
            if len(table) != dim or any(len(r) != dim for r in table):
                raise DimensionMismatch("structure tensor is not cubical")
        self._tensor = tuple(tuple(r) for r in table)

    @classmethod
    def zero(cls, field: Field, dim: int, basis_names=None) -> "Algebra":
        return cls(field, dim, {}, basis_names)

    def product(self, i: int, j: int) -> tuple:
        return self._tensor[i][j]

    def structure_constant(self, i: int, j: int, k: int):
        return self._tensor[i][j][k]

    def nonzero_products(self):
        """Yield (i, j, vector) for every nonzero basis product."""
        zero_row = self._zero_row
        for i, plane in enumerate(self._tensor):
            for j, vec in enumerate(plane):
                if vec is not zero_row and any(vec):
                    yield i, j, vec

    def tensor(self) -> tuple:
        return self._tensor

    def same_field(self, other: "Algebra") -> None:
        if self.field != other.field:
            raise FieldMismatch(f"algebras over {self.field} and {other.field}")

    def zero_vector(self) -> tuple:
        return self._zero_row

    def basis_vector(self, i: int) -> tuple:
        vec = [self.field.zero] * self.dim
        vec[i] = self.field.one
        return tuple(vec)

    def __eq__(self, other):
        return (
            isinstance(other, Algebra)
            and self.field == other.field
            and self.dim == other.dim
            and self._tensor == other._tensor
        )

    def __hash__(self):
        return hash((self.field, self.dim, self._tensor))

    def __repr__(self):
        nz = sum(1 for _ in self.nonzero_products())
        return f"Algebra(dim {self.dim} over {self.field}, {nz} nonzero products)"


def multiply(a: Algebra, u, v) -> tuple:
    """Bilinear extension of the structure tensor: (u . v)."""
    if len(u) != a.dim or len(v) != a.dim:
        raise DimensionMismatch("vectors must match the algebra dimension")
    u = [a.field.coerce(x) for x in u]
    v = [a.field.coerce(x) for x in v]
    out = [a.field.zero] * a.dim
    for i, j, vec in a.nonzero_products():
        c = u[i] * v[j]
        if c:
            for k, x in enumerate(vec):
                if x:
                    out[k] = out[k] + c * x
    return tuple(out)


def _triple_defect(a: Algebra, kind: IdentityKind, i: int, j: int, k: int) -> tuple:
    """Coordinate vector of the identity defect on basis triple (i, j, k)."""
    zero = a.field.zero
    out = [zero] * a.dim

    def add(vec, sign_pos: bool):
        for m, x in enumerate(vec):
            if x:
                out[m] = out[m] + x if sign_pos else out[m] - x

    def left_of(vec, idx):
        # (vec) * x_idx, vec given in coordinates
        res = [zero] * a.dim
        for m, x in enumerate(vec):
            if x:
                prod = a.product(m, idx)
                for t, y in enumerate(prod):
                    if y:
                        res[t] = res[t] + x * y
        return res

    def right_of(idx, vec):
        # x_idx * (vec)
        res = [zero] * a.dim
        for m, x in enumerate(vec):
            if x:
                prod = a.product(idx, m)
                for t, y in enumerate(prod):
                    if y:
                        res[t] = res[t] + x * y
        return res

    ij = a.product(i, j)
    jk = a.product(j, k)
    if kind is IdentityKind.ASSOCIATIVE:
        add(left_of(ij, k), True)       # (x_i x_j) x_k
        add(right_of(i, jk), False)     # - x_i (x_j x_k)
    elif kind is IdentityKind.LEIBNIZ_LEFT:
        ik = a.product(i, k)
        add(right_of(i, jk), True)      # x_i (x_j x_k)
        add(left_of(ij, k), False)      # - (x_i x_j) x_k
        add(left_of(ik, j), True)       # + (x_i x_k) x_j
    elif kind is IdentityKind.LEIBNIZ_RIGHT:
        ik = a.product(i, k)
        add(left_of(ij, k), True)       # (x_i x_j) x_k
        add(right_of(i, jk), False)     # - x_i (x_j x_k)
        add(right_of(j, ik), True)      # + x_j (x_i x_k)
    else:
        raise ValueError(f"unknown identity kind {kind}")
    return tuple(out)


def identity_violation(a: Algebra, kind: IdentityKind) -> tuple | None:
    """First basis triple (i, j, k) violating the identity, or None.

    Checking basis triples is exhaustive: the defect is trilinear, so
    vanishing on all basis triples forces vanishing everywhere.
    """
    for i in range(a.dim):
        for j in range(a.dim):
            for k in range(a.dim):
                if any(_triple_defect(a, kind, i, j, k)):
                    return (i, j, k)
    return None


def check_identity(a: Algebra, kind: IdentityKind) -> bool:
    return identity_violation(a, kind) is None


def derived_ideal(a: Algebra) -> Subspace:
    """Ideal generated by all products.

    The span of basis products is closed under multiplication for every
    algebra this toolkit produces, but the closure loop below makes the
    operation correct on arbitrary tensors as well.  Each round multiplies
    only the vectors added in the previous round; bilinearity makes that
    sufficient for closure of the whole span.
    """
    field = a.field
    zero = field.zero
    nonzero = list(a.nonzero_products())
    span = Subspace(field, a.dim, [vec for _, _, vec in nonzero])
    frontier = list(span.basis)
    while frontier:
        fresh = []
        for v in frontier:
            # v * e_q lands in bucket (L, q); e_p * v in bucket (R, p)
            buckets: dict[tuple, list] = {}
            for p, q, vec in nonzero:
                for coef, key in ((v[p], ("L", q)), (v[q], ("R", p))):
                    if not coef:
                        continue
                    acc = buckets.get(key)
                    if acc is None:
                        acc = buckets[key] = [zero] * a.dim
                    for k, y in enumerate(vec):
                        if y:
                            acc[k] = acc[k] + coef * y
            for acc in buckets.values():
                if any(acc) and not span.contains(acc):
                    fresh.append(tuple(acc))
        if not fresh:
            break
        span = span.sum(Subspace(field, a.dim, fresh))
        frontier = fresh
    return span


def center(a: Algebra) -> Subspace:
    """Two-sided annihilator {v : v x_i = 0 and x_i v = 0 for all i}.

    Solved as one kernel computation; the constraint rows come straight from
    the nonzero entries of the structure tensor.
    """
    rows: dict[tuple, dict] = {}
    for i, j, vec in a.nonzero_products():
        for k, x in enumerate(vec):
            if x:
                # v . x_j = 0, coordinate k: sum_i v_i c[i][j][k]
                rows.setdefault(("L", j, k), {})[i] = x
                # x_i . v = 0, coordinate k: sum_j v_j c[i][j][k]
                rows.setdefault(("R", i, k), {})[j] = x
    unique = {tuple(sorted(r.items())) for r in rows.values()}
    basis = kernel_basis(a.field, a.dim, (dict(r) for r in unique))
    return Subspace(a.field, a.dim, basis, _reduced=True)


def is_extra_special(a: Algebra) -> bool:
    """True iff the center equals the derived ideal and both are lines."""
    z = center(a)
    if z.dim != 1:
        return False
    return z == derived_ideal(a)
