"""Constructors for the canonical extra special families and central sums.

Five families generate everything: the one-generator square J1, the chain
algebras Jn, the alternating-sign algebras Gamma_n, and the two lambda
families H2(lambda) and H2n(lambda).  Every extra special algebra is a
central sum of these blocks, which is exactly what the classification in
`forms` recovers.

Block descriptors carry a compact text syntax used by the CLI and by
serialized decompositions: `j:4`, `gamma:3`, `h2:3/2`, `h2n:2:5`, and sums
like `j:2+h2:3`.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import Algebra, center, is_extra_special
from .errors import FieldMismatch, InvalidDescriptor, NotExtraSpecial
from .linalg import scalar_sort_key
from .scalars import Field


@dataclass(frozen=True)
class BlockDescriptor:
    """One canonical block: kind "j", "gamma", or "h" with parameters.

    For H blocks, `n` follows the convention of the family name: n = 1 is
    the 3-dimensional algebra H2(lambda), n >= 2 the (2n+1)-dimensional
    H2n(lambda).
    """

    kind: str
    n: int
    lam: object = None  # scalar, H blocks only

    def validate(self, field: Field) -> None:
        if self.kind == "j":
            if self.n < 1:
                raise InvalidDescriptor("J blocks need n >= 1")
            if self.lam is not None:
                raise InvalidDescriptor("J blocks take no parameter")
        elif self.kind == "gamma":
            if self.n < 2:
                raise InvalidDescriptor("Gamma blocks need n >= 2")
            if self.lam is not None:
                raise InvalidDescriptor("Gamma blocks take no parameter")
        elif self.kind == "h":
            if self.n < 1:
                raise InvalidDescriptor("H blocks need n >= 1")
            lam = field.coerce(self.lam)
            if not lam:
                raise InvalidDescriptor("H blocks need a nonzero parameter")
            if self.n == 1 and lam == field.one:
                raise InvalidDescriptor("H2(lambda) requires lambda != 1")
            if self.n >= 2 and lam == _sign_element(field, self.n + 1):
                raise InvalidDescriptor(
                    f"H{2 * self.n}(lambda) requires lambda != (-1)^{self.n + 1}"
                )
        else:
            raise InvalidDescriptor(f"unknown block kind {self.kind!r}")

    @property
    def algebra_dim(self) -> int:
        if self.kind in ("j", "gamma"):
            return self.n + 1
        return 3 if self.n == 1 else 2 * self.n + 1

    def text(self, field: Field) -> str:
        if self.kind == "j":
            return f"j:{self.n}"
        if self.kind == "gamma":
            return f"gamma:{self.n}"
        if self.n == 1:
            return f"h2:{field.format(self.lam)}"
        return f"h2n:{self.n}:{field.format(self.lam)}"


def _sign_element(field: Field, exponent: int):
    """(-1)^exponent as a field element."""
    return field.one if exponent % 2 == 0 else -field.one


def normalize_lambda(field: Field, lam):
    """Pick the canonical representative of {lambda, 1/lambda}.

    The smaller element under a fixed total order wins: (numerator,
    denominator) lexicographically for rationals, the smaller residue for
    GF(p).  Decompositions compare equal iff they agree after this choice.
    """
    lam = field.coerce(lam)
    if not lam:
        raise InvalidDescriptor("lambda must be nonzero")
    inv = field.one / lam
    return lam if scalar_sort_key(lam) <= scalar_sort_key(inv) else inv


def normalize_descriptor(field: Field, d: BlockDescriptor) -> BlockDescriptor:
    d.validate(field)
    if d.kind != "h":
        return d
    return BlockDescriptor("h", d.n, normalize_lambda(field, d.lam))


def make_canonical(d: BlockDescriptor, field: Field) -> Algebra:
    """Build the canonical algebra of a block descriptor.

    The result has basis x1..xm plus a final central z, and exactly the
    defining nonzero products of its family.
    """
    d.validate(field)
    one = field.one
    if d.kind == "j":
        n = d.n
        dim = n + 1
        z = dim - 1
        products = {}
        if n == 1:
            products[(0, 0)] = _unit(field, dim, z)
        else:
            for i in range(n - 1):
                products[(i, i + 1)] = _unit(field, dim, z)
        names = [f"x{i + 1}" for i in range(n)] + ["z"]
        return Algebra(field, dim, products, names)
    if d.kind == "gamma":
        n = d.n
        dim = n + 1
        z = dim - 1
        products = {}
        # antidiagonal x_i x_{n-i+1} and superantidiagonal x_i x_{n-i+2},
        # both with sign (-1)^(n-i); 1-based indices i
        for i in range(1, n + 1):
            sign = _sign_element(field, n - i)
            products[(i - 1, n - i)] = _unit(field, dim, z, sign)
        for i in range(2, n + 1):
            sign = _sign_element(field, n - i)
            products[(i - 1, n + 1 - i)] = _unit(field, dim, z, sign)
        names = [f"x{i + 1}" for i in range(n)] + ["z"]
        return Algebra(field, dim, products, names)
    # H blocks
    lam = field.coerce(d.lam)
    if d.n == 1:
        dim = 3
        products = {
            (0, 1): _unit(field, dim, 2),
            (1, 0): _unit(field, dim, 2, lam),
        }
        return Algebra(field, dim, products, ["x1", "x2", "z"])
    n = d.n
    dim = 2 * n + 1
    z = dim - 1
    products = {}
    for i in range(n):
        products[(i, n + i)] = _unit(field, dim, z)
        products[(n + i, i)] = _unit(field, dim, z, lam)
    for i in range(n - 1):
        products[(n + i, i + 1)] = _unit(field, dim, z)
    names = [f"x{i + 1}" for i in range(2 * n)] + ["z"]
    return Algebra(field, dim, products, names)


def _unit(field: Field, dim: int, k: int, value=None) -> tuple:
    vec = [field.zero] * dim
    vec[k] = field.one if value is None else value
    return tuple(vec)


def central_sum(a: Algebra, b: Algebra) -> Algebra:
    """Glue two extra special algebras along their centers.

    Both inputs must be extra special with their center spanned by the last
    basis vector (the layout every constructor here produces).  The sum has
    the non-central bases side by side, one shared z, and zero cross
    products.
    """
    a.same_field(b)
    for alg in (a, b):
        if not is_extra_special(alg):
            raise NotExtraSpecial("central_sum needs extra special summands")
        z = center(alg)
        expected = alg.basis_vector(alg.dim - 1)
        if z.basis != (expected,):
            raise NotExtraSpecial(
                "central_sum expects the center spanned by the last basis vector"
            )
    field = a.field
    na, nb = a.dim - 1, b.dim - 1
    dim = na + nb + 1
    z = dim - 1

    def embed(vec, offset, source_dim):
        out = [field.zero] * dim
        for k, x in enumerate(vec):
            if not x:
                continue
            out[z if k == source_dim - 1 else offset + k] = x
        return tuple(out)

    products = {}
    for i, j, vec in a.nonzero_products():
        products[(i, j)] = embed(vec, 0, a.dim)
    for i, j, vec in b.nonzero_products():
        products[(na + i, na + j)] = embed(vec, na, b.dim)
    names = (
        [f"a_{n}" for n in a.basis_names[:na]]
        + [f"b_{n}" for n in b.basis_names[:nb]]
        + ["z"]
    )
    return Algebra(field, dim, products, names)


# ---------------------------------------------------------------------------
# descriptor text syntax
# ---------------------------------------------------------------------------


def parse_descriptor(text: str, field: Field) -> BlockDescriptor:
    """Parse one block descriptor: `j:N`, `gamma:N`, `h2:LAM`, `h2n:N:LAM`."""
    parts = text.strip().lower().split(":")
    try:
        if parts[0] == "j" and len(parts) == 2:
            d = BlockDescriptor("j", int(parts[1]))
        elif parts[0] == "gamma" and len(parts) == 2:
            d = BlockDescriptor("gamma", int(parts[1]))
        elif parts[0] == "h2" and len(parts) == 2:
            d = BlockDescriptor("h", 1, field.parse(parts[1]))
        elif parts[0] == "h2n" and len(parts) == 3:
            d = BlockDescriptor("h", int(parts[1]), field.parse(parts[2]))
        else:
            raise InvalidDescriptor(f"cannot parse block descriptor {text!r}")
    except ValueError as exc:
        raise InvalidDescriptor(f"cannot parse block descriptor {text!r}: {exc}") from exc
    d.validate(field)
    return d


def make_from_text(text: str, field: Field) -> Algebra:
    """Build an algebra from a descriptor sum such as `j:2+h2:3`."""
    parts = [p for p in text.split("+") if p.strip()]
    if not parts:
        raise InvalidDescriptor("empty descriptor")
    algebras = [make_canonical(parse_descriptor(p, field), field) for p in parts]
    out = algebras[0]
    for nxt in algebras[1:]:
        out = central_sum(out, nxt)
    return out
