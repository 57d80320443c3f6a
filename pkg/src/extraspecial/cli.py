"""Command-line interface and the theorem-verification sweep.

Every command prints a single JSON object on stdout.  Exit codes separate
"computed" from "failed": 0 means the computation ran (boolean answers live
in the payload), 2 flags bad input, 3 flags an honest refusal over the base
field, 4 flags an internal self-check failure, and `verify-theorems` exits
1 when any row fails.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from .algebra import Algebra, IdentityKind, center, derived_ideal, identity_violation, is_extra_special
from .catalog import BlockDescriptor, central_sum, make_canonical, make_from_text
from .cohomology import VALIDATED_LEIBNIZ, cover, is_capable, is_unicentral, multiplier_dim, z_star
from .dialg import Dialgebra, diassociativity_violation
from .errors import InputError, InternalCheckFailure, Unsupported
from .forms import BlockDecomposition, classify
from .scalars import Field
from .serialize import algebra_to_doc, parse_algebra

_IDENTITY_FLAGS = {
    "assoc": IdentityKind.ASSOCIATIVE,
    "leibniz-left": IdentityKind.LEIBNIZ_LEFT,
    "leibniz-right": IdentityKind.LEIBNIZ_RIGHT,
}


def _parse_field_flag(text: str) -> Field:
    text = text.strip()
    if text.upper() == "Q":
        return Field.rationals()
    if text.upper().startswith("GF:"):
        return Field.gf(int(text.split(":", 1)[1]))
    raise InputError(f"cannot parse field {text!r}; use Q or GF:p")


def _load(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return parse_algebra(fh.read())
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc


def _load_plain_algebra(path: str) -> Algebra:
    obj = _load(path)
    if isinstance(obj, Dialgebra):
        raise InputError("this command needs a single-product algebra document")
    return obj


# ---------------------------------------------------------------------------
# theorem sweep
# ---------------------------------------------------------------------------


@dataclass
class SweepRow:
    name: str
    dim: int
    ok: bool
    detail: dict


def _sweep_members(field: Field, max_n: int, lambdas):
    members = [(BlockDescriptor("j", 1), "j:1")]
    for n in range(2, max_n + 1):
        members.append((BlockDescriptor("j", n), f"j:{n}"))
    for n in range(2, max_n + 1):
        members.append((BlockDescriptor("gamma", n), f"gamma:{n}"))
    one = field.one
    for lam in lambdas:
        lam = field.coerce(lam)
        if lam and lam != one:
            members.append((BlockDescriptor("h", 1, lam), f"h2:{field.format(lam)}"))
    for n in range(2, max_n // 2 + 1):
        bad = one if (n + 1) % 2 == 0 else -one
        for lam in lambdas:
            lam = field.coerce(lam)
            if lam and lam != bad:
                members.append(
                    (BlockDescriptor("h", n, lam), f"h2n:{n}:{field.format(lam)}")
                )
    return members


def _leibniz_expected(d: BlockDescriptor | None, field: Field, dim: int) -> int:
    base = (dim - 1) ** 2 - 1
    if d is None:
        return base
    if d.kind == "j" and d.n == 1:
        return 1
    if d.kind == "j" and d.n == 2:
        return 4
    if d.kind == "h" and d.n == 1 and field.coerce(d.lam) == -field.one:
        return 5
    return base


def verify_theorems(max_n: int, lambdas, field: Field | None = None, pair_dim_cap: int = 11):
    """Check multiplier dimensions, capability, and classification round trips.

    Runs every catalog member with index up to `max_n` (H2n families up to
    max_n // 2, so dimensions stay comparable) plus every pairwise central
    sum of total dimension at most `pair_dim_cap`.  Returns a list of
    `SweepRow`; a row fails when any of its checked quantities disagrees
    with the predicted value, and errors are reported per row instead of
    aborting the sweep.
    """
    if max_n < 2:
        raise InputError("verify-theorems needs max_n >= 2")
    field = field or Field.rationals()
    members = _sweep_members(field, max_n, lambdas)
    instances = []
    for d, name in members:
        instances.append((name, make_canonical(d, field), d))
    for i, (d1, n1) in enumerate(members):
        for d2, n2 in members[i:]:
            if d1.algebra_dim + d2.algebra_dim - 1 <= pair_dim_cap:
                a = make_canonical(d1, field)
                b = make_canonical(d2, field)
                instances.append((f"{n1}+{n2}", central_sum(a, b), None))
    rows = []
    for name, alg, descriptor in instances:
        try:
            rows.append(_sweep_row(name, alg, descriptor, field))
        except Exception as exc:  # row-level containment, never abort the sweep
            rows.append(
                SweepRow(name, alg.dim, False, {"error": f"{type(exc).__name__}: {exc}"})
            )
    return rows


def _sweep_row(name: str, alg: Algebra, descriptor, field: Field) -> SweepRow:
    dim = alg.dim
    is_j1 = descriptor is not None and descriptor.kind == "j" and descriptor.n == 1
    predicted = 1 if is_j1 else (dim - 1) ** 2 - 1
    m_assoc = multiplier_dim(alg, IdentityKind.ASSOCIATIVE)
    m_leib = multiplier_dim(alg, VALIDATED_LEIBNIZ)
    leib_predicted = _leibniz_expected(descriptor, field, dim)
    zs = z_star(alg)  # one cover per row; capability and unicentrality both read it
    capable = zs.dim == 0
    unicentral = zs == center(alg)
    decomposition = classify(alg)
    if descriptor is not None:
        classify_ok = decomposition == BlockDecomposition(field, [descriptor])
    else:
        # sums: the decomposition must be the multiset union of the part names
        from .catalog import parse_descriptor

        parts = [parse_descriptor(p, field) for p in name.split("+")]
        classify_ok = decomposition == BlockDecomposition(field, parts)
    ok = (
        m_assoc == predicted
        and m_leib == leib_predicted
        and capable == is_j1
        and unicentral == (not is_j1)
        and classify_ok
    )
    return SweepRow(
        name,
        dim,
        ok,
        {
            "multiplier_assoc": m_assoc,
            "predicted": predicted,
            "multiplier_leibniz": m_leib,
            "predicted_leibniz": leib_predicted,
            "capable": capable,
            "unicentral": unicentral,
            "classify": decomposition.text(),
            "classify_ok": classify_ok,
        },
    )


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------


def _cmd_make(args) -> dict:
    field = _parse_field_flag(args.field)
    algebra = make_from_text(args.descriptor, field)
    return algebra_to_doc(algebra)


def _cmd_check(args) -> dict:
    obj = _load(args.file)
    if args.identity == "diassoc":
        if not isinstance(obj, Dialgebra):
            raise InputError("diassoc check needs a dialgebra document")
        violation = diassociativity_violation(obj)
        return {
            "identity": "diassoc",
            "holds": violation is None,
            "axiom": None if violation is None else violation[0],
            "triple": None if violation is None else list(violation[1]),
        }
    if isinstance(obj, Dialgebra):
        raise InputError("single-product identity check needs an algebra document")
    kind = _IDENTITY_FLAGS[args.identity]
    violation = identity_violation(obj, kind)
    return {
        "identity": args.identity,
        "holds": violation is None,
        "triple": None if violation is None else list(violation),
    }


def _cmd_invariants(args) -> dict:
    alg = _load_plain_algebra(args.file)
    return {
        "dim": alg.dim,
        "center_dim": center(alg).dim,
        "derived_dim": derived_ideal(alg).dim,
        "extra_special": is_extra_special(alg),
    }


def _cmd_multiplier(args) -> dict:
    alg = _load_plain_algebra(args.file)
    theory = IdentityKind.ASSOCIATIVE if args.theory == "assoc" else VALIDATED_LEIBNIZ
    return {"theory": args.theory, "multiplier_dim": multiplier_dim(alg, theory)}


def _cmd_cover(args) -> dict:
    alg = _load_plain_algebra(args.file)
    ext = cover(alg)
    return {
        "total": algebra_to_doc(ext.total),
        "base_dim": ext.base_dim,
        "kernel_dim": ext.kernel.dim,
    }


def _cmd_zstar(args) -> dict:
    alg = _load_plain_algebra(args.file)
    sub = z_star(alg)
    return {
        "dim": sub.dim,
        "basis": [[alg.field.format(x) for x in v] for v in sub.basis],
    }


def _cmd_capable(args) -> dict:
    return {"capable": is_capable(_load_plain_algebra(args.file))}


def _cmd_unicentral(args) -> dict:
    return {"unicentral": is_unicentral(_load_plain_algebra(args.file))}


def _cmd_classify(args) -> dict:
    alg = _load_plain_algebra(args.file)
    decomposition = classify(alg)
    return {
        "blocks": decomposition.text(),
        "block_list": [d.text(alg.field) for d in decomposition.blocks],
    }


def _cmd_verify(args) -> tuple[dict, int]:
    field = _parse_field_flag(args.field)
    lambdas = []
    for part in args.lambdas.split(","):
        part = part.strip()
        if part:
            lambdas.append(field.parse(part))
    rows = verify_theorems(args.max_n, lambdas, field, args.dim_cap)
    fails = [r for r in rows if not r.ok]
    payload = {
        "rows": [
            {"name": r.name, "dim": r.dim, "status": "PASS" if r.ok else "FAIL", **r.detail}
            for r in rows
        ],
        "fail_count": len(fails),
        "pass": not fails,
    }
    return payload, (1 if fails else 0)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="extraspecial",
        description="Extra special algebra toolkit: canonical families, invariants, "
        "Schur multipliers, covers, capability, and classification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("make", help="build a canonical algebra or central sum")
    p.add_argument("descriptor", help="e.g. j:2, gamma:3, h2:3/2, h2n:2:5, j:2+h2:3")
    p.add_argument("--field", default="Q", help="Q (default) or GF:p")

    p = sub.add_parser("check", help="identity check with first violating triple")
    p.add_argument("file")
    p.add_argument(
        "--identity",
        required=True,
        choices=["assoc", "leibniz-left", "leibniz-right", "diassoc"],
    )

    p = sub.add_parser("invariants", help="center/derived dimensions, extra special flag")
    p.add_argument("file")

    p = sub.add_parser("multiplier", help="Schur multiplier dimension")
    p.add_argument("file")
    p.add_argument("--theory", default="assoc", choices=["assoc", "leibniz"])

    p = sub.add_parser("cover", help="maximal stem extension")
    p.add_argument("file")

    p = sub.add_parser("zstar", help="projected center of the cover")
    p.add_argument("file")

    p = sub.add_parser("capable", help="is the algebra a central quotient K/Z(K)?")
    p.add_argument("file")

    p = sub.add_parser("unicentral", help="does Z* equal the center?")
    p.add_argument("file")

    p = sub.add_parser("classify", help="canonical central-sum block decomposition")
    p.add_argument("file")

    p = sub.add_parser("verify-theorems", help="multiplier/capability/classification sweep")
    p.add_argument("--max-n", type=int, required=True, dest="max_n")
    p.add_argument("--lambdas", default="2,3,-1,5")
    p.add_argument("--field", default="Q")
    p.add_argument("--dim-cap", type=int, default=11, dest="dim_cap")

    return parser


_COMMANDS = {
    "make": _cmd_make,
    "check": _cmd_check,
    "invariants": _cmd_invariants,
    "multiplier": _cmd_multiplier,
    "cover": _cmd_cover,
    "zstar": _cmd_zstar,
    "capable": _cmd_capable,
    "unicentral": _cmd_unicentral,
    "classify": _cmd_classify,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "verify-theorems":
            payload, code = _cmd_verify(args)
        else:
            payload, code = _COMMANDS[args.command](args), 0
    except InputError as exc:
        print(json.dumps({"error": str(exc), "kind": type(exc).__name__}))
        return 2
    except Unsupported as exc:
        print(json.dumps({"error": str(exc), "kind": type(exc).__name__}))
        return 3
    except InternalCheckFailure as exc:
        print(json.dumps({"error": str(exc), "kind": type(exc).__name__}))
        return 4
    print(json.dumps(payload, indent=2))
    return code


if __name__ == "__main__":
    sys.exit(main())
