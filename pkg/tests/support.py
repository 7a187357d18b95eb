"""Shared helpers: weight sweeps and the three-way multiplicity comparison."""

from twistinv.repn import build_irreducible, freudenthal_character, weyl_character, weyl_dim
from twistinv.rootdata import build_root_datum
from twistinv.twist import parse_cycles, validate_automorphism

SWEEP_GROUPS = ("A1", "A2", "A3", "B2", "G2")


def automorphism(group, cycles):
    d = build_root_datum(group)
    return validate_automorphism(d, parse_cycles(cycles, d.rank))


def dominant_weights_up_to(datum, cap):
    """Dominant lam with weyl_dim(lam) <= cap; the dimension grows in every coordinate."""
    out, seen, stack = [], set(), [datum.zero]
    while stack:
        lam = stack.pop()
        if lam in seen:
            continue
        seen.add(lam)
        if weyl_dim(datum, lam) > cap:
            continue
        out.append(lam)
        for i in range(datum.rank):
            stack.append(tuple(x + (k == i) for k, x in enumerate(lam)))
    return sorted(out)


def oracle_triangle(datum, lam):
    """Multiplicities from the construction, Freudenthal and the Weyl quotient; all must agree."""
    built = build_irreducible(datum, lam).character()
    freud = freudenthal_character(datum, lam)
    weyl = {w: int(c) for w, c in weyl_character(datum, lam).terms.items()}
    return built == freud == weyl
