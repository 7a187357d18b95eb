"""Command line interface: `twistinv <command> --group ... [--sigma ...] [--rep ...]`.

Exit codes: 0 success, 1 mathematical consistency failure, 2 input error.
"""

import argparse
import json
import os
import shlex
import sys
from dataclasses import dataclass

from .filtration import gr_polynomial, nu_h, twisted_graded_dims
from .invariants import ConsistencyError, determinant_check, pairing_matrix
from .laurent import GroupAlgebraElement, frac_str
from .repn import (DimensionCapExceeded, build_irreducible, freudenthal_character, from_bundle,
                   r_V, to_bundle, weyl_character, weyl_dim, zeta)
from .rootdata import build_root_datum
from .twist import format_cycles, fold, parse_cycles, sigma_orbits, validate_automorphism

COMMANDS = ("fold", "mult", "filpoly", "zeta", "nuh", "pairing", "chcheck")
NEEDS_REP = {"mult", "filpoly", "zeta", "pairing", "chcheck"}
NEEDS_WEIGHT = {"filpoly", "nuh"}


class InputError(ValueError):
    pass


def _int_list(text):
    try:
        return tuple(int(x) for x in text.split(",")) if text.strip() else ()
    except ValueError:
        raise InputError(f"expected comma separated integers, got {text!r}") from None


@dataclass(frozen=True)
class JobSpec:
    command: str
    group: str
    sigma: str = "()"
    rep: tuple = None
    weight: tuple = None
    nu0: tuple = None
    output: str = None
    cache_dir: str = None
    fmt: str = "json"

    def canonical(self):
        parts = [self.command, "--group", self.group]
        if self.sigma != "()":
            parts += ["--sigma", self.sigma]
        if self.rep is not None:
            parts += ["--rep", ",".join(map(str, self.rep))]
        if self.weight is not None:
            parts += ["--weight", ",".join(map(str, self.weight))]
        if self.nu0 is not None:
            parts += ["--nu0", ",".join(map(str, self.nu0))]
        if self.output:
            parts += ["--output", self.output]
        if self.cache_dir:
            parts += ["--cache-dir", self.cache_dir]
        if self.fmt != "json":
            parts += ["--format", self.fmt]
        return shlex.join(parts)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InputError(message)


def _parser():
    p = _Parser(prog="twistinv", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name in COMMANDS:
        s = sub.add_parser(name)
        s.add_argument("--group", required=True)
        s.add_argument("--sigma", default="()")
        s.add_argument("--rep")
        s.add_argument("--weight")
        s.add_argument("--nu0")
        s.add_argument("--output")
        s.add_argument("--cache-dir")
        s.add_argument("--format", choices=("json", "text"), default="json")
    return p


_VALUE_FLAGS = {"--rep", "--weight", "--nu0"}


def _glue_negative_values(argv):
    """Turn `--weight -1,0,1` into `--weight=-1,0,1` so argparse does not see a flag."""
    out, k = [], 0
    while k < len(argv):
        tok = argv[k]
        if tok in _VALUE_FLAGS and k + 1 < len(argv) and argv[k + 1][:1] == "-" \
                and argv[k + 1][1:2].isdigit():
            out.append(f"{tok}={argv[k + 1]}")
            k += 2
            continue
        out.append(tok)
        k += 1
    return out


def parse_args(argv):
    """Strict parse into a validated JobSpec; raises InputError."""
    ns = _parser().parse_args(_glue_negative_values(list(argv)))
    try:
        datum = build_root_datum(ns.group)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    try:
        sigma = validate_automorphism(datum, parse_cycles(ns.sigma, datum.rank))
    except ValueError as exc:
        raise InputError(str(exc)) from None
    rep = _int_list(ns.rep) if ns.rep is not None else None
    weight = _int_list(ns.weight) if ns.weight is not None else None
    nu0 = _int_list(ns.nu0) if ns.nu0 is not None else None
    for label, vec in (("--rep", rep), ("--weight", weight), ("--nu0", nu0)):
        if vec is not None and len(vec) != datum.rank:
            raise InputError(f"{label} needs {datum.rank} coordinates")
    if ns.command in NEEDS_REP and rep is None:
        raise InputError(f"{ns.command} requires --rep")
    if ns.command in NEEDS_WEIGHT and weight is None:
        raise InputError(f"{ns.command} requires --weight")
    if rep is not None and any(x < 0 for x in rep):
        raise InputError("--rep must be dominant")
    return JobSpec(ns.command, datum.name, format_cycles(sigma.perm), rep, weight, nu0,
                   ns.output, ns.cache_dir, ns.format)


# -- helpers ---------------------------------------------------------------------

def _poly(p):
    return p.to_json()


def load_module(datum, lam, cache_dir=None):
    if not cache_dir:
        return build_irreducible(datum, lam)
    name = f"{datum.name}_" + "_".join(map(str, lam)) + ".json"
    path = os.path.join(cache_dir, name)
    if os.path.exists(path):
        with open(path) as fh:
            return from_bundle(json.load(fh))
    module = build_irreducible(datum, lam)
    os.makedirs(cache_dir, exist_ok=True)
    with open(path, "w") as fh:
        json.dump(to_bundle(module), fh, sort_keys=True)
    return module


def _orbit_json(o):
    return {"roots": [list(r) for r in o.roots], "type": o.orbit_type,
            "alpha_O": list(o.alpha_O), "divisor_sign": o.divisor_sign}


# -- commands --------------------------------------------------------------------

def _cmd_fold(job, datum, sigma):
    f = fold(sigma)
    return {
        "group": datum.name,
        "sigma": format_cycles(sigma.perm),
        "order": sigma.order,
        "folded_type": f.folded_type,
        "folded_cartan": [list(r) for r in f.cartan],
        "simple_folded_roots": [dict(_orbit_json(o), nodes=[k + 1 for k in no])
                                for o, no in zip(f.simple_folded_roots, f.node_orbits)],
        "w0_generators": [[k + 1 for k in w] for w in f.w0_generators],
        "orbits": [_orbit_json(o) for o in sigma_orbits(sigma)],
    }, True


def _cmd_mult(job, datum, sigma):
    module = load_module(datum, job.rep, job.cache_dir)
    built = module.character()
    fr = freudenthal_character(datum, job.rep)
    wc = weyl_character(datum, job.rep)
    agree = (built == fr and GroupAlgebraElement(fr, datum.rank) == wc
             and module.dim == weyl_dim(datum, job.rep))
    out = {"dim": module.dim, "weyl_dim": weyl_dim(datum, job.rep), "oracles_agree": agree,
           "character": [{"weight": list(w), "mult": m} for w, m in sorted(built.items(), reverse=True)]}
    if job.weight is not None:
        out["weight"] = list(job.weight)
        out["mult"] = module.mult(job.weight)
    return out, agree


def _cmd_filpoly(job, datum, sigma):
    module = load_module(datum, job.rep, job.cache_dir)
    poly = gr_polynomial(module, job.weight)
    total = sum(poly.values())
    ok = total == module.mult(job.weight)
    return {"weight": list(job.weight), "mult": module.mult(job.weight), "P_at_one": total,
            "P": [{"lambda": list(l), "coeff": c} for l, c in sorted(poly.items())]}, ok


def _cmd_zeta(job, datum, sigma):
    module = load_module(datum, job.rep, job.cache_dir)
    pos = set(datum.positive_roots)
    orbits = []
    for o in sigma_orbits(sigma):
        entry = _orbit_json(o)
        entry["positive"] = o.roots[0] in pos
        entry["zeta"] = zeta(module, sigma, o)
        orbits.append(entry)
    return {"r_V": r_V(module, sigma), "orbits": orbits}, True


def _cmd_nuh(job, datum, sigma):
    nu0 = job.nu0 or datum.zero
    try:
        nu = nu_h(sigma, nu0, job.weight)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    out = {"xi": list(job.weight), "nu0": list(nu0), "nu_h": list(nu)}
    if job.rep is not None:
        module = load_module(datum, job.rep, job.cache_dir)
        dims = twisted_graded_dims(module, sigma, job.weight, nu0)
        out["twisted_graded_dims"] = [{"nu": list(k), "dim": v} for k, v in sorted(dims.items())]
        out["mult"] = module.mult(job.weight)
        return out, sum(dims.values()) == module.mult(job.weight)
    return out, True


def _cmd_pairing(job, datum, sigma):
    module = load_module(datum, job.rep, job.cache_dir)
    pm = pairing_matrix(sigma, module)
    report = determinant_check(sigma, module, pm)
    return {
        "size": pm.size,
        "r_V": report.r_V,
        "entries": [[_poly(x) for x in row] for row in pm.entries],
        "det": _poly(pm.determinant),
        "predicted": _poly(pm.predicted),
        "unit_ratio": frac_str(report.unit) if report.matches else None,
    }, report.matches and pm.size == report.r_V


def _cmd_chcheck(job, datum, sigma):
    from .chevalley import cayley_hamilton_check, char_polynomial, chevalley_w0_invariance

    module = load_module(datum, job.rep, job.cache_dir)
    poly = char_polynomial(module, sigma)
    ch = cayley_hamilton_check(module, sigma)
    w0 = all(chevalley_w0_invariance(sigma, c) for c in poly.coefficients)
    return {"cayley_hamilton": ch, "char_poly": [_poly(c) for c in poly.coefficients],
            "w0_invariant": w0}, ch and w0


_DISPATCH = {"fold": _cmd_fold, "mult": _cmd_mult, "filpoly": _cmd_filpoly, "zeta": _cmd_zeta,
             "nuh": _cmd_nuh, "pairing": _cmd_pairing, "chcheck": _cmd_chcheck}


def run(job):
    """Execute a JobSpec; returns (document, consistent)."""
    datum = build_root_datum(job.group)
    sigma = validate_automorphism(datum, parse_cycles(job.sigma, datum.rank))
    return _DISPATCH[job.command](job, datum, sigma)


def render_text(doc, indent=0):
    lines = []
    pad = "  " * indent
    for key in sorted(doc):
        val = doc[key]
        if isinstance(val, dict):
            lines.append(f"{pad}{key}:")
            lines.append(render_text(val, indent + 1))
        else:
            lines.append(f"{pad}{key}: {json.dumps(val, sort_keys=True)}")
    return "\n".join(lines)


def main(argv=None):
    argv = sys.argv[1:] if argv is None else argv
    try:
        job = parse_args(argv)
        doc, ok = run(job)
    except InputError as exc:
        print(f"twistinv: error: {exc}", file=sys.stderr)
        return 2
    except DimensionCapExceeded as exc:
        print(f"twistinv: error: {exc}", file=sys.stderr)
        return 2
    except (ConsistencyError, AssertionError) as exc:
        print(f"twistinv: consistency failure: {exc}", file=sys.stderr)
        return 1
    text = json.dumps(doc, sort_keys=True) if job.fmt == "json" else render_text(doc)
    if job.output:
        with open(job.output, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return 0 if ok else 1
