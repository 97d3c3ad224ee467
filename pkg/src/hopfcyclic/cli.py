"""Command-line front end.

Subcommands: validate, galois, homology, isocheck, tor, spectral,
classical.  Exit code 0 means every check passed, 1 means a mathematical
check failed (the report carries a witness), 2 means the input could not
be parsed.  Built-in algebras (kC2, kC3, kC4, kS3, OS3, OC2, H4) and
pairs (kS3/kC2, kS3/kC3, H4/B, OS3/OC2, .../k) can be named in place of
files, so the whole acceptance surface runs without external data.
"""

from __future__ import annotations

import argparse
import os
import sys
import time

from . import presets
from .classical import (
    class_function_dim_check,
    direct_picture_check,
    dual_picture_check,
    extended_quotient_check,
    extended_quotient_transport_check,
    frobenius_reciprocity_check,
    induce_class_function,
    stabilizer_coincidence_check,
)
from .cyclic import (
    check_identities,
    cyclic_homology,
    hochschild_homology,
    relative_cyclic,
)
from .groups import (
    ClassFunction,
    GroupError,
    builtin_group,
    coset_action,
    subgroup_as_group,
)
from .hopf import (
    GaloisSetup,
    HopfError,
    NotGalois,
    NotHopfIdeal,
    canonical_map_n,
    cocanonical_map,
    coinvariants,
    galois_criterion,
    setup_from_ideal,
    setup_from_subalgebra,
    translation_map,
    trivial_subalgebra,
    takeuchi_subalgebra_to_quotient,
)
from .iso import (
    check_cyclic_map,
    comodule_algebra_transform,
    module_coalgebra_transform,
    normal_quotient_comparison,
)
from .linalg import NotWellDefined, PrimeField, QQ, span_contains
from .loaders import InputError, load_group_file, load_hopf_file, load_ideal_file
from .report import Report
from .sayd import ad_module, coad_module, validate_sayd
from .specseq import (
    ad_left_module,
    five_term_check,
    hochschild_tor_check,
    right_module_k,
    theorem_check,
    tor_dims,
)


def _parse_field(text):
    if text is None or text.lower() == "q":
        return QQ
    if text.lower().startswith("fp:"):
        return PrimeField(int(text.split(":", 1)[1]))
    raise InputError(f"unknown field {text!r} (use q or fp:<prime>)")


def _resolve_hopf(arg, field):
    if arg in presets.HOPF_NAMES or arg == "sweedler":
        return presets.builtin_hopf(arg, field)
    if os.path.exists(arg):
        return load_hopf_file(arg, field)
    raise InputError(f"no built-in Hopf algebra or file named {arg!r}")


def _resolve_setup(args, field):
    name = args.hopf
    if "/" in name and not os.path.exists(name):
        return presets.builtin_setup(name, field)
    h = _resolve_hopf(name, field)
    sub = getattr(args, "subalgebra", None)
    ideal = getattr(args, "ideal", None)
    if sub and ideal:
        raise InputError("give either --subalgebra or --ideal, not both")
    if sub:
        if os.path.exists(sub):
            cols = load_ideal_file(sub, h)
        else:
            raise InputError(f"subalgebra file {sub!r} not found")
        return setup_from_subalgebra(h, cols, f"{name}/file")
    if ideal:
        cols = load_ideal_file(ideal, h)
        return setup_from_ideal(h, cols, f"{name}/ideal")
    b = trivial_subalgebra(h)
    return GaloisSetup(h, b, takeuchi_subalgebra_to_quotient(h, b), f"{name}/k")


def _clamp_degree(n):
    if n is None:
        return 3
    if not 0 <= n <= 5:
        raise InputError("max degree must be between 0 and 5")
    return n


# ---------------------------------------------------------------------------
# subcommands


def cmd_validate(args, field):
    rep = Report("validate", {"hopf": args.hopf, "field": field.name})
    h = _resolve_hopf(args.hopf, field)
    rep.params["dim"] = h.dim
    rep.add_validation("axiom: ", h.validate())
    ad = None
    try:
        ad = ad_module(h)
        rep.add_check("adjoint coefficients SAYD", True)
    except HopfError as exc:
        rep.add_check("adjoint coefficients SAYD", False, str(exc))
    if ad is not None:
        coad = coad_module(h)
        rep.add_check("coadjoint coefficients SAYD", validate_sayd(coad).ok)
    return rep


def cmd_galois(args, field):
    rep = Report("galois", {"hopf": args.hopf, "field": field.name})
    setup = _resolve_setup(args, field)
    h, b, c = setup.hopf, setup.subalgebra, setup.quotient
    rep.params.update({"setup": setup.name, "dim_B": b.dim, "dim_C": c.dim,
                       "dim_ideal": c.ideal.dim})
    crit = galois_criterion(h, b, c)
    rep.add_check("ideal equals B+H (Galois criterion)", crit)
    try:
        can, can_inv, dom = canonical_map_n(h, b, c, 1)
        rep.add_check("canonical map bijective in degree 1", True)
        rep.tables["canonical_map"] = {"dim": can.rows}
    except NotGalois as exc:
        rep.add_check("canonical map bijective in degree 1", False, str(exc))
        return rep
    back = coinvariants(h, c)
    round_trip = (
        back.dim == b.dim
        and span_contains(back.space.section, b.space.section)
        and span_contains(b.space.section, back.space.section)
    )
    rep.add_check("coinvariants recover the subalgebra", round_trip)
    translation_map(h, b, c)
    rep.add_check("translation map independent of lift", True)
    _, cot, bij = cocanonical_map(h, b, c)
    rep.add_check("cocanonical map bijective", bij)
    rep.tables["cotensor_square_dim"] = {"dim": cot.dim}
    rep.add_skip("faithful flatness", "unverified (freeness checks only)")
    return rep


def cmd_homology(args, field):
    n = _clamp_degree(args.max_degree)
    rep = Report("homology", {"hopf": args.hopf, "theory": args.theory,
                              "max_degree": n, "field": field.name})
    setup = _resolve_setup(args, field)
    rep.params["setup"] = setup.name
    if args.theory == "hh":
        cm = relative_cyclic(setup.hopf, setup.subalgebra, n + 1)
        dims = hochschild_homology(cm, n)
    else:
        cm = relative_cyclic(setup.hopf, setup.subalgebra, min(n + 2, 6))
        dims = cyclic_homology(cm, n)
    rep.add_check("cyclic module identities", check_identities(cm).ok)
    rep.tables["dimensions"] = {f"degree {k}": dims[k] for k in range(len(dims))}
    return rep


def cmd_tor(args, field):
    n = _clamp_degree(args.max_degree)
    rep = Report("tor", {"hopf": args.hopf, "max_degree": n, "field": field.name})
    h = _resolve_hopf(args.hopf, field)
    dims = tor_dims(h, right_module_k(h), ad_left_module(h), n)
    rep.tables["tor_k_ad"] = {f"degree {k}": dims[k] for k in range(len(dims))}
    rep.add_check("computed", True)
    return rep


def cmd_isocheck(args, field):
    n = _clamp_degree(args.max_degree)
    rep = Report("isocheck", {"hopf": args.hopf, "theorem": args.theorem,
                              "max_degree": n, "field": field.name})
    setup = _resolve_setup(args, field)
    rep.params["setup"] = setup.name
    if args.theorem == "3.4":
        psi, phi = module_coalgebra_transform(setup, n)
        rep.add_check("mutually inverse", True)  # asserted by construction
        rep.add_validation("psi ", check_cyclic_map(psi))
        rep.add_validation("phi ", check_cyclic_map(phi))
        rep.tables["dims"] = {f"degree {k}": psi.source.spaces[k].dim for k in range(n + 1)}
    elif args.theorem == "3.7":
        gamma, gamma_inv = comodule_algebra_transform(setup, n)
        rep.add_check("mutually inverse", True)
        rep.add_validation("gamma ", check_cyclic_map(gamma))
        rep.add_validation("gamma_inv ", check_cyclic_map(gamma_inv))
        rep.tables["dims"] = {f"degree {k}": gamma.source.spaces[k].dim for k in range(n + 1)}
    else:  # jara-stefan
        try:
            comparison, ident_maps, rel_spaces = normal_quotient_comparison(setup, n)
        except NotHopfIdeal as exc:
            rep.add_check("ideal is a Hopf ideal", False, str(exc))
            return rep
        rep.add_check("ideal is a Hopf ideal", True)
        rep.add_check("comparison matches the adjoint-coefficient transform", True)
        rep.tables["dims"] = {f"degree {k}": rel_spaces[k].dim for k in range(n + 1)}
    return rep


def cmd_spectral(args, field):
    rep = Report("spectral", {"hopf": args.hopf, "field": field.name})
    setup = _resolve_setup(args, field)
    rep.params["setup"] = setup.name
    cm = relative_cyclic(setup.hopf, setup.subalgebra, 3)
    hh = hochschild_homology(cm)
    srep = theorem_check(setup, hh, n_upto=2)
    for c in srep.checks:
        rep.add_check(c.name, c.ok, c.witness)
    rep.tables.update(srep.tables)
    frep = five_term_check(setup)
    for c in frep.checks:
        rep.add_check("five-term: " + c.name, c.ok, c.witness)
    rep.tables["five_term"] = frep.tables["dims"]
    crep = hochschild_tor_check(setup.hopf,
                                hochschild_homology(relative_cyclic(
                                    setup.hopf, trivial_subalgebra(setup.hopf), 4)),
                                3)
    for c in crep.checks:
        rep.add_check("absolute: " + c.name, c.ok, c.witness)
    return rep


def _resolve_group(name):
    try:
        return builtin_group(name)
    except GroupError:
        if os.path.exists(name):
            return load_group_file(name)
        raise InputError(f"no built-in group or file named {name!r}") from None


def _resolve_subgroup(g, text):
    if text in (None, "", "all"):
        return sorted(g.elements())
    gens = []
    for token in text.replace(",", " ").split():
        if token not in g.names:
            raise InputError(f"unknown group element {token!r}")
        gens.append(g.index(token))
    return g.subgroup_closure(gens)


def _resolve_chi(g, sub, text):
    subgrp = subgroup_as_group(g, sub)
    k = len(subgrp.conjugacy_classes())
    if text in (None, "trivial"):
        return ClassFunction(subgrp, [QQ.one] * k)
    if text == "sign":
        vals = []
        for cls in subgrp.conjugacy_classes():
            rep = cls[0]
            order = 1
            acc = rep
            while acc != subgrp.identity:
                acc = subgrp.mul(acc, rep)
                order += 1
            vals.append(QQ.one if order % 2 == 1 else QQ.from_int(-1))
        return ClassFunction(subgrp, vals)
    vals = [QQ.from_str(v) for v in text.split(",")]
    return ClassFunction(subgrp, vals)


def cmd_classical(args, field):
    n = _clamp_degree(args.max_degree)
    rep = Report("classical", {"group": args.group, "op": args.op,
                               "max_degree": n, "seed": args.seed})
    g = _resolve_group(args.group)
    sub = _resolve_subgroup(g, args.subgroup)
    rep.params["subgroup_order"] = len(sub)
    if field.name != "Q" and g.order % field.p == 0:
        raise InputError("field characteristic divides the group order")
    ops = [args.op] if args.op != "all" else [
        "direct", "dual", "stabilizers", "extended", "frobenius"]
    for op in ops:
        if op == "direct":
            rep.add_validation("direct ", direct_picture_check(g, sub, min(n, 3)))
        elif op == "dual":
            rep.add_validation("dual ", dual_picture_check(g, sub, min(n, 2)))
        elif op == "stabilizers":
            exhaustive = min(n, 1)
            rep.add_validation(
                "stabilizers ",
                stabilizer_coincidence_check(g, sub, exhaustive))
            if n >= 2:
                rep.add_validation(
                    "stabilizers sampled ",
                    stabilizer_coincidence_check(g, sub, 2, sample=40, seed=args.seed))
        elif op == "extended":
            gset = coset_action(g, sub)
            rep.add_validation("extended ", extended_quotient_check(g, gset, min(n, 1)))
            rep.add_validation(
                "transport ", extended_quotient_transport_check(g, sub, min(n, 1)))
        elif op == "frobenius":
            chi = _resolve_chi(g, sub, args.chi)
            induced = induce_class_function(g, sub, chi)
            rep.tables["induced_character"] = {
                f"class of {g.names[cls[0]]}": QQ.to_str(induced.values[k])
                for k, cls in enumerate(g.conjugacy_classes())
            }
            rep.add_check("three induction routes agree", True)
            try:
                rep.add_validation("reciprocity ", frobenius_reciprocity_check(g, sub, chi))
            except GroupError as exc:
                rep.add_skip("reciprocity", str(exc))
            rep.add_validation("class functions ", class_function_dim_check(g))
    return rep


# ---------------------------------------------------------------------------
# argument parsing and dispatch


def build_parser():
    parser = argparse.ArgumentParser(
        prog="hopfcyclic",
        description="exact cyclic-homology computations for Hopf algebra quotients",
    )
    parser.add_argument("--format", choices=("table", "json"), default="table")
    parser.add_argument("--field", default="q", help="q or fp:<prime>")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--timing", action="store_true",
                        help="include wall-clock time in the report")
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("validate", help="check every Hopf axiom")
    p.add_argument("hopf")

    p = subs.add_parser("galois", help="Galois criterion and canonical maps")
    p.add_argument("hopf")
    p.add_argument("--ideal")
    p.add_argument("--subalgebra")

    p = subs.add_parser("homology", help="relative Hochschild or cyclic dimensions")
    p.add_argument("hopf")
    p.add_argument("--ideal")
    p.add_argument("--subalgebra")
    p.add_argument("--theory", choices=("hh", "hc"), default="hh")
    p.add_argument("--max-degree", type=int, default=2)

    p = subs.add_parser("isocheck", help="verify a transform family degreewise")
    p.add_argument("hopf")
    p.add_argument("--ideal")
    p.add_argument("--subalgebra")
    p.add_argument("--theorem", choices=("3.4", "3.7", "jara-stefan"), required=True,
                   help="module-coalgebra transform, comodule-algebra transform, "
                        "or the normal-quotient comparison")
    p.add_argument("--max-degree", type=int, default=2)

    p = subs.add_parser("tor", help="Tor over H of k against the adjoint coefficients")
    p.add_argument("hopf")
    p.add_argument("--max-degree", type=int, default=3)

    p = subs.add_parser("spectral", help="double-complex and five-term reports")
    p.add_argument("hopf")
    p.add_argument("--ideal")
    p.add_argument("--subalgebra")

    p = subs.add_parser("classical", help="finite-group picture checks")
    p.add_argument("--group", required=True)
    p.add_argument("--subgroup", default="all")
    p.add_argument("--op", choices=("direct", "dual", "stabilizers", "extended",
                                    "frobenius", "all"), default="all")
    p.add_argument("--chi", default="trivial")
    p.add_argument("--max-degree", type=int, default=2)
    return parser


COMMANDS = {
    "validate": cmd_validate,
    "galois": cmd_galois,
    "homology": cmd_homology,
    "isocheck": cmd_isocheck,
    "tor": cmd_tor,
    "spectral": cmd_spectral,
    "classical": cmd_classical,
}


def run(argv):
    """Parse, execute, and render; returns (exit_code, rendered_report)."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return (2 if exc.code not in (0, None) else 0), ""
    start = time.monotonic()
    try:
        field = _parse_field(args.field)
        report = COMMANDS[args.command](args, field)
    except (InputError, FileNotFoundError, GroupError) as exc:
        report = Report(args.command, error=str(exc))
    except (HopfError, NotWellDefined) as exc:
        report = Report(args.command)
        report.add_check("construction", False, str(exc))
    elapsed = time.monotonic() - start
    timing = round(elapsed, 3) if args.timing else None
    text = report.to_json(timing) if args.format == "json" else report.to_table(timing)
    return report.exit_code, text


def main(argv=None):
    code, text = run(sys.argv[1:] if argv is None else argv)
    sys.stdout.write(text)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
