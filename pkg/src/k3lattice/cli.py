"""Command-line interface.

Exit codes: 0 all claims pass, 1 some claim fails, 2 input error,
3 inconclusive (bound-limited) without failures.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .density import K3Input, check_density_hypotheses
from .hilbert import beauville_extend, debarre_involution, sigma_pairing, star_square_pairing
from .k3 import picard_lefschetz_reflect
from .latfile import dump_lattice, format_vector, lattice_to_dict, load_lattice, parse_vector
from .lattice import LatticeInputError, discriminant, hodge_index_valid, pair, signature
from .quadrep import SearchStatus, isotropic_search, represent
from .report import ClaimReport, exit_code
from .suite import DEFAULT_SEED, verify_paper_claims


def _need_lattice(args):
    if not args.lattice:
        raise LatticeInputError("--lattice is required for this subcommand")
    return load_lattice(args.lattice)


def _search_report(args, name, verdict):
    rep = ClaimReport(name, None, args.bound)
    rep.add(name, "bounded box search", verdict.status.value, SearchStatus.FOUND.value,
            detail=str(verdict), bound_limited=True)
    text = verdict.status.value
    if verdict.found:
        text += f" {list(verdict.witness)}"
    return text, rep, {"status": verdict.status.value,
                       "witness": list(verdict.witness) if verdict.found else None,
                       "bound": verdict.bound_used}


def cmd_lattice_info(args):
    L = _need_lattice(args)
    sig = signature(L)
    info = {
        "rank": L.rank,
        "labels": list(L.names),
        "signature": [sig.n_plus, sig.n_minus, sig.n_zero],
        "discriminant": discriminant(L),
        "hodge_index_valid": hodge_index_valid(L),
    }
    text = "\n".join(f"{k}: {v}" for k, v in info.items())
    return text, ClaimReport("lattice-info", None, args.bound), info


def cmd_represent(args):
    L = _need_lattice(args)
    return _search_report(args, "represent", represent(L, args.target, args.bound))


def cmd_isotropic(args):
    L = _need_lattice(args)
    return _search_report(args, "isotropic", isotropic_search(L, args.bound))


def cmd_beauville_extend(args):
    B = beauville_extend(_need_lattice(args), args.n)
    return dump_lattice(B.extended).rstrip("\n"), ClaimReport("beauville-extend", None, args.bound), \
        lattice_to_dict(B.extended)


def cmd_involution(args):
    B = beauville_extend(_need_lattice(args), 2)
    names = B.extended.names
    f4 = parse_vector(args.f4, B.base.names)
    x = parse_vector(args.x, names)
    image = debarre_involution(B, f4, x).coords
    return format_vector(image, names), ClaimReport("involution", None, args.bound), \
        {"image": list(image), "expression": format_vector(image, names)}


def cmd_reflect(args):
    L = _need_lattice(args)
    x = parse_vector(args.x, L.names)
    C = parse_vector(args.c, L.names)
    image = picard_lefschetz_reflect(L, x, C)
    return format_vector(image, L.names), ClaimReport("reflect", None, args.bound), \
        {"image": list(image), "expression": format_vector(image, L.names)}


def cmd_intersect(args):
    B = beauville_extend(_need_lattice(args), 2)
    f = parse_vector(args.f, B.base.names)
    g = parse_vector(args.g, B.base.names)
    value = star_square_pairing(B, f, args.m, g)
    return str(value), ClaimReport("intersect", None, args.bound), {"value": value}


def cmd_sigma(args):
    B = beauville_extend(_need_lattice(args), 2)
    f = parse_vector(args.f, B.base.names)
    value = sigma_pairing(B, f, args.m)
    return str(value), ClaimReport("sigma", None, args.bound), {"value": value}


def cmd_density_check(args):
    L = _need_lattice(args)
    f = parse_vector(args.f, L.names)
    g = parse_vector(args.g, L.names)
    rep = check_density_hypotheses(K3Input(L, f, args.n, args.bound), g)
    return rep.to_text().rstrip("\n"), rep, None


def cmd_verify_paper(args):
    seed = DEFAULT_SEED if args.seed is None else args.seed
    rep = verify_paper_claims(args.bound, seed)
    return rep.to_text().rstrip("\n"), rep, None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--lattice", help="lattice file (JSON with rank, gram, labels)")
    common.add_argument("--bound", type=int, default=50, help="max-norm search bound (default 50)")
    common.add_argument("--json", action="store_true", help="print a machine-readable report")
    common.add_argument("--seed", type=int, default=None, help=f"seed for random suites (default {DEFAULT_SEED})")

    parser = argparse.ArgumentParser(prog="k3lattice", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.set_defaults(func=func)
        return p

    add("lattice-info", cmd_lattice_info, "rank, signature, discriminant, Hodge-index shape")
    add("represent", cmd_represent, "search for a vector of given square").add_argument(
        "--target", type=int, required=True)
    add("isotropic", cmd_isotropic, "search for a primitive isotropic vector")
    add("beauville-extend", cmd_beauville_extend, "Beauville lattice of S^[n]").add_argument(
        "--n", type=int, default=2)
    p = add("involution", cmd_involution, "Beauville-Debarre involution on S^[2]")
    p.add_argument("--f4", required=True, help="quartic polarization, e.g. f4")
    p.add_argument("--x", required=True, help="class on S^[2], e.g. 'f8-2*e'")
    p = add("reflect", cmd_reflect, "Picard-Lefschetz reflection in a (-2)-class")
    p.add_argument("--x", required=True)
    p.add_argument("--c", required=True)
    p = add("intersect", cmd_intersect, "(f-me)^2.(g*g) on S^[2]")
    p.add_argument("--f", required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--g", required=True)
    p = add("sigma", cmd_sigma, "(f-me)^2.Sigma on S^[2]")
    p.add_argument("--f", required=True)
    p.add_argument("--m", type=int, required=True)
    p = add("density-check", cmd_density_check, "density-criterion hypotheses for (f, g)")
    p.add_argument("--f", required=True, help="polarization of degree 2m^2")
    p.add_argument("--g", required=True, help="curve class with positive square")
    p.add_argument("--n", type=int, default=2)
    add("verify-paper", cmd_verify_paper, "run the full regression suite of identities")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.bound < 1:
        print("error: --bound must be positive", file=sys.stderr)
        return 2
    try:
        text, rep, result = args.func(args)
    except (LatticeInputError, NotImplementedError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.json:
        doc = rep.to_dict()
        if result is not None:
            doc["result"] = result
        sys.stdout.write(json.dumps(doc, indent=2) + "\n")
    else:
        print(text)
    return exit_code(rep.statuses)


if __name__ == "__main__":
    sys.exit(main())
