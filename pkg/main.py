import argparse
import json
import logging
import sys
from dataclasses import dataclass
from pathlib import Path

from config import (DEFAULT_RANK_PRIME, EXIT_BAD_INPUT, EXIT_INTERNAL, EXIT_MISMATCH, EXIT_OK,
                    GALLERY_ORDER, configure_logging)
from errors import IHXError, UnknownGalleryError
from euler import ichi_c_direct, ichi_c_stratumwise
from gallery import entry, gallery, list_gallery
from hopf import multiplicity, nonsingular_radial_exists, verify_poincare_hopf
from intersection import ih_dims, kunneth_manifold_oracle
from ledger import LedgerManager
from perversity import parse_perversity
from simplicial import homology_dims
from spacefile import dump_space, load_space, load_zeros
from stratified import subdivide, validate_pseudomanifold
import tables

logger = logging.getLogger('main')


@dataclass
class Outcome:
    """What a command prints, in every format, and how it exits"""
    payload: dict
    text: str
    csv: str = None
    exit_code: int = EXIT_OK
    perversity: str = None
    exact: bool = True


@dataclass
class ResolvedSpace:
    space: object
    subdivisions: int
    entry: object = None


def resolve_space(name):
    """A gallery name, or a path to a space document"""
    if name in GALLERY_ORDER:
        found = entry(name)
        return ResolvedSpace(gallery(name), found.subdivisions, found)
    if Path(name).exists():
        loaded = load_space(Path(name))
        return ResolvedSpace(loaded.space, loaded.subdivisions)
    raise UnknownGalleryError(f"{name!r} is neither a gallery space ({', '.join(GALLERY_ORDER)}) nor a file")


def _subdivisions(args, resolved):
    return resolved.subdivisions if args.subdivide is None else args.subdivide


def _uses_kunneth(args, resolved):
    return bool(resolved.entry and resolved.entry.factors and not args.force_chains)


def _ih(args, resolved, p):
    """IH of the resolved space, through the product formula when the space has a manifold factor"""
    prime = DEFAULT_RANK_PRIME if args.modular_rank else None
    if _uses_kunneth(args, resolved):
        base_name, manifold_name = resolved.entry.factors
        base = resolve_space(base_name)
        base_ih = ih_dims(base.space, p.restrict(base.space.n), subdivisions=base.subdivisions, prime=prime)
        betti = homology_dims(gallery(manifold_name).complex)
        result = kunneth_manifold_oracle(base_ih, betti, space=resolved.space.name)
        logger.info(f"IH^{p.spelling} of {resolved.space.name} via the product formula: {list(result.dims)}")
        return result, base_ih.exact
    result = ih_dims(resolved.space, p, subdivisions=_subdivisions(args, resolved), method=args.ih_method,
                     prime=prime, force=args.force_chains)
    return result, result.exact


def cmd_gallery(args):
    space = gallery(args.name)
    document = dump_space(space, entry(args.name).subdivisions)
    if args.out:
        Path(args.out).write_text(document)
        logger.info(f"wrote {args.name} to {args.out}")
        return Outcome({"space": args.name, "out": args.out}, f"wrote {args.name} to {args.out}")
    return Outcome(json.loads(document), document.rstrip("\n"))


def cmd_ih(args):
    resolved = resolve_space(args.space)
    p = parse_perversity(args.perversity, resolved.space.n)
    result, exact = _ih(args, resolved, p)
    payload = result.to_dict()
    payload["exact"] = exact
    df = tables.ih_dataframe(result)
    text = "\n".join([f"IH^{p.spelling}({resolved.space.name}) [{result.method}{'' if exact else ', mod p'}]",
                      ", ".join(f"i={i}:{d}" for i, d in enumerate(result.dims))])
    return Outcome(payload, text, tables.to_csv(df, tables.IH_COLUMNS), perversity=p.spelling, exact=exact)


def cmd_chi(args):
    resolved = resolve_space(args.space)
    S = resolved.space
    p = parse_perversity(args.perversity, S.n)
    payload = {"space": S.name, "perversity": p.spelling}
    lines = [f"Iχ^{p.spelling}({S.name})"]
    if args.method in ("direct", "both"):
        if _uses_kunneth(args, resolved):
            ih, _ = _ih(args, resolved, p)
            payload["direct"] = ih.euler_characteristic
        else:
            payload["direct"] = ichi_c_direct(S, p, subdivisions=_subdivisions(args, resolved),
                                              prime=DEFAULT_RANK_PRIME if args.modular_rank else None,
                                              force=args.force_chains)
        lines.append(f"direct: {payload['direct']}")
    if args.method in ("stratumwise", "both"):
        result = ichi_c_stratumwise(subdivide(S, _subdivisions(args, resolved)), p)
        payload["stratumwise"] = result.total
        payload["terms"] = [
            {"stratum": t.stratum, "component": t.component, "dim": t.dim, "chi_c": t.chi_c,
             "link_ih": list(t.link_ih), "inner": t.inner, "contribution": t.contribution}
            for t in result.terms
        ]
        lines.append(f"stratumwise: {result.total}")
        lines.append(tables.to_text(tables.stratumwise_dataframe(result)))
    exit_code = EXIT_OK
    if args.method == "both":
        payload["agree"] = payload["direct"] == payload["stratumwise"]
        if not payload["agree"]:
            logger.error(f"Iχ mismatch on {S.name} for {p.spelling}: "
                         f"direct {payload['direct']} vs stratumwise {payload['stratumwise']}")
            exit_code = EXIT_MISMATCH
        lines.append("agree" if payload["agree"] else "MISMATCH")
    return Outcome(payload, "\n".join(lines), exit_code=exit_code, perversity=p.spelling)


def cmd_multiplicity(args):
    resolved = resolve_space(args.space)
    S = resolved.space
    p = parse_perversity(args.perversity, S.n)
    value = multiplicity(S, p, args.stratum, args.component)
    payload = {"space": S.name, "perversity": p.spelling, "stratum": args.stratum,
               "component": args.component, "multiplicity": value}
    return Outcome(payload, str(value), perversity=p.spelling)


def cmd_verify_ph(args):
    resolved = resolve_space(args.space)
    S = resolved.space
    p = parse_perversity(args.perversity, S.n)
    document = load_zeros(Path(args.zeros))
    report = verify_poincare_hopf(S, p, document.zeros)
    df = tables.ph_dataframe(report)
    payload = {
        "space": S.name,
        "perversity": p.spelling,
        "field_class": document.field_class,
        "ichi": report.ichi,
        "sum": report.total,
        "verdict": report.verdict,
        "difference": report.difference,
        "rows": df.to_dict(orient="records"),
    }
    text = "\n".join([
        f"Poincaré–Hopf on {S.name} for {p.spelling}",
        tables.to_text(df),
        f"Iχ = {report.ichi}, Σ singular indices = {report.total}: {report.verdict}",
    ])
    return Outcome(payload, text, tables.to_csv(df, tables.PH_COLUMNS),
                   exit_code=EXIT_OK if report.equal else EXIT_MISMATCH, perversity=p.spelling)


def cmd_converse(args):
    S = resolve_space(args.space).space
    decision = nonsingular_radial_exists(S)
    df = tables.witnesses_dataframe(decision)
    payload = {"space": S.name, "exists": decision.exists, "witnesses": df.to_dict(orient="records")}
    text = "\n".join([
        f"totally radial field without zeros on {S.name}: {'exists' if decision.exists else 'does not exist'}",
        tables.to_text(df),
    ])
    return Outcome(payload, text, tables.to_csv(df),
                   exit_code=EXIT_OK if decision.exists else EXIT_MISMATCH)


def cmd_list(args):
    entries = list_gallery()
    df = tables.gallery_dataframe(entries)
    return Outcome({"gallery": [e.summary() for e in entries]}, tables.to_text(df), tables.to_csv(df))


def cmd_report(args):
    S = resolve_space(args.space).space
    report = validate_pseudomanifold(S)
    df = tables.stratum_report_dataframe(report)
    payload = {
        "space": S.name,
        "n": report.n,
        "pure": report.pure,
        "pseudomanifold": report.pseudomanifold,
        "codimension_ok": report.codimension_ok,
        "frontier_ok": report.frontier_ok,
        "passed": report.passed,
        "bad_ridges": [[list(ridge), count] for ridge, count in report.bad_ridges],
        "strata": df.to_dict(orient="records"),
    }
    text = "\n".join([
        f"{S.name}: n={report.n} pure={report.pure} pseudomanifold={report.pseudomanifold} "
        f"codimension_ok={report.codimension_ok} frontier_ok={report.frontier_ok}",
        tables.to_text(df),
    ])
    return Outcome(payload, text, tables.to_csv(df), exit_code=EXIT_OK if report.passed else EXIT_BAD_INPUT)


def build_parser():
    parser = argparse.ArgumentParser(prog="ihx", description="Intersection homology of stratified pseudomanifolds")
    parser.add_argument("--log-level", default=None, help="override IHX_LOG_LEVEL")
    parser.add_argument("--record", action="store_true", help="store the result in the run ledger")
    commands = parser.add_subparsers(dest="command", required=True)

    def with_format(sub):
        sub.add_argument("--format", choices=("text", "json", "csv"), default="text")
        return sub

    def with_space(sub):
        sub.add_argument("space", help="gallery name or path to a space document")
        return sub

    def with_perversity(sub):
        sub.add_argument("--perversity", default="lower-middle",
                         help="zero | lower-middle | upper-middle | top | custom:p2,...,pn")
        return sub

    def with_chains(sub, method_flag="--method"):
        sub.add_argument("--subdivide", type=int, default=None,
                         help="barycentric subdivisions before computing (applied to every route)")
        sub.add_argument("--force-chains", action="store_true", help="allow chain-level work on large complexes")
        sub.add_argument("--modular-rank", action="store_true", help="ranks over GF(p) instead of Q")
        sub.add_argument(method_flag, dest="ih_method", choices=("ranks", "basis"), default="ranks")
        return sub

    sub = commands.add_parser("gallery", help="emit a gallery space document")
    sub.add_argument("name")
    sub.add_argument("--out", default=None)
    sub.set_defaults(handler=cmd_gallery, format="text")

    sub = with_chains(with_perversity(with_format(with_space(commands.add_parser("ih", help="IH ranks")))))
    sub.set_defaults(handler=cmd_ih)

    sub = with_chains(with_perversity(with_format(with_space(commands.add_parser("chi", help="Iχ")))), "--ih-method")
    sub.add_argument("--method", choices=("direct", "stratumwise", "both"), default="both")
    sub.set_defaults(handler=cmd_chi)

    sub = with_perversity(with_format(with_space(commands.add_parser("multiplicity", help="multiplicity at a stratum"))))
    sub.add_argument("--stratum", type=int, required=True)
    sub.add_argument("--component", type=int, default=0)
    sub.set_defaults(handler=cmd_multiplicity)

    sub = with_perversity(with_format(with_space(commands.add_parser("verify-ph", help="Poincaré–Hopf check"))))
    sub.add_argument("zeros", help="path to a zeros document")
    sub.set_defaults(handler=cmd_verify_ph)

    sub = with_format(with_space(commands.add_parser("converse", help="nonsingular radial field criterion")))
    sub.set_defaults(handler=cmd_converse)

    sub = with_format(commands.add_parser("list", help="gallery summaries"))
    sub.set_defaults(handler=cmd_list)

    sub = with_format(with_space(commands.add_parser("report", help="pseudomanifold checks")))
    sub.set_defaults(handler=cmd_report)
    return parser


def _render(outcome, fmt):
    if fmt == "json":
        return json.dumps(outcome.payload, indent=2, sort_keys=True, ensure_ascii=False)
    if fmt == "csv" and outcome.csv is not None:
        return outcome.csv.rstrip("\n")
    return outcome.text


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging(args.log_level)

    try:
        outcome = args.handler(args)
    except IHXError as e:
        logger.error(f"{args.command} failed: {str(e)}")
        print(f"error: {e}", file=sys.stderr)
        return e.exit_code
    except Exception as e:
        logger.exception(f"internal error in {args.command}: {str(e)}")
        print(f"internal error: {e}", file=sys.stderr)
        return EXIT_INTERNAL

    print(_render(outcome, args.format))
    if args.record:
        LedgerManager().record(args.command, getattr(args, "space", getattr(args, "name", "")), outcome.payload,
                               perversity=outcome.perversity, exit_code=outcome.exit_code, exact=outcome.exact)
    return outcome.exit_code


if __name__ == "__main__":
    sys.exit(main())
