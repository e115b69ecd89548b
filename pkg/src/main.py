import argparse
import json
import logging
import sys
from pathlib import Path

from .apolarity.catalecticant import catalecticant
from .apolarity.hexagon import HEXAGON_CASES, powersum_solve
from .characters.expr import parse_character
from .cyclotomic.text import format_cyc
from .config import Settings
from .diophantine.solvers import rh_enumerate
from .errors import Klein168Error
from .geometry.orbits import conditions_rank, min_orbit_size_p2
from .geometry.points import load_points
from .groebner.dimension import ideal_dimension, is_smooth_hypersurface
from .invariants.action import invariant_dim_by_character
from .invariants.klein import InvariantCatalog, dumps_catalog
from .invariants.poly import SparsePoly, format_poly, parse_poly
from .ledger.core import run_report
from .ledger.workbench import Workbench
from .linalg.io import format_matrix_rows

logger = logging.getLogger(__name__)

SHORT_NAMES = {"f4": "phi4", "f6": "phi6", "f8": "phi8", "f8p": "phi8p", "f14": "phi14"}


def _read(path: str) -> str:
    p = Path(path)
    if not p.exists():
        raise Klein168Error("File not found: %s" % p)
    return p.read_text(encoding="utf-8")


def _named_form(wb: Workbench, name: str) -> SparsePoly:
    return wb.invariants[SHORT_NAMES.get(name, name)]


def _read_poly(path: str, nvars: int) -> SparsePoly:
    lines = [raw.split("#", 1)[0].strip() for raw in _read(path).splitlines()]
    return parse_poly(" ".join(l for l in lines if l), nvars)


# Subcommands

def cmd_group_info(args, wb: Workbench) -> tuple[dict, int]:
    group = getattr(wb.groups, args.group)
    classes = [{"name": c.name, "size": c.size, "order": c.order} for c in group.classes]
    return {
        "group": group.label,
        "order": group.order,
        "dimension": group.dimension,
        "conductor": group.conductor,
        "classes": classes,
        "element_orders": {str(k): v for k, v in sorted(group.order_histogram().items())},
    }, 0


def cmd_char_table(args, wb: Workbench) -> tuple[dict, int]:
    table = wb.psl_table if args.group == "psl" else wb.cover_tables.table
    return table.to_dict(), 0


def cmd_decompose(args, wb: Workbench) -> tuple[dict, int]:
    table = wb.cover_tables.table
    chi = parse_character(args.char, table)
    return {"character": args.char, "degree": chi.degree, "decomposition": table.decompose(chi)}, 0


def cmd_invariants(args, wb: Workbench) -> tuple[dict, int]:
    if args.emit:
        sys.stdout.write(dumps_catalog(wb.invariants))
        return {}, 0
    cover = wb.groups.cover
    dims = {str(d): invariant_dim_by_character(cover, d) for d in range(1, args.max_degree + 1)}
    return {"group": cover.label, "dimensions": dims,
            "forms": {n: len(wb.invariants[n]) for n in InvariantCatalog.SPACE}}, 0


def cmd_orbits(args, wb: Workbench) -> tuple[dict, int]:
    if args.plane:
        census = min_orbit_size_p2(wb.groups.plane)
        return {"minimum": census.minimum, "sizes": census.sizes}, 0
    orbits = wb.special_orbits
    return {name: o.to_dict() for name, o in orbits.as_dict().items()}, 0


def cmd_conditions(args, wb: Workbench) -> tuple[dict, int]:
    if args.points:
        points = load_points(_read(args.points))
        source = args.points
    else:
        points = wb.special_orbits.as_dict()[args.orbit].points
        source = args.orbit
    rank = conditions_rank(points, args.degree)
    return {"points": source, "count": len(points), "degree": args.degree, "rank": rank}, 0


def cmd_rh(args, wb: Workbench) -> tuple[dict, int]:
    rows = rh_enumerate(args.gmax)
    if args.format == "table":
        print("%4s %4s %4s %4s %4s" % ("g", "24", "42", "56", "84"))
        for r in rows:
            print("%4d %4d %4d %4d %4d" % ((r.genus,) + r.orbit_counts))
        return {}, 0
    return {"gmax": args.gmax, "rows": [r.to_dict() for r in rows]}, 0


def _primes(args, settings: Settings) -> list[int]:
    if args.primes:
        return [int(p) for p in args.primes.split(",") if p.strip()]
    return settings.primes


def cmd_ideal_dim(args, wb: Workbench) -> tuple[dict, int]:
    names = [n.strip() for n in args.set.split(",") if n.strip()]
    report = ideal_dimension([_named_form(wb, n) for n in names], _primes(args, wb.settings))
    return {"forms": names, **report.to_dict()}, 0


def cmd_smooth(args, wb: Workbench) -> tuple[dict, int]:
    f = _read_poly(args.poly, args.nvars) if args.poly else _named_form(wb, args.name)
    primes = _primes(args, wb.settings)
    return {"polynomial": format_poly(f), "smooth": is_smooth_hypersurface(f, primes), "primes": primes}, 0


def cmd_hexagon(args, wb: Workbench) -> tuple[dict, int]:
    quartic = _read_poly(args.quartic, 3) if args.quartic else wb.invariants.klein
    if args.lines:
        text = [raw.split("#", 1)[0].strip() for raw in _read(args.lines).splitlines()]
        lines = [parse_poly(t, 3) for t in text if t]
    else:
        lines = HEXAGON_CASES[args.case]()
    return powersum_solve(quartic, lines, wb.settings.working_conductor).to_dict(), 0


def cmd_catalecticant(args, wb: Workbench) -> tuple[dict, int]:
    f = _read_poly(args.quartic, 3) if args.quartic else _named_form(wb, args.name)
    cat = catalecticant(f)
    return {
        "quartic": format_poly(f),
        "matrix": format_matrix_rows(cat.matrix).splitlines(),
        "rank": cat.rank,
        "determinant": format_cyc(cat.determinant),
        "degenerate": cat.is_degenerate(),
    }, 0


def cmd_report(args, wb: Workbench) -> tuple[dict, int]:
    ids = [c.strip() for c in args.checks.split(",") if c.strip()] if args.checks else wb.settings.check_selection
    report = run_report(ids, wb.settings, include_slow=not args.fast)
    text = report.model_dump_json(indent=2)
    if args.output:
        Path(args.output).write_text(text + "\n", encoding="utf-8")
        logger.info("Report written to %s", args.output)
    else:
        print(text)
    return {}, report.exit_code


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print JSON")
    common.add_argument("--config", help="KEY=value settings file")
    common.add_argument("--seed", type=int, help="seed for the randomized checks")
    common.add_argument("--verbose", action="store_true")

    parser = argparse.ArgumentParser(prog="klein168", description="Exact computations for PSL2(F7) and its double cover")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("group-info", parents=[common])
    p.add_argument("--group", choices=["cover", "space", "plane"], default="space")
    p.set_defaults(handler=cmd_group_info)

    p = sub.add_parser("char-table", parents=[common])
    p.add_argument("--group", choices=["psl", "sl"], default="psl")
    p.set_defaults(handler=cmd_char_table)

    p = sub.add_parser("decompose", parents=[common])
    p.add_argument("--char", required=True, help="e.g. sym(U4,4), ext(W7,3), tensor(W7,W3d)")
    p.set_defaults(handler=cmd_decompose)

    p = sub.add_parser("invariants", parents=[common])
    p.add_argument("--max-degree", type=int, default=14)
    p.add_argument("--emit", action="store_true", help="print the invariant catalog as text")
    p.set_defaults(handler=cmd_invariants)

    p = sub.add_parser("orbits", parents=[common])
    p.add_argument("--plane", action="store_true", help="plane census instead of the space orbits")
    p.set_defaults(handler=cmd_orbits)

    p = sub.add_parser("conditions", parents=[common])
    source = p.add_mutually_exclusive_group()
    source.add_argument("--orbit", choices=["sigma8", "sigma24", "sigma28", "sigma28p"], default="sigma8")
    source.add_argument("--points", help="file with one point per line")
    p.add_argument("--degree", type=int, default=2)
    p.set_defaults(handler=cmd_conditions)

    p = sub.add_parser("rh", parents=[common])
    p.add_argument("--gmax", type=int, default=30)
    p.add_argument("--format", choices=["json", "table"], default="json")
    p.set_defaults(handler=cmd_rh)

    p = sub.add_parser("ideal-dim", parents=[common])
    p.add_argument("--set", default="f4,f6,f8p", help="comma-separated forms")
    p.add_argument("--primes")
    p.set_defaults(handler=cmd_ideal_dim)

    p = sub.add_parser("smooth", parents=[common])
    p.add_argument("--poly", help="file with a homogeneous polynomial")
    p.add_argument("--nvars", type=int, default=4)
    p.add_argument("--name", default="phi4", help="catalog form when --poly is absent")
    p.add_argument("--primes")
    p.set_defaults(handler=cmd_smooth)

    p = sub.add_parser("hexagon", parents=[common])
    p.add_argument("--case", choices=sorted(HEXAGON_CASES), default="z4")
    p.add_argument("--lines", help="file with six linear forms, one per line")
    p.add_argument("--quartic", help="file with a ternary quartic")
    p.set_defaults(handler=cmd_hexagon)

    p = sub.add_parser("catalecticant", parents=[common])
    p.add_argument("--quartic", help="file with a ternary quartic")
    p.add_argument("--name", default="klein")
    p.set_defaults(handler=cmd_catalecticant)

    p = sub.add_parser("report", parents=[common])
    p.add_argument("--checks", help="comma-separated check ids (default: settings)")
    p.add_argument("--fast", action="store_true", help="skip slow checks")
    p.add_argument("--output", help="write the JSON report here")
    p.set_defaults(handler=cmd_report)
    return parser


def _print(data: dict, as_json: bool):
    if not data:
        return
    if as_json:
        print(json.dumps(data, indent=2))
        return
    for key, value in data.items():
        print("%s: %s" % (key, value if isinstance(value, (str, int, bool)) else json.dumps(value)))


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.INFO,
        format="%(asctime)s [%(levelname)s] %(name)s: %(message)s",
        stream=sys.stderr,
    )
    try:
        if args.config and not Path(args.config).exists():
            raise Klein168Error("Config file not found: %s" % args.config)
        settings = Settings(_env_file=args.config) if args.config else Settings()
        if args.seed is not None:
            settings.seed = args.seed
        data, code = args.handler(args, Workbench(settings))
    except Klein168Error as e:
        logger.error("%s", e)
        return 2
    _print(data, args.json)
    return code


if __name__ == "__main__":
    sys.exit(main())
