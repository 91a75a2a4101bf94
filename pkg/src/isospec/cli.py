"""Command line front end: ``isospec <subcommand> ...``.

Group specs are flat strings. Single-parameter families take ``FAMILY:q``
(``S6:5``, ``L2:13``, ``Sz:8``, ``E6:2:-``); classical families of arbitrary
rank take ``FAMILY:n:q[:sign]`` (``L:4:3``, ``L:4:3:-`` for the unitary group,
``O:5:3:-``). With ``--json`` every result is printed as one JSON object per line.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import primegraph, verify
from .arith import largest_primitive_divisor, primitive_prime_divisors
from .spectra import (
    BOUND_FAMILIES,
    CLASSICAL_FAMILIES,
    EXPONENT_FAMILIES,
    SPECTRUM_FAMILIES,
    Family,
    GroupId,
    UnsupportedFamily,
    exponent,
    exponent_lower_bound,
    exponent_prime_to_v,
    omega_basis,
)

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2

_SIMPLE = {
    "S6": Family.S6,
    "O7": Family.O7,
    "O8+": Family.O8Plus,
    "L2": Family.PSL2,
    "PSL2": Family.PSL2,
    "SZ": Family.Sz,
    "2B2": Family.Sz,
    "REE": Family.Ree,
    "2G2": Family.Ree,
    "G2": Family.G2,
    "3D4": Family.TriD4,
    "F4": Family.F4,
    "E6": Family.E6,
    "2E6": Family.E6,
    "E7": Family.E7,
    "E8": Family.E8,
    "2F4": Family.TwistedF4,
}
_RANKED = {
    "L": Family.LinearN,
    "U": Family.UnitaryN,
    "S": Family.SymplecticN,
    "O": Family.OrthOddN,
    "O+": Family.OrthPlusN,
    "O-": Family.OrthMinusN,
}
_SIGNS = {"+": 1, "+1": 1, "1": 1, "-": -1, "-1": -1}

GROUP_HELP = (
    "group spec: FAMILY:q with FAMILY in "
    + ", ".join(sorted(_SIMPLE))
    + "; or FAMILY:n:q[:sign] with FAMILY in L, U, S, O, O+, O- "
    "(L:n:q:- is the unitary group, O:n:q:+/- the even orthogonal groups)"
)


class SpecError(ValueError):
    pass


def _int(token: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise SpecError(f"expected an integer, got {token!r}") from None


def _lookup(token: str) -> Family:
    if token in _RANKED:
        return _RANKED[token]
    if token.upper() in _SIMPLE:
        return _SIMPLE[token.upper()]
    for f in Family:
        if f.value.upper() == token.upper():
            return f
    raise SpecError(f"unknown family {token!r}")


def parse_group(spec: str) -> GroupId:
    """Parse a group spec string; raises SpecError naming the bad token."""
    parts = spec.split(":")
    fam = _lookup(parts[0])
    ranked = fam in CLASSICAL_FAMILIES
    nums = 2 if ranked else 1
    if len(parts) not in (nums + 1, nums + 2):
        form = "n:q" if ranked else "q"
        raise SpecError(f"{spec!r}: expected {parts[0]}:{form}[:sign]")
    values = [_int(t) for t in parts[1 : nums + 1]]
    sign = -1 if parts[0].upper() == "2E6" else 1
    if len(parts) == nums + 2:
        if parts[-1] not in _SIGNS:
            raise SpecError(f"{spec!r}: bad sign {parts[-1]!r}")
        sign = _SIGNS[parts[-1]]
        if fam is Family.LinearN:
            fam = Family.LinearN if sign == 1 else Family.UnitaryN
        elif fam is Family.OrthOddN:
            fam = Family.OrthPlusN if sign == 1 else Family.OrthMinusN
        elif fam is not Family.E6:
            raise SpecError(f"{spec!r}: {parts[0]} takes no sign")
    if fam is Family.UnitaryN:
        sign = -1
    elif fam is not Family.E6:
        sign = 1
    try:
        if ranked:
            return GroupId(fam, values[1], values[0], sign)
        return GroupId(fam, values[0], sign=sign)
    except ValueError as exc:
        raise SpecError(f"{spec!r}: {exc}") from None


def parse_family(token: str) -> Family:
    return _lookup(token.strip())


def _fmt_set(xs) -> str:
    return "{" + ", ".join(str(x) for x in sorted(xs)) + "}"


class _Out:
    def __init__(self, as_json: bool):
        self.as_json = as_json

    def emit(self, text: str, payload: dict) -> None:
        if self.as_json:
            print(json.dumps(payload))
        else:
            print(text)


def _cmd_spectrum(args, out: _Out) -> int:
    g = parse_group(args.group)
    if g.family not in SPECTRUM_FAMILIES:
        raise UnsupportedFamily(f"no spectrum available for {g}")
    b = omega_basis(g)
    out.emit(
        f"{g}\n  mu = {_fmt_set(b.generators)}\n  pi = {_fmt_set(b.primes())}",
        {"group": str(g), "mu": sorted(b.generators), "pi": sorted(b.primes())},
    )
    return EXIT_OK


def _cmd_exponent(args, out: _Out) -> int:
    g = parse_group(args.group)
    payload: dict = {"group": str(g)}
    lines = [str(g)]
    if g.family in EXPONENT_FAMILIES:
        payload["exponent"] = exponent(g)
        lines.append(f"  exp = {payload['exponent']}")
    try:
        payload["exponent_prime_to_v"] = exponent_prime_to_v(g)
        lines.append(f"  exp_v' = {payload['exponent_prime_to_v']}")
    except UnsupportedFamily:
        pass
    if g.family in BOUND_FAMILIES:
        payload["lower_bound"] = exponent_lower_bound(g)
        lines.append(f"  exp > {payload['lower_bound']}")
    out.emit("\n".join(lines), payload)
    return EXIT_OK


def _cmd_graph(args, out: _Out) -> int:
    g = parse_group(args.group)
    if g.family not in SPECTRUM_FAMILIES:
        raise UnsupportedFamily(f"no spectrum available for {g}")
    gk = primegraph.build(omega_basis(g))
    if args.dot:
        print(primegraph.to_dot(gk, f"GK({g})"), end="")
        return EXIT_OK
    payload: dict = {"group": str(g), "vertices": list(gk.vertices), "edges": gk.edges()}
    lines = [f"GK({g}): vertices {_fmt_set(gk.vertices)}"]
    for r in gk.vertices:
        nbrs = [s for s in gk.vertices if s != r and primegraph.adjacent(gk, r, s)]
        lines.append(f"  {r}: {' '.join(map(str, nbrs)) or '-'}")
    if args.coclique:
        t, w = primegraph.max_coclique(gk)
        payload.update(t=t, coclique=sorted(w))
        lines.append(f"t = {t}, coclique {_fmt_set(w)}")
    if args.through is not None:
        t, w = primegraph.max_coclique_through(gk, args.through)
        payload.update(r=args.through, t_r=t, coclique_through=sorted(w))
        lines.append(f"t({args.through}) = {t}, coclique {_fmt_set(w)}")
    out.emit("\n".join(lines), payload)
    return EXIT_OK


def _cmd_kdiv(args, out: _Out) -> int:
    m, a = args.m, args.a
    if m < 1 or abs(a) < 2:
        raise SpecError("need m >= 1 and |a| >= 2")
    rm = primitive_prime_divisors(m, a)
    km = largest_primitive_divisor(m, a)
    out.emit(
        f"R_{m}({a}) = {_fmt_set(rm)}; k_{m}({a}) = {km}",
        {"m": m, "a": a, "R": sorted(rm), "k": km},
    )
    return EXIT_OK


def _cmd_verify(args, out: _Out) -> int:
    flags = {k: getattr(args, k) for k in ("qmax", "umax", "amax", "nmax", "mmax")}
    if args.check_id == "all":
        reports = [verify.run_check(cid, **flags) for cid in verify.CHECKS]
    else:
        reports = [verify.run_check(args.check_id, **flags)]
    for r in reports:
        out.emit(r.summary(), r.to_dict())
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAILED


def _cmd_scan(args, out: _Out) -> int:
    target = parse_group(args.target)
    families = [parse_family(t) for t in args.families.split(",") if t.strip()]
    verdicts = verify.scan_candidates(target, families, args.umax, args.max_rank)
    for v in verdicts:
        out.emit(str(v), v.to_dict())
    if not out.as_json:
        n = sum(v.survived for v in verdicts)
        print(f"{n} of {len(verdicts)} candidates survive")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="isospec",
        description="Spectra, exponents and prime graphs of finite simple groups, "
        "and machine checks of the supporting arithmetic.",
        epilog=GROUP_HELP,
    )
    p.add_argument("--json", action="store_true", help="print JSON lines instead of text")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser(
        "spectrum", parents=[common], help="maximal element orders and prime spectrum"
    )
    s.add_argument("group", help=GROUP_HELP)
    s.set_defaults(func=_cmd_spectrum)

    s = sub.add_parser("exponent", parents=[common], help="exponent, its v'-part and lower bound")
    s.add_argument("group", help=GROUP_HELP)
    s.set_defaults(func=_cmd_exponent)

    s = sub.add_parser("graph", parents=[common], help="Gruenberg-Kegel prime graph")
    s.add_argument("group", help=GROUP_HELP)
    s.add_argument("--coclique", action="store_true", help="report t and a maximum coclique")
    s.add_argument("--through", type=int, metavar="r", help="report t(r)")
    s.add_argument("--dot", action="store_true", help="print Graphviz DOT and exit")
    s.set_defaults(func=_cmd_graph)

    s = sub.add_parser("kdiv", parents=[common], help="primitive prime divisors R_m(a) and k_m(a)")
    s.add_argument("m", type=int)
    s.add_argument("a", type=int)
    s.set_defaults(func=_cmd_kdiv)

    s = sub.add_parser(
        "verify", parents=[common], help="run a machine check ('all' runs every check)"
    )
    s.add_argument("check_id", choices=[*verify.CHECKS, "all"])
    for flag in ("qmax", "umax", "amax", "nmax", "mmax"):
        s.add_argument(f"--{flag}", type=int)
    s.set_defaults(func=_cmd_verify)

    s = sub.add_parser(
        "scan", parents=[common], help="run the elimination filters over candidate families"
    )
    s.add_argument("--target", required=True, help="S6:q, O7:q or O8+:q")
    s.add_argument("--families", required=True, help="comma separated, e.g. PSL2,G2,Sz")
    s.add_argument("--umax", type=int, default=64)
    s.add_argument("--max-rank", type=int, default=8, help="largest rank for L, U, S, O families")
    s.set_defaults(func=_cmd_scan)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    out = _Out(args.json)
    try:
        return args.func(args, out)
    except primegraph.UnknownVertex as exc:
        print(f"isospec: error: {exc.args[0]} is not a vertex of the graph", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"isospec: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
