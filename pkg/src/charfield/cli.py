"""Command-line front end: batch queries with JSON output.

Every subcommand prints one JSON object per line (machine-readable, byte
stable across runs); `--pretty` switches to indented output.  Exit codes:
0 success, 2 malformed input, 3 enumeration budget exceeded, 4 verification
failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from .char_fields import character_field, is_real_series
from .errors import BudgetExceededError, InputError
from .galois_arith import GaloisElement
from .groups import Family, GroupSpec
from .hc_action import series_permutation, series_twist_sign
from .partitions import EpsPartition, Partition
from .power_maps import unipotent_rational
from .semisimple import (
    class_from_dict,
    enumerate_classes,
    has_central_twist_automorphism,
)
from .symbols import special_symbol, wavefront_partition
from .verify import run_suites
from .weyl_b import SeriesDescriptor


def _emit(obj, pretty: bool) -> None:
    if pretty:
        print(json.dumps(obj, sort_keys=True, indent=2))
    else:
        print(json.dumps(obj, sort_keys=True))


def _group(args) -> GroupSpec:
    return GroupSpec(Family(args.family), args.n, args.q, getattr(args, "twist", 1))


def _cmd_field(args) -> int:
    cls = class_from_dict(json.loads(args.cls))
    field = character_field(cls.group, cls)
    _emit(
        {
            "input": cls.to_dict(),
            "result": field.to_dict(),
            "citations": ["character-field-per-series", "symplectic-sqrt-adjunction"],
        },
        args.pretty,
    )
    return 0


def _cmd_real(args) -> int:
    cls = class_from_dict(json.loads(args.cls))
    _emit(
        {
            "input": cls.to_dict(),
            "result": {"real": is_real_series(cls.group, cls)},
            "citations": ["series-realness"],
        },
        args.pretty,
    )
    return 0


def _cmd_powmap(args) -> int:
    g = _group(args)
    mu = Partition(int(x) for x in args.mu.split(","))
    ep = EpsPartition(mu, g.form_eps)
    rational = unipotent_rational(g, ep, args.k)
    if g.family is Family.SP:
        even_ok = all(
            mu.multiplicity(m) % 2 == 0 for m in mu.distinct() if m % 2 == 0
        )
        criterion = "even-multiplicities" if even_ok else "square-class-of-k"
    else:
        criterion = "orthogonal-always-rational"
    _emit(
        {
            "input": {"family": g.family.value, "n": g.n, "q": g.q,
                      "mu": list(mu.parts), "k": args.k},
            "result": {"rational": rational, "criterion": criterion},
            "citations": ["unipotent-power-map"],
        },
        args.pretty,
    )
    return 0


def _cmd_gammadelta(args) -> int:
    g = _group(args)
    n = args.a + args.b
    if args.n and args.n != n:
        raise InputError("rank must equal a + b for a principal series")
    desc = SeriesDescriptor(g, True, n, args.a, args.b)
    sigma = GaloisElement(args.sigma_k, args.sigma_m)
    sign = series_twist_sign(desc, sigma)
    _emit(
        {
            "input": {"family": g.family.value, "q": g.q, "a": args.a, "b": args.b,
                      "sigma_k": args.sigma_k, "sigma_m": args.sigma_m},
            "result": {"gamma_delta": sign.value,
                       "series_action": series_permutation(desc, sigma)},
            "citations": ["series-twist-sign"],
        },
        args.pretty,
    )
    return 0


def _cmd_symbol(args) -> int:
    sym = special_symbol(args.e, args.delta)
    _emit(
        {
            "input": {"e": args.e, "delta": args.delta},
            "result": {"top": list(sym.top), "bottom": list(sym.bottom),
                       "rank": sym.rank, "defect": sym.defect},
            "citations": ["special-symbols"],
        },
        args.pretty,
    )
    return 0


def _cmd_wavefront(args) -> int:
    ep = wavefront_partition(args.e, args.f, args.delta)
    _emit(
        {
            "input": {"e": args.e, "f": args.f, "delta": args.delta},
            "result": {"partition": list(ep.partition.parts), "eps": ep.eps,
                       "dim": ep.total},
            "citations": ["wavefront-partition"],
        },
        args.pretty,
    )
    return 0


def _cmd_kgroup(args) -> int:
    g = _group(args)
    result = {"k_group_nontrivial": has_central_twist_automorphism(g)}
    if args.minus_dim is not None:
        if args.minus_dim % 2:
            raise InputError("--minus-dim must be even")
        b = args.minus_dim // 2
        central = b in (0, g.n)
        member = (
            b == 0
            or pow(g.q, g.n if central else b, 4) == g.twist % 4
        )
        result["minus_eigenspace_dim"] = args.minus_dim
        result["in_spinor_kernel"] = member
    _emit(
        {
            "input": {"family": g.family.value, "n": g.n, "q": g.q, "twist": g.twist},
            "result": result,
            "citations": ["central-twist-automorphism", "spinor-kernel-membership"],
        },
        args.pretty,
    )
    return 0


def _cmd_classes(args) -> int:
    g = _group(args)
    max_d = args.max_d if args.max_d else g.q + 1
    for cls in enumerate_classes(g, max_d):
        _emit(cls.to_dict(), args.pretty)
    return 0


def _cmd_verify(args) -> int:
    names = (
        ["gauss", "relweyl", "powmap", "brauer", "wavefront", "fields"]
        if args.suite == "all"
        else [args.suite]
    )
    results = run_suites(names, budget=args.budget)
    ok = True
    for r in results:
        _emit({"check": r.name, "ok": r.ok, "detail": r.detail}, args.pretty)
        ok = ok and r.ok
    return 0 if ok else 4


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="charfield",
        description="Character fields, Galois actions and power maps for "
        "finite symplectic and special orthogonal groups.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(sp, group=False):
        sp.add_argument("--pretty", action="store_true")
        if group:
            sp.add_argument("--family", required=True,
                            choices=[f.value for f in Family if f is not Family.GL])
            sp.add_argument("--n", type=int, required=True)
            sp.add_argument("--q", type=int, required=True)
            sp.add_argument("--twist", type=int, default=1, choices=[1, -1])

    sp = sub.add_parser("field", help="character field of a series")
    sp.add_argument("--class", dest="cls", required=True, help="class JSON")
    add_common(sp)
    sp.set_defaults(func=_cmd_field)

    sp = sub.add_parser("real", help="realness of a series")
    sp.add_argument("--class", dest="cls", required=True)
    add_common(sp)
    sp.set_defaults(func=_cmd_real)

    sp = sub.add_parser("powmap", help="power-map rationality of a unipotent class")
    add_common(sp, group=True)
    sp.add_argument("--mu", required=True, help="comma-separated partition")
    sp.add_argument("--k", type=int, required=True)
    sp.set_defaults(func=_cmd_powmap)

    sp = sub.add_parser("gammadelta", help="Galois twist sign of a principal series")
    add_common(sp, group=False)
    sp.add_argument("--family", required=True,
                    choices=[f.value for f in Family if f is not Family.GL])
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--twist", type=int, default=1, choices=[1, -1])
    sp.add_argument("--a", type=int, required=True)
    sp.add_argument("--b", type=int, required=True)
    sp.add_argument("--n", type=int, default=0)
    sp.add_argument("--sigma-k", dest="sigma_k", type=int, required=True)
    sp.add_argument("--sigma-m", dest="sigma_m", type=int, required=True)
    sp.set_defaults(func=lambda a: _cmd_gammadelta(_fill_rank(a)))

    sp = sub.add_parser("symbol", help="special two-row symbol")
    sp.add_argument("--e", type=int, required=True)
    sp.add_argument("--delta", type=int, required=True, choices=[0, 1])
    add_common(sp)
    sp.set_defaults(func=_cmd_symbol)

    sp = sub.add_parser("wavefront", help="wave-front partition of a cuspidal datum")
    sp.add_argument("--e", type=int, required=True)
    sp.add_argument("--f", type=int, required=True)
    sp.add_argument("--delta", type=int, required=True, choices=[0, 1])
    add_common(sp)
    sp.set_defaults(func=_cmd_wavefront)

    sp = sub.add_parser("kgroup", help="central-twist predicates")
    add_common(sp, group=True)
    sp.add_argument("--minus-dim", type=int, default=None,
                    help="dimension of the -1 eigenspace of an involution")
    sp.set_defaults(func=_cmd_kgroup)

    sp = sub.add_parser("classes", help="enumerate semisimple classes of the dual group")
    add_common(sp, group=True)
    sp.add_argument("--max-d", type=int, default=0)
    sp.set_defaults(func=_cmd_classes)

    sp = sub.add_parser("verify", help="run verification suites")
    sp.add_argument("--suite", default="all",
                    choices=["gauss", "powmap", "brauer", "relweyl", "all"])
    sp.add_argument("--budget", type=int, default=None)
    add_common(sp)
    sp.set_defaults(func=_cmd_verify)

    return parser


def _fill_rank(args):
    args.n = args.n or (args.a + args.b)
    return args


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceededError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return 3
    except (InputError, ValueError, json.JSONDecodeError) as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
