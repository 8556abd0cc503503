"""Command-line surface: every computation behind one deterministic tool.

Exit codes: 0 success, 1 invalid input file, 2 precondition violation,
3 internal assertion failure (an identity the library guarantees broke,
which is always a bug).
"""

from __future__ import annotations

import argparse
import sys

from . import electrical, grassmann, groves, netfile, network
from .combinat import enumerate_noncrossing


def _load_valid(path: str) -> network.CactusNetwork:
    try:
        net = netfile.load_network(path)
    except (OSError, ValueError) as exc:
        raise _InvalidInput(str(exc)) from exc
    rep = network.validate(net)
    if not rep.ok:
        raise _InvalidInput(f"network fails validation: {rep.failures()}")
    return net


class _InvalidInput(Exception):
    pass


class _Precondition(Exception):
    pass


def _emit(doc, args) -> None:
    print(netfile.dump_document(doc, compact=getattr(args, "compact", False)))


def cmd_validate(args):
    try:
        net = netfile.load_network(args.network)
    except (OSError, ValueError) as exc:
        raise _InvalidInput(str(exc)) from exc
    rep = network.validate(net)
    _emit(
        {
            "valid": rep.ok,
            "checks": [
                {"name": name, "ok": ok, "detail": detail}
                for name, ok, detail in rep.checks
            ],
        },
        args,
    )
    return 0 if rep.ok else 1


def cmd_lambda(args):
    net = _load_valid(args.network)
    lam = groves.lambda_vector(net)
    _emit(
        {
            str(sigma): netfile.format_rational(lam[sigma])
            for sigma in enumerate_noncrossing(net.n)
        },
        args,
    )
    return 0


def cmd_response(args):
    net = _load_valid(args.network)
    _emit(netfile.matrix_to_doc(electrical.response_matrix(net)), args)
    return 0


def cmd_resistance(args):
    net = _load_valid(args.network)
    _emit(netfile.matrix_to_doc(electrical.resistance_matrix(net)), args)
    return 0


def cmd_lstar(args):
    net = _load_valid(args.network)
    r = electrical.resistance_matrix(net)
    _emit(netfile.matrix_to_doc(electrical.lstar_from_resistance(r)), args)
    return 0


def cmd_plucker(args):
    net = _load_valid(args.network)
    vec = grassmann.lam_map(groves.lambda_vector(net))
    doc = {"coordinates": netfile.exterior_to_doc(vec)}
    if args.check_isotropy:
        doc["kappa_zero"] = grassmann.kappa(grassmann.omega(net.n), vec).is_zero()
    _emit(doc, args)
    return 0


def cmd_isotropy(args):
    net = _load_valid(args.network)
    vec = grassmann.lam_map(groves.lambda_vector(net))
    _emit(
        {"kappa_zero": grassmann.kappa(grassmann.omega(net.n), vec).is_zero()},
        args,
    )
    return 0


def cmd_tnn(args):
    net = _load_valid(args.network)
    vec = grassmann.lam_map(groves.lambda_vector(net))
    _emit({"totally_nonnegative": grassmann.is_totally_nonnegative(vec)}, args)
    return 0


def cmd_chart(args):
    net = _load_valid(args.network)
    if args.source == "response":
        m = grassmann.chart_from_response(electrical.response_matrix(net))
    else:
        r = electrical.resistance_matrix(net)
        m = grassmann.chart_from_lstar(electrical.lstar_from_resistance(r))
    _emit(netfile.matrix_to_doc(m), args)
    return 0


def cmd_extract(args):
    net = _load_valid(args.network)
    mode = "response" if args.chart == "not-shorted" else "dual"
    if mode == "response":
        m = grassmann.chart_from_response(electrical.response_matrix(net))
    else:
        r = electrical.resistance_matrix(net)
        m = grassmann.chart_from_lstar(electrical.lstar_from_resistance(r))
    _emit(netfile.matrix_to_doc(grassmann.extract_symmetric(m, mode)), args)
    return 0


def cmd_ydelta(args):
    net = _load_valid(args.network)
    out = network.ydelta(net, args.site, args.direction)
    if args.output:
        netfile.save_network(out, args.output)
    else:
        _emit(netfile.network_to_dict(out), args)
    return 0


def cmd_dual(args):
    net = _load_valid(args.network)
    out = network.dual(net)
    if args.output:
        netfile.save_network(out, args.output)
    else:
        _emit(netfile.network_to_dict(out), args)
    return 0


def cmd_medial(args):
    net = _load_valid(args.network)
    pairing = network.medial_pairing(net)
    _emit({"pairing": [list(p) for p in pairing.pairs]}, args)
    return 0


def cmd_minimal(args):
    net = _load_valid(args.network)
    _emit({"minimal": network.is_minimal(net)}, args)
    return 0


def cmd_equiv(args):
    net1 = _load_valid(args.network)
    net2 = _load_valid(args.other)
    if net1.n != net2.n:
        raise _Precondition("networks have different n")
    factor = groves.equivalence_factor(net1, net2)
    doc = {"equivalent": factor is not None}
    if factor is not None:
        doc["factor"] = netfile.format_rational(factor)
    _emit(doc, args)
    return 0


def cmd_kernel_dim(args):
    if args.n < 2 or args.n > 5:
        raise _Precondition("n must be between 2 and 5")
    _emit({"kernel_dimension": grassmann.kernel_dimension_of_kappa(args.n)}, args)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cactusnet",
        description="Exact electrical invariants of planar cactus networks "
        "and their Grassmannian coordinates.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, network_arg=True):
        p = sub.add_parser(name)
        if network_arg:
            p.add_argument("network", help="path to a network file")
        p.add_argument("--compact", action="store_true",
                       help="single-line output")
        p.set_defaults(func=func)
        return p

    add("validate", cmd_validate)
    add("lambda", cmd_lambda)
    add("response", cmd_response)
    add("resistance", cmd_resistance)
    add("lstar", cmd_lstar)
    p = add("plucker", cmd_plucker)
    p.add_argument("--check-isotropy", action="store_true")
    add("isotropy", cmd_isotropy)
    add("tnn", cmd_tnn)
    p = add("chart", cmd_chart)
    p.add_argument("--from", dest="source", required=True,
                   choices=["response", "resistance"])
    p = add("extract", cmd_extract)
    p.add_argument("--chart", required=True,
                   choices=["not-shorted", "connected"])
    p = add("ydelta", cmd_ydelta)
    p.add_argument("--site", required=True)
    p.add_argument("--direction", required=True, choices=["ytod", "dtoy"])
    p.add_argument("--output", help="write the rewritten network here")
    p = add("dual", cmd_dual)
    p.add_argument("--output", help="write the dual network here")
    add("medial", cmd_medial)
    add("minimal", cmd_minimal)
    p = add("equiv", cmd_equiv)
    p.add_argument("other", help="path to the second network file")
    p = add("kernel-dim", cmd_kernel_dim, network_arg=False)
    p.add_argument("--n", type=int, required=True)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except _InvalidInput as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (_Precondition, OSError, ValueError) as exc:
        # the input parsed and validated, so a failure here means a
        # precondition of the requested computation does not hold
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except AssertionError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
