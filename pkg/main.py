import argparse
import collections
import contextlib
import csv
import json
import logging
import math
import sys

import bounds
import verify
from backend import Backend, DataLogger
from bounds import BoundPoint, SweepSpec
from bounds.config import KINDS
from broadcast import (BroadcastConfig, BroadcastSpec, broadcast_bound_limit, broadcast_gaussian_check,
                       broadcast_region)
from configLoader import ConfigLoader
from errors import BoundsError, ConfigError
from utils import format_float, thread_count

logger = logging.getLogger("main")

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INVALID = 2
EXIT_IO = 3

BROADCAST_HEADER = ["subset", "bound_bits", "limit_bits", "gaussian_check_bits"]


def figure_presets():
    """Parameter sets of the published comparison plots"""
    fig4 = {"methods": ["dsw18", "gew16", "plob"], "variable": "ns", "start": 0.0, "stop": 1.0,
            "step": 0.01, "eta": 0.1}
    return collections.OrderedDict([
        ("fig3", SweepSpec({"methods": ["dsw18", "gew16", "plob"], "variable": "eta", "start": 0.5,
                            "stop": 1.0, "step": 0.005, "ns": 0.1, "nb": 1.0})),
        ("fig4a", SweepSpec(dict(fig4, nb=3e-7))),
        ("fig4b", SweepSpec(dict(fig4, nb=1e-3))),
        ("fig4c", SweepSpec(dict(fig4, nb=0.1))),
    ])


def make_backend():
    backend = Backend()
    for name, fn in bounds.METHODS.items():
        backend.register_method(name, fn)
    for name, spec in figure_presets().items():
        backend.register_preset(name, spec)
    for name, suite in verify.SUITES.items():
        backend.register_suite(name, suite)
    return backend


def make_config_loader():
    loader = ConfigLoader()
    loader.registerType(SweepSpec)
    loader.registerType(BroadcastConfig)
    return loader


@contextlib.contextmanager
def open_output(path):
    if not path or path == "-":
        yield sys.stdout
        return
    with open(path, "w", newline="") as fp:
        yield fp


def load_config(path, expected):
    with open(path) as fp:
        data = make_config_loader().loadFile(fp, expected.dtypes["type_"].default)
    if not isinstance(data, expected):
        raise ConfigError("{} holds a '{}' configuration, expected '{}'".format(
            path, data.type_, expected.dtypes["type_"].default))
    return data


def finite_or_none(value):
    return value if value is not None and math.isfinite(value) else None


def cmd_bound(args, backend):
    point = BoundPoint(args.method, kind=args.kind, eta=args.eta, nb=args.nb, ns=args.ns,
                       gain=args.gain, xi=args.xi, squash_eta2=args.squash_eta2,
                       squash_eta3=args.squash_eta3)
    result = backend.evaluate(point)
    logger.info("%s: %s bits %s", point.method, result.bits, list(result.flags))
    with open_output(args.out) as fp:
        out = DataLogger(fp, args.format or "json", args.precision)
        out.write_rows([(point, result)])
    return EXIT_OK


def sweep_spec(args, backend):
    if args.preset and args.config:
        raise ConfigError("--preset and --config are mutually exclusive")
    if args.preset:
        spec = backend.preset(args.preset)
    elif args.config:
        spec = load_config(args.config, SweepSpec)
    else:
        spec = SweepSpec()
    return spec.updated(
        methods=args.method, variable=args.variable, start=args.start, stop=args.stop,
        step=args.step, kind=args.kind, eta=args.eta, nb=args.nb, ns=args.ns, gain=args.gain,
        xi=args.xi, squash_eta2=args.squash_eta2, squash_eta3=args.squash_eta3, out=args.out,
        precision=args.precision)


def cmd_sweep(args, backend):
    spec = sweep_spec(args, backend)
    rows = backend.run_sweep(spec, thread_count())
    with open_output(spec.out) as fp:
        DataLogger(fp, args.format or "csv", spec.precision).write_rows(rows)
    return EXIT_OK


def cmd_broadcast(args, backend):
    if args.config:
        config = load_config(args.config, BroadcastConfig)
        receivers, ns, out = dict(config.receivers), config.ns, config.out
    else:
        receivers, ns, out = None, 1.0, ""
    spec = BroadcastSpec.from_pairs(args.eta) if args.eta else BroadcastSpec(receivers or {})
    ns = args.ns if args.ns is not None else ns
    out = args.out or out

    region = collections.OrderedDict()
    for subset, bits in broadcast_region(spec, ns).items():
        region[subset] = collections.OrderedDict([
            ("bound_bits", bits),
            ("limit_bits", broadcast_bound_limit(spec, subset)),
            ("gaussian_check_bits", broadcast_gaussian_check(spec, subset, ns)),
        ])

    with open_output(out) as fp:
        if (args.format or "json") == "csv":
            writer = csv.writer(fp, lineterminator="\n")
            writer.writerow(BROADCAST_HEADER)
            for subset, values in region.items():
                writer.writerow([",".join(subset)] + [format_float(v, args.precision)
                                                      for v in values.values()])
        else:
            record = collections.OrderedDict(
                (",".join(subset), collections.OrderedDict((k, finite_or_none(v)) for k, v in values.items()))
                for subset, values in region.items())
            fp.write(json.dumps(record) + "\n")
    return EXIT_OK


def cmd_verify(args, backend):
    names = list(backend.suites) if args.suite == "all" else [args.suite]
    results = backend.run_suites(names, args.seed, args.trials, thread_count())
    failed = [r for r in results if not r.passed]
    with open_output(args.out) as fp:
        for r in results:
            record = collections.OrderedDict(r._asdict())
            record["max_violation"] = finite_or_none(r.max_violation)
            fp.write(json.dumps(record) + "\n")
        summary = collections.OrderedDict([
            ("suites", names), ("seed", args.seed), ("invariants", len(results)),
            ("failed", [r.suite + "." + r.invariant for r in failed]), ("passed", not failed)])
        fp.write(json.dumps({"summary": summary}) + "\n")
    if failed:
        logger.warning("%d of %d invariants failed", len(failed), len(results))
        return EXIT_FAILED
    return EXIT_OK


def channel_arguments(parser):
    parser.add_argument("--kind", choices=KINDS)
    parser.add_argument("--eta", type=float, help="channel transmissivity")
    parser.add_argument("--nb", type=float, help="thermal photons of the environment")
    parser.add_argument("--ns", type=float, help="mean input photon number")
    parser.add_argument("--gain", type=float, help="amplifier gain")
    parser.add_argument("--xi", type=float, help="additive-noise variance")
    parser.add_argument("--squash-eta2", type=float, help="loss-environment squashing transmissivity")
    parser.add_argument("--squash-eta3", type=float, help="gain-environment squashing transmissivity")


def build_parser(backend):
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-v", "--verbose", action="count", default=0)
    common.add_argument("--out", help="output file (default: standard output)")
    common.add_argument("--format", choices=("csv", "json"))
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--precision", type=int, help="significant digits in CSV output")

    parser = argparse.ArgumentParser(
        description="Energy-constrained secret-key capacity bounds for bosonic Gaussian channels")
    sub = parser.add_subparsers(dest="command")
    sub.required = True

    p = sub.add_parser("bound", parents=[common], help="evaluate one bound")
    p.add_argument("--method", required=True, choices=list(backend.methods))
    channel_arguments(p)
    p.set_defaults(func=cmd_bound, kind="thermal", nb=0.0, squash_eta2=0.5, squash_eta3=0.5,
                   precision=12)

    p = sub.add_parser("sweep", parents=[common], help="sweep bounds over a parameter grid")
    p.add_argument("--method", action="append", choices=list(backend.methods))
    p.add_argument("--preset", choices=list(backend.presets))
    p.add_argument("--config", help="JSON sweep configuration")
    p.add_argument("--variable", choices=("eta", "ns"))
    p.add_argument("--start", type=float)
    p.add_argument("--stop", type=float)
    p.add_argument("--step", type=float)
    channel_arguments(p)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("broadcast", parents=[common], help="enumerate the broadcast key region")
    p.add_argument("--eta", action="append", metavar="NAME=ETA", help="receiver transmissivity")
    p.add_argument("--ns", type=float, help="mean input photon number")
    p.add_argument("--config", help="JSON broadcast configuration")
    p.set_defaults(func=cmd_broadcast, precision=12)

    p = sub.add_parser("verify", parents=[common], help="run the invariant suites")
    p.add_argument("--suite", default="all", choices=list(backend.suites) + ["all"])
    p.add_argument("--trials", type=int, default=200)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None):
    backend = make_backend()
    parser = build_parser(backend)
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code

    level = logging.WARNING
    if args.verbose == 1:
        level = logging.INFO
    elif args.verbose > 1:
        level = logging.DEBUG
    logging.basicConfig(level=level, stream=sys.stderr,
                        format="%(asctime)s %(levelname)s %(name)s: %(message)s")
    logging.getLogger().setLevel(level)

    try:
        return args.func(args, backend)
    except BoundsError as e:
        logger.debug("%s failed", args.command, exc_info=True)
        sys.stderr.write(json.dumps(e.to_record()) + "\n")
        return EXIT_INVALID
    except OSError as e:
        sys.stderr.write(json.dumps({"error": "io_error", "message": str(e)}) + "\n")
        return EXIT_IO


if __name__ == '__main__':
    sys.exit(main())
