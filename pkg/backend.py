import collections
import csv
import json
import logging
import queue
import threading

from bounds import BoundPoint, evaluate, evaluate_flagged, validate_sweep
from errors import ConfigError
from utils import format_float, grid, thread_count

logger = logging.getLogger(__name__)

SWEEP_HEADER = ["method", "eta", "nb", "ns", "bound_bits", "flag"]


def run_pool(tasks, fn, threads=None):
    """
    Evaluate fn over tasks on a pool of worker threads fed from a queue.
    Results come back in task order; the first failing task (by position)
    re-raises its exception.
    """
    tasks = list(tasks)
    if not tasks:
        return []
    threads = max(1, min(threads or thread_count(), len(tasks)))
    jobs = queue.Queue()
    for item in enumerate(tasks):
        jobs.put(item)
    results = [None] * len(tasks)
    errors = []

    def worker():
        while True:
            try:
                i, task = jobs.get_nowait()
            except queue.Empty:
                return
            try:
                results[i] = fn(task)
            except Exception as e:
                errors.append((i, e))

    if threads == 1:
        worker()
    else:
        workers = [threading.Thread(target=worker, daemon=True) for _ in range(threads)]
        for w in workers:
            w.start()
        for w in workers:
            w.join()
    if errors:
        raise min(errors, key=lambda item: item[0])[1]
    return results


class Backend(object):
    def __init__(self):
        self.methods = collections.OrderedDict()
        self.presets = collections.OrderedDict()
        self.suites = collections.OrderedDict()

    def register_method(self, name, fn):
        self.methods[name] = fn

    def register_preset(self, name, spec):
        self.presets[name] = spec

    def register_suite(self, name, suite_cls):
        self.suites[name] = suite_cls

    def preset(self, name):
        try:
            return self.presets[name].clone()
        except KeyError:
            raise ConfigError("Unknown preset '{}'".format(name), code="unknown_preset")

    def evaluate(self, point):
        return evaluate(point, self.methods)

    def sweep_points(self, spec):
        validate_sweep(spec)
        values = grid(spec.start, spec.stop, spec.step)
        points = []
        for method in spec.methods:
            for value in values:
                params = {
                    "kind": spec.kind, "eta": spec.eta, "nb": spec.nb, "ns": spec.ns,
                    "gain": spec.gain, "xi": spec.xi,
                    "squash_eta2": spec.squash_eta2, "squash_eta3": spec.squash_eta3,
                }
                params[spec.variable] = value
                points.append(BoundPoint(str(method), **params))
        return points

    def run_sweep(self, spec, threads=None):
        """Rows (point, result) for every grid point and method, sorted by method then sweep value"""
        points = self.sweep_points(spec)
        results = run_pool(points, lambda p: evaluate_flagged(p, self.methods), threads)
        rows = sorted(zip(points, results), key=lambda row: (row[0].method, getattr(row[0], spec.variable)))
        for method in spec.methods:
            skipped = sum(1 for p, r in rows if p.method == method and r.bits is None)
            logger.info("Sweep %s: %d points, %d skipped", method, len(rows) // len(spec.methods), skipped)
        return rows

    def run_suites(self, names, seed, trials, threads=None):
        results = []
        for name in names:
            suite = self.suites[name](seed=seed, trials=trials)
            results += suite.run(threads)
        return results


class DataLogger(object):
    """Writes sweep rows as CSV (LF line endings) or single-line JSON records"""

    def __init__(self, fp, fmt="csv", precision=12):
        self.fp = fp
        self.fmt = fmt
        self.precision = precision
        self.writer = csv.writer(fp, lineterminator="\n") if fmt == "csv" else None

    def write_header(self):
        if self.writer is not None:
            self.writer.writerow(SWEEP_HEADER)

    def write(self, point, result):
        if self.writer is not None:
            self.writer.writerow([
                point.method,
                format_float(point.eta, self.precision),
                format_float(point.nb, self.precision),
                format_float(point.ns, self.precision),
                format_float(result.bits, self.precision),
                ";".join(result.flags),
            ])
        else:
            self.fp.write(json.dumps(bound_record(point, result)) + "\n")

    def write_rows(self, rows):
        self.write_header()
        for point, result in rows:
            self.write(point, result)


def bound_record(point, result):
    """JSON record: method, eta, nb, ns, [gain], [xi], bound_bits, flags, [raw_bits]"""
    record = collections.OrderedDict()
    record["method"] = point.method
    record["eta"] = point.eta
    record["nb"] = point.nb
    record["ns"] = point.ns
    if point.gain is not None:
        record["gain"] = point.gain
    if point.xi is not None:
        record["xi"] = point.xi
    flags = list(result.flags)
    bits = result.bits
    if bits is not None and bits == float("inf"):
        bits = None
        flags.append("INF")
    record["bound_bits"] = bits
    record["flags"] = flags
    if result.raw is not None and result.raw != result.bits:
        record["raw_bits"] = result.raw
    return record
