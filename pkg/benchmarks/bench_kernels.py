"""Compare the compiled and pure-Python level-scan kernels.

Two measurements:

* kernel: ``analyze`` and ``level_profile`` on the (f0, slopes, durations)
  triples that real crystal paths produce, called directly on each backend;
* pipeline: an end-to-end workload (decorating every element of a crystal
  truncation) run in a subprocess with ``AFFMV_PURE_PYTHON`` set to 0 and 1.

Usage: python3 benchmarks/bench_kernels.py [--repeat N] [--depth D]
"""

import argparse
import os
import subprocess
import sys
import timeit

from affmv._kernels import _pyscan
from affmv.paths import AFFINE, generate_crystal
from affmv.rootdata import pair

try:
    from affmv._kernels import _cscan
except ImportError:
    _cscan = None

PIPELINE = """
import time
from affmv import BACKEND
from affmv.decorations import decorate
from affmv.paths import generate_crystal
C = generate_crystal((0, 8, 32), {depth})
t = time.perf_counter()
for p in C.elements():
    decorate(p)
print(BACKEND, time.perf_counter() - t)
"""


def workload(depth):
    """Level-scan inputs for both simple roots on every crystal element."""
    out = []
    for p in generate_crystal((0, 8, 32), depth).elements():
        for i in (0, 1):
            form = AFFINE.simple_root(i).form
            f0 = pair(form, p.start)
            slopes = [int(pair(form, d)) for d, _ in p.segments]
            durs = [t for _, t in p.segments]
            out.append((f0, slopes, durs))
    return out


def bench_kernel(mod, items, repeat):
    def run():
        for f0, s, d in items:
            mod.analyze(f0, s, d)
            mod.level_profile(f0, s, d)

    return min(timeit.repeat(run, number=1, repeat=repeat))


def bench_pipeline(pure, depth):
    env = dict(os.environ, AFFMV_PURE_PYTHON="1" if pure else "0")
    res = subprocess.run(
        [sys.executable, "-c", PIPELINE.format(depth=depth)], env=env, capture_output=True, text=True, check=True
    )
    backend, secs = res.stdout.split()
    return backend, float(secs)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--depth", type=int, default=6)
    args = ap.parse_args()

    items = workload(args.depth)
    print(f"kernel workload: {len(items)} scans from depth {args.depth}")
    tp = bench_kernel(_pyscan, items, args.repeat)
    print(f"  python  {tp * 1e3:9.2f} ms")
    if _cscan is None:
        print("  cython  not built")
    else:
        tc = bench_kernel(_cscan, items, args.repeat)
        print(f"  cython  {tc * 1e3:9.2f} ms   speedup {tp / tc:.1f}x")

    print("pipeline: decorate every element")
    times = {}
    for pure in (True, False):
        backend, secs = bench_pipeline(pure, args.depth)
        times[backend] = secs
        print(f"  {backend:7s} {secs * 1e3:9.2f} ms")
    if "cython" in times:
        print(f"  speedup {times['python'] / times['cython']:.2f}x")


if __name__ == "__main__":
    main()
