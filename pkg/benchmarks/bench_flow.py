"""Time the compiled flow kernel against the pure-Python one on A1 runs.

    python3 benchmarks/bench_flow.py --sizes 50 100 200 --k 3
"""

import argparse
import os
import tempfile
import time

from kcert import _flow_py, flow
from kcert.cert_a1 import A1State, a1_run
from kcert.oracle import generate
from kcert.stream_io import open_stream


def time_a1(path, k, kernel, repeat):
    flow._max_flow = kernel
    best = float("inf")
    for _ in range(repeat):
        with open_stream(path) as s:
            state = A1State(s.n, k)
            t = time.perf_counter()
            a1_run(s, k, state)
            best = min(best, time.perf_counter() - t)
    return best, state.cert.edge_count, state.flow_ops.ops


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--sizes", type=int, nargs="+", default=[50, 100, 200, 400])
    ap.add_argument("--k", type=int, default=3)
    ap.add_argument("--degree", type=float, default=8.0, help="expected average degree")
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    try:
        from kcert._flow_ext import max_flow as compiled
    except ImportError:
        compiled = None
        print("compiled kernel not built; timing the Python kernel only")

    print(f"{'n':>6} {'m':>7} {'cert':>6} {'ops':>10} {'python s':>10} {'compiled s':>11} {'speedup':>8}")
    with tempfile.TemporaryDirectory() as tmp:
        for n in args.sizes:
            path = os.path.join(tmp, f"g{n}.txt")
            _, order = generate("gnp", {"n": n, "p": min(1.0, args.degree / n)}, 7, path=path)
            py_s, cert, ops = time_a1(path, args.k, _flow_py.max_flow, args.repeat)
            if compiled is None:
                print(f"{n:>6} {len(order):>7} {cert:>6} {ops:>10} {py_s:>10.3f} {'-':>11} {'-':>8}")
                continue
            c_s, c_cert, c_ops = time_a1(path, args.k, compiled, args.repeat)
            assert (c_cert, c_ops) == (cert, ops), "backends disagree"
            print(f"{n:>6} {len(order):>7} {cert:>6} {ops:>10} {py_s:>10.3f} {c_s:>11.3f} {py_s / c_s:>7.1f}x")


if __name__ == "__main__":
    main()
