"""Compare the compiled and pure-Python kernels on the hot loops.

    python3 benchmarks/bench_kernels.py [--repeat N]

Both backends are fed identical inputs and their outputs are checked to agree
before timings are printed.
"""

import argparse
import sys
import time
from fractions import Fraction

from bbdham import _pykernels, kernels
from bbdham.verify import random_digraph


def best_of(repeat, fn, *args):
    best, out = float("inf"), None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, out


def cases():
    yield "scan a=2 (256 ids)", "hypotheses_scan", (2, 0, 256)
    yield "scan a=3 (all 262144 ids)", "hypotheses_scan", (3, 0, 1 << 18)
    for a in (8, 10, 12):
        batch = [random_digraph(a, Fraction(2, 5), 7, i) for i in range(40)]
        rows = [(list(D.out_rows), list(D.in_rows)) for D in batch]
        yield f"hamiltonian search a={a} (40 digraphs)", "hamiltonian_batch", (rows,)
        yield f"condition A a={a} (40 digraphs)", "condition_batch", (a, rows)


def run(mod, name, args):
    if name == "hamiltonian_batch":
        return [mod.hamiltonian_cycle(o, i) for o, i in args[0]]
    if name == "condition_batch":
        a, rows = args
        return [mod.condition_a(a, o, i) for o, i in rows]
    return getattr(mod, name)(*args)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    if kernels.compiled is None:
        print("compiled kernels not built; nothing to compare", file=sys.stderr)
        return 1
    print(f"{'case':42} {'python s':>10} {'cython s':>10} {'speedup':>8}")
    for label, name, payload in cases():
        tp, out_p = best_of(args.repeat, run, _pykernels, name, payload)
        tc, out_c = best_of(args.repeat, run, kernels.compiled, name, payload)
        if out_p != out_c:
            print(f"{label}: backends disagree", file=sys.stderr)
            return 1
        print(f"{label:42} {tp:10.4f} {tc:10.4f} {tp / max(tc, 1e-9):7.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
