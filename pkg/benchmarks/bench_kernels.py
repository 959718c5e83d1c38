"""Compiled vs pure-Python kernel timings.

    python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import timeit

from satpowers import _kernels
from satpowers.k3 import K3Params
from satpowers.monomial import MonomialIdeal, power

CASES = {
    "degree_counts (x^2,xy,yz^3)^8, d=3, top=48": (
        _kernels.degree_counts,
        lambda: (list(power(MonomialIdeal(3, [(2, 0, 0), (1, 1, 0), (0, 1, 3)]), 8).gens), 3, 48),
    ),
    "degree_counts (x,y,z,w)^12, d=4, top=24": (
        _kernels.degree_counts,
        lambda: (list(power(MonomialIdeal.maximal(4), 12).gens), 4, 24),
    ),
    "blowup_sigma K3(4,3,2,8), n<=512": (
        _kernels.blowup_sigma,
        lambda: (4, K3Params().D, 8, 512),
    ),
}


def main() -> None:
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    backends = ["python"] + (["cython"] if _kernels.BACKEND == "cython" else [])
    print(f"{'case':<46} " + " ".join(f"{b:>10}" for b in backends) + "   speedup")
    for name, (fn, make_args) in CASES.items():
        fargs = make_args()
        results = {b: fn(*fargs, backend=b) for b in backends}
        if len(results) == 2:
            assert results["python"] == results["cython"], name
        times = {b: min(timeit.repeat(lambda b=b: fn(*fargs, backend=b), number=1, repeat=args.repeat)) for b in backends}
        speed = f"{times['python'] / times['cython']:8.1f}x" if "cython" in times else "       n/a"
        print(f"{name:<46} " + " ".join(f"{times[b]:9.4f}s" for b in backends) + f"  {speed}")


if __name__ == "__main__":
    main()
