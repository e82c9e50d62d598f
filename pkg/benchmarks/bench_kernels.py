"""Compare the compiled and numpy kernels.

    python benchmarks/bench_kernels.py [--repeat 5]

Times the ratio/gradient kernel at several band sizes and one full
maximization run per backend (the backend is swapped by re-pointing
``se2up.kernels``).
"""

import argparse
import timeit

import numpy as np

from se2up import extremal, kernels


def _swap(module):
    for name in ("ratio_terms", "ratio_and_gradient"):
        setattr(kernels, name, getattr(module, name))


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()

    backends = kernels.backends()
    rng = np.random.default_rng(0)
    rows = []
    for size in (3, 9, 33, 129):
        c = rng.normal(size=size) + 1j * rng.normal(size=size)
        for name, mod in backends.items():
            number = 20000 if size < 100 else 5000
            t = min(timeit.repeat(lambda: mod.ratio_and_gradient(c, -(size // 2)),
                                  number=number, repeat=args.repeat)) / number
            rows.append((f"ratio_and_gradient n={size}", name, t))
    problem = extremal.OptProblem(N=3, seed=0, max_iters=2000)
    for name, mod in backends.items():
        _swap(mod)
        t = min(timeit.repeat(lambda: extremal.maximize(problem), number=1, repeat=args.repeat))
        rows.append(("maximize N=3", name, t))
    _swap(backends.get("cython", backends["python"]))

    width = max(len(r[0]) for r in rows)
    print(f"{'kernel':<{width}}  {'backend':<8}  time")
    for label, name, t in rows:
        unit, scale = ("us", 1e6) if t < 1e-3 else ("ms", 1e3)
        print(f"{label:<{width}}  {name:<8}  {t * scale:9.2f} {unit}")


if __name__ == "__main__":
    main()
