"""Timing comparison of the compiled and pure-Python kernel backends.

Runs the four hot kernels (determinant, minor vector, Gram determinant,
frame norm) over a spread of sizes with both implementations and prints
per-call times plus the speedup.  Representative planes are drawn once per
size from a fixed seed, so both backends see identical inputs.

    python3 benchmarks/bench_kernels.py --repeat 2000
"""

import argparse
import time

import numpy as np

from grasscut import _kernels_py

try:
    from grasscut import _kernels_cy
except ImportError:  # pragma: no cover - source tree without the extension
    _kernels_cy = None

SIZES = ((1, 4), (2, 4), (2, 6), (3, 6), (4, 8))


def _complex(rng, shape):
    return (rng.standard_normal(shape) + 1j * rng.standard_normal(shape)) / np.sqrt(2)


def _time_call(fn, args, repeat):
    fn(*args)  # warm up (and fail fast on bad input)
    start = time.perf_counter()
    for _ in range(repeat):
        fn(*args)
    return (time.perf_counter() - start) / repeat


def bench(repeat: int, seed: int) -> None:
    rng = np.random.default_rng(seed)
    backends = [("python", _kernels_py)]
    if _kernels_cy is not None:
        backends.append(("compiled", _kernels_cy))
    header = f"{'kernel':<24}{'size':<10}" + "".join(
        f"{name + ' (us)':>16}" for name, _ in backends
    )
    if len(backends) == 2:
        header += f"{'speedup':>10}"
    print(header)
    print("-" * len(header))
    for n, big_n in SIZES:
        a = _complex(rng, (n, big_n))
        b = _complex(rng, (n, big_n))
        square = _complex(rng, (n, n))
        cases = (
            ("det", (square,)),
            ("minor_vector", (a,)),
            ("gram_det", (a, b)),
            ("frame_norm", (a,)),
        )
        for kernel, args in cases:
            times = [
                _time_call(getattr(mod, kernel), args, repeat) for _, mod in backends
            ]
            row = f"{kernel:<24}{f'{n}x{big_n}':<10}" + "".join(
                f"{t * 1e6:>16.2f}" for t in times
            )
            if len(times) == 2:
                row += f"{times[0] / times[1]:>9.1f}x"
            print(row)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=2000, help="calls per timing")
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()
    if _kernels_cy is None:
        print("note: compiled backend unavailable, timing pure python only")
    bench(args.repeat, args.seed)


if __name__ == "__main__":
    main()
