"""Time the compiled kernels against the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat N]

Prints one line per kernel with the best-of-N time for each backend and the
speedup.  Inputs are drawn from a fixed seed so runs are comparable.
"""
import argparse
import timeit

from hadring import _fallback
from hadring.rings import random_bits, trial_rng

try:
    from hadring import _kernels
except ImportError:
    _kernels = None

GF256 = 0x11B


def cases():
    rng = trial_rng(0)

    def elems(n, bits=8):
        return tuple(random_bits(rng, bits) for _ in range(n))

    a, b = elems(1), elems(1)
    row_a, row_b = elems(16), elems(16)
    A, B = elems(16 * 16), elems(16 * 16)
    HA = tuple(elems(8) for _ in range(16))
    HB = tuple(elems(8) for _ in range(16))
    return [
        ("mulmod gf(2^8)", lambda m: m.mulmod(a[0], b[0], GF256), 20000),
        ("xor_convolve k=4", lambda m: m.xor_convolve(row_a, row_b, GF256), 2000),
        ("matmul 16x16", lambda m: m.matmul(A, B, 16, 16, 16, GF256), 50),
        ("had_matmul 4x4 k=3", lambda m: m.had_matmul(HA, HB, 4, 4, 4, GF256), 100),
    ]


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--repeat", type=int, default=5)
    args = p.parse_args(argv)
    if _kernels is None:
        print("compiled kernels not built; only the fallback is available")
    print(f"{'kernel':<22}{'python':>12}{'cython':>12}{'speedup':>10}")
    for name, fn, number in cases():
        if _kernels is not None:
            assert fn(_kernels) == fn(_fallback), name
        py = min(timeit.repeat(lambda: fn(_fallback), number=number, repeat=args.repeat)) / number
        if _kernels is None:
            print(f"{name:<22}{py * 1e6:>10.1f}us")
            continue
        cy = min(timeit.repeat(lambda: fn(_kernels), number=number, repeat=args.repeat)) / number
        print(f"{name:<22}{py * 1e6:>10.1f}us{cy * 1e6:>10.1f}us{py / cy:>9.1f}x")


if __name__ == "__main__":
    main()
