"""Time the numba and pure-numpy kernel backends on the package's hot loops.

    python benchmarks/bench_kernels.py [--repeat N]

Each kernel is warmed up once (which also triggers numba compilation) and then
timed; the table lists the best of ``--repeat`` runs per backend.
"""

import argparse
import math
import time

import numpy as np

from hammingcode import CodeParams
from hammingcode._kernels import BACKENDS


def best_of(fn, repeat):
    fn()
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def cases():
    rng = np.random.default_rng(0)
    h74, h1511 = CodeParams(4, 3), CodeParams(11, 4)
    data = rng.integers(0, 2, size=(200_000, h1511.m), dtype=np.uint8)
    words = rng.integers(0, 2, size=(200_000, h1511.n), dtype=np.uint8)
    th = math.ceil(0.01 * 2**53)
    idx = h1511.data_index_array
    yield "encode 200k x (15,11)", lambda b: b.encode_blocks(data, idx, h1511.n, h1511.k)
    yield "syndromes 200k x (15,11)", lambda b: b.group_syndromes(words, h1511.k)
    yield "decode 200k x (15,11)", lambda b: b.decode_blocks(words, idx, h1511.k)
    yield "bsc mask 200k x 15", lambda b: b.bsc_mask(7, 0, 200_000, 15, th)
    yield "BSC sim (7,4) 1e6 trials", lambda b: b.count_block_failures(
        h74.data_index_array, h74.n, h74.k, th, 1, 1_000_000
    )
    h2016 = CodeParams(16, 5)
    yield "weights 2^16 x (21,16)", lambda b: b.codeword_weights(h2016.data_index_array, h2016.n, h2016.k)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    names = [n for n in ("numpy", "numba") if n in BACKENDS]
    print(f"{'kernel':<28}" + "".join(f"{n:>12}" for n in names) + f"{'speedup':>10}")
    for label, run in cases():
        t = {n: best_of(lambda: run(BACKENDS[n]), args.repeat) for n in names}
        speed = f"{t['numpy'] / t['numba']:>9.1f}x" if "numba" in t else ""
        print(f"{label:<28}" + "".join(f"{t[n] * 1e3:>10.1f}ms" for n in names) + speed)


if __name__ == "__main__":
    main()
