"""Time the numba and numpy versions of each kernel on the same inputs.

    python3 benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import time

import numpy as np

from socode import kernels
from socode._backend import HAVE_NUMBA
from socode.embedding import coset_table
from socode.io import load_bundled
from socode.reed_muller import rm_generator, so_matrix
from socode.search import message_parity


def best_of(fn, repeat):
    fn()  # warm-up, includes jit compilation
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def cases():
    rm = rm_generator(3, 8)
    yield "rref RM(3,8) 93x256", (kernels.rref_nb, kernels.rref_np), (np.array(rm.words), rm.cols)

    rng = np.random.default_rng(0)
    g = rng.integers(0, 2, (20, 120), dtype=np.uint8)
    from socode.gf2 import BitMatrix

    w = np.array(BitMatrix.from_array(g).words)
    yield "weight histogram k=20 n=120", (kernels.weight_histogram_nb, kernels.weight_histogram_np), (w, 120, 0)

    colsyn = np.array(so_matrix(6).column_syndromes())
    yield "coset BFS k=6", (kernels.coset_bfs_nb, kernels.coset_bfs_np), (colsyn, 21, 64)

    seed = load_bundled("so45_5")
    table = coset_table(5)
    args = (
        np.ascontiguousarray(seed.column_ints(), dtype=np.int64),
        np.array(so_matrix(5).column_syndromes()),
        np.asarray(table.weights),
        np.asarray(table.keys),
        table.base,
        message_parity(5),
        3,
    )
    yield "puncture scan [45,5] t<=3", (kernels.puncture_scan_nb, kernels.puncture_scan_np), args


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    opts = ap.parse_args()
    if not HAVE_NUMBA:
        raise SystemExit("numba is not installed; nothing to compare")
    print(f"{'kernel':34} {'numba':>10} {'numpy':>10} {'ratio':>7}")
    for name, (nb, npy), args in cases():
        t_nb = best_of(lambda: nb(*args), opts.repeat)
        t_np = best_of(lambda: npy(*args), opts.repeat)
        print(f"{name:34} {t_nb * 1e3:9.2f}ms {t_np * 1e3:9.2f}ms {t_np / t_nb:6.1f}x")


if __name__ == "__main__":
    main()
