"""Time each hot kernel under the compiled and pure-Python back ends.

    python benchmarks/bench_kernels.py [--repeat 3]

Results are checked for equality before timings are printed.
"""

from __future__ import annotations

import argparse
import os
import time

from ghwforge import kernels
from ghwforge.families import reed_muller_1, rs_code
from ghwforge.field import field_of_order
from ghwforge.harness import cubic_dichotomy_instance, random_full_rank_code
from ghwforge.rng import XorShift64Star


def workloads():
    rng = XorShift64Star(7)
    rm = reed_muller_1(field_of_order(2), 4)
    rs = rs_code(13, 12, 4)
    rand7 = random_full_rank_code(rng, field_of_order(5), 22, 5)
    cubic = cubic_dichotomy_instance().code
    big = [[rng.below(16) for _ in range(40)] for _ in range(30)]
    f16 = field_of_order(16)

    def rows(C):
        return C.G.tolist()

    yield "rref 30x40 GF(16)", lambda: kernels.rref(f16, big)
    yield "min weight RM(1,4)/GF(2)", lambda: kernels.codeword_min_weight(rm.spec, rows(rm), True)
    yield "min weight RS(12,4)/GF(13)", lambda: kernels.codeword_min_weight(rs.spec, rows(rs), False)
    yield "zero sets random [22,5]_5", lambda: kernels.max_zero_sets(rand7.spec, rows(rand7))
    yield "zero sets cubic GF(7)", lambda: kernels.max_zero_sets(cubic.spec, rows(cubic))
    yield "support masks RS(12,4)", lambda: kernels.combo_support_masks(rs.spec, rows(rs), 0, [0, 1, 2, 3])
    # every candidate lies in the plane x2 = x0, so no transversal exists and the search is exhaustive
    plane = [(1, a, 1) for a in range(7)] + [(0, 1, 0)]
    yield "transversal GF(7), none exists", lambda: kernels.independent_transversal(
        field_of_order(7), [plane] * 3, 3
    )


def timed(fn, repeat: int) -> tuple[float, object]:
    best, out = float("inf"), None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if not kernels.HAVE_COMPILED:
        raise SystemExit("compiled kernels not built; run `pip install -e . --no-build-isolation`")
    print(f"{'workload':32} {'python s':>10} {'cython s':>10} {'speedup':>8}")
    for name, fn in workloads():
        os.environ["GHWFORGE_PURE"] = "1"
        t_py, r_py = timed(fn, args.repeat)
        os.environ.pop("GHWFORGE_PURE")
        t_c, r_c = timed(fn, args.repeat)
        if r_py != r_c:
            raise SystemExit(f"{name}: back ends disagree")
        print(f"{name:32} {t_py:10.4f} {t_c:10.4f} {t_py / max(t_c, 1e-9):8.1f}x")


if __name__ == "__main__":
    main()
