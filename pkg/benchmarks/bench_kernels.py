"""Compare the compiled and pure-Python kernels.

    python benchmarks/bench_kernels.py [--repeat N]

Times coloring counts and Moebius values on B_n and a few fixed graphs,
checks that both backends agree, and prints the speedup.
"""
from __future__ import annotations

import argparse
import random
import timeit

from sga import _pykernels, kernels
from sga.catalog import B, right_example
from sga.generate import random_graph
from sga.oracle.arrangement import realize
from sga.oracle.lattice import intersection_lattice
from sga.poly import _kernel_inputs


def cases():
    rng = random.Random(2024)
    graphs = [("B4", B(4)), ("B5", B(5)), ("right_example", right_example())]
    graphs += [(f"random-6-{i}", random_graph(rng, 6, "any", "random")) for i in range(2)]
    return graphs


def bench(label, fast, slow, repeat):
    if fast() != slow():
        raise SystemExit(f"{label}: backends disagree")
    t_py = min(timeit.repeat(slow, number=1, repeat=repeat))
    t_c = min(timeit.repeat(fast, number=1, repeat=repeat))
    print(f"{label:<34} python {t_py * 1e3:9.2f} ms   cython {t_c * 1e3:9.2f} ms   x{t_py / t_c:6.1f}")


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--k", type=int, default=3, help="colour bound for the counting kernel")
    args = ap.parse_args(argv)
    if kernels._c is None:
        raise SystemExit("compiled kernels are not built; run `pip install -e . --no-build-isolation`")
    c = kernels._c
    for name, g in cases():
        inputs = _kernel_inputs(g)
        bench(f"count_colorings {name} k={args.k}",
              lambda: c.count_colorings(*inputs, args.k),
              lambda: _pykernels.count_colorings(*inputs, args.k), args.repeat)
        lat = intersection_lattice(realize(g))
        masks, ranks = list(lat.masks), list(lat.ranks)
        bench(f"mobius {name} ({len(masks)} flats)",
              lambda: list(c.mobius(masks, ranks)),
              lambda: _pykernels.mobius(masks, ranks), args.repeat)


if __name__ == "__main__":
    main()
