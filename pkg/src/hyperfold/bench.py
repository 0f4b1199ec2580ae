"""Backend benchmark: numba kernel vs. the pure-Python machine.

Usage: ``python -m hyperfold.bench``.

The one genuinely hot loop in this package is the chained-arrow rewrite
machine: a budget-bounded descent that runs millions of rule applications
before tripping (successful chain evaluations are either tiny or
astronomically infeasible, so the trips are the long runs).  The Ackermann
machine resolves its low levels in closed form and never iterates long
enough to be worth timing; its kernel exists for parity and headroom.
"""

from __future__ import annotations

import time

from . import _kernels, _machines
from .budget import Budget, magnitude_limit


def _cases():
    b = Budget()
    mag = magnitude_limit(b.max_digits)
    for steps in (10**6, 10**7):
        chain = (3, 3, 3)
        if _kernels.AVAILABLE:
            import numpy as np

            rev = np.array(list(reversed(chain)), dtype=np.int64)
            jit_fn = (
                lambda r=rev, s=steps: _kernels.conway_kernel(r, s, 0, b.max_digits, 0)
            )
        else:
            jit_fn = None
        yield (
            f"conway 3->3->3 budget trip ({steps:.0e} steps)",
            lambda s=steps: _machines.conway_machine(chain, s, mag, b.max_digits),
            jit_fn,
        )


def _time(fn):
    t0 = time.perf_counter()
    result = fn()
    return time.perf_counter() - t0, result


def main() -> int:
    if not _kernels.AVAILABLE:
        print("numba not importable: timing the pure-Python machine only")
    for name, py_fn, jit_fn in _cases():
        print(name)
        if jit_fn is not None:
            _time(jit_fn)  # compile before timing
            jit_s, jit_res = _time(jit_fn)
            print(
                f"  numba : {jit_s:8.3f}s  ({jit_res[2] / jit_s / 1e6:6.1f}M steps/s)"
            )
        py_s, py_res = _time(py_fn)
        print(f"  python: {py_s:8.3f}s  ({py_res[2] / py_s / 1e6:6.1f}M steps/s)")
        if jit_fn is not None:
            same = tuple(int(x) for x in jit_res) == tuple(int(x) for x in py_res)
            print(f"  results identical: {same}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
