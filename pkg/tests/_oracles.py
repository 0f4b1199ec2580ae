"""Independent oracles: direct transcriptions of the defining equations.

Everything here is deliberately naive (memoized recursion straight off the
equations) and shares no code with the package; expected values in the test
tables were produced by these before being frozen.  ``count_ack_steps``
additionally gives the exact number of equation applications the rewrite
evaluator must account for, and ``ack_literal_machine`` is the unshortcut
work-stack rewriter used to pin down the production machine's accounting.
"""

from __future__ import annotations

import sys
import threading
from functools import lru_cache

STACK_BYTES = 512 * 1024 * 1024
RECURSION_LIMIT = 500_000


def run_deep(fn, *args):
    """Run fn in a thread with a large stack; deep memoized recursion needs it."""
    result: list = []
    error: list = []

    def target():
        old = sys.getrecursionlimit()
        sys.setrecursionlimit(RECURSION_LIMIT)
        try:
            result.append(fn(*args))
        except BaseException as exc:  # noqa: BLE001 - reraised below
            error.append(exc)
        finally:
            sys.setrecursionlimit(old)

    old_size = threading.stack_size(STACK_BYTES)
    try:
        thread = threading.Thread(target=target)
        thread.start()
        thread.join()
    finally:
        threading.stack_size(old_size)
    if error:
        raise error[0]
    return result[0]


@lru_cache(maxsize=None)
def ack(m: int, n: int) -> int:
    if m == 0:
        return n + 1
    if n == 0:
        return ack(m - 1, 1)
    return ack(m - 1, ack(m, n - 1))


@lru_cache(maxsize=None)
def knuth(a: int, n: int, b: int) -> int:
    if n == 0:
        return a * b
    if b == 0:
        return 1
    return knuth(a, n - 1, knuth(a, n, b - 1))


def conway(chain) -> int:
    return _conway_rev(tuple(reversed(tuple(chain))))


@lru_cache(maxsize=None)
def _conway_rev(xs: tuple) -> int:
    if len(xs) == 0:
        return 1
    if len(xs) == 1:
        return xs[0]
    if len(xs) == 2:
        q, p = xs
        return p**q
    q, p = xs[0], xs[1]
    rest = xs[2:]
    if q == 1:
        return _conway_rev((p,) + rest)
    if p == 1:
        return _conway_rev((1,) + rest)
    inner = _conway_rev((q, p - 1) + rest)
    return _conway_rev((q - 1, inner) + rest)


@lru_cache(maxsize=None)
def count_ack_steps(m: int, n: int) -> int:
    """Equation applications in the naive expansion of ack(m, n)."""
    if m == 0:
        return 1
    if n == 0:
        return 1 + count_ack_steps(m - 1, 1)
    return 1 + count_ack_steps(m, n - 1) + count_ack_steps(m - 1, ack(m, n - 1))


def ack_literal_machine(m0: int, n0: int, max_steps: int, mag_limit: int):
    """The unshortcut rewrite machine: every equation application is one
    loop iteration.  Same status-tuple protocol as the production machine."""
    steps = 0
    n = n0
    peak = max(m0, n0)
    if peak >= mag_limit:
        return (2, 0, steps, peak)
    stack = [m0]
    while stack:
        m = stack.pop()
        steps += 1
        if steps > max_steps:
            return (1, 0, max_steps, peak)
        if m == 0:
            n += 1
            if n > peak:
                peak = n
                if n >= mag_limit:
                    return (2, 0, steps, peak)
        elif n == 0:
            n = 1
            stack.append(m - 1)
        else:
            n -= 1
            stack.append(m - 1)
            stack.append(m)
    return (0, n, steps, peak)
