"""Pure-Python rewrite machines for the reference evaluators.

Each machine is an explicit work-stack loop — never native recursion — and
returns a plain status tuple ``(status, value, steps, peak_value)`` with
status 0 = ok, 1 = step budget tripped, 2 = magnitude cap tripped.  The
numba kernels in :mod:`hyperfold._kernels` mirror these loops instruction
for instruction so that both backends report identical stats; change one and
you must change the other.

Counters are kept in locals and compared against precomputed limits: these
loops run tens of millions of iterations per call, so no attribute lookups
or method calls in the hot path.
"""

from __future__ import annotations

from .budget import decimal_digits

OK = 0
TRIP_STEPS = 1
TRIP_MAGNITUDE = 2


def ack_machine(m0, n0, max_steps, mag_limit, steps0=0):
    """Ackermann by the three rewrite equations, one step per application.

    Levels 0..2 resolve in closed form: from value n, level 1 yields n+2 in
    2n+2 applications and level 2 yields 2n+3 in 2n^2+7n+5 applications —
    the exact application counts of the plain rewrite cascade, in which
    every intermediate value is bounded by the level's result.  Values,
    success stats, budget trip points (in step space) and whether the
    magnitude cap trips therefore all match the unshortcut machine
    (tests/test_hyperops.py holds it to that); the one divergence is the
    reported trip *kind* when both limits would be crossed inside a single
    closed-form resolution (the step check runs first here).  Without the
    closed forms, ack(4, 1) alone costs 2,862,984,010 machine iterations.
    """
    steps = steps0
    n = n0
    peak = m0 if m0 > n0 else n0
    if peak >= mag_limit:
        return (TRIP_MAGNITUDE, 0, steps, peak)
    stack = [m0]
    pop = stack.pop
    push = stack.append
    while stack:
        m = pop()
        if m == 0:
            steps += 1
            if steps > max_steps:
                return (TRIP_STEPS, 0, max_steps, peak)
            n += 1
        elif m == 1:
            cost = 2 * n + 2
            if steps + cost > max_steps:
                return (TRIP_STEPS, 0, max_steps, peak)
            steps += cost
            n += 2
        elif m == 2:
            cost = (2 * n + 7) * n + 5
            if steps + cost > max_steps:
                return (TRIP_STEPS, 0, max_steps, peak)
            steps += cost
            n = 2 * n + 3
        elif n == 0:
            steps += 1
            if steps > max_steps:
                return (TRIP_STEPS, 0, max_steps, peak)
            n = 1
            push(m - 1)
            continue
        else:
            steps += 1
            if steps > max_steps:
                return (TRIP_STEPS, 0, max_steps, peak)
            n -= 1
            push(m - 1)
            push(m)
            continue
        if n > peak:
            peak = n
            if n >= mag_limit:
                return (TRIP_MAGNITUDE, 0, steps, peak)
    return (OK, n, steps, peak)


def knuth_machine(a, n0, b, max_steps, mag_limit, steps0=0):
    """Extended up-arrow by its rewrite equations; level 0 is one multiply."""
    steps = steps0
    val = b
    peak = max(a, n0, b)
    if peak >= mag_limit:
        return (TRIP_MAGNITUDE, 0, steps, peak)
    stack = [n0]
    pop = stack.pop
    push = stack.append
    while stack:
        k = pop()
        steps += 1
        if steps > max_steps:
            return (TRIP_STEPS, 0, max_steps, peak)
        if k == 0:
            val = a * val
            if val > peak:
                peak = val
                if val >= mag_limit:
                    return (TRIP_MAGNITUDE, 0, steps, peak)
        elif val == 0:
            val = 1
            if peak < 1:
                peak = 1
        else:
            val -= 1
            push(k - 1)
            push(k)
    return (OK, val, steps, peak)


def _pow_counted(base, exponent, max_steps, mag_limit, max_digits, steps, peak):
    """Square-and-multiply with the shared charging rules.

    Returns (status, value, steps, peak).  Fails fast when the digit bound
    exponent * digits(base) exceeds max_digits; the bound is exact for
    base <= 1, so 1^huge never trips.
    """
    if exponent == 0:
        return (OK, 1, steps, peak)
    if base <= 1:
        return (OK, base, steps, peak)
    if exponent * decimal_digits(base) > max_digits:
        return (TRIP_MAGNITUDE, 0, steps, peak)
    result = 1
    square = base
    e = exponent
    while True:
        if e & 1:
            steps += 1
            if steps > max_steps:
                return (TRIP_STEPS, 0, max_steps, peak)
            result *= square
            if result > peak:
                peak = result
        e >>= 1
        if e == 0:
            return (OK, result, steps, peak)
        steps += 1
        if steps > max_steps:
            return (TRIP_STEPS, 0, max_steps, peak)
        square *= square
        if square > peak:
            peak = square


def conway_machine(entries, max_steps, mag_limit, max_digits, steps0=0):
    """Chained-arrow rewriting over the reversed chain, one step per rule.

    A configuration is (h0, h1, idx): the list h0 : h1 : rev[idx:], where
    rev is the reversed chain (rewrites only ever touch the first two
    positions, so the tail is shared by index).  The general rule pushes a
    continuation frame (h0 - 1, idx) and descends into (h0, h1 - 1, idx);
    a finished sub-value v resumes the top frame as (q', v, idx').
    """
    steps = steps0
    peak = 0
    for e in entries:
        if e > peak:
            peak = e
    if peak >= mag_limit:
        return (TRIP_MAGNITUDE, 0, steps, peak)
    rev = tuple(reversed(entries))
    end = len(rev)
    if end == 0:
        steps += 1
        if steps > max_steps:
            return (TRIP_STEPS, 0, max_steps, peak)
        return (OK, 1, steps, 1 if peak < 1 else peak)
    if end == 1:
        steps += 1
        if steps > max_steps:
            return (TRIP_STEPS, 0, max_steps, peak)
        return (OK, rev[0], steps, peak)
    h0, h1, idx = rev[0], rev[1], 2
    frame_q = []
    frame_i = []
    push_q = frame_q.append
    push_i = frame_i.append
    pop_q = frame_q.pop
    pop_i = frame_i.pop
    while True:
        steps += 1
        if steps > max_steps:
            return (TRIP_STEPS, 0, max_steps, peak)
        if idx == end:
            # two-element base: reversed [q, p] denotes p^q
            status, value, steps, peak = _pow_counted(
                h1, h0, max_steps, mag_limit, max_digits, steps, peak
            )
            if status != OK:
                return (status, 0, steps, peak)
            if value >= mag_limit:
                return (TRIP_MAGNITUDE, 0, steps, peak)
            if not frame_q:
                return (OK, value, steps, peak)
            h0 = pop_q()
            idx = pop_i()
            h1 = value
        elif h0 == 1:
            # last written entry is 1: drop it
            h0 = h1
            h1 = rev[idx]
            idx += 1
        elif h1 == 1:
            # next-to-last written entry is 1: chain collapses past it
            h0 = 1
            h1 = rev[idx]
            idx += 1
        else:
            push_q(h0 - 1)
            push_i(idx)
            h1 -= 1
