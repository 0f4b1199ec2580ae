"""Numba int64 kernels mirroring the machines in :mod:`hyperfold._machines`.

The kernels only run when every input, the step budget and (if it must be
enforced in-kernel) the magnitude threshold fit comfortably in int64; any
run that might leave that range bails out with status 3 and the caller
re-runs the pure-Python big-integer machine from scratch.  Within range the
kernels reproduce the Python machines' values, step counts and trip
decisions exactly (tests/test_backends.py holds them to that).

Overflow discipline: values are bailed past 2**61, budgets are gated at
4e18 and shortcut costs at n <= 1e9, so every int64 addition/multiplication
below stays under 2**63 by construction.

Import is optional: when numba is missing this module still imports, with
``AVAILABLE = False``.
"""

from __future__ import annotations

OK = 0
TRIP_STEPS = 1
TRIP_MAGNITUDE = 2
BAIL = 3

#: gating thresholds checked by the backend dispatcher before kernel entry
MAX_SAFE_VALUE = 1 << 60
MAX_SAFE_STEPS = 4 * 10**18
MAX_SAFE_DIGITS = 10**12
#: magnitude caps of at most this many digits are enforced in-kernel; an
#: int64 never exceeds 19 digits, so larger caps simply cannot trip there.
MAX_KERNEL_DIGITS = 18

try:
    import numpy as np
    from numba import njit

    AVAILABLE = True
except ImportError:  # pragma: no cover - exercised only without numba
    AVAILABLE = False

if AVAILABLE:
    _VALUE_BAIL = np.int64(1) << np.int64(61)

    @njit(cache=True)
    def ack_kernel(m0, n0, max_steps, mag_limit, steps0):
        """Mirror of ack_machine. mag_limit <= 0 means 'cannot trip'."""
        steps = steps0
        n = n0
        peak = m0 if m0 > n0 else n0
        if mag_limit > 0 and peak >= mag_limit:
            return TRIP_MAGNITUDE, 0, steps, peak
        cap = 1 << 12
        stack = np.empty(cap, dtype=np.int64)
        top = 0
        stack[top] = m0
        top += 1
        while top > 0:
            top -= 1
            m = stack[top]
            if m == 0:
                steps += 1
                if steps > max_steps:
                    return TRIP_STEPS, 0, max_steps, peak
                n += 1
            elif m == 1:
                # n <= 2**61, so cost <= 2**62 + 2 and steps + cost < 2**63
                cost = 2 * n + 2
                if steps + cost > max_steps:
                    return TRIP_STEPS, 0, max_steps, peak
                steps += cost
                n += 2
            elif m == 2:
                if n > 1_000_000_000:
                    # closed-form cost would overflow int64; let the exact
                    # big-integer machine decide
                    return BAIL, 0, 0, 0
                cost = (2 * n + 7) * n + 5
                if steps + cost > max_steps:
                    return TRIP_STEPS, 0, max_steps, peak
                steps += cost
                n = 2 * n + 3
            elif n == 0:
                steps += 1
                if steps > max_steps:
                    return TRIP_STEPS, 0, max_steps, peak
                n = 1
                if top + 1 > cap:
                    grown = np.empty(cap * 2, dtype=np.int64)
                    grown[:top] = stack[:top]
                    stack = grown
                    cap = cap * 2
                stack[top] = m - 1
                top += 1
                continue
            else:
                steps += 1
                if steps > max_steps:
                    return TRIP_STEPS, 0, max_steps, peak
                n -= 1
                if top + 2 > cap:
                    grown = np.empty(cap * 2, dtype=np.int64)
                    grown[:top] = stack[:top]
                    stack = grown
                    cap = cap * 2
                stack[top] = m - 1
                stack[top + 1] = m
                top += 2
                continue
            if n > peak:
                peak = n
                if mag_limit > 0 and n >= mag_limit:
                    return TRIP_MAGNITUDE, 0, steps, peak
            if n >= _VALUE_BAIL:
                return BAIL, 0, 0, 0
        return OK, n, steps, peak

    @njit(cache=True)
    def _digits10_i64(v):
        d = 1
        t = v
        while t >= 10:
            t //= 10
            d += 1
        return d

    @njit(cache=True)
    def conway_kernel(rev, max_steps, mag_limit, max_digits, steps0):
        """Mirror of conway_machine for chains of length >= 2.

        ``rev`` is the reversed chain as an int64 array.  mag_limit <= 0
        means the cap cannot trip in int64 range; max_digits still drives
        the power pre-check (a result needing more digits than int64 holds
        is a bail, not a trip).
        """
        steps = steps0
        peak = np.int64(0)
        end = rev.shape[0]
        for i in range(end):
            if rev[i] > peak:
                peak = rev[i]
        if mag_limit > 0 and peak >= mag_limit:
            return TRIP_MAGNITUDE, 0, steps, peak
        h0 = rev[0]
        h1 = rev[1]
        idx = 2
        fcap = 1 << 12
        frame_q = np.empty(fcap, dtype=np.int64)
        frame_i = np.empty(fcap, dtype=np.int64)
        ftop = 0
        while True:
            steps += 1
            if steps > max_steps:
                return TRIP_STEPS, 0, max_steps, peak
            if idx == end:
                # p^q with p = h1, q = h0, square-and-multiply
                if h0 == 0:
                    value = np.int64(1)
                elif h1 <= 1:
                    value = h1
                else:
                    # exponent > max_digits already implies a trip, and
                    # keeps the product below int64 range (max_digits is
                    # gated at 1e12, digit counts at 19)
                    if h0 > max_digits or h0 * _digits10_i64(h1) > max_digits:
                        return TRIP_MAGNITUDE, 0, steps, peak
                    result = np.int64(1)
                    square = h1
                    e = h0
                    ok = True
                    while True:
                        if e & 1:
                            steps += 1
                            if steps > max_steps:
                                return TRIP_STEPS, 0, max_steps, peak
                            if result > _VALUE_BAIL // square:
                                ok = False
                                break
                            result *= square
                            if result > peak:
                                peak = result
                        e >>= 1
                        if e == 0:
                            break
                        steps += 1
                        if steps > max_steps:
                            return TRIP_STEPS, 0, max_steps, peak
                        if square > _VALUE_BAIL // square:
                            ok = False
                            break
                        square *= square
                        if square > peak:
                            peak = square
                    if not ok:
                        return BAIL, 0, 0, 0
                    value = result
                if mag_limit > 0 and value >= mag_limit:
                    return TRIP_MAGNITUDE, 0, steps, peak
                if ftop == 0:
                    if value > peak:
                        peak = value
                    return OK, value, steps, peak
                ftop -= 1
                h0 = frame_q[ftop]
                idx = frame_i[ftop]
                h1 = value
                if value > peak:
                    peak = value
            elif h0 == 1:
                h0 = h1
                h1 = rev[idx]
                idx += 1
            elif h1 == 1:
                h0 = 1
                h1 = rev[idx]
                idx += 1
            else:
                if ftop + 1 > fcap:
                    grown_q = np.empty(fcap * 2, dtype=np.int64)
                    grown_i = np.empty(fcap * 2, dtype=np.int64)
                    grown_q[:ftop] = frame_q[:ftop]
                    grown_i[:ftop] = frame_i[:ftop]
                    frame_q = grown_q
                    frame_i = grown_i
                    fcap = fcap * 2
                frame_q[ftop] = h0 - 1
                frame_i[ftop] = idx
                ftop += 1
                h1 -= 1
