"""Reference and fold-form evaluators for the hyperoperation hierarchy.

Each function of the hierarchy is implemented twice:

* ``*_ref`` — the self-referential rewrite equations, run on an explicit
  work-stack machine (:mod:`hyperfold._machines`, with optional numba
  acceleration via :mod:`hyperfold.backend`);
* ``*_prim`` — the equivalent fold form, built from nested closures over
  :func:`hyperfold.folds.foldn` / :func:`hyperfold.folds.foldr_seq`:

      ack       = foldn (\\f -> foldn f (f 1)) (+1)
      knuth a   = foldn (\\f -> foldn f 1) (a*)
      cback     = foldr aux cpow
          where aux o k = foldn aux2 (flip k o)
                  where aux2 f = foldn (f . subtract 1) (k 0 o)

The two families agree pointwise on every input where both finish within
budget; that agreement is this package's reason to exist, and the property
suites hammer it.

Conway chains are taken in written, left-to-right order (you type 3->3->2
as written); the reversed working order is internal.
"""

from __future__ import annotations

import sys
from typing import Callable, Sequence

from . import backend
from ._machines import OK, TRIP_MAGNITUDE, TRIP_STEPS, knuth_machine
from .budget import (
    Budget,
    BudgetExceeded,
    ConstructionLimit,
    DomainError,
    MagnitudeExceeded,
    Meter,
    checked_pow,
)
from .folds import foldr_seq

#: a Conway chain in written order; every entry >= 1, empty chain denotes 1
Chain = tuple[int, ...]

DEFAULT_BUDGET = Budget()

#: fold-form evaluation nests one Python frame per closure layer; beyond
#: this the interpreter stack is at risk, and nothing this deep fits any
#: sane budget anyway
CLOSURE_DEPTH_LIMIT = 1200

#: kept below what an 8 MB C stack comfortably holds; depth overruns then
#: surface as RecursionError and are converted to ConstructionLimit
_RECURSION_CEILING = 12000


def _require_natural(name: str, value, meter: Meter) -> int:
    if not isinstance(value, int) or isinstance(value, bool) or value < 0:
        raise DomainError(f"{name} must be a non-negative integer", meter.stats())
    return value


def _ensure_depth(depth: int, meter: Meter) -> None:
    if depth > CLOSURE_DEPTH_LIMIT:
        raise ConstructionLimit(
            f"fold form would nest {depth} closures "
            f"(limit {CLOSURE_DEPTH_LIMIT})",
            meter.stats(),
        )
    if sys.getrecursionlimit() < _RECURSION_CEILING:
        sys.setrecursionlimit(_RECURSION_CEILING)


def _finish_machine(result, meter: Meter) -> int:
    """Fold a machine status tuple back into the shared meter."""
    status, value, steps, peak = result
    meter.steps = steps
    if peak > meter.peak:
        meter.peak = peak
    if status == OK:
        return value
    if status == TRIP_STEPS:
        raise BudgetExceeded(
            f"step budget exhausted (max_steps={meter.max_steps})", meter.stats()
        )
    if status == TRIP_MAGNITUDE:
        raise MagnitudeExceeded(
            f"value exceeds {meter.max_digits} digits "
            f"(max_digits={meter.max_digits})",
            meter.stats(),
        )
    raise AssertionError(f"machine returned unknown status {status}")


# ---------------------------------------------------------------------------
# Ackermann
# ---------------------------------------------------------------------------


def eval_ack_ref(m: int, n: int, meter: Meter) -> int:
    m = _require_natural("m", m, meter)
    n = _require_natural("n", n, meter)
    result = backend.run_ack(
        m, n, meter.max_steps, meter.mag_limit, meter.max_digits, meter.steps
    )
    return _finish_machine(result, meter)


def eval_ack_prim(m: int, n: int, meter: Meter) -> int:
    m = _require_natural("m", m, meter)
    n = _require_natural("n", n, meter)
    meter.note(m)
    meter.note(n)
    _ensure_depth(m, meter)

    def succ(x: int) -> int:
        meter.spend()
        v = x + 1
        meter.note(v)
        return v

    h = succ
    remaining = m
    while remaining > 0:
        remaining -= 1
        meter.spend()  # one application of the closure transformer
        h = _ack_layer(h, meter)
    return h(n)


def _ack_layer(f: Callable[[int], int], meter: Meter) -> Callable[[int], int]:
    # \f -> foldn f (f 1)
    def g(x: int) -> int:
        meter.spend()
        acc = f(1)
        remaining = x
        while remaining > 0:
            remaining -= 1
            acc = f(acc)
        return acc

    return g


# ---------------------------------------------------------------------------
# Knuth up-arrows (extended with level 0 = multiplication)
# ---------------------------------------------------------------------------


def eval_knuth_ref(a: int, n: int, b: int, meter: Meter) -> int:
    a = _require_natural("a", a, meter)
    n = _require_natural("n", n, meter)
    b = _require_natural("b", b, meter)
    result = knuth_machine(
        a, n, b, meter.max_steps, meter.mag_limit, meter.steps
    )
    return _finish_machine(result, meter)


def eval_knuth_prim(a: int, n: int, b: int, meter: Meter) -> int:
    a = _require_natural("a", a, meter)
    n = _require_natural("n", n, meter)
    b = _require_natural("b", b, meter)
    meter.note(a)
    meter.note(b)
    meter.note(n)
    _ensure_depth(n, meter)

    def times_a(x: int) -> int:
        meter.spend()
        v = a * x
        meter.note(v)
        return v

    h = times_a
    remaining = n
    while remaining > 0:
        remaining -= 1
        meter.spend()
        h = _knuth_layer(h, meter)
    return h(b)


def _knuth_layer(f: Callable[[int], int], meter: Meter) -> Callable[[int], int]:
    # \f -> foldn f 1
    def g(x: int) -> int:
        meter.spend()
        acc = 1
        remaining = x
        while remaining > 0:
            remaining -= 1
            acc = f(acc)
        return acc

    return g


# ---------------------------------------------------------------------------
# Conway chained arrows
# ---------------------------------------------------------------------------


def _checked_chain(entries: Sequence[int], meter: Meter) -> Chain:
    chain = tuple(entries)
    for e in chain:
        if not isinstance(e, int) or isinstance(e, bool) or e < 1:
            raise DomainError(
                f"chain entries must be integers >= 1, got {e!r}", meter.stats()
            )
    return chain


def eval_conway_ref(entries: Sequence[int], meter: Meter) -> int:
    chain = _checked_chain(entries, meter)
    result = backend.run_conway(
        chain, meter.max_steps, meter.mag_limit, meter.max_digits, meter.steps
    )
    return _finish_machine(result, meter)


def eval_conway_prim(entries: Sequence[int], meter: Meter) -> int:
    chain = _checked_chain(entries, meter)
    for e in chain:
        meter.note(e)
    # front end: trivial lengths, then reverse, reduce every entry by one,
    # and hand (tail, q, p) to the fold-built back end
    if len(chain) == 0:
        meter.spend()
        meter.note(1)
        return 1
    if len(chain) == 1:
        meter.spend()
        return chain[0]
    _ensure_depth(len(chain), meter)
    meter.spend(len(chain))  # the subtract-one pass
    reduced = [e - 1 for e in reversed(chain)]
    q, p, tail = reduced[0], reduced[1], tuple(reduced[2:])
    back = _build_cback(tail, meter)
    return back(q, p)


def eval_cback_prim(
    reduced_tail: Sequence[int], q: int, p: int, meter: Meter
) -> int:
    q = _require_natural("q", q, meter)
    p = _require_natural("p", p, meter)
    tail = tuple(reduced_tail)
    for e in tail:
        _require_natural("tail entry", e, meter)
        meter.note(e)
    meter.note(q)
    meter.note(p)
    _ensure_depth(len(tail) + 2, meter)
    back = _build_cback(tail, meter)
    return back(q, p)


def _build_cback(tail: Chain, meter: Meter):
    # foldr aux cpow over the reduced, reversed tail; carriers are binary
    # functions (q, p) -> value
    def cpow_fn(q: int, p: int) -> int:
        meter.spend()
        return checked_pow(p + 1, q + 1, meter)

    def aux(o: int, k) -> Callable[[int, int], int]:
        meter.spend()
        return _conway_layer(o, k, meter)

    return foldr_seq(aux, cpow_fn, tail)


def _conway_layer(o: int, k, meter: Meter):
    # aux o k = foldn aux2 (flip k o)
    def layer(q: int, p: int) -> int:
        meter.spend()
        if q > CLOSURE_DEPTH_LIMIT:
            raise ConstructionLimit(
                f"fold form would nest {q} closures "
                f"(limit {CLOSURE_DEPTH_LIMIT})",
                meter.stats(),
            )

        def flip_base(p2: int) -> int:
            meter.spend()
            return k(p2, o)

        g = flip_base
        remaining = q
        while remaining > 0:
            remaining -= 1
            meter.spend()
            g = _conway_inner(g, k, o, meter)
        return g(p)

    return layer


def _conway_inner(f: Callable[[int], int], k, o: int, meter: Meter):
    # aux2 f = foldn (f . subtract 1) (k 0 o)
    def h(p: int) -> int:
        meter.spend()
        acc = k(0, o)
        remaining = p
        while remaining > 0:
            remaining -= 1
            acc = f(acc - 1)
        return acc

    return h


# ---------------------------------------------------------------------------
# public, budget-threaded entry points
# ---------------------------------------------------------------------------


def _run(fn, *args, budget: Budget):
    meter = Meter(budget)
    try:
        value = fn(*args, meter)
    except RecursionError:
        # compound closure nesting across layers can overrun the static
        # per-dimension guards; surface it as the same kind of limit
        raise ConstructionLimit(
            "fold form exceeded the safe closure nesting depth", meter.stats()
        ) from None
    return value, meter.stats()


def ack_ref(m: int, n: int, budget: Budget = DEFAULT_BUDGET):
    """Ackermann via the rewrite equations. Returns (value, stats)."""
    return _run(eval_ack_ref, m, n, budget=budget)


def ack_prim(m: int, n: int, budget: Budget = DEFAULT_BUDGET):
    """Ackermann via the nested-fold form. Returns (value, stats)."""
    return _run(eval_ack_prim, m, n, budget=budget)


def knuth_ref(a: int, n: int, b: int, budget: Budget = DEFAULT_BUDGET):
    """a ^(n) b via the rewrite equations (level 0 = a*b)."""
    return _run(eval_knuth_ref, a, n, b, budget=budget)


def knuth_prim(a: int, n: int, b: int, budget: Budget = DEFAULT_BUDGET):
    """a ^(n) b via the nested-fold form."""
    return _run(eval_knuth_prim, a, n, b, budget=budget)


def conway_ref(chain: Sequence[int], budget: Budget = DEFAULT_BUDGET):
    """Chain value via the rewrite equations; chain in written order."""
    return _run(eval_conway_ref, chain, budget=budget)


def conway_prim(chain: Sequence[int], budget: Budget = DEFAULT_BUDGET):
    """Chain value via front-end reduction plus the fold-built back end."""
    return _run(eval_conway_prim, chain, budget=budget)


def cback_prim(
    reduced_tail: Sequence[int], q: int, p: int, budget: Budget = DEFAULT_BUDGET
):
    """The fold-built back end alone, on already reduced+reversed input."""
    return _run(eval_cback_prim, reduced_tail, q, p, budget=budget)


def cpow(q: int, p: int, budget: Budget = DEFAULT_BUDGET):
    """(p+1) ** (q+1), budget-counted. Returns (value, stats)."""
    meter = Meter(budget)
    q = _require_natural("q", q, meter)
    p = _require_natural("p", p, meter)
    meter.note(q)
    meter.note(p)
    value = checked_pow(p + 1, q + 1, meter)
    return value, meter.stats()
