"""Self-check battery: every structural identity the library relies on, run over one group."""

from __future__ import annotations

import random
from dataclasses import asdict, dataclass
from itertools import combinations
from typing import Callable

from .conjugacy import class_representatives
from .core import Group
from .excess import (
    cycle_excess_closed_form,
    epsilon,
    excess_table,
    n_cycle,
    reversers,
    yk_involution,
)
from .involution import enumerate_involutions, richardson_normal_form
from .parabolic import acts_as_minus_one, enumerate_parabolic, longest_element_J, phi_J
from .witness import certificate_problems, zero_excess_witness
from . import typea

CROSS_CHECK_LIMIT = 2000  # per-element excess recomputed only for groups up to this order


@dataclass
class Check:
    name: str
    passed: bool
    detail: str


def _check(name: str, fn: Callable[[], tuple[bool, str]]) -> Check:
    try:
        ok, detail = fn()
    except Exception as exc:  # a crash is a failed check, not a crashed report
        return Check(name, False, f"{type(exc).__name__}: {exc}")
    return Check(name, ok, detail)


def _first_failure(items, pred, describe) -> tuple[bool, str]:
    count = 0
    for item in items:
        count += 1
        if not pred(item):
            return False, f"fails at {describe(item)}"
    return True, f"{count} cases"


def product_inversion_identity(g: Group, a, b) -> bool:
    """Length and inversion-set formulas for a product ``a b``."""
    b_inv = b.inverse()
    Na, Nb, Nb_inv = a.inversions(), b.inversions(), b_inv.inversions()
    ab = a * b
    if ab.length != a.length + b.length - 2 * len(Na & Nb_inv):
        return False
    # -b^-1 N(a), kept where positive, and b^-1 (N(a) \ N(b^-1)), kept where positive
    minus_part = {~s for s in (b_inv.images[i] for i in Na) if s < 0}
    plus_part = {s for s in (b_inv.images[i] for i in Na - Nb_inv) if s >= 0}
    return ab.inversions() == (Nb - minus_part) | plus_part


def run_battery(
    g: Group,
    samples: int = 10_000,
    seed: int = 0,
    all_witnesses: bool = False,
    processes: int = 1,
) -> list[Check]:
    rng = random.Random(seed)
    elements = g.elements
    w0 = g.longest
    checks: list[Check] = []
    add = checks.append

    add(_check("longest element negates every positive root", lambda: (
        w0.inversions() == frozenset(range(g.num_positive_roots)),
        f"l(w0) = {w0.length}",
    )))
    add(_check("l(w w0) = l(w0) - l(w)", lambda: _first_failure(
        elements, lambda w: (w * w0).length == w0.length - w.length, g.format)))
    add(_check("reduced words round-trip", lambda: _first_failure(
        elements,
        lambda w: len(g.reduced_word(w)) == w.length and g.element(g.reduced_word(w)) == w
        and w.inverse().length == w.length,
        g.format)))

    pairs = [(rng.choice(elements), rng.choice(elements)) for _ in range(samples)]
    add(_check(f"product length and inversion set ({samples} random pairs)", lambda: _first_failure(
        pairs, lambda p: product_inversion_identity(g, *p),
        lambda p: f"({g.format(p[0])!r}, {g.format(p[1])!r})")))

    def double_descent(w):
        for r, s in enumerate(g.generators):
            if (s * w).length < w.length and w.images[r] < 0:
                u = s * w * s
                if u != w and u.length != w.length - 2:
                    return False
        return True

    add(_check("two-sided descent conjugation", lambda: _first_failure(elements, double_descent, g.format)))

    def parabolic_ok(J):
        phi = phi_J(g, J)
        wJ = longest_element_J(g, J)
        members = enumerate_parabolic(g, J)
        central = all(s * wJ == wJ * s for s in (g.generators[r - 1] for r in J))
        return (
            wJ.length == len(phi)
            and wJ.inversions() == phi
            and (wJ * wJ).is_identity()
            and all(w.inversions() <= phi for w in members)
            and acts_as_minus_one(g, wJ, J) == central
        )

    subsets = [frozenset(c) for k in range(g.rank + 1) for c in combinations(range(1, g.rank + 1), k)]
    add(_check("standard parabolic subgroups", lambda: _first_failure(
        subsets, parabolic_ok, lambda J: sorted(J))))

    classes = class_representatives(g)
    add(_check("class sizes partition the group", lambda: (
        sum(c.size for c in classes) == g.order and all(g.order % c.size == 0 for c in classes),
        f"{len(classes)} classes",
    )))

    table = excess_table(g, processes=processes)
    add(_check("excess is even and non-negative", lambda: _first_failure(
        elements, lambda w: table[w] >= 0 and table[w] % 2 == 0, g.format)))
    involutions = enumerate_involutions(g)
    add(_check("involutions and identity have excess 0", lambda: _first_failure(
        [g.identity] + involutions, lambda w: table[w] == 0, g.format)))
    add(_check("excess is inversion invariant", lambda: _first_failure(
        elements, lambda w: table[w] == table[w.inverse()], g.format)))
    if g.order <= CROSS_CHECK_LIMIT:
        per_element = excess_table(g, method="reversers")
        add(_check("pairwise and per-element excess agree", lambda: (
            per_element == table, f"{g.order} elements")))

    def epsilon_identity(cls):
        w = cls.representative
        return all(
            epsilon(g, w, y) == 2 * (y.length - len(y.inversions() & w.inversions()))
            for y in reversers(g, w)
        )

    add(_check("epsilon = 2(l(y) - |N(y) & N(w)|)", lambda: _first_failure(
        classes, epsilon_identity, lambda c: g.format(c.representative))))

    class_min = {}
    for cls in classes:
        m = cls.representative.length
        for w in cls.members:
            class_min[w] = m

    def richardson_ok(x):
        rf = richardson_normal_form(g, x)
        c = rf.conjugator
        return (
            c * x * c.inverse() == rf.w_J
            and acts_as_minus_one(g, rf.w_J, rf.J)
            and rf.w_J.length == class_min[x]
        )

    add(_check("involutions reach a minimal w_J", lambda: _first_failure(involutions, richardson_ok, g.format)))

    def witness_ok(w, cls):
        cert = zero_excess_witness(g, w)
        return not certificate_problems(g, cert) and table[cert.w_star] == 0 and cert.w_star in cls

    if all_witnesses:
        targets = [(w, cls) for cls in classes for w in cls.members]
        label = "every element"
    else:
        targets = [(cls.representative, cls) for cls in classes]
        label = "every class representative"
    add(_check(f"zero-excess witness for {label}", lambda: _first_failure(
        targets, lambda t: witness_ok(*t), lambda t: g.format(t[0]))))

    if typea.is_type_a(g):
        n = typea.degree(g)
        w = n_cycle(g)

        def n_cycle_ok():
            ys = [yk_involution(g, k) for k in range(n)]
            revs = reversers(g, w)
            eps = [epsilon(g, w, y) for y in ys]
            best = min(eps)
            argmin = {k for k in range(n) if eps[k] == best}
            expected = {(n - 1) // 2} if n % 2 else {n // 2, n // 2 - 1}
            ok = (
                set(revs) == set(ys) and len(revs) == n
                and best == cycle_excess_closed_form(n) == table[w]
                and argmin == expected
            )
            return ok, f"n = {n}, excess {best}, minimizing k = {sorted(argmin)}"

        add(_check("n-cycle reversers and closed-form excess", n_cycle_ok))

    return checks


def format_report(g: Group, checks: list[Check]) -> str:
    label = g.name or f"rank-{g.rank} matrix"
    lines = [f"verify {label} (order {g.order})"]
    for c in checks:
        lines.append(f"{'PASS' if c.passed else 'FAIL'}  {c.name}: {c.detail}")
    failed = sum(not c.passed for c in checks)
    lines.append(f"{len(checks) - failed}/{len(checks)} checks passed")
    return "\n".join(lines)


def report_json(g: Group, checks: list[Check]) -> dict:
    return {
        "group": g.name,
        "order": g.order,
        "passed": all(c.passed for c in checks),
        "checks": [asdict(c) for c in checks],
    }
