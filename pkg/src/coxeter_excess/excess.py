"""
Involution factorizations and the excess statistic.

Every factorization ``w = x y`` into elements with ``x^2 = y^2 = 1`` is
``x = w y`` for some ``y`` in the reverser set of ``w``: the ``y`` with
``y^2 = 1`` and ``(w y)^2 = 1``.  The identity counts as a square root of 1
here, so involutions factor as ``w * 1`` and get excess 0.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import floor

from .core import Element, Group
from .errors import BadIndex, NotReverser, NotStronglyReal
from .involution import enumerate_involutions
from . import typea


@dataclass(frozen=True)
class SpartanPair:
    x: Element
    y: Element
    defect: int

    def to_json(self, g: Group) -> dict:
        return {"x": g.format(self.x), "y": g.format(self.y)}


def square_roots_of_one(g: Group) -> list[Element]:
    """The identity followed by every involution."""
    return [g.identity] + enumerate_involutions(g)


def is_reverser(w: Element, y: Element) -> bool:
    if not (y * y).is_identity():
        return False
    x = w * y
    return (x * x).is_identity()


def reversers(g: Group, w: Element) -> list[Element]:
    """All ``y`` with ``y^2 = 1`` and ``(w y)^2 = 1``, identity first, then by (length, word)."""
    return [y for y in square_roots_of_one(g) if is_reverser(w, y)]


def is_strongly_real(g: Group, w: Element) -> tuple[bool, Element | None]:
    for y in square_roots_of_one(g):
        if is_reverser(w, y):
            return True, y
    return False, None


def epsilon(g: Group, w: Element, y: Element) -> int:
    """``l(w y) + l(y) - l(w)`` for a reverser ``y`` of ``w``."""
    if not is_reverser(w, y):
        raise NotReverser("y is not an involution reversing w")
    return (w * y).length + y.length - w.length


def excess(g: Group, w: Element) -> int:
    values = [epsilon(g, w, y) for y in reversers(g, w)]
    if not values:
        raise NotStronglyReal("element is not a product of two involutions")
    return min(values)


def spartan_pairs(g: Group, w: Element) -> list[SpartanPair]:
    """Factorizations ``(w y, y)`` achieving the excess, in reverser order."""
    scored = [(epsilon(g, w, y), y) for y in reversers(g, w)]
    if not scored:
        raise NotStronglyReal("element is not a product of two involutions")
    best = min(e for e, _ in scored)
    return [SpartanPair(w * y, y, e) for e, y in scored if e == best]


# Whole-group tables ------------------------------------------------------------

_WORKER_ROOTS: list[tuple[int, ...]] = []


def _init_worker(roots):
    global _WORKER_ROOTS
    _WORKER_ROOTS = roots


def _pair_minima(xs: list[tuple[int, ...]], ys: list[tuple[int, ...]] | None = None) -> dict:
    ys = _WORKER_ROOTS if ys is None else ys
    y_lengths = [sum(1 for s in y if s < 0) for y in ys]
    best: dict[tuple[int, ...], int] = {}
    for a in xs:
        la = sum(1 for s in a if s < 0)
        for b, lb in zip(ys, y_lengths):
            w = tuple([a[s] if s >= 0 else ~a[~s] for s in b])
            value = la + lb - sum(1 for s in w if s < 0)
            old = best.get(w)
            if old is None or value < old:
                best[w] = value
    return best


def excess_table(
    g: Group, processes: int = 1, method: str = "pairs", nontrivial_y: bool = False
) -> dict[Element, int]:
    """
    Excess of every element.

    ``method="pairs"`` minimizes over all products ``x y`` of two square roots
    of 1 (quadratic in the number of involutions); ``method="reversers"``
    calls :func:`excess` element by element.  Both are exhaustive.

    ``nontrivial_y=True`` restricts the right factor to genuine involutions.
    That only changes the identity, whose value becomes 2 instead of 0.
    """
    if method == "reversers":
        table = {w: excess(g, w) for w in g.elements}
        if nontrivial_y:
            table[g.identity] = min(2 * y.length for y in enumerate_involutions(g))
        return table
    if method != "pairs":
        raise ValueError(f"unknown method {method!r}")

    roots = [y.images for y in square_roots_of_one(g)]
    ys = roots[1:] if nontrivial_y else roots
    if processes <= 1 or len(roots) < 64:
        best = _pair_minima(roots, ys)
    else:
        chunks = [roots[k::processes * 4] for k in range(processes * 4)]
        best = {}
        with ProcessPoolExecutor(max_workers=processes, initializer=_init_worker, initargs=(ys,)) as pool:
            for part in pool.map(_pair_minima, chunks):
                for w, v in part.items():
                    if v < best.get(w, v + 1):
                        best[w] = v

    table = {}
    for w in g.elements:
        if w.images not in best:
            raise NotStronglyReal(f"element {g.format(w)!r} is not a product of two involutions")
        table[w] = best[w.images]
    return table


def excess_distribution(
    g: Group, processes: int = 1, method: str = "pairs", nontrivial_y: bool = False
) -> dict[int, int]:
    """Histogram ``{excess: number of elements}``, sorted by excess.  See :func:`excess_table`."""
    counts: dict[int, int] = {}
    for e in excess_table(g, processes=processes, method=method, nontrivial_y=nontrivial_y).values():
        counts[e] = counts.get(e, 0) + 1
    return dict(sorted(counts.items()))


def default_processes() -> int:
    return os.cpu_count() or 1


# The n-cycle in type A -------------------------------------------------------------


def n_cycle(g: Group) -> Element:
    """``(1 2 ... n)`` in ``A_{n-1}``."""
    n = typea.degree(g)
    return typea.from_permutation(g, [i % n + 1 for i in range(1, n + 1)])


def yk_involution(g: Group, k: int) -> Element:
    """
    ``y_k = s_k t_k`` in ``A_{n-1}``: ``s_k`` reverses ``1..k`` and ``t_k``
    reverses ``k+1..n``, each written as the product of transpositions
    ``(1 k)(2 k-1)...`` and ``(k+1 n)(k+2 n-1)...``.
    """
    n = typea.degree(g)
    if not 0 <= k <= n - 1:
        raise BadIndex(f"k must lie in 0..{n - 1}, got {k}")
    perm = list(range(1, n + 1))
    transpositions = [(i, k + 1 - i) for i in range(1, floor(k / 2) + 1)]
    transpositions += [(k + i, n + 1 - i) for i in range(1, floor((n - k) / 2) + 1)]
    for a, b in transpositions:
        perm[a - 1], perm[b - 1] = perm[b - 1], perm[a - 1]
    return typea.from_permutation(g, perm)


def cycle_excess_closed_form(n: int) -> int:
    """Excess of the n-cycle in Sym(n): floor((n - 2)^2 / 2)."""
    if n < 2:
        raise BadIndex("n must be >= 2")
    return (n - 2) ** 2 // 2
