"""
Type A as the symmetric group.

Generator ``k`` of ``A_{n-1}`` is the transposition ``(k k+1)`` of
``{1..n}``, and the positive root ``e_i - e_j`` (i < j) is
``alpha_i + ... + alpha_{j-1}``.  An element ``w`` corresponds to the
permutation ``p`` with ``w.(e_i - e_j) = e_p(i) - e_p(j)``.  Products compose
as functions (right factor first), matching the left action on roots:
word ``1 2 3`` is ``(12)(23)(34) = (1234)``.
"""

from __future__ import annotations

import re
from functools import lru_cache

from .core import Element, Group
from .errors import WrongType
from .types import type_matrix

Perm = tuple[int, ...]  # one-line notation, 1-based: p[i - 1] = p(i)


def is_type_a(g: Group) -> bool:
    return g.matrix == type_matrix(f"A{g.rank}")


def degree(g: Group) -> int:
    """``n`` for ``A_{n-1}``."""
    require_type_a(g)
    return g.rank + 1


def require_type_a(g: Group) -> None:
    if not is_type_a(g):
        raise WrongType("this operation is only defined for type A groups in standard labelling")


@lru_cache(maxsize=None)
def _root_pairs(g: Group) -> tuple[dict[tuple[int, int], int], tuple[tuple[int, int], ...]]:
    n = degree(g)
    by_pair = {}
    pairs = []
    for idx, beta in enumerate(g.roots):
        support = sorted(g.root_support(idx))
        i, j = support[0], support[-1] + 1
        assert support == list(range(i, j)) and all(abs(beta[k - 1] - 1.0) < 1e-9 for k in support)
        by_pair[(i, j)] = idx
        pairs.append((i, j))
    assert len(by_pair) == n * (n - 1) // 2
    return by_pair, tuple(pairs)


def root_index(g: Group, i: int, j: int) -> int:
    """Index of the positive root ``e_i - e_j`` (1-based, i < j)."""
    return _root_pairs(g)[0][(i, j)]


def root_pair(g: Group, idx: int) -> tuple[int, int]:
    return _root_pairs(g)[1][idx]


def to_permutation(g: Group, w: Element) -> Perm:
    n = degree(g)
    _, pairs = _root_pairs(g)
    perm = [0] * n
    for i in range(1, n + 1):
        j = i + 1 if i < n else i - 1
        s = w.images[root_index(g, min(i, j), max(i, j))]
        a, b = pairs[s] if s >= 0 else pairs[~s][::-1]
        # w.(e_lo - e_hi) = e_a - e_b
        perm[i - 1] = a if i < j else b
    return tuple(perm)


def from_permutation(g: Group, perm) -> Element:
    n = degree(g)
    perm = tuple(perm)
    if sorted(perm) != list(range(1, n + 1)):
        raise ValueError(f"{perm} is not a permutation of 1..{n}")
    by_pair, pairs = _root_pairs(g)
    images = []
    for i, j in pairs:
        a, b = perm[i - 1], perm[j - 1]
        images.append(by_pair[(a, b)] if a < b else ~by_pair[(b, a)])
    return Element(images)


def cycle_string(perm: Perm) -> str:
    """Disjoint cycle notation, omitting fixed points; ``()`` for the identity."""
    n = len(perm)
    sep = "" if n <= 9 else " "
    seen = set()
    parts = []
    for start in range(1, n + 1):
        if start in seen or perm[start - 1] == start:
            continue
        cycle = []
        k = start
        while k not in seen:
            seen.add(k)
            cycle.append(str(k))
            k = perm[k - 1]
        parts.append("(" + sep.join(cycle) + ")")
    return "".join(parts) or "()"


def parse_cycles(text: str, n: int) -> Perm:
    """Inverse of :func:`cycle_string`; cycles compose right to left."""
    perm = list(range(1, n + 1))
    groups = re.findall(r"\(([^()]*)\)", text)
    for body in reversed(groups):
        body = body.strip()
        if not body:
            continue
        # "(1 10 3)" and "(1,10,3)" are separated; "(134)" is single digits
        if " " in body or "," in body:
            points = [int(c) for c in body.replace(",", " ").split()]
        else:
            points = [int(c) for c in body]
        step = {points[k]: points[(k + 1) % len(points)] for k in range(len(points))}
        perm = [step.get(p, p) for p in perm]
    return tuple(perm)


def cycles(g: Group, w: Element) -> str:
    return cycle_string(to_permutation(g, w))


def from_cycles(g: Group, text: str) -> Element:
    return from_permutation(g, parse_cycles(text, degree(g)))
