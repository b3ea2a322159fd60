"""Standard parabolic subgroups W_J, their positive roots, longest elements and cuspidality."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable

from .core import Element, Group


@dataclass(frozen=True)
class ParabolicDescriptor:
    subset: frozenset[int]
    root_indices: frozenset[int]
    longest: Element
    order: int


def phi_J(g: Group, J: Iterable[int]) -> frozenset[int]:
    """Indices of positive roots supported on the generators in ``J``."""
    J = g.check_subset(J)
    return frozenset(i for i in range(g.num_positive_roots) if g.root_support(i) <= J)


def enumerate_parabolic(g: Group, J: Iterable[int]) -> list[Element]:
    gens = [g.generators[r - 1] for r in sorted(g.check_subset(J))]
    seen = {g.identity}
    out = [g.identity]
    queue = deque(out)
    while queue:
        w = queue.popleft()
        for s in gens:
            u = w * s
            if u not in seen:
                seen.add(u)
                out.append(u)
                queue.append(u)
    return out


def longest_element_J(g: Group, J: Iterable[int]) -> Element:
    """The longest element ``w_J`` of ``W_J``; the identity when ``J`` is empty."""
    J = sorted(g.check_subset(J))
    w = g.identity
    # climb: right-multiply by any r in J that is not yet a descent
    while True:
        for r in J:
            if w.images[r - 1] >= 0:
                w = w * g.generators[r - 1]
                break
        else:
            return w


def descriptor(g: Group, J: Iterable[int]) -> ParabolicDescriptor:
    J = g.check_subset(J)
    return ParabolicDescriptor(
        subset=J,
        root_indices=phi_J(g, J),
        longest=longest_element_J(g, J),
        order=len(enumerate_parabolic(g, J)),
    )


def in_parabolic(g: Group, w: Element, J: Iterable[int]) -> bool:
    """Membership in the standard parabolic ``W_J``, via ``N(w) <= Phi_J^+``."""
    return w.inversions() <= phi_J(g, J)


def acts_as_minus_one(g: Group, w: Element, J: Iterable[int]) -> bool:
    return all(w.images[i] == ~i for i in phi_J(g, J))


def maximal_proper_subsets(g: Group) -> list[frozenset[int]]:
    full = frozenset(range(1, g.rank + 1))
    return [full - {r} for r in range(1, g.rank + 1)]


def is_cuspidal_class(g: Group, class_members: Iterable[Element]) -> bool:
    """True iff no member lies in any proper standard parabolic subgroup."""
    phis = [phi_J(g, J) for J in maximal_proper_subsets(g)]
    for w in class_members:
        inv = w.inversions()
        if any(inv <= phi for phi in phis):
            return False
    return True


def format_subset(J: Iterable[int]) -> str:
    return ",".join(str(r) for r in sorted(J))


def parse_subset(text: str) -> frozenset[int]:
    return frozenset(int(p) for p in text.replace(",", " ").split())
