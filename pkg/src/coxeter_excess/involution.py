"""Involutions and their Richardson normal form (conjugate to a w_J acting as -1 on Phi_J)."""

from __future__ import annotations

from dataclasses import dataclass

from .core import Element, Group, format_word
from .errors import InternalProofViolation, NotInvolution
from .parabolic import acts_as_minus_one, longest_element_J


@dataclass(frozen=True)
class RichardsonForm:
    """``conjugator * source * conjugator^-1 == w_J``, and ``w_J`` acts as -1 on ``Phi_J``."""

    J: frozenset[int]
    conjugator: Element
    source: Element
    w_J: Element
    steps: int

    def to_json(self, g: Group) -> dict:
        return {
            "J": sorted(self.J),
            "conjugator_word": g.format(self.conjugator),
            "wJ_word": g.format(self.w_J),
        }


def enumerate_involutions(g: Group) -> list[Element]:
    """All elements of order 2, ordered by length then reduced word."""
    cached = g._cache.get("involutions")
    if cached is None:
        cached = sorted((w for w in g.elements if w.is_involution()), key=g.sort_key)
        g._cache["involutions"] = cached
    return list(cached)


def richardson_normal_form(g: Group, x: Element) -> RichardsonForm:
    """
    Conjugate the involution ``x`` down to some ``w_J``.

    Each round conjugates by the smallest generator ``r`` with
    ``l(r x r) < l(x)``; such a step always drops the length by exactly two.
    At the fixed point ``J`` is read off as ``{r : x.alpha_r = -alpha_r}``.
    """
    if not x.is_involution():
        raise NotInvolution("richardson_normal_form needs an element of order 2")
    gens = g.generators
    current, conj, steps = x, g.identity, 0
    while True:
        for r, s in enumerate(gens):
            # for an involution, r is a left descent iff it is a right descent
            if current.images[r] < 0:
                candidate = s * current * s
                if candidate.length < current.length:
                    current, conj = candidate, s * conj
                    steps += 1
                    break
        else:
            break

    J = frozenset(r + 1 for r in range(g.rank) if current.images[r] == ~r)
    w_J = longest_element_J(g, J)
    if current != w_J or not acts_as_minus_one(g, current, J):
        raise InternalProofViolation(
            f"descent from {format_word(g.reduced_word(x))} stopped at a non-w_J involution"
        )
    return RichardsonForm(J=J, conjugator=conj, source=x, w_J=w_J, steps=steps)
