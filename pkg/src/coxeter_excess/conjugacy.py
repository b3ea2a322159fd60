"""Conjugacy classes by orbit closure under conjugation by the simple reflections."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property

from .core import Element, Group
from .parabolic import is_cuspidal_class


@dataclass(frozen=True)
class ConjugacyClass:
    representative: Element
    members: tuple[Element, ...]
    cuspidal: bool

    @property
    def size(self) -> int:
        return len(self.members)

    def __contains__(self, w: Element) -> bool:
        return w in self._member_set

    @cached_property
    def _member_set(self) -> frozenset[Element]:
        return frozenset(self.members)

    def to_json(self, g: Group) -> dict:
        return {"representative": g.format(self.representative), "size": self.size, "cuspidal": self.cuspidal}


def orbit(g: Group, w: Element, generators=None) -> list[Element]:
    """Breadth-first closure of ``{w}`` under ``x -> r x r``."""
    gens = g.generators if generators is None else generators
    seen = {w}
    out = [w]
    queue = deque(out)
    while queue:
        x = queue.popleft()
        for s in gens:
            y = s * x * s
            if y not in seen:
                seen.add(y)
                out.append(y)
                queue.append(y)
    return out


def conjugacy_class(g: Group, w: Element) -> ConjugacyClass:
    members = sorted(orbit(g, w), key=g.sort_key)
    return ConjugacyClass(
        representative=members[0],
        members=tuple(members),
        cuspidal=is_cuspidal_class(g, members),
    )


def class_representatives(g: Group) -> list[ConjugacyClass]:
    """Partition of the group into classes, ordered by representative (length, word)."""
    cached = g._cache.get("classes")
    if cached is None:
        seen: set[Element] = set()
        cached = []
        for w in g.elements:
            if w in seen:
                continue
            cls = conjugacy_class(g, w)
            seen.update(cls.members)
            cached.append(cls)
        cached.sort(key=lambda c: g.sort_key(c.representative))
        g._cache["classes"] = cached
    return list(cached)


def class_of(g: Group, w: Element) -> ConjugacyClass:
    for cls in class_representatives(g):
        if w in cls:
            return cls
    raise ValueError("element does not belong to this group")
