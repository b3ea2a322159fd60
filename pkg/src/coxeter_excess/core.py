"""
Finite Coxeter groups realized as signed permutations of their positive roots.

A group is built once from its Coxeter matrix: the positive roots are found
by closing the simple roots under the simple reflections (floating point,
deduplicated at a fixed tolerance), after which every element is stored as
the signed index map  i -> +-j  with  w . beta_i = +-beta_j.  From then on all
arithmetic is exact integer work.

Signed indices are encoded as plain ints: ``j >= 0`` is ``+beta_j`` and
``~j`` (that is ``-j - 1``) is ``-beta_j``, so negating a root is ``~s``.

Conventions:
  * elements act on the left and ``a * b`` acts as ``v -> a.(b.v)``;
  * a word ``[a1, ..., ak]`` (1-based generator indices) is the product
    ``r_a1 * ... * r_ak``;
  * generator subsets ``J`` are given as collections of 1-based indices.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .errors import BadLetter, GroupTooLarge, InvalidMatrix, NonFiniteGroup

ROOT_TOL = 1e-9
DEFAULT_ROOT_CAP = 10_000
DEFAULT_ORDER_CAP = 10_000_000

Word = tuple[int, ...]


@dataclass(frozen=True)
class CoxeterMatrix:
    """Symmetric integer matrix ``m_rs`` of a Coxeter presentation."""

    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = self.entries
        n = len(rows)
        if n == 0:
            raise InvalidMatrix("Coxeter matrix must have rank >= 1")
        clean = []
        for i, row in enumerate(rows):
            if len(row) != n:
                raise InvalidMatrix(f"row {i + 1} has {len(row)} entries, expected {n}")
            clean_row = []
            for j, m in enumerate(row):
                clean_row.append(_check_entry(m, i, j))
            clean.append(tuple(clean_row))
        for i in range(n):
            if clean[i][i] != 1:
                raise InvalidMatrix(f"diagonal entry m[{i + 1}][{i + 1}] must be 1")
            for j in range(i + 1, n):
                if clean[i][j] != clean[j][i]:
                    raise InvalidMatrix(f"matrix is not symmetric at ({i + 1}, {j + 1})")
                if clean[i][j] < 2:
                    raise InvalidMatrix(f"off-diagonal entry m[{i + 1}][{j + 1}] must be >= 2")
        object.__setattr__(self, "entries", tuple(clean))

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> "CoxeterMatrix":
        return cls(tuple(tuple(r) for r in rows))

    @classmethod
    def from_json(cls, obj: dict) -> "CoxeterMatrix":
        """Parse ``{"rank": n, "m": [[...], ...]}``."""
        if not isinstance(obj, dict) or "m" not in obj:
            raise InvalidMatrix('matrix JSON must be an object with key "m"')
        try:
            rows = [list(r) for r in obj["m"]]
        except TypeError:
            raise InvalidMatrix('"m" must be a list of rows') from None
        matrix = cls.from_rows(rows)
        if "rank" in obj and obj["rank"] != matrix.rank:
            raise InvalidMatrix(f'"rank" is {obj["rank"]} but "m" has {matrix.rank} rows')
        return matrix

    def to_json(self) -> dict:
        return {"rank": self.rank, "m": [list(r) for r in self.entries]}

    @property
    def rank(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]


def _check_entry(m, i, j) -> int:
    # bool is an int subclass; floats like 3.0 are tolerated, inf/nan/None are not
    if isinstance(m, bool) or m is None:
        raise InvalidMatrix(f"entry ({i + 1}, {j + 1}) is not an integer: {m!r}")
    if isinstance(m, float):
        if not math.isfinite(m):
            raise InvalidMatrix(f"entry ({i + 1}, {j + 1}) is infinite; only finite groups are supported")
        if m != int(m):
            raise InvalidMatrix(f"entry ({i + 1}, {j + 1}) is not an integer: {m!r}")
        return int(m)
    if isinstance(m, (int, np.integer)):
        return int(m)
    raise InvalidMatrix(f"entry ({i + 1}, {j + 1}) is not an integer: {m!r}")


class Element:
    """
    A group element, stored as its action on positive-root indices.

    ``images[i]`` is the signed index of ``w . beta_i``.  Elements are
    immutable and hashable; multiplication does not need the group.
    """

    __slots__ = ("images",)

    def __init__(self, images: Iterable[int]):
        self.images = tuple(images)

    def __mul__(self, other: "Element") -> "Element":
        a = self.images
        return Element([a[s] if s >= 0 else ~a[~s] for s in other.images])

    def __eq__(self, other):
        return isinstance(other, Element) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return f"Element({list(self.images)})"

    def __getstate__(self):
        return self.images

    def __setstate__(self, state):
        self.images = state

    def act(self, s: int) -> int:
        """Signed index of ``w`` applied to the signed root index ``s``."""
        return self.images[s] if s >= 0 else ~self.images[~s]

    def inverse(self) -> "Element":
        inv = [0] * len(self.images)
        for i, s in enumerate(self.images):
            if s >= 0:
                inv[s] = i
            else:
                inv[~s] = ~i
        return Element(inv)

    @property
    def length(self) -> int:
        return sum(1 for s in self.images if s < 0)

    def inversions(self) -> frozenset[int]:
        return frozenset(i for i, s in enumerate(self.images) if s < 0)

    def is_identity(self) -> bool:
        return all(s == i for i, s in enumerate(self.images))

    def is_involution(self) -> bool:
        """True for elements of order exactly 2."""
        return not self.is_identity() and (self * self).is_identity()


@dataclass(frozen=True, eq=False)
class Group:
    """
    A finite Coxeter group with its positive roots and element list.

    Built by :func:`build_group`; treat as immutable.  Derived data that is
    expensive to recompute (involution list, reduced words) is memoized in
    ``_cache`` but never changes once set.
    """

    matrix: CoxeterMatrix
    name: str | None
    bilinear_form: np.ndarray
    roots: np.ndarray                  # positive roots, simple roots first
    simple_action: tuple[tuple[int, ...], ...]
    generators: tuple[Element, ...]
    identity: Element
    elements: tuple[Element, ...]      # breadth-first from the identity, so by length
    longest: Element
    _cache: dict = field(default_factory=dict, repr=False)

    @property
    def rank(self) -> int:
        return self.matrix.rank

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def num_positive_roots(self) -> int:
        return len(self.roots)

    def __repr__(self):
        label = self.name or f"rank {self.rank}"
        return f"<Coxeter group {label}: order {self.order}, {self.num_positive_roots} positive roots>"

    # -- words --------------------------------------------------------------

    def check_word(self, word: Iterable[int]) -> Word:
        letters = tuple(word)
        for a in letters:
            if isinstance(a, bool) or not isinstance(a, (int, np.integer)) or not 1 <= a <= self.rank:
                raise BadLetter(f"letter {a!r} is not a generator index in 1..{self.rank}")
        return tuple(int(a) for a in letters)

    def element(self, word: Iterable[int] | str) -> Element:
        if isinstance(word, str):
            word = parse_word(word)
        w = self.identity
        for a in self.check_word(word):
            w = w * self.generators[a - 1]
        return w

    def reduced_word(self, w: Element) -> Word:
        cache = self._cache.setdefault("words", {})
        word = cache.get(w)
        if word is None:
            letters = []
            u = w
            while True:
                r = _first_descent(u, self.rank)
                if r is None:
                    break
                letters.append(r + 1)
                u = u * self.generators[r]
            word = tuple(reversed(letters))
            cache[w] = word
        return word

    def sort_key(self, w: Element) -> tuple[int, Word]:
        """Length first, then lexicographic reduced word."""
        return (w.length, self.reduced_word(w))

    def format(self, w: Element) -> str:
        return format_word(self.reduced_word(w))

    # -- subsets ------------------------------------------------------------

    def check_subset(self, J: Iterable[int]) -> frozenset[int]:
        """Validate a 1-based generator subset, returning it as a frozenset."""
        return frozenset(self.check_word(J))

    def root_support(self, i: int) -> frozenset[int]:
        """1-based generator indices with non-zero coefficient in ``beta_i``."""
        supports = self._cache.get("supports")
        if supports is None:
            supports = tuple(
                frozenset(int(r) + 1 for r in np.flatnonzero(np.abs(beta) > ROOT_TOL))
                for beta in self.roots
            )
            self._cache["supports"] = supports
        return supports[i]


def _first_descent(w: Element, rank: int) -> int | None:
    # simple roots occupy indices 0..rank-1, so alpha_r in N(w) iff images[r] < 0
    images = w.images
    for r in range(rank):
        if images[r] < 0:
            return r
    return None


def parse_word(text: str) -> Word:
    """Parse ``"1 2 3"`` (commas also accepted); the empty string is the identity."""
    parts = text.replace(",", " ").split()
    try:
        return tuple(int(p) for p in parts)
    except ValueError:
        raise BadLetter(f"cannot parse word {text!r}: letters must be integers") from None


def format_word(word: Sequence[int]) -> str:
    return " ".join(str(a) for a in word)


def coxeter_form(matrix: CoxeterMatrix) -> np.ndarray:
    n = matrix.rank
    B = np.empty((n, n))
    for i in range(n):
        for j in range(n):
            m = matrix[i, j]
            # exact zero for commuting generators keeps supports clean
            B[i, j] = 0.0 if m == 2 else -math.cos(math.pi / m)
    return B


def _enumerate_roots(B: np.ndarray, root_cap: int):
    n = B.shape[0]
    roots = [np.eye(n)[r] for r in range(n)]
    index = {_root_key(beta): i for i, beta in enumerate(roots)}
    action: list[list[int]] = [[] for _ in range(n)]
    i = 0
    while i < len(roots):
        beta = roots[i]
        for r in range(n):
            if i == r:
                action[r].append(~r)
                continue
            gamma = beta.copy()
            gamma[r] -= 2.0 * float(B[r] @ beta)
            gamma[np.abs(gamma) < ROOT_TOL] = 0.0
            if np.all(gamma >= 0):
                sign = 1
            elif np.all(gamma <= 0):
                sign, gamma = -1, -gamma
            else:
                raise NonFiniteGroup(f"reflection produced a root of mixed sign: {gamma}")
            key = _root_key(gamma)
            j = index.get(key)
            if j is None:
                j = len(roots)
                if j >= root_cap:
                    raise NonFiniteGroup(
                        f"more than {root_cap} positive roots; the Coxeter matrix does not define a finite group"
                    )
                roots.append(gamma)
                index[key] = j
            elif np.max(np.abs(roots[j] - gamma)) > 1e-6:
                raise NonFiniteGroup("root deduplication is ambiguous at the configured tolerance")
            action[r].append(j if sign > 0 else ~j)
        i += 1
    return np.array(roots), tuple(tuple(a) for a in action)


def _root_key(beta: np.ndarray) -> tuple:
    return tuple(np.round(beta, 6) + 0.0)


def _check_form_preserved(B: np.ndarray) -> None:
    n = B.shape[0]
    for r in range(n):
        S = np.eye(n)
        S[r, :] -= 2.0 * B[r]  # coordinates of r.alpha_s are column s
        if np.max(np.abs(S.T @ B @ S - B)) > ROOT_TOL:
            raise InvalidMatrix(f"generator {r + 1} does not preserve the bilinear form")


def build_group(
    matrix: CoxeterMatrix | Sequence[Sequence[int]],
    root_cap: int = DEFAULT_ROOT_CAP,
    order_cap: int = DEFAULT_ORDER_CAP,
    name: str | None = None,
) -> Group:
    """
    Build the finite Coxeter group with the given Coxeter matrix.

    Raises :class:`NonFiniteGroup` if the positive roots exceed ``root_cap``
    and :class:`GroupTooLarge` if the element closure exceeds ``order_cap``.
    """
    if not isinstance(matrix, CoxeterMatrix):
        matrix = CoxeterMatrix.from_rows(matrix)
    B = coxeter_form(matrix)
    _check_form_preserved(B)
    roots, action = _enumerate_roots(B, root_cap)

    N = len(roots)
    identity = Element(range(N))
    gens = tuple(Element(a) for a in action)

    seen = {identity}
    elements = [identity]
    queue = deque([identity])
    while queue:
        w = queue.popleft()
        for s in gens:
            u = w * s
            if u not in seen:
                if len(elements) >= order_cap:
                    raise GroupTooLarge(f"group has more than {order_cap} elements")
                seen.add(u)
                elements.append(u)
                queue.append(u)

    longest = max(elements, key=lambda w: w.length)
    assert longest.length == N
    return Group(
        matrix=matrix,
        name=name,
        bilinear_form=B,
        roots=roots,
        simple_action=action,
        generators=gens,
        identity=identity,
        elements=tuple(elements),
        longest=longest,
    )


# Functional interface --------------------------------------------------------


def element_from_word(g: Group, word: Iterable[int] | str) -> Element:
    return g.element(word)


def multiply(g: Group, a: Element, b: Element) -> Element:
    return a * b


def inverse(g: Group, a: Element) -> Element:
    return a.inverse()


def inversion_set(g: Group, a: Element) -> frozenset[int]:
    """Indices of positive roots sent to negative roots by ``a``."""
    return a.inversions()


def length(g: Group, a: Element) -> int:
    return a.length


def reduced_word(g: Group, a: Element) -> Word:
    """
    Reduced word by repeated right descent, always stripping the smallest
    descent generator first.  Deterministic.
    """
    return g.reduced_word(a)


def longest_element(g: Group) -> Element:
    return g.longest


def conjugate(a: Element, c: Element) -> Element:
    """``c * a * c^-1``."""
    return c * a * c.inverse()
