"""Coxeter matrices for the standard finite types, parsed from symbols like ``"B3"`` or ``"I2(7)"``."""

from __future__ import annotations

import json
import re
from functools import lru_cache
from pathlib import Path

from .core import DEFAULT_ROOT_CAP, CoxeterMatrix, Group, build_group
from .errors import InvalidMatrix

_SYMBOL = re.compile(r"^\s*([ABDFHI])_?\s*(\d+)\s*(?:\(\s*(\d+)\s*\))?\s*$", re.IGNORECASE)


def _path(n: int, bonds: dict[tuple[int, int], int] | None = None) -> list[list[int]]:
    m = [[1 if i == j else 2 for j in range(n)] for i in range(n)]
    for i in range(n - 1):
        m[i][i + 1] = m[i + 1][i] = 3
    for (i, j), v in (bonds or {}).items():
        m[i][j] = m[j][i] = v
    return m


def type_matrix(symbol: str) -> CoxeterMatrix:
    """
    Coxeter matrix for a type symbol.

    Labelling: ``A_n`` is the path 1-2-...-n; ``B_n`` has its 4-bond between
    generators n-1 and n; ``D_n`` branches at n-2 to n-1 and n; ``F4`` has the
    4-bond in the middle; ``H3``/``H4`` have the 5-bond between 1 and 2.
    """
    match = _SYMBOL.match(symbol)
    if not match:
        raise InvalidMatrix(f"unrecognised type symbol {symbol!r}")
    letter, n, extra = match.group(1).upper(), int(match.group(2)), match.group(3)
    if extra is not None and letter != "I":
        raise InvalidMatrix(f"unrecognised type symbol {symbol!r}")

    if letter == "A":
        if n < 1:
            raise InvalidMatrix("A_n needs n >= 1")
        rows = _path(n)
    elif letter == "B":
        if n < 2:
            raise InvalidMatrix("B_n needs n >= 2")
        rows = _path(n, {(n - 2, n - 1): 4})
    elif letter == "D":
        if n < 4:
            raise InvalidMatrix("D_n needs n >= 4")
        rows = _path(n, {(n - 2, n - 1): 2, (n - 3, n - 1): 3})
    elif letter == "F":
        if n != 4:
            raise InvalidMatrix("only F4 exists")
        rows = _path(4, {(1, 2): 4})
    elif letter == "H":
        if n not in (3, 4):
            raise InvalidMatrix("only H3 and H4 exist")
        rows = _path(n, {(0, 1): 5})
    else:
        if n != 2 or extra is None:
            raise InvalidMatrix("dihedral types are written I2(m)")
        m = int(extra)
        if m < 2:
            raise InvalidMatrix("I2(m) needs m >= 2")
        rows = [[1, m], [m, 1]]
    return CoxeterMatrix.from_rows(rows)


def canonical_symbol(symbol: str) -> str:
    match = _SYMBOL.match(symbol)
    if not match:
        raise InvalidMatrix(f"unrecognised type symbol {symbol!r}")
    letter, n, extra = match.group(1).upper(), match.group(2), match.group(3)
    return f"{letter}{n}" + (f"({int(extra)})" if extra else "")


@lru_cache(maxsize=None)
def group_of_type(symbol: str, root_cap: int = DEFAULT_ROOT_CAP) -> Group:
    """Build (and memoize) the group for a type symbol."""
    return build_group(type_matrix(symbol), root_cap=root_cap, name=canonical_symbol(symbol))


def load_matrix(path: str | Path) -> CoxeterMatrix:
    try:
        obj = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise InvalidMatrix(f"{path}: not valid JSON ({exc})") from None
    return CoxeterMatrix.from_json(obj)
