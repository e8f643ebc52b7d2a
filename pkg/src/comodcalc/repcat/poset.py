"""Finite posets given by a relation matrix."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Hashable, Sequence

from ..report import CheckReport, MismatchError, Violation

__all__ = ["FinitePoset", "check_poset", "chain", "point", "discrete"]


@dataclass(frozen=True)
class FinitePoset:
    """Elements with ``leq[i][j]`` true iff ``elements[i] <= elements[j]``."""

    elements: tuple
    leq: tuple[tuple[bool, ...], ...]

    def __init__(self, elements: Sequence[Hashable], leq: Sequence[Sequence]):
        els = tuple(elements)
        rel = tuple(tuple(bool(v) for v in row) for row in leq)
        if len(rel) != len(els) or any(len(r) != len(els) for r in rel):
            raise MismatchError("leq matrix does not match the number of elements")
        if len(set(els)) != len(els):
            raise MismatchError("repeated poset element")
        object.__setattr__(self, "elements", els)
        object.__setattr__(self, "leq", rel)

    @classmethod
    def from_relations(cls, elements: Sequence[Hashable], pairs: Sequence[tuple]) -> "FinitePoset":
        """Reflexive-transitive closure of the given ``(x, y)`` pairs."""
        els = list(elements)
        idx = {e: i for i, e in enumerate(els)}
        n = len(els)
        rel = [[i == j for j in range(n)] for i in range(n)]
        for x, y in pairs:
            rel[idx[x]][idx[y]] = True
        for k in range(n):
            for i in range(n):
                if rel[i][k]:
                    for j in range(n):
                        if rel[k][j]:
                            rel[i][j] = True
        return cls(els, rel)

    def __len__(self) -> int:
        return len(self.elements)

    def index(self, x) -> int:
        try:
            return self._index[x]
        except KeyError:
            raise MismatchError(f"{x!r} is not an element of the poset") from None

    @cached_property
    def _index(self) -> dict:
        return {e: i for i, e in enumerate(self.elements)}

    def le(self, x, y) -> bool:
        return self.leq[self.index(x)][self.index(y)]

    def lt(self, x, y) -> bool:
        return x != y and self.le(x, y)

    def up_set(self, x) -> list:
        return [y for y in self.elements if self.le(x, y)]

    def down_set(self, x) -> list:
        return [y for y in self.elements if self.le(y, x)]

    def comparable_pairs(self) -> list[tuple]:
        """All ``(x, y)`` with ``x < y``, in element order."""
        return [(x, y) for x in self.elements for y in self.elements if self.lt(x, y)]

    @cached_property
    def covers(self) -> tuple[tuple, ...]:
        """Covering pairs ``x < y`` with nothing strictly between."""
        out = []
        for x, y in self.comparable_pairs():
            if not any(self.lt(x, z) and self.lt(z, y) for z in self.elements):
                out.append((x, y))
        return tuple(out)

    def chains(self, x, y) -> list[list]:
        """Every maximal chain of covering pairs from ``x`` up to ``y``."""
        if x == y:
            return [[x]]
        out = []
        for a, b in self.covers:
            if a == x and self.le(b, y):
                out.extend([x] + rest for rest in self.chains(b, y))
        return out

    def chain_between(self, x, y) -> list:
        """A fixed (lexicographically first) chain from ``x`` to ``y``."""
        if not self.le(x, y):
            raise MismatchError(f"{x!r} is not below {y!r}")
        path = [x]
        while path[-1] != y:
            cur = path[-1]
            nxt = next(b for a, b in self.covers if a == cur and self.le(b, y))
            path.append(nxt)
        return path

    def opposite(self) -> "FinitePoset":
        n = len(self.elements)
        return FinitePoset(self.elements, [[self.leq[j][i] for j in range(n)] for i in range(n)])

    def topological_order(self) -> list:
        """Elements sorted so that ``x < y`` puts ``x`` first (stable on ties)."""
        return sorted(self.elements, key=lambda e: (sum(self.le(z, e) for z in self.elements), self.index(e)))


def check_poset(P: FinitePoset) -> CheckReport:
    v = []
    n = len(P.elements)
    L = P.leq
    for i in range(n):
        if not L[i][i]:
            v.append(Violation("reflexive", (P.elements[i],)))
    for i in range(n):
        for j in range(n):
            if i != j and L[i][j] and L[j][i]:
                v.append(Violation("antisymmetric", (P.elements[i], P.elements[j])))
            for k in range(n):
                if L[i][j] and L[j][k] and not L[i][k]:
                    v.append(Violation("transitive", (P.elements[i], P.elements[j], P.elements[k])))
    return CheckReport("poset", tuple(v))


def chain(n: int) -> FinitePoset:
    """``0 < 1 < ... < n-1``."""
    return FinitePoset(list(range(n)), [[i <= j for j in range(n)] for i in range(n)])


def point() -> FinitePoset:
    return chain(1)


def discrete(n: int) -> FinitePoset:
    return FinitePoset(list(range(n)), [[i == j for j in range(n)] for i in range(n)])
