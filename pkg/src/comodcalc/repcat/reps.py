"""Representations of a finite poset in coalgebras or algebras.

Arrows are given at least on covering pairs ``x < y``; the arrow attached to
any ``x <= y`` is the composite along a fixed chain of covers.  Arrows given on
non-covering pairs are accepted and checked against that composite.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Mapping

from ..algmod import Algebra, AlgebraMorphism, check_algebra, check_algebra_morphism
from ..coalg import Coalgebra, CoalgebraMorphism, check_coalgebra, check_coalgebra_morphism, dual_algebra
from ..report import CheckReport, MismatchError, Violation
from .poset import FinitePoset, check_poset

__all__ = ["CoalgebraRep", "AlgebraRep", "check_representation", "constant_rep", "dual_rep"]


@dataclass(frozen=True, eq=False)
class _Rep:
    poset: FinitePoset
    fibers: Mapping[Any, Any]
    arrows: Mapping[tuple, Any]
    name: str = ""
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        for x in self.poset.elements:
            if x not in self.fibers:
                raise MismatchError(f"representation has no fiber at {x!r}")
        for (x, y) in self.arrows:
            if not self.poset.lt(x, y):
                raise MismatchError(f"arrow {x!r} -> {y!r} is not a strict relation")
        for (x, y) in self.poset.covers:
            if (x, y) not in self.arrows:
                raise MismatchError(f"missing arrow on the covering pair {x!r} < {y!r}")

    @property
    def field(self):
        return self.fibers[self.poset.elements[0]].field

    def fiber(self, x):
        self.poset.index(x)
        return self.fibers[x]

    def _identity(self, x):
        raise NotImplementedError

    def morphism(self, x, y):
        """The arrow attached to ``x <= y`` (identity when ``x == y``)."""
        key = (x, y)
        if key not in self._cache:
            if x == y:
                out = self._identity(x)
            else:
                path = self.poset.chain_between(x, y)
                out = self.arrows[(path[0], path[1])]
                for a, b in zip(path[1:], path[2:]):
                    out = self.arrows[(a, b)].compose(out)
            self._cache[key] = out
        return self._cache[key]


class CoalgebraRep(_Rep):
    """A functor from a finite poset to finite-dimensional coalgebras."""

    def _identity(self, x):
        return CoalgebraMorphism.identity(self.fibers[x])


class AlgebraRep(_Rep):
    """A functor from a finite poset to finite-dimensional algebras.

    Contravariant families are handled by building the rep on
    ``poset.opposite()``.
    """

    def _identity(self, x):
        return AlgebraMorphism.identity(self.fibers[x])


def _chain_composite(rep: _Rep, path: list):
    out = rep.arrows[(path[0], path[1])]
    for a, b in zip(path[1:], path[2:]):
        out = rep.arrows[(a, b)].compose(out)
    return out


def check_representation(rep: _Rep) -> CheckReport:
    """Fiber axioms, arrow axioms, and path independence of composites."""
    is_co = isinstance(rep, CoalgebraRep)
    parts = [check_poset(rep.poset)]
    for x in rep.poset.elements:
        r = check_coalgebra(rep.fibers[x]) if is_co else check_algebra(rep.fibers[x])
        parts.append(CheckReport(r.subject, tuple(Violation(f"fiber {x}: {v.law}", v.witness, v.defect)
                                                  for v in r.violations)))
    v = []
    for (x, y), a in rep.arrows.items():
        if a.source != rep.fibers[x] or a.target != rep.fibers[y]:
            v.append(Violation("arrow endpoints", (x, y)))
            continue
        r = check_coalgebra_morphism(a) if is_co else check_algebra_morphism(a)
        v.extend(Violation(f"arrow {x}->{y}: {w.law}", w.witness, w.defect) for w in r.violations)
    if not v:
        for x, y in rep.poset.comparable_pairs():
            ref = rep.morphism(x, y).map
            for path in rep.poset.chains(x, y):
                if _chain_composite(rep, path).map != ref:
                    v.append(Violation("functoriality", tuple(path)))
            if (x, y) in rep.arrows and rep.arrows[(x, y)].map != ref:
                v.append(Violation("functoriality", (x, y)))
    parts.append(CheckReport("arrows", tuple(v)))
    return parts[0].merged(*parts[1:], subject=f"representation {rep.name}".strip())


def constant_rep(poset: FinitePoset, C: Coalgebra | Algebra, name: str = "") -> _Rep:
    """Every fiber ``C`` and every arrow the identity."""
    if isinstance(C, Coalgebra):
        idm = CoalgebraMorphism.identity(C)
        return CoalgebraRep(poset, {x: C for x in poset.elements}, {p: idm for p in poset.covers}, name)
    idm = AlgebraMorphism.identity(C)
    return AlgebraRep(poset, {x: C for x in poset.elements}, {p: idm for p in poset.covers}, name)


def dual_rep(rep: CoalgebraRep) -> AlgebraRep:
    """``x -> C_x*`` on the opposite poset, arrows the transposes."""
    from ..coalg import dual_morphism

    P = rep.poset.opposite()
    fibers = {x: dual_algebra(rep.fibers[x]) for x in rep.poset.elements}
    arrows = {(y, x): dual_morphism(a) for (x, y), a in rep.arrows.items()}
    return AlgebraRep(P, fibers, arrows, f"{rep.name}*" if rep.name else "")
