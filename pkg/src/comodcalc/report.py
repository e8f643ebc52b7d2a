"""Validation reports and the error types shared across the library."""

from __future__ import annotations

from dataclasses import dataclass, field

from .exactla import DimensionError, Mat

__all__ = [
    "Violation",
    "CheckReport",
    "compare_maps",
    "DimensionError",
    "MismatchError",
    "PreconditionError",
    "UnsupportedInputError",
]


class MismatchError(ValueError):
    """Objects live over different coalgebras/algebras/representations."""


class PreconditionError(ValueError):
    """A documented precondition (e.g. cartesianness) does not hold."""


class UnsupportedInputError(ValueError):
    """The input is outside what the library computes (never approximated)."""


@dataclass(frozen=True)
class Violation:
    """One failed identity: the input basis vector that breaks it and the defect."""

    law: str
    witness: tuple
    defect: tuple = ()

    def describe(self) -> str:
        return f"{self.law}: witness {list(self.witness)} defect {list(self.defect)}"


@dataclass(frozen=True)
class CheckReport:
    subject: str
    violations: tuple[Violation, ...] = ()
    notes: tuple[str, ...] = field(default=())

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok

    def laws_failed(self) -> list[str]:
        return sorted({v.law for v in self.violations})

    def merged(self, *others: "CheckReport", subject: str | None = None) -> "CheckReport":
        vs = list(self.violations)
        ns = list(self.notes)
        for o in others:
            vs.extend(o.violations)
            ns.extend(o.notes)
        return CheckReport(subject or self.subject, tuple(vs), tuple(ns))


def compare_maps(law: str, lhs: Mat, rhs: Mat) -> list[Violation]:
    """Empty when ``lhs == rhs``; otherwise one violation at the first differing column."""
    if lhs.shape != rhs.shape:
        raise DimensionError(f"{law}: shapes {lhs.shape} and {rhs.shape} differ")
    if lhs == rhs:
        return []
    diff = lhs - rhs
    F = lhs.field
    for j in range(diff.cols):
        col = diff.column_values(j)
        if any(x != 0 for x in col):
            w = tuple(F.one if k == j else F.zero for k in range(lhs.cols))
            return [Violation(law, w, col)]
    return []  # pragma: no cover
