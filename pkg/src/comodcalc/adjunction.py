"""Certificates for adjunctions ``F -| G`` given by explicit units and counits.

For objects ``X`` (source of ``F``) and ``Y`` (source of ``G``) a certificate
records

* ``dim Hom(F X, Y)`` and ``dim Hom(X, G Y)``;
* both triangle identities, ``eps_{FX} o F(eta_X) = id`` and
  ``G(eps_Y) o eta_{GY} = id``;
* whether ``g -> G(g) o eta_X`` sends a basis of ``Hom(F X, Y)`` to a basis of
  ``Hom(X, G Y)``, i.e. the hom bijection itself.

Morphisms are anything supporting ``@`` (composition), ``==`` and a
``flatten`` function turning them into a column vector; plain matrices and
representation morphisms both qualify.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable, Sequence

from .exactla import Mat, Subspace

__all__ = ["AdjunctionCertificate", "Adjunction", "flatten_morphism"]


def flatten_morphism(f: Any) -> Mat:
    if isinstance(f, Mat):
        return Mat(f.field, f.rows * f.cols, 1, [[x] for r in f.data for x in r])
    return f.flatten()


@dataclass(frozen=True)
class AdjunctionCertificate:
    name: str
    hom_left: int
    hom_right: int
    triangle_left: bool
    triangle_right: bool
    bijection: bool

    @property
    def ok(self) -> bool:
        return (self.hom_left == self.hom_right and self.triangle_left
                and self.triangle_right and self.bijection)

    def as_dict(self) -> dict:
        return {
            "adjunction": self.name,
            "dim_hom_left": self.hom_left,
            "dim_hom_right": self.hom_right,
            "triangle_left": self.triangle_left,
            "triangle_right": self.triangle_right,
            "hom_bijection": self.bijection,
            "status": "pass" if self.ok else "fail",
        }


@dataclass(frozen=True)
class Adjunction:
    """``left -| right`` with explicit unit and counit.

    ``left_mor(f, X, X2)`` is ``F`` on a morphism ``f: X -> X2``; likewise
    ``right_mor``.  ``unit(X): X -> G F X`` and ``counit(Y): F G Y -> Y``.
    ``hom_src`` computes hom bases in the category where ``X`` lives and
    ``hom_tgt`` in the category of ``Y``.
    """

    name: str
    left: Callable[[Any], Any]
    right: Callable[[Any], Any]
    left_mor: Callable[[Any, Any, Any], Any]
    right_mor: Callable[[Any, Any, Any], Any]
    unit: Callable[[Any], Any]
    counit: Callable[[Any], Any]
    hom_src: Callable[[Any, Any], Sequence[Any]]
    hom_tgt: Callable[[Any, Any], Sequence[Any]]
    id_src: Callable[[Any], Any]
    id_tgt: Callable[[Any], Any]

    def certify(self, X: Any, Y: Any) -> AdjunctionCertificate:
        FX = self.left(X)
        GY = self.right(Y)
        hom_l = list(self.hom_tgt(FX, Y))
        hom_r = list(self.hom_src(X, GY))
        # eps_{FX} o F(eta_X) = id_{FX}
        GFX = self.right(FX)
        eta_X = self.unit(X)
        tri_l = self.counit(FX) @ self.left_mor(eta_X, X, GFX) == self.id_tgt(FX)
        # G(eps_Y) o eta_{GY} = id_{GY}
        FGY = self.left(GY)
        tri_r = self.right_mor(self.counit(Y), FGY, Y) @ self.unit(GY) == self.id_src(GY)
        # the hom bijection g -> G(g) o eta_X
        images = [self.right_mor(g, FX, Y) @ eta_X for g in hom_l]
        bij = len(images) == len(hom_r)
        if bij and images:
            flat_r = [flatten_morphism(h) for h in hom_r]
            n = flat_r[0].rows
            field = flat_r[0].field
            space_r = Subspace.span(field, n, flat_r)
            flat_i = [flatten_morphism(h) for h in images]
            bij = all(space_r.contains(v) for v in flat_i) and Subspace.span(field, n, flat_i).dim == len(images)
        return AdjunctionCertificate(self.name, len(hom_l), len(hom_r), bool(tri_l), bool(tri_r), bool(bij))
