"""The adjoint pair ``F = - boxtimes N`` and ``G = Hom(N, -)`` over a representation.

For a cartesian trans-comodule ``N`` over a cocommutative representation,
``F`` sends trans-contramodules to trans-comodules and ``G`` goes back:

* ``F(M)_x = M_x boxtimes_{C_x} N_x`` with plain maps ``[m (x) n] -> [p(m) (x) p(n)]``;
* ``G(P)_x = Hom_{C_x}(N_x, P_x)`` with plain maps
  ``g -> mate_P o a^!(g) o mate_N^{-1}``.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..coalg import cohom_data
from ..contra import contratensor_data, hom_comodule_contra_data
from ..exactla import Mat, Subspace, coordinate_map
from ..report import MismatchError, PreconditionError
from .cartesian import is_cartesian, mate
from .objects import RepMorphism, RepObject, check_morphism, hom_rep

__all__ = ["ContraComoduleAdjunction", "contra_comodule_adjunction"]


def _require_cocommutative(rep) -> None:
    for x in rep.poset.elements:
        if not rep.fibers[x].is_cocommutative():
            raise PreconditionError(f"fiber coalgebra at {x!r} is not cocommutative")


@dataclass(frozen=True, eq=False)
class ContraComoduleAdjunction:
    N: RepObject

    def F(self, M: RepObject) -> RepObject:
        N = self.N
        if M.flavor != "trans-contramodule" or M.rep is not N.rep and M.poset != N.poset:
            raise MismatchError("F takes a trans-contramodule over the same representation")
        data = {x: contratensor_data(M.fibers[x], N.fibers[x]) for x in M.poset.elements}
        maps = {}
        for x, y in M.poset.covers:
            raw = M.plain(x, y).kron(N.plain(x, y))
            maps[(x, y)] = data[x].quotient.proj @ raw @ data[y].quotient.section
        return RepObject("trans-comodule", N.rep, {x: d.comodule for x, d in data.items()}, maps)

    def _hom_data(self, P: RepObject) -> dict:
        return {x: hom_comodule_contra_data(self.N.fibers[x], P.fibers[x]) for x in P.poset.elements}

    def G(self, P: RepObject) -> RepObject:
        N = self.N
        if P.flavor != "trans-comodule":
            raise MismatchError("G takes a trans-comodule")
        F = P.field
        data = self._hom_data(P)
        maps = {}
        for x, y in P.poset.covers:
            a = P.rep.morphism(x, y)
            cN, cP = cohom_data(a, N.fibers[y]), cohom_data(a, P.fibers[y])
            mN_inv = mate(N, x, y).inverse()
            mP = mate(P, x, y)
            Hy, Hx = data[y].space, data[x].space
            nx, px = N.dim(x), P.dim(x)
            ny, py = N.dim(y), P.dim(y)
            cols = []
            for j in range(Hy.dim):
                g = Mat(F, py, ny, [[Hy.basis[r * ny + c, j] for c in range(ny)] for r in range(py)])
                h = mP @ cN.induced(g, cP) @ mN_inv
                cols.append([h[r, c] for r in range(px) for c in range(nx)])
            raw = Mat.from_columns(F, cols, px * nx) if cols else Mat.zeros(F, px * nx, 0)
            maps[(x, y)] = coordinate_map(Hx) @ raw
        return RepObject("trans-contramodule", N.rep, {x: d.contramodule for x, d in data.items()}, maps)

    def transpose(self, phi: RepMorphism, M: RepObject, P: RepObject) -> RepMorphism:
        """``phi: F(M) -> P`` to ``M -> G(P)``, ``m -> (n -> phi[m (x) n])``."""
        F = M.field
        N = self.N
        GP = self.G(P)
        data = self._hom_data(P)
        comps = {}
        for x in M.poset.elements:
            q = contratensor_data(M.fibers[x], N.fibers[x]).quotient
            full = phi[x] @ q.proj  # M_x (x) N_x -> P_x
            m, n, p = M.dim(x), N.dim(x), P.dim(x)
            cols = [[full[r, k * n + c] for r in range(p) for c in range(n)] for k in range(m)]
            raw = Mat.from_columns(F, cols, p * n) if cols else Mat.zeros(F, p * n, 0)
            comps[x] = coordinate_map(data[x].space) @ raw
        return RepMorphism(M, GP, comps)

    def certify(self, M: RepObject, P: RepObject) -> dict:
        FM, GP = self.F(M), self.G(P)
        left = hom_rep(FM, P)
        right = hom_rep(M, GP)
        images = [self.transpose(phi, M, P) for phi in left]
        morph_ok = all(check_morphism(t).ok for t in images)
        if images:
            field = M.field
            flat = [t.flatten() for t in images]
            rank = Subspace.span(field, flat[0].rows, flat).dim
        else:
            rank = 0
        bij = morph_ok and rank == len(left) == len(right)
        return {
            "adjunction": "F -| G",
            "dim_hom_left": len(left),
            "dim_hom_right": len(right),
            "transpose_is_morphism": morph_ok,
            "hom_bijection": bij,
            "status": "pass" if bij else "fail",
        }


def contra_comodule_adjunction(N: RepObject) -> ContraComoduleAdjunction:
    """Checks the hypotheses (cocommutative fibers, ``N`` cartesian) and returns the pair."""
    if N.flavor != "trans-comodule":
        raise MismatchError("N must be a trans-comodule")
    _require_cocommutative(N.rep)
    if not is_cartesian(N, with_hypotheses=False).cartesian:
        raise PreconditionError("N must be cartesian")
    return ContraComoduleAdjunction(N)
