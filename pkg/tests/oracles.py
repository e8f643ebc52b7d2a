"""Brute-force oracles over small prime fields.

Everything here enumerates; nothing calls the closure or fixed-point code it
is used to check.
"""

from __future__ import annotations

import functools
import itertools

from comodcalc.exactla import Mat, Subspace


def all_vectors(F, n):
    for vals in itertools.product(F.elements(), repeat=n):
        yield Mat(F, n, 1, [[v] for v in vals])


@functools.lru_cache(maxsize=None)
def all_subspaces(F, n):
    """Every subspace of ``F^n`` (canonical bases make them hashable); cached, they are immutable."""
    seen = {Subspace.zero(F, n)}
    frontier = list(seen)
    vecs = [v for v in all_vectors(F, n) if not v.is_zero()]
    while frontier:
        nxt = []
        for S in frontier:
            for v in vecs:
                if S.contains(v):
                    continue
                T = S + Subspace.span(F, n, v)
                if T not in seen:
                    seen.add(T)
                    nxt.append(T)
        frontier = nxt
    return tuple(sorted(seen, key=lambda s: (s.dim, s.basis.flat())))


def stable_subspaces(F, n, ops):
    """Subspaces mapped into themselves by every operator."""
    return [S for S in all_subspaces(F, n) if all(S.map(T) <= S for T in ops)]


def all_subobjects(M):
    """Every family of fiber subspaces closed under fiber operators and plain maps."""
    F = M.field
    els = list(M.poset.elements)
    choices = [stable_subspaces(F, M.dim(x), M.fibers[x].operators()) for x in els]
    out = []
    for combo in itertools.product(*choices):
        subs = dict(zip(els, combo))
        ok = True
        for a, b in M.poset.comparable_pairs():
            s, t = (a, b) if M.forward else (b, a)
            if not subs[s].map(M.plain(a, b)) <= subs[t]:
                ok = False
                break
        if ok:
            out.append(subs)
    return out


def minimal_containing(families, x, seed: Subspace):
    """The unique minimal member containing the seed at ``x`` (None if there is no minimum)."""
    good = [s for s in families if seed <= s[x]]
    best = [s for s in good if all(all(s[z] <= t[z] for z in s) for t in good)]
    return best[0] if best else None


# axioms by index loops ---------------------------------------------------------
# These read the raw structure constants and never touch Mat arithmetic.

def _entries(M):
    return [list(r) for r in M.data]


def coalgebra_defects(C):
    """``{law: {k: defect list}}`` over basis elements ``c_k`` with a nonzero defect."""
    d = C.dim
    D = _entries(C.delta)
    eps = _entries(C.eps)[0]
    F = C.field
    out = {"coassociativity": {}, "left counit": {}, "right counit": {}}
    for k in range(d):
        ca = []
        for a, b, c in itertools.product(range(d), repeat=3):
            lhs = sum(D[i * d + c][k] * D[a * d + b][i] for i in range(d))
            rhs = sum(D[a * d + j][k] * D[b * d + c][j] for j in range(d))
            ca.append(F.red(lhs - rhs))
        lc = [F.red(sum(eps[i] * D[i * d + j][k] for i in range(d)) - (1 if j == k else 0)) for j in range(d)]
        rc = [F.red(sum(eps[j] * D[i * d + j][k] for j in range(d)) - (1 if i == k else 0)) for i in range(d)]
        for law, v in (("coassociativity", ca), ("left counit", lc), ("right counit", rc)):
            if any(v):
                out[law][k] = v
    return out


def right_comodule_defects(M):
    C, F = M.coalgebra, M.field
    d, m = C.dim, M.dim
    D = _entries(C.delta)
    eps = _entries(C.eps)[0]
    R = _entries(M.rho)
    out = {"coassociativity": {}, "counit": {}}
    for n in range(m):
        ca = []
        for p, a, b in itertools.product(range(m), range(d), range(d)):
            lhs = sum(R[p * d + a][q] * R[q * d + b][n] for q in range(m))
            rhs = sum(D[a * d + b][i] * R[p * d + i][n] for i in range(d))
            ca.append(F.red(lhs - rhs))
        cu = [F.red(sum(eps[i] * R[p * d + i][n] for i in range(d)) - (1 if p == n else 0)) for p in range(m)]
        if any(ca):
            out["coassociativity"][n] = ca
        if any(cu):
            out["counit"][n] = cu
    return out


def left_comodule_defects(M):
    C, F = M.coalgebra, M.field
    d, m = C.dim, M.dim
    D = _entries(C.delta)
    eps = _entries(C.eps)[0]
    R = _entries(M.rho)
    out = {"coassociativity": {}, "counit": {}}
    for n in range(m):
        ca = []
        for a, b, p in itertools.product(range(d), range(d), range(m)):
            lhs = sum(D[a * d + b][i] * R[i * m + p][n] for i in range(d))
            rhs = sum(R[a * m + q][n] * R[b * m + p][q] for q in range(m))
            ca.append(F.red(lhs - rhs))
        cu = [F.red(sum(eps[i] * R[i * m + p][n] for i in range(d)) - (1 if p == n else 0)) for p in range(m)]
        if any(ca):
            out["coassociativity"][n] = ca
        if any(cu):
            out["counit"][n] = cu
    return out


def convolution(C, f, g):
    """``(f * g)(c_k) = sum f(c_i) g(c_j)`` over ``Delta c_k = sum D[(i,j),k] c_i (x) c_j``."""
    d = C.dim
    D = _entries(C.delta)
    return [C.field.red(sum(D[i * d + j][k] * f[i] * g[j] for i in range(d) for j in range(d))) for k in range(d)]


def _matmul_lists(F, A, B):
    n, k, m = len(A), len(B), len(B[0]) if B else 0
    return [[F.red(sum(A[i][t] * B[t][j] for t in range(k))) for j in range(m)] for i in range(n)]


def contramodule_is_module(M, order: str):
    """Whether the operators ``U_f = pi(- (x) f)`` form a unital left ``C*``-action.

    ``order`` picks the product on ``C*``: ``"fg"`` uses ``f * g`` and ``"gf"``
    the opposite; which one a contramodule satisfies depends only on the
    orientation convention of the contraction.
    """
    C, F = M.coalgebra, M.field
    d, m = C.dim, M.dim
    P = _entries(M.pi)
    U = [[[P[r][k * d + i] for k in range(m)] for r in range(m)] for i in range(d)]

    def op(f):
        return [[F.red(sum(f[i] * U[i][r][c] for i in range(d))) for c in range(m)] for r in range(m)]

    eps = _entries(C.eps)[0]
    ident = [[1 if r == c else 0 for c in range(m)] for r in range(m)]
    if op(eps) != [[F(x) for x in row] for row in ident]:
        return False
    basis = [[1 if t == i else 0 for t in range(d)] for i in range(d)]
    for f in basis:
        for g in basis:
            prod = convolution(C, f, g) if order == "fg" else convolution(C, g, f)
            if _matmul_lists(F, op(f), op(g)) != op(prod):
                return False
    return True
