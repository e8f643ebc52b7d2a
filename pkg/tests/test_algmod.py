import itertools

import pytest

from comodcalc.algmod import (
    Algebra, AlgebraMorphism, FPAlgebraAction, Module, balanced_tensor, check_algebra, check_algebra_morphism,
    check_module, coextend, coextension_adjunction, dual_module, extend, extension_adjunction, free_module,
    hom_modules, is_injective, is_projective, matrix_algebra, module_from_matrix_of_generator,
    polynomial_quotient_morphism, product_algebra, regular_module, restrict, truncated_polynomial_algebra,
    trivial_algebra, fp_submodule_generated, fp_quotient,
)
from comodcalc.coalg import dual_algebra
from comodcalc.exactla import GF, QQ, Mat
from comodcalc.report import MismatchError

from instances import FIELDS, SMALL_FIELDS, algebra_triples, corpus_coalgebras
from test_coalg import bump, positions


def algebras(F):
    return [truncated_polynomial_algebra(F, 3), product_algebra(F, 2), matrix_algebra(F, 2), trivial_algebra(F)]


def _assoc_defect(A):
    """Brute-force associativity on basis triples from the structure constants."""
    d = A.dim
    T = [[A.mult[k, i * d + j] for k in range(d)] for i in range(d) for j in range(d)]

    def prod(x, y):
        out = [0] * d
        for i, j in itertools.product(range(d), repeat=2):
            if x[i] and y[j]:
                for k in range(d):
                    out[k] += x[i] * y[j] * T[i * d + j][k]
        return [A.field.red(v) for v in out]

    e = [[1 if t == i else 0 for t in range(d)] for i in range(d)]
    unit = [A.unit[k, 0] for k in range(d)]
    bad = any(prod(prod(a, b), c) != prod(a, prod(b, c)) for a, b, c in itertools.product(e, repeat=3))
    bad = bad or any(prod(unit, a) != [A.field(v) for v in a] or prod(a, unit) != [A.field(v) for v in a] for a in e)
    return bad


@pytest.mark.parametrize("F", FIELDS, ids=str)
def test_standard_algebras(F):
    for A in algebras(F):
        assert check_algebra(A).ok and not _assoc_defect(A)
        for side in ("left", "right"):
            assert check_module(regular_module(A, side)).ok
            assert check_module(free_module(A, 2, side)).ok
    for C in corpus_coalgebras(F).values():
        assert check_algebra(dual_algebra(C)).ok


@pytest.mark.parametrize("F", [GF(2), GF(3)], ids=str)
def test_algebra_mutations_agree_with_oracle(F):
    failing = 0
    for A in algebras(F):
        for i, j in positions(A.mult, 5):
            B = Algebra(F, A.dim, bump(A.mult, i, j), A.unit)
            ok = check_algebra(B).ok
            assert ok == (not _assoc_defect(B))
            failing += not ok
    assert failing >= 10


def test_module_mutation_detected():
    F = GF(3)
    A = truncated_polynomial_algebra(F, 3)
    M = regular_module(A)
    ops = list(M.ops)
    ops[1] = bump(ops[1], 0, 0)
    rep = check_module(Module(A, tuple(ops), "right", 3))
    assert not rep.ok and rep.violations[0].witness


@pytest.mark.parametrize("F", SMALL_FIELDS, ids=str)
def test_extend_restrict_adjunction(F):
    triples = list(algebra_triples(F))
    assert len(triples) >= 20
    for al, X, Y in triples:
        cert = extension_adjunction(al).certify(X, Y)
        assert cert.ok, (al.name, cert)


@pytest.mark.parametrize("F", SMALL_FIELDS, ids=str)
def test_restrict_coextend_adjunction(F):
    triples = list(algebra_triples(F))
    assert len(triples) >= 20
    for al, X, Y in triples:
        cert = coextension_adjunction(al).certify(Y, X)
        assert cert.ok, (al.name, cert)


def test_extend_of_regular_is_regular():
    F = GF(5)
    al = polynomial_quotient_morphism(F, 3, 2)
    E = extend(al, regular_module(al.source))
    assert E.dim == 2 and check_module(E).ok
    C = coextend(al, regular_module(al.source))
    assert C.dim == 2 and check_module(C).ok


def test_projective_and_injective():
    F = GF(2)
    A = truncated_polynomial_algebra(F, 2)
    assert is_projective(regular_module(A))
    assert not is_projective(module_from_matrix_of_generator(A, Mat.zeros(F, 1, 1), "right"))
    # K[x]/x^2 is self-injective
    assert is_injective(regular_module(A))
    M2 = matrix_algebra(F, 2)
    col = Module(M2, tuple(Mat.from_rows(F, [[1 if (r, c) == divmod(i, 2) else 0 for c in range(2)]
                                              for r in range(2)]) for i in range(4)), "left", 2)
    assert check_module(col).ok and is_projective(col)


def test_balanced_tensor_dims():
    F = QQ
    A = truncated_polynomial_algebra(F, 3)
    R = regular_module(A, "right")
    L = regular_module(A, "left")
    assert balanced_tensor(R, L).dim == 3
    S = module_from_matrix_of_generator(A, Mat.zeros(F, 1, 1), "left")
    assert balanced_tensor(R, S).dim == 1


def test_hom_counts():
    F = GF(3)
    A = truncated_polynomial_algebra(F, 3)
    J = Mat.from_rows(F, [[0, 1, 0], [0, 0, 1], [0, 0, 0]])
    M = module_from_matrix_of_generator(A, J, "right")
    assert len(hom_modules(M, M)) == 3
    assert check_module(dual_module(M)).ok


def test_presented_actions():
    F = GF(2)
    rel = ((1, (0, 0)),)  # x^2 = 0
    good = FPAlgebraAction(F, 1, (Mat.from_rows(F, [[0, 1], [0, 0]]),), (rel,))
    bad = FPAlgebraAction(F, 1, (Mat.identity(F, 2),), (rel,))
    assert good.check().ok and not bad.check().ok
    S = fp_submodule_generated(good, Mat.column(F, [0, 1]))
    assert S.dim == 2
    assert fp_quotient(good, fp_submodule_generated(good, Mat.column(F, [1, 0]))).dim == 1


def test_restrict_mismatch():
    F = GF(2)
    al = polynomial_quotient_morphism(F, 3, 2)
    with pytest.raises(MismatchError):
        restrict(al, regular_module(al.source))
    assert check_algebra_morphism(al).ok
