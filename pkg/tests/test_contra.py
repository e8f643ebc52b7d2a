import pytest

from comodcalc.coalg import (
    CoalgebraMorphism, RightComodule, check_comodule, check_comodule_morphism, cohom, divided_power, grouplike,
    inclusion_dp, matrix_coalgebra, regular_left, regular_right,
)
from comodcalc.contra import (
    Contramodule, check_contra_morphism, check_contramodule, contraextend, contraextend_by_presentation,
    contraextend_data, contraextension_adjunction, contrarestrict, contratensor, contratensor_balanced,
    contratensor_data, direct_sum_contra, free_contramodule, hom_comodule_contra, hom_contra,
    contramodule_to_module, module_to_contramodule, trivial_contramodule,
)
from comodcalc.exactla import GF, QQ, Mat
from comodcalc.report import MismatchError

from instances import (
    FIELDS, SMALL_FIELDS, coalgebra_morphisms, comodule_family, contra_triples, contramodule_family,
    corpus_coalgebras,
)
from oracles import contramodule_is_module
from test_coalg import bump, positions


@pytest.mark.parametrize("F", FIELDS, ids=str)
def test_corpus_contramodules_pass(F):
    for name, C in corpus_coalgebras(F).items():
        for M in contramodule_family(C):
            assert check_contramodule(M).ok, name
            assert contramodule_is_module(M, "fg")


@pytest.mark.parametrize("F", FIELDS, ids=str)
def test_contramodule_mutations_agree_with_oracle(F):
    failing = 0
    for name, C in corpus_coalgebras(F).items():
        for M in contramodule_family(C)[:2]:
            for i, j in positions(M.pi, 3):
                X = Contramodule(C, bump(M.pi, i, j))
                rep = check_contramodule(X)
                assert rep.ok == contramodule_is_module(X, "fg")
                if not rep.ok:
                    failing += 1
                    for v in rep.violations:
                        assert sum(1 for t in v.witness if t) == 1
                        assert any(t != 0 for t in v.defect)
    assert failing >= 10


def test_convolution_order_distinguishes_noncocommutative():
    M = free_contramodule(matrix_coalgebra(QQ, 2), 1)
    assert contramodule_is_module(M, "fg") and not contramodule_is_module(M, "gf")


# frees ----------------------------------------------------------------------------

def _free_comparison(a, v):
    """``T_C(V) -> a^.(T_D(V))`` extending ``V -> T_D(V) -> a^. T_D(V)``, ``x -> [eps_D x]``."""
    F = a.source.field
    C, D = a.source, a.target
    ce = contraextend_data(a, free_contramodule(D, v))
    X = ce.contramodule
    g = ce.unit() @ Mat.identity(F, v).kron(D.eps.T)
    return X.pi @ g.kron(Mat.identity(F, C.dim)), X


@pytest.mark.parametrize("F", SMALL_FIELDS, ids=str)
def test_contraextension_of_free_is_free(F):
    for a in coalgebra_morphisms(F):
        for v in (1, 2):
            phi, X = _free_comparison(a, v)
            T = free_contramodule(a.source, v)
            assert X.dim == T.dim == v * a.source.dim
            assert check_contra_morphism(phi, T, X).ok
            assert phi.is_invertible()


@pytest.mark.parametrize("F", FIELDS, ids=str)
def test_free_direct_sum(F):
    for name, C in corpus_coalgebras(F).items():
        for v, w in ((1, 1), (1, 2)):
            S = direct_sum_contra(free_contramodule(C, v), free_contramodule(C, w))
            T = free_contramodule(C, v + w)
            ident = Mat.identity(F, T.dim)
            assert check_contra_morphism(ident, S, T).ok


def _contratensor_comparison(C):
    """``C* (x) C -> C``, ``f (x) c -> f(c_(1)) c_(2)``, pushed down to ``C* boxtimes_C C``."""
    F = C.field
    d = C.dim
    D = C.delta
    cols = []
    for i in range(d):  # f = c^i
        for k in range(d):  # c = c_k
            cols.append([D[i * d + j, k] for j in range(d)])
    return Mat.from_columns(F, cols, d)


@pytest.mark.parametrize("F", FIELDS, ids=str)
def test_dual_contratensor_regular_is_regular(F):
    for name, C in corpus_coalgebras(F).items():
        data = contratensor_data(free_contramodule(C, 1), regular_right(C), regular_left(C))
        raw = _contratensor_comparison(C)
        q = data.quotient
        if q.sub.dim:
            assert (raw @ q.sub.basis).is_zero(), name
        phi = raw @ q.section
        assert data.comodule.dim == C.dim
        assert phi.is_invertible(), name
        assert check_comodule_morphism(phi, data.comodule, regular_right(C)).ok, name


# dual bridges and change of coalgebra ---------------------------------------------------

@pytest.mark.parametrize("F", SMALL_FIELDS, ids=str)
def test_contratensor_coequalizer_matches_balanced_tensor(F):
    n = 0
    for name, C in corpus_coalgebras(F).items():
        left = None if C.is_cocommutative() else regular_left(C)
        for M in contramodule_family(C)[:2]:
            Ns = comodule_family(C) if left is None else [regular_right(C)]
            for N in Ns:
                if M.dim * N.dim > 24:
                    continue
                q1 = contratensor_data(M, N, left).quotient
                q2 = contratensor_balanced(M, N, left)
                assert q1.sub == q2.sub
                assert (q2.proj @ q1.section).is_invertible()
                n += 1
    assert n >= 20


@pytest.mark.parametrize("F", SMALL_FIELDS, ids=str)
def test_contraextend_adjunction(F):
    triples = list(contra_triples(F, 8 if F.p is None else 12))
    assert len(triples) >= 20
    for a, X, Y in triples:
        cert = contraextension_adjunction(a).certify(X, Y)
        assert cert.ok, (a.name, X.dim, Y.dim, cert)


@pytest.mark.parametrize("F", SMALL_FIELDS, ids=str)
def test_contraextend_two_ways(F):
    for a in coalgebra_morphisms(F):
        for M in contramodule_family(a.target):
            ce = contraextend_data(a, M)
            alt, rel = contraextend_by_presentation(a, M)
            assert rel == ce.quotient.sub
            assert alt.pi == ce.contramodule.pi
            assert check_contramodule(alt).ok


def test_contrarestrict_is_contramodule():
    F = GF(3)
    for a in coalgebra_morphisms(F):
        for M in contramodule_family(a.source):
            assert check_contramodule(contrarestrict(a, M)).ok


def test_hom_comodule_contra_is_contramodule():
    F = GF(2)
    C = divided_power(F, 3)
    for N in comodule_family(C):
        for P in comodule_family(C):
            H = hom_comodule_contra(N, P)
            assert check_contramodule(H).ok


def test_module_bridge_roundtrip():
    F = QQ
    C = grouplike(F, 3)
    M = free_contramodule(C, 2)
    assert module_to_contramodule(contramodule_to_module(M), C).pi == M.pi


def test_hom_contra_trivial():
    F = GF(5)
    C = divided_power(F, 2)
    T = trivial_contramodule(C)
    assert len(hom_contra(free_contramodule(C, 1), T)) == 1


def test_contraextend_mismatch():
    F = GF(2)
    a = inclusion_dp(F, 2, 3)
    with pytest.raises(MismatchError):
        contraextend(a, free_contramodule(a.source, 1))
