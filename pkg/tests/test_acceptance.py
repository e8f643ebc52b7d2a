"""One PASS/FAIL line per acceptance criterion.

Each criterion runs the relevant property checks from the other test modules
over the stated fields and flavors; the line shows what was covered.  Run
``python scripts/run_acceptance.py`` for the same lines outside pytest.
"""

from __future__ import annotations

import json
import traceback
from pathlib import Path

import pytest

import comodcalc
from comodcalc.cli import render, run
from comodcalc.codec import parse, serialize
from comodcalc.corpus import corpus_names, load, shipped_text

import test_algmod as ta
import test_coalg as tc
import test_contra as tk
import test_rational as tr
import test_repcat as tp
from commands import command_matrix
from instances import FIELDS, FLAVORS, SMALL_FIELDS

CORPUS = Path(comodcalc.__file__).parent / "corpus"
GF3 = tr.GF3


def c1():
    for F in FIELDS:
        tc.test_corpus_coalgebras_pass(F)
        tc.test_coalgebra_mutations_agree_with_oracle(F)
        tc.test_comodule_mutations_agree_with_oracle(F)
        tk.test_corpus_contramodules_pass(F)
        tk.test_contramodule_mutations_agree_with_oracle(F)
    return "corpus passes and >=10 mutants fail with oracle-matched witnesses, per kind, over GF(2), GF(5), Q"


def c2():
    for F in FIELDS:
        tc.test_cotensor_with_regular_is_identity(F)
    return "M box_C C = M with invertible unit map for every corpus comodule over GF(2), GF(5), Q"


def c3():
    for F in SMALL_FIELDS:
        tc.test_corestrict_coinduce_adjunction(F)
        tc.test_cohom_corestrict_adjunction(F)
        tk.test_contraextend_adjunction(F)
        ta.test_extend_restrict_adjunction(F)
        ta.test_restrict_coextend_adjunction(F)
        for fl in FLAVORS:
            tp.test_ex_ev_adjunction(fl, F)
            tp.test_ev_coe_adjunction(fl, F)
    return "7 adjunction families (ex/ev, ev/coe in all 5 flavors), >=20 triples each over GF(2), GF(3), Q"


def c4():
    for F in SMALL_FIELDS:
        tc.test_coinduce_equalizer_matches_hom_over_dual(F)
        tk.test_contratensor_coequalizer_matches_balanced_tensor(F)
    return "equalizer = Hom over C*, coequalizer = balanced tensor, >=20 instances each over GF(2), GF(3), Q"


def c5():
    tc.test_dp_inclusion_not_coflat()
    for F in FIELDS:
        tc.test_counit_maps_coflat(F)
    for F in SMALL_FIELDS:
        tc.test_coflat_agrees_with_surjection_preservation(F)
    return "DP(2)->DP(3) not coflat; every C->K coflat; agrees with surjection preservation"


def c6():
    for fl in FLAVORS:
        tp.test_generated_subobject_is_minimum(fl)
        tp.test_generated_subobject_two_seeds(fl)
    return "closure = brute-force minimum on GF(2) objects of total dim <= 6 in all 5 flavors"


def c7():
    for fl in tp.HULL_FLAVORS:
        tp.test_hull_is_minimal_cartesian(fl)
        for F in SMALL_FIELDS:
            tp.test_hull_of_full_spanning_seed(fl, F)
    return "hull cartesian, contains seed, = exhaustive minimum over GF(2); spanning seed gives M (cis-comodule, trans-module)"


def c8():
    for F in SMALL_FIELDS:
        tr.test_rationalization_idempotent_and_monotone(F)
        tr.test_evaluation_pairing_everything_rational(F)
        tr.test_torsion_class_closure_with_evaluation(F)
    tr.test_jordan_block_density_exhibit()
    return "R idempotent and monotone; Jordan J3 gives dim R = 2, dim R(N/R) = 1; A = C* gives R(N) = N and closure"


def c9():
    for F in (GF3, tr.QQ):
        tr.test_comparison_certificates(F)
        tp.test_contra_comodule_pair_hom_dimensions(F)
    return "both comparison maps iso on >=10 cocommutative instances; F -| G hom dims on >=10 triples (GF(3), Q)"


def c10():
    for F in SMALL_FIELDS:
        tk.test_contraextension_of_free_is_free(F)
    for F in FIELDS:
        tk.test_free_direct_sum(F)
        tk.test_dual_contratensor_regular_is_regular(F)
    return "contraextension of a free is free; frees add; C* boxtimes_C C = C"


def c11():
    n = 0
    for name in corpus_names():
        text = shipped_text(name)
        assert serialize(parse(text)) == text, name
        seen = set()
        for argv in command_matrix(load(name)):
            kind = tuple(a for a in argv[:2] if not a.startswith("--"))
            if kind in seen:
                continue
            seen.add(kind)
            full = argv + ["--input", str(CORPUS / f"{name}.json")]
            outs = []
            for _ in range(2):
                report, code, _ = run(full + ["--output", "json"])
                assert code in (0, 1), (name, argv, report.get("error"))
                outs.append((render(report, "json"), render(report, "text"), code))
            assert outs[0] == outs[1], (name, argv)
            assert json.loads(outs[0][0]) == report
            n += 1
    return f"{n} (file, command) pairs byte-identical over two runs; {len(corpus_names())} files round-trip"


CRITERIA = [
    (1, "axiom suites", c1),
    (2, "cotensor unit", c2),
    (3, "adjunction certificates", c3),
    (4, "dual-bridge consistency", c4),
    (5, "coflatness", c5),
    (6, "generated subobjects", c6),
    (7, "cartesian hull", c7),
    (8, "rationalization", c8),
    (9, "comparison isomorphisms and F -| G", c9),
    (10, "contramodule frees", c10),
    (11, "CLI determinism", c11),
]


def evaluate(fn) -> tuple[bool, str]:
    try:
        return True, fn()
    except Exception as e:  # noqa: BLE001 - a criterion fails on any error
        where = traceback.extract_tb(e.__traceback__)[-1]
        return False, f"{type(e).__name__} at {Path(where.filename).name}:{where.lineno}: {e}"[:300]


def line(n, title, ok, detail) -> str:
    return f"criterion {n:>2} {'PASS' if ok else 'FAIL'}  {title}: {detail}"


@pytest.mark.parametrize("n,title,fn", CRITERIA, ids=[f"c{n}" for n, _, _ in CRITERIA])
def test_criterion(n, title, fn, capsys):
    ok, detail = evaluate(fn)
    with capsys.disabled():
        print("\n" + line(n, title, ok, detail))
    assert ok, detail
