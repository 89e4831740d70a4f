import json

import pytest

from cubicaudit.audit import CLAIMS, SCHEMA, audit_curve, corpus, dumps, random_cubics
from cubicaudit.config import Config
from cubicaudit.forms import TernaryCubicForm

FAST = Config(height=200)


def verdicts(rep):
    return {c["id"]: c["verdict"] for c in rep.claims}


def test_every_claim_reported_once():
    rep = audit_curve(TernaryCubicForm.diagonal(1, 1, -2), FAST)
    ids = [c["id"] for c in rep.claims]
    assert sorted(ids) == sorted(CLAIMS)
    for c in rep.claims:
        assert c["evidence"] and all(e in rep.sections for e in c["evidence"])


def test_curve_with_points():
    v = verdicts(audit_curve(TernaryCubicForm.diagonal(1, 1, -2), FAST))
    assert v["transfer.round_trip"] == v["transfer.zero_pattern"] == "holds"
    assert v["redundancy.square_relation"] == "holds"
    assert v["key_lemma.contrapositive"] == "not-applicable"


def test_local_obstruction_skips_search():
    rep = audit_curve(TernaryCubicForm.diagonal(1, 2, 4), FAST)
    v = verdicts(rep)
    assert v["local.everywhere"] == "fails"
    assert rep.sections["search"]["skipped"] == "local obstruction"
    assert v["soundness.global_vs_local"] == "holds"
    # algebraic sections are still computed
    assert v["resultant.formal_zero"] == "holds"


def test_zero_cube_coefficient_zero_pattern_na():
    F = TernaryCubicForm((0, 1, 1, 0, 0, 0, 0, 0, 0, 1))
    v = verdicts(audit_curve(F, FAST))
    assert v["transfer.zero_pattern"] == "not-applicable"
    assert v["transfer.round_trip"] == "holds"


def test_non_diagonal_candidate_is_witness():
    # a non-diagonal curve that is locally solvable without small points is flagged, not failed
    F = TernaryCubicForm((3, 4, 5, 0, 0, 0, 0, 0, 0, 1))
    rep = audit_curve(F, Config(height=30))
    v = verdicts(rep)
    if v["local.everywhere"] == "holds" and rep.sections["search"]["count"] == 0:
        assert v["key_lemma.contrapositive"] == "witness-candidate"


def test_report_json_is_stable():
    F = TernaryCubicForm.diagonal(1, 1, -2)
    a = dumps(audit_curve(F, FAST).to_json())
    b = dumps(audit_curve(F, FAST).to_json())
    assert a == b
    js = json.loads(a)
    assert js["schema"] == SCHEMA and js["form"] == F.to_json()


def test_corpus_composition():
    items = corpus(Config())
    assert [cid for cid, _ in items[:5]] == ["fermat", "x3+y3-2z3", "selmer", "x3+2y3+4z3", "fermat+xyz"]
    assert len(items) == 25
    assert random_cubics(1) == random_cubics(1) != random_cubics(2)
