import numpy as np
import pytest

from genus_spectra.engine.audit import verify_relations
from genus_spectra.engine.classify import classify, classify_full, z_classes
from genus_spectra.engine.presentation import Group, InvalidParameters, MiechParams, construct
from genus_spectra.engine.realize import NO, YES, OversizedRequest, realizable
from genus_spectra.engine.sweep import sweep_params
from genus_spectra.profile import admissible
from genus_spectra.signatures import Signature

TYPE_TWO = MiechParams(3, 5, 1, {4: 1}, 1, 0)


def test_parameter_problems():
    assert MiechParams(3, 5, 1, {4: 0}).problems()
    assert MiechParams(5, 6, 3, {3: 1}).problems()
    with pytest.raises(InvalidParameters):
        Group(MiechParams(3, 5, 0, {4: 1}))


def test_params_json_round_trip():
    assert MiechParams.from_json_dict(TYPE_TWO.to_json_dict()) == TYPE_TWO


@pytest.mark.parametrize("prm", list(sweep_params(3, 5))[::4])
def test_audit_passes_on_swept_groups(prm):
    rep = verify_relations(Group(prm), samples=500)
    assert rep.ok, rep.failures


def test_corrupted_action_fails_audit():
    G = Group(TYPE_TWO)
    tau = [list(v) for v in G.tau]
    tau[0][-1] = (tau[0][-1] + 1) % 3
    bad = Group(TYPE_TWO, tau_override=tau)
    rep = verify_relations(bad, samples=500)
    assert not rep.ok
    assert len(rep.failures) >= 2


def test_scalar_and_batch_products_agree():
    G = Group(MiechParams(5, 7, 2, {5: 2, 6: 1}, 3, 4))
    rng = np.random.default_rng(1)
    x = rng.integers(0, 5, size=(300, 7))
    y = rng.integers(0, 5, size=(300, 7))
    batch = G.mul_many(x, y)
    for i in range(300):
        assert tuple(int(v) for v in batch[i]) == G.mul(tuple(map(int, x[i])), tuple(map(int, y[i])))


def test_group_axioms_exhaustively_at_order_81():
    G = Group(MiechParams(3, 4, 0, {}, 1, 1))
    table = G.multiplication_table()
    n = G.order
    assert table.shape == (n, n)
    # associativity on all n^3 triples
    lhs = table[table[:, :, None], np.arange(n)[None, None, :]]
    rhs = table[np.arange(n)[:, None, None], table[None, :, :]]
    assert np.array_equal(lhs, rhs)
    assert all(sorted(row) == list(range(n)) for row in table.tolist())


def test_classify_type_two_example():
    gp = classify(Group(TYPE_TWO))
    assert gp.type_class == "II"
    assert gp.e == 2


def test_zclasses_example():
    zs = z_classes(Group(MiechParams(3, 5, 0, {}, 0, 0)))
    assert len(zs) == 3
    assert [z.element_order for z in zs] == [3, 3, 3]


def test_coset_orders_match_enumeration():
    G = Group(MiechParams(3, 5, 1, {4: 1}, 0, 1))
    cl = classify_full(G, flags=False)
    elems = G.all_elements()
    for line, orders in cl.lines.items():
        seen = set()
        for row in elems:
            g = tuple(int(v) for v in row)
            a, b = g[0], g[1]
            if (a, b) == (0, 0):
                continue
            ln = 3 if a == 0 else (b * pow(a, -1, 3)) % 3
            if ln == line:
                seen.add(G.element_order(g))
        assert max(seen) == orders.largest
        if orders.smallest is not None:
            assert min(seen) == orders.smallest


def test_realizable_witness_is_valid():
    G = Group(TYPE_TWO)
    res = realizable(G, Signature(0, (0, 3)))
    assert res.verdict == YES
    assert res.witness.problems(G) == []


def test_non_generating_signature_rejected():
    G = Group(TYPE_TWO)
    assert realizable(G, Signature(0, (0, 1))).verdict == NO


def test_oracle_agrees_with_tables_on_order_81():
    for prm in sweep_params(3, 4):
        G = Group(prm)
        gp = classify(G)
        for sig in (Signature(0, (3, 0)), Signature(0, (0, 3)), Signature(1, (1, 0)), Signature(0, (2, 1))):
            assert (realizable(G, sig).verdict == YES) == admissible(gp, sig), (prm.label(), str(sig))


def test_oversized_request():
    G = Group(MiechParams(3, 5))
    with pytest.raises(OversizedRequest):
        realizable(G, Signature(3, (4, 4)), max_slots=12)


def test_construct_audits():
    assert construct(TYPE_TWO).order == 243
