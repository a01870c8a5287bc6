"""The opt-in corrected tables: both spectrum routes agree and the realizability oracle matches them."""

import pytest

from genus_spectra.acceptance import _two_route_failures
from genus_spectra.engine.presentation import Group
from genus_spectra.engine.sweep import compare_with_tables, default_box, sweep_params
from genus_spectra.engine.classify import classify
from genus_spectra.matrix import profile_matrix


def test_two_routes_agree_on_errata_layer():
    assert _two_route_failures(profile_matrix((3, 5, 7), (2, 3)), errata=True) == []


def test_two_routes_agree_on_errata_layer_at_p11():
    assert _two_route_failures(profile_matrix((11,), (2, 3)), errata=True) == []


def test_two_routes_agree_on_errata_layer_at_exponent_p4():
    assert _two_route_failures(profile_matrix((3, 5), (4,)), errata=True) == []


@pytest.mark.parametrize("n", [4, 5, 6])
def test_oracle_matches_errata_layer(n):
    bad = []
    for prm in sweep_params(3, n):
        G = Group(prm)
        cmp = compare_with_tables(G, default_box(classify(G).e), errata=True)
        if not cmp.ok:
            bad.append((prm.label(), cmp.mismatches, cmp.unknown))
    assert bad == []
