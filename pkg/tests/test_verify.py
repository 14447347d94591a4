import json

import numpy as np
import pytest

from denniston import construction as cn
from denniston import verify as vf
from denniston.cycint import CycInt
from denniston.gf_tower import ZERO

from conftest import GRID, SMALL_GRID, denniston, field, grid_id, plain


def test_difference_table_q2():
    rep = vf.difference_count(denniston(2, 1, 2, 1))
    assert rep.passed and rep.identity_count == 18
    assert rep.table == {2: (18, 0), 6: (0, 45)}
    assert rep.total == 18 * 17


def test_difference_table_paley13():
    rep = vf.difference_count(cn.paley_pds(plain(13, 1)))
    assert rep.passed
    assert rep.table == {2: (6, 0), 3: (0, 6)}


@pytest.mark.parametrize("g", GRID, ids=grid_id)
def test_total_difference_count(g):
    pds = denniston(*g)
    counts = vf.difference_counts(pds)
    assert counts[0] == pds.k
    assert counts.sum() == pds.k**2


def test_mutation_witnesses():
    pds = denniston(2, 1, 2, 1)
    victim = int(pds.indices[0])
    rep = vf.difference_count(pds.toggled(victim))
    assert not rep.passed
    assert 0 < len(rep.witnesses) <= vf.MAX_WITNESSES
    w = rep.witnesses[0]
    assert w["count"] != w["expected"]


def test_spectrum_q2():
    rep = vf.char_spectrum(denniston(2, 1, 2, 1))
    assert rep.passed and rep.all_rational and rep.multiplicities_ok
    assert rep.principal == 18
    assert {v.to_int(): c for v, c in rep.spectrum.items()} == {2: 45, -6: 18}


def test_spectrum_quadric():
    rep = vf.char_spectrum(cn.quadric_pds(field(2, 1, 2)))
    assert rep.passed
    assert {v.to_int(): c for v, c in rep.spectrum.items()} == {-3: 5, 1: 10}


def test_spectrum_paley_irrational():
    rep = vf.char_spectrum(cn.paley_pds(plain(13, 1)))
    assert rep.passed and not rep.all_rational
    assert sorted(rep.spectrum.values()) == [6, 6]
    for val in rep.spectrum:
        # theta^2 + theta - 3 = 0
        assert val * val + val - 3 == 0


def test_spectrum_mutation_fails():
    pds = denniston(2, 1, 2, 1).toggled(5)
    rep = vf.char_spectrum(pds)
    assert not rep.passed and rep.witnesses


def test_parseval_values():
    pds = denniston(2, 1, 2, 1)
    assert vf.parseval_check(pds)
    spec = vf.char_spectrum(pds)
    total = spec.principal.norm2() + sum(v.norm2() * c for v, c in spec.spectrum.items())
    assert total == 1152
    paley = cn.paley_pds(plain(5, 1))
    assert vf.parseval_check(paley)
    assert paley.group.v * paley.k == 10


def test_parseval_empty_set():
    pds = denniston(2, 1, 2, 1)
    empty = cn.PdsSet(pds.group, np.zeros(pds.group.v, dtype=bool), pds.claimed)
    assert vf.parseval_check(empty)
    assert vf.char_spectrum(empty).principal == 0


@pytest.mark.parametrize("g", SMALL_GRID + [(3, 1, 3, 1)], ids=grid_id)
def test_fast_matches_naive(g):
    pds = denniston(*g)
    assert np.array_equal(
        vf._canonical_rows(vf.naive_character_values(pds)),
        vf._canonical_rows(vf.fast_character_values(pds)),
    )


def test_fast_matches_naive_on_mutant():
    pds = denniston(3, 1, 2, 1).toggled(17)
    assert np.array_equal(
        vf._canonical_rows(vf.naive_character_values(pds)),
        vf._canonical_rows(vf.fast_character_values(pds)),
    )


def test_character_of_single_element():
    # chi_(a,b) of {(x, y)} is xi^(Tr(ax) + Tr(by))
    pds = denniston(3, 1, 2, 1)
    g, t = pds.group, pds.group.table
    ind = np.zeros(g.v, dtype=bool)
    step = t.subfield(t.qm).step
    x0, y0 = 3 * step, 10
    elem = int(g.index(x0, y0))
    ind[elem] = True
    single = cn.PdsSet(g, ind, pds.claimed)
    vals = vf.naive_character_values(single)
    for a, b in [(0, 0), (step, 5), (ZERO, 7)]:
        e = t.add(t.rel_trace(t.mul(a, x0), t.qm, 3), t.rel_trace(t.mul(b, y0), t.order, 3))
        row = vals[int(g.index(a, b))]
        assert CycInt(3, tuple(row)) == CycInt.from_exponents(3, [t.canonical_index(e, 3)])


def test_regularity():
    pds = denniston(2, 1, 2, 1)
    assert vf.is_regular(pds)
    assert not vf.is_regular(pds.toggled(0))
    g = denniston(3, 1, 2, 1)
    # removing one element but not its negative breaks symmetry in odd characteristic
    assert not vf.is_regular(g.toggled(int(g.indices[0])))


def test_scalar_invariance_edges():
    pds = denniston(2, 1, 2, 1)
    assert vf.scalar_invariance(pds, 0)
    with pytest.raises(ValueError):
        vf.scalar_invariance(pds, ZERO)


def test_verify_pds_levels():
    pds = denniston(2, 1, 2, 1)
    counts = vf.verify_pds(pds, check_level="counts")
    assert counts.spectrum is None and counts.is_pds
    chars = vf.verify_pds(pds, check_level="chars")
    assert chars.differences is None and chars.is_pds
    with pytest.raises(ValueError):
        vf.verify_pds(pds, check_level="bogus")


def test_verify_report_invariance():
    rep = vf.verify_pds(denniston(3, 1, 2, 1), invariance=True)
    assert rep.invariance == {"F_q^*": True, "omega": False}
    assert rep.is_pds


def test_report_is_deterministic():
    pds = denniston(2, 1, 3, 1)
    a = json.dumps(vf.verify_pds(pds).as_dict(), sort_keys=True)
    b = json.dumps(vf.verify_pds(pds).as_dict(), sort_keys=True)
    assert a == b
    assert "timings" not in vf.verify_pds(pds).as_dict()


def test_text_report():
    text = vf.verify_pds(denniston(2, 1, 2, 1)).to_text()
    assert "verdict: PDS" in text
    bad = vf.verify_pds(denniston(2, 1, 2, 1).toggled(3)).to_text()
    assert "verdict: FAIL" in bad and "witness" in bad

