from collections import Counter

import numpy as np
import pytest

from denniston import construction as cn
from denniston import cyclotomy as cy
from denniston.construction import ParamSet, ParameterError
from denniston.gf_tower import ZERO, build_field

from conftest import GRID, SMALL_GRID, denniston, field, grid_id, plain


@pytest.mark.parametrize(
    "qmr, expected",
    [
        ((2, 2, 1), (64, 18, 2, 6)),
        ((3, 2, 1), (729, 168, 27, 42)),
        ((2, 3, 2), (512, 196, 60, 84)),
    ],
)
def test_expected_params(qmr, expected):
    P = cn.expected_params(*qmr)
    assert (P.v, P.k, P.lam, P.mu) == expected
    assert P.satisfies_identity()
    assert cn.srg_params(*qmr) == P


def test_eigenvalues_and_multiplicities():
    P = cn.expected_params(2, 2, 1)
    assert P.eigenvalues == (2, -6)
    assert (P.f, P.g) == (45, 18)
    assert P.latin_square_type() == (8, 2, -1)


@pytest.mark.parametrize(
    "qmr, expected", [((2, 2, 1), (2, -6)), ((3, 2, 1), (6, -21)), ((2, 3, 2), (4, -28))]
)
def test_expected_char_values_are_eigenvalues(qmr, expected):
    assert cn.expected_char_values(*qmr) == expected
    assert cn.expected_params(*qmr).eigenvalues == expected


@pytest.mark.parametrize("bad", [(2, 1, 1), (2, 2, 0), (2, 2, 2), (1, 2, 1)])
def test_parameter_range(bad):
    with pytest.raises(ParameterError):
        cn.expected_params(*bad)


@pytest.mark.parametrize("q, m", [(q, m) for q in (2, 3, 4, 5, 7, 8, 9) for m in (2, 3, 4)])
def test_identity_holds_across_family(q, m):
    for r in range(1, m):
        P = cn.expected_params(q, m, r)
        assert P.satisfies_identity()
        f, g = P.multiplicities
        assert f >= 0 and g >= 0


def test_conference_multiplicities():
    P = ParamSet(13, 6, 2, 3)
    assert P.eigenvalues is None
    assert P.multiplicities == (6, 6)
    assert ParamSet(9, 4, 1, 2).eigenvalues == (1, -2)


def test_param_dict_roundtrip():
    P = cn.expected_params(3, 3, 2)
    assert ParamSet.from_dict(P.as_dict()) == P


def test_projective_set_params_hyperoval():
    P = cn.projective_set_params(6, 0, 2, 4, 3)
    assert (P.v, P.k, P.lam, P.mu) == (64, 18, 2, 6)
    assert P.latin_square_type() == (8, 2, -1)


def test_projective_set_params_other_case():
    P = cn.projective_set_params(10, 0, 2, 4, 3)
    assert P.k == 30
    # (10, 3, 0, 2) over F_4 is not a two-intersection set, so the identity fails
    assert not P.satisfies_identity()


def test_projective_set_params_rejects_bad_heights():
    with pytest.raises(ParameterError):
        cn.projective_set_params(6, 2, 2, 4, 3)
    with pytest.raises(ParameterError):
        cn.projective_set_params(6, 3, 1, 4, 3)


@pytest.mark.parametrize(
    "qm, expected", [((2, 2), (16, 5, 0, 2)), ((3, 2), (81, 20, 1, 6)), ((2, 3), (64, 27, 10, 12))]
)
def test_quadric_params(qm, expected):
    P = cn.quadric_params(*qm)
    assert (P.v, P.k, P.lam, P.mu) == expected
    assert P.satisfies_identity()


def test_paley_small():
    pds = cn.paley_pds(plain(5, 1))
    logs = pds.group.logs(pds.indices)[0]
    t = pds.group.table
    assert sorted(t.canonical_index(int(x), 5) for x in logs) == [1, 4]
    assert (pds.claimed.v, pds.claimed.k, pds.claimed.lam, pds.claimed.mu) == (5, 2, 0, 1)


@pytest.mark.parametrize("q, expected", [(9, (9, 4, 1, 2)), (13, (13, 6, 2, 3))])
def test_paley_params(q, expected):
    p, d = {9: (3, 2), 13: (13, 1)}[q]
    P = cn.paley_pds(plain(p, d)).claimed
    assert (P.v, P.k, P.lam, P.mu) == expected


def test_paley_rejects_3_mod_4():
    with pytest.raises(ParameterError):
        cn.paley_pds(plain(7, 1))


@pytest.mark.parametrize("g", GRID, ids=grid_id)
def test_denniston_size_and_symmetry(g):
    pds = denniston(*g)
    assert pds.k == pds.claimed.k
    assert not pds.indicator[0]
    assert pds.indicator[pds.group.neg(pds.indices)].all()


@pytest.mark.parametrize("g", SMALL_GRID, ids=grid_id)
def test_axis_elements(g):
    pds = denniston(*g)
    t = pds.group.table
    xs = np.asarray(t.subfield(t.qm).log_of_index)
    idx = pds.group.index(xs, np.full_like(xs, ZERO))
    member = pds.indicator[idx]
    assert list(member) == [x != ZERO for x in xs]


@pytest.mark.parametrize("g", GRID, ids=grid_id)
def test_scalar_action(g):
    from denniston.verify import scalar_invariance

    pds = denniston(*g)
    t = pds.group.table
    step = t.subfield(t.q).step
    assert all(scalar_invariance(pds, k * step) for k in range(t.q - 1))
    assert not scalar_invariance(pds, t.omega)


def brute_force_counts(pds):
    """Difference multiset computed from field subtraction on log pairs."""
    t, group = pds.group.table, pds.group
    xs, ys = group.logs(pds.indices)
    pairs = list(zip(xs.tolist(), ys.tolist()))
    c = Counter()
    for x1, y1 in pairs:
        for x2, y2 in pairs:
            c[(t.sub(x1, x2), t.sub(y1, y2))] += 1
    return c


@pytest.mark.parametrize("g", [(2, 1, 2, 1), (2, 1, 3, 1), (2, 1, 3, 2)], ids=grid_id)
def test_brute_force_pds_property(g):
    pds = denniston(*g)
    t, P = pds.group.table, pds.claimed
    counts = brute_force_counts(pds)
    members = set(zip(*[a.tolist() for a in pds.group.logs(pds.indices)]))
    qm_elems = [ZERO] + list(range(0, t.n1, t.subfield(t.qm).step))
    for x in qm_elems:
        for y in range(-1, t.n1):
            if x == ZERO and y == ZERO:
                assert counts[(x, y)] == P.k
            else:
                assert counts[(x, y)] == (P.lam if (x, y) in members else P.mu)


def test_alternative_modulus_still_works():
    t = build_field(2, 1, 2, modulus=(1, 0, 0, 1, 1))
    pds = cn.build_denniston(t, 1)
    from denniston.verify import verify_pds

    assert verify_pds(pds).is_pds


def test_random_subspace_builds_pds():
    from denniston.verify import verify_pds

    t = field(2, 1, 3)
    R = cy.random_subspace(t, 2, seed=7)
    assert verify_pds(cn.build_denniston(t, 2, R), check_level="counts").is_pds


def test_subspace_dimension_mismatch():
    t = field(2, 1, 3)
    with pytest.raises(ParameterError):
        cn.build_denniston(t, 2, cy.default_subspace(t, 1))


def test_group_index_roundtrip():
    pds = denniston(3, 1, 2, 1)
    g = pds.group
    idx = np.arange(g.v)
    assert np.array_equal(g.index(*g.logs(idx)), idx)
    assert np.array_equal(g.from_digits(g.digits(idx)), idx)
    assert np.array_equal(g.neg(g.neg(idx)), idx)


def test_group_addition_is_digitwise():
    pds = denniston(3, 1, 2, 1)
    g, t = pds.group, pds.group.table
    rng = np.random.default_rng(0)
    for a, b in rng.integers(0, g.v, size=(50, 2)):
        (xa, ya), (xb, yb) = ([int(z[0]) for z in g.logs([a])], [int(z[0]) for z in g.logs([b])])
        s = int(g.index(t.add(xa, xb), t.add(ya, yb)))
        assert s == int(g.from_digits(g.digits(a) + g.digits(b)))


def test_toggle():
    pds = denniston(2, 1, 2, 1)
    m = pds.toggled(0)
    assert m.k == pds.k + 1 and m.meta["mutated"] == 0
    assert pds.k == 18
