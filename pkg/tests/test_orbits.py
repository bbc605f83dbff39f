import pytest

from hopfplumb import (
    affine_family,
    affine_orbit_signature,
    affine_relation_at,
    boundary_components,
    build_plumbing,
    classify_tree,
    coverage_check,
    d4tilde_scc_check,
    enumerate_norm_one,
    find_affine_subtree,
    growth_classify,
    is_primitive,
    jordan_unit_circle_check,
    named_tree,
    orbit_count_in_ball,
    orbit_partition,
    q_value,
    standard_hopf_bands,
)
from hopfplumb.orbits import (
    LISTED_GENERATORS,
    FamilyNotIsotropicShift,
    NotClosedUnderM,
    Verdict,
    ZeroVector,
    basis_vector,
    default_generators,
    neg,
    sign_normal,
)
from hopfplumb.trees import Kind

from conftest import AFFINE_NAMED, SPHERICAL_NAMED, spider, star, trees_up_to

TREES9 = trees_up_to(9)


def plumb(family, n=None):
    return build_plumbing(named_tree(family, n))


# standard Hopf bands -------------------------------------------------------

@pytest.mark.parametrize("tree", TREES9[::3], ids=lambda t: str(t.sorted_edges()))
def test_standard_bands_have_q_one(tree):
    p = build_plumbing(tree)
    assert all(q_value(p, x) == 1 for x in standard_hopf_bands(p))


def test_standard_bands_an_are_all_solutions():
    for n in range(1, 9):
        p = plumb("A", n)
        assert standard_hopf_bands(p) == enumerate_norm_one(p)


# orbit partitions ----------------------------------------------------------

def test_partition_a1():
    p = plumb("A", 1)
    assert orbit_partition([(1,), (-1,)], p).classes == [[(-1,), (1,)]]
    assert len(orbit_partition([(1,), (-1,)], p, modulo_sign=False)) == 2


def test_partition_not_closed():
    with pytest.raises(NotClosedUnderM):
        orbit_partition([(1, 0)], plumb("A", 2))


@pytest.mark.parametrize("family,n", SPHERICAL_NAMED)
def test_partition_is_closed_partition(family, n):
    p = plumb(family, n)
    sols = enumerate_norm_one(p)
    for mod in (True, False):
        part = orbit_partition(sols, p, modulo_sign=mod)
        flat = [x for c in part.classes for x in c]
        assert sorted(flat) == sols
        for c in part.classes:
            cs = set(c)
            assert all(p.apply(x) in cs for x in c)
            if mod:
                assert all(neg(x) in cs for x in c)
        assert part.class_of(sols[0]) == part.class_of(p.apply(sols[0]))


def test_e8_partition_meets_listed_generators():
    p = plumb("E8")
    part = orbit_partition(enumerate_norm_one(p), p)
    gens = {basis_vector(8, *s) for s in LISTED_GENERATORS["E8"]}
    assert all(gens & set(c) for c in part.classes)


def test_e6_partition_and_listed_generators():
    # The listed E6 generators meet only some classes; the classes they miss
    # consist of vectors supported on the A5 / D5 subtrees.
    p = plumb("E6")
    sols = enumerate_norm_one(p)
    part = orbit_partition(sols, p)
    gens = {basis_vector(6, *s) for s in LISTED_GENERATORS["E6"]}
    missed = [c for c in part.classes if not gens & set(c)]
    assert missed
    assert (1, 1, 1, 0, 1, 0) in [x for c in missed for x in c]


# coverage ------------------------------------------------------------------

def _off_subtrees(sols, nonzero):
    return [x for x in sols if all(x[i - 1] != 0 for i in nonzero)]


@pytest.mark.parametrize("n", range(1, 9))
def test_coverage_an_standard(n):
    p = plumb("A", n)
    assert coverage_check(enumerate_norm_one(p), standard_hopf_bands(p), p).covered


@pytest.mark.parametrize("n", range(4, 9))
def test_coverage_dn_standard(n):
    p = plumb("D", n)
    cov = coverage_check(enumerate_norm_one(p), standard_hopf_bands(p), p)
    assert cov.covered
    for s, (g, j, sign) in cov.witness.items():
        assert tuple(sign * c for c in p.apply(g, j)) == s


def test_coverage_e8_listed():
    p = plumb("E8")
    assert coverage_check(enumerate_norm_one(p), default_generators(p, "E8"), p, max_power=60).covered


@pytest.mark.parametrize("family,nonzero,count", [("E6", (2, 5, 6), 14), ("E7", (5, 7), 34), ("E8", (5, 8), 90)])
def test_listed_generators_cover_solutions_off_subtrees(family, nonzero, count):
    # the exceptional argument treats only solutions not supported on a
    # proper subtree; those are all reached by the listed generators
    p = plumb(family)
    rest = _off_subtrees(enumerate_norm_one(p), nonzero)
    assert len(rest) == count
    assert coverage_check(rest, default_generators(p, family), p).covered


@pytest.mark.parametrize("family", ["E6", "E7"])
def test_listed_generators_leave_subtree_solutions(family):
    p = plumb(family)
    cov = coverage_check(enumerate_norm_one(p), default_generators(p, family), p)
    assert not cov.covered
    assert len(cov.missing) == {"E6": 24, "E7": 18}[family]


@pytest.mark.parametrize("family", ["E6", "E7", "E8"])
def test_listed_plus_standard_cover_everything(family):
    p = plumb(family)
    gens = default_generators(p, family) + standard_hopf_bands(p)
    assert coverage_check(enumerate_norm_one(p), gens, p).covered


def test_e6_single_generator_not_enough():
    p = plumb("E6")
    assert not coverage_check(enumerate_norm_one(p), [basis_vector(6, 1)], p).covered


def test_coverage_without_sign():
    p = plumb("A", 2)
    cov = coverage_check(enumerate_norm_one(p), [(1, 0)], p, modulo_sign=False)
    assert cov.covered  # M has order 6 and -1 is M^3
    assert all(sign == 1 for _, _, sign in cov.witness.values())


# D_n relations -------------------------------------------------------------

def ones(k):
    return (1,) * k


def zeros(k):
    return (0,) * k


@pytest.mark.parametrize("n", range(4, 11))
def test_dn_relation_interval(n):
    p = plumb("D", n)
    for r in range(0, n - 3):
        lhs = ones(r + 3) + zeros(n - r - 3)
        seed = zeros(n - r - 1) + ones(r + 1)
        rhs = p.apply(seed, r + 2)
        assert lhs == tuple((-1) ** (r + 1) * c for c in rhs)


@pytest.mark.parametrize("n", range(4, 11))
def test_dn_relation_interval_endpoint(n):
    # at r = n - 3 the seed (0, 0, 1, ..., 1) is not a Hopf band class
    p = plumb("D", n)
    assert q_value(p, zeros(2) + ones(n - 2)) != 1


@pytest.mark.parametrize("n", range(4, 11))
def test_dn_relation_two_fork(n):
    p = plumb("D", n)
    for r in range(0, n - 3):
        for s in range(1, n - 2 - r):
            lhs = (2, 1, 1) + (2,) * r + ones(s) + zeros(n - r - s - 3)
            seed = (1, 0, 0) + ones(s - 1) + zeros(n - s - 2)
            rhs = p.apply(seed, r + 1)
            assert lhs == tuple((-1) ** (r + 1) * c for c in rhs)


# affine relations ----------------------------------------------------------

D4T_TABLE = [  # w (zero-extended), k in M^2 w = w + k u
    ((2, 1, 1, 1, 0), 1),
    ((1, 1, 1, 1, 0), -1),
    ((1, 1, 1, 0, 0), 0),
    ((1, 1, 0, 0, 0), 1),
    ((1, 0, 0, 0, 0), 2),
    ((0, 1, 0, 0, 0), -1),
]


@pytest.mark.parametrize("w,k", D4T_TABLE)
def test_d4_tilde_table(d4t, w, k):
    fam = affine_family(d4t)
    assert affine_relation_at(w, fam, d4t, 2) == (2, 1, k)
    sig = affine_orbit_signature(w, fam, d4t)
    assert sig is not None and 2 % sig.d == 0


def test_d4_tilde_minimal_signatures(d4t):
    fam = affine_family(d4t)
    assert affine_orbit_signature((2, 1, 1, 1, 0), fam, d4t) == (2, 1, 1)
    # w3 already satisfies M w3 = w3 - u, which squares to M^2 w3 = w3
    assert affine_orbit_signature((1, 1, 1, 0, 0), fam, d4t) == (1, 1, -1)


def test_every_d4_tilde_base_solution_has_relation(d4t):
    fam = affine_family(d4t)
    for w in fam.base_solutions:
        assert affine_relation_at(w, fam, d4t, 2) is not None


@pytest.mark.parametrize("n", range(5, 10))
def test_dn_tilde_relation(n):
    p = plumb("~D", n)
    fam = affine_family(p)
    v1 = basis_vector(p.n, 1)
    assert affine_orbit_signature(v1, fam, p) == (n - 2, (-1) ** n, 2)
    for k in range(-3, 4):
        lhs = p.apply(v1, (n - 2) * k)
        assert lhs == tuple((-1) ** (n * k) * c for c in fam.member(v1, 2 * k))


@pytest.mark.parametrize("family,expected", [("~E6", (2, 1, 1)), ("~E7", (3, -1, 1)), ("~E8", (5, -1, 1))])
def test_exceptional_affine_relations(family, expected):
    p = plumb(family)
    fam = affine_family(p)
    assert affine_orbit_signature(basis_vector(p.n, 1), fam, p) == expected


def test_affine_signature_none_when_bounded_by_max_d(d4t):
    fam = affine_family(d4t)
    assert affine_orbit_signature((2, 1, 1, 1, 0), fam, d4t, max_d=1) is None


@pytest.mark.parametrize("family,n", AFFINE_NAMED)
def test_mu_is_minus_u(family, n):
    p = plumb(family, n)
    u = affine_family(p).u
    assert p.apply(u) == neg(u)


# primitivity ---------------------------------------------------------------

def test_is_primitive():
    assert is_primitive((2, 1, 1, 1, 1))
    assert not is_primitive((2, 4))
    assert not is_primitive((0, 3, 0))
    with pytest.raises(ZeroVector):
        is_primitive((0, 0))


def test_scc_examples():
    assert d4tilde_scc_check(0)[:2] == ((1, 2), True)
    assert d4tilde_scc_check(-1)[:2] == ((-1, -2), True)
    c = d4tilde_scc_check(3)
    assert c[:2] == ((7, 14), False)
    assert c.coords == (7, 14, -10, -6, -3)


def test_scc_range():
    for k in range(-50, 51):
        c = d4tilde_scc_check(k)
        assert c.projected == (2 * k + 1, 4 * k + 2)
        assert c.coords == (2 * k + 1, 4 * k + 2, -(3 * k + 1), -2 * k, -k)
        assert c.realizable == (k in (0, -1))


def test_scc_family_fixed_by_m_squared(d4t):
    for k in range(-4, 5):
        w = tuple(a + k * b for a, b in zip((1, 1, 1, 0, 0), (2, 1, 1, 1, 1)))
        assert d4t.apply(w, 2) == w


# Jordan test ---------------------------------------------------------------

@pytest.mark.parametrize("family,n", SPHERICAL_NAMED)
def test_jordan_spherical(family, n):
    j = jordan_unit_circle_check(plumb(family, n))
    assert j.ok and j.repeated_part.degree == 0


@pytest.mark.parametrize("family,n", AFFINE_NAMED)
def test_jordan_affine_fails(family, n):
    assert not jordan_unit_circle_check(plumb(family, n)).ok


def test_jordan_d4_tilde_rank_cross_check(d4t):
    import numpy as np
    m2 = np.array(d4t.M.tolist()) @ np.array(d4t.M.tolist()) - np.eye(5, dtype=int)
    assert np.linalg.matrix_rank(m2 @ m2) < np.linalg.matrix_rank(m2)


def test_jordan_hyperbolic_knots():
    knots = [t for t in TREES9 if classify_tree(t).kind == Kind.HYPERBOLIC
             and boundary_components(build_plumbing(t)) == 1]
    assert knots
    assert all(jordan_unit_circle_check(build_plumbing(t)).ok for t in knots)


# growth --------------------------------------------------------------------

def test_growth_a2():
    g = growth_classify((1, 0), plumb("A", 2))
    assert g.verdict == Verdict.BOUNDED and 6 % g.period == 0


@pytest.mark.parametrize("family,n", SPHERICAL_NAMED)
def test_growth_spherical_bounded(family, n):
    p = plumb(family, n)
    assert growth_classify(basis_vector(p.n, 1), p).verdict == Verdict.BOUNDED


def test_growth_affine_is_not_exponential(d4t):
    # linear drift along u is neither periodic nor exponential
    g = growth_classify((2, 1, 1, 1, 0), d4t)
    assert g.verdict == Verdict.INCONCLUSIVE


def test_growth_zero_vector():
    with pytest.raises(ZeroVector):
        growth_classify((0, 0), plumb("A", 2))


KNOT_HOSTS = [
    [(1, 2), (1, 6), (1, 8), (2, 3), (2, 5), (3, 4), (6, 7)],
    [(1, 2), (1, 5), (1, 7), (2, 3), (3, 4), (5, 6), (7, 8)],
]


def _embedded_family(tree):
    sub, emb = find_affine_subtree(tree)
    fam = affine_family(build_plumbing(sub))
    return emb.push(basis_vector(sub.n, 1)), emb.push(fam.u)


@pytest.mark.parametrize("edges", KNOT_HOSTS)
def test_growth_hyperbolic_exponential(edges):
    from hopfplumb import Tree
    t = Tree.from_edges(8, edges)
    p = build_plumbing(t)
    assert boundary_components(p) == 1
    w, _ = _embedded_family(t)
    g = growth_classify(w, p)
    assert g.verdict == Verdict.EXPONENTIAL and g.growth_rate_estimate > 1.01


# orbit counts --------------------------------------------------------------

@pytest.mark.parametrize("n", range(5, 9))
def test_orbit_count_dn_tilde_single_orbit(n):
    p = plumb("~D", n)
    u = affine_family(p).u
    v1 = basis_vector(p.n, 1)
    w2u = tuple(2 * c for c in u)
    for K in (0, 1, 3, 6):
        assert orbit_count_in_ball(v1, w2u, p, K) == 1


def test_orbit_count_k0():
    p = build_plumbing(star(5))
    w, u = _embedded_family(star(5))
    assert orbit_count_in_ball(w, u, p, 0) == 1


def test_orbit_count_requires_isotropic_shift(d4t):
    with pytest.raises(FamilyNotIsotropicShift):
        orbit_count_in_ball((1, 0, 0, 0, 0), (1, 0, 0, 0, 0), d4t, 2)


@pytest.mark.parametrize("edges", KNOT_HOSTS)
def test_orbit_count_grows_in_hyperbolic_host(edges):
    from hopfplumb import Tree
    t = Tree.from_edges(8, edges)
    p = build_plumbing(t)
    w, u = _embedded_family(t)
    counts = [orbit_count_in_ball(w, u, p, K) for K in (5, 10, 20)]
    assert counts[1] >= 5
    assert counts[0] < counts[1] < counts[2]


def test_sign_normal():
    assert sign_normal((0, -1, 2)) == (0, 1, -2)
    assert sign_normal((0, 0)) == (0, 0)
