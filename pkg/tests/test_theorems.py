from fractions import Fraction

import pytest

from homcount.categories import build_ab_category, build_group_category, build_poset_category, group_category
from homcount.fincat import (
    FiniteCategory,
    factors_through_epi,
    hom_count,
    hom_set,
    is_epi,
    is_iso,
    is_mono,
    pushout,
)
from homcount.groups import catalog, homomorphisms, is_injective
from homcount.theorems import (
    HypothesisError,
    IClass,
    MClass,
    check_corollary_conditions,
    check_dawar_pushouts,
    check_main_conditions,
    check_pultr_conditions,
    check_variant_condition,
    check_weak_conditions,
    hom_matrix,
    inclusion_exclusion_terms,
    is_combinatorial,
    mono_count_direct,
    mono_count_inclusion_exclusion,
    parse_class_spec,
    pultr_decomposition_identity,
    verify_lovasz_lemma,
    verify_pushout_hom_lemma,
)

GROUPS = {g.name: g for g in catalog(8)}
TRIVIAL = FiniteCategory.from_rule(["*"], [("e", 0, 0)], [0], lambda g, f: 0)
POSET = (MClass("none"), IClass("all-morphisms"))


def sub_catalog(*names):
    return group_category([GROUPS[n] for n in names])


# -- class selection -------------------------------------------------------------------------


def test_class_selection_rules():
    G = build_group_category(4)
    non_mono = next(f for f in range(G.n_morphisms) if not is_mono(G, f))
    non_epi = next(f for f in range(G.n_morphisms) if not is_epi(G, f))
    with pytest.raises(ValueError, match="non-monomorphisms"):
        IClass("explicit", frozenset(G.identity) | {non_mono}).select(G)
    with pytest.raises(ValueError, match="omits identities"):
        IClass("explicit", frozenset()).select(G)
    with pytest.raises(ValueError, match="non-epimorphisms"):
        MClass("explicit", frozenset({non_epi})).select(G)
    Z = build_poset_category("Z", 2)
    assert IClass("identities").select(Z) == frozenset(Z.identity)
    assert IClass("all-morphisms").select(Z) == frozenset(range(Z.n_morphisms))
    assert MClass("none").select(Z) == frozenset()


def test_parse_class_spec():
    C = build_poset_category("Z", 1)
    assert parse_class_spec("none", C, MClass) == MClass("none")
    spec = parse_class_spec("explicit:id_0,1>0", C, IClass)
    assert spec.indices == frozenset({C.mor("id_0"), C.mor("1>0")})
    with pytest.raises(ValueError):
        parse_class_spec("bogus", C, MClass)
    with pytest.raises(KeyError):
        parse_class_spec("explicit:nope", C, IClass)


# -- main theorem ----------------------------------------------------------------------------


@pytest.mark.parametrize("k", range(1, 5))
def test_main_on_ab_equals_hom_count(k):
    C = build_ab_category(k)
    assert check_main_conditions(C).overall
    for z in range(C.n_objects):
        for a in range(C.n_objects):
            assert mono_count_inclusion_exclusion(C, z, a) == hom_count(C, z, a) == mono_count_direct(C, z, a)


def test_main_on_z_poset():
    C = build_poset_category("Z", 3)
    assert check_main_conditions(C, *POSET).overall
    report = check_main_conditions(C, MClass("none"), IClass("identities"))
    cond = report["non-I-factors"]
    assert cond.holds is False
    assert not C.is_identity(cond.witness)  # replay: a non-identity with nothing to factor through


def test_main_on_small_groups():
    C = sub_catalog("1", "Z2", "Z2xZ2")
    M, I = MClass("all-proper-epis"), IClass("all-monos")
    assert check_main_conditions(C, M, I).overall
    z, a = C.obj("Z2"), C.obj("Z2xZ2")
    expected = sum(1 for phi in homomorphisms(GROUPS["Z2"], GROUPS["Z2xZ2"]) if is_injective(phi))
    assert expected == 3
    assert mono_count_inclusion_exclusion(C, z, a, M, I) == 3 == mono_count_direct(C, z, a, I)


def test_identity_is_always_counted():
    C = build_group_category(6)
    for z in range(C.n_objects):
        assert mono_count_inclusion_exclusion(C, z, z) >= 1


def test_inclusion_exclusion_matches_direct_on_groups(groups6):
    M, I = MClass("maximal-epis"), IClass("all-monos")
    assert check_main_conditions(groups6, M, I).overall
    for z in range(groups6.n_objects):
        for a in range(groups6.n_objects):
            assert mono_count_inclusion_exclusion(groups6, z, a, M, I) == mono_count_direct(groups6, z, a, I)


def test_inclusion_exclusion_terms_shape(groups6):
    z, a = groups6.obj("Z4"), groups6.obj("Z2")
    terms = inclusion_exclusion_terms(groups6, z, a)
    assert terms[0].subset == () and terms[0].count == hom_count(groups6, z, a)
    assert sum(t.sign * t.count for t in terms) == mono_count_direct(groups6, z, a)


def test_hypothesis_violation_is_an_error():
    C = build_poset_category("Z", 2)
    with pytest.raises(HypothesisError):
        mono_count_inclusion_exclusion(C, "1", "0", MClass("none"), IClass("identities"))


# -- weak / corollary ----------------------------------------------------------------------------


@pytest.mark.parametrize("k", range(1, 7))
def test_weak_on_ab(k):
    assert check_weak_conditions(build_ab_category(k)).overall


def test_weak_fails_on_z():
    C = build_poset_category("Z", 3)
    report = check_weak_conditions(C)
    cond = report["factor-not-mono"]
    assert cond.holds is False
    f, q = cond.witness
    assert is_mono(C, f) and factors_through_epi(C, f, q) and not is_iso(C, q)


def test_weak_on_trivial_category():
    assert check_weak_conditions(TRIVIAL).overall
    assert check_dawar_pushouts(TRIVIAL).overall
    assert check_pultr_conditions(TRIVIAL).overall


def test_weak_implies_main_with_proper_epis():
    cats = [build_ab_category(3), build_group_category(5), sub_catalog("1", "Z2", "Z4"), build_poset_category("N", 3)]
    for C in cats:
        if check_weak_conditions(C).overall:
            assert check_main_conditions(C, MClass("all-proper-epis"), IClass("all-monos")).overall


def test_corollary(groups6):
    assert check_corollary_conditions(groups6).overall
    assert check_corollary_conditions(build_ab_category(3)).overall
    report = check_corollary_conditions(build_poset_category("Z", 2))
    assert report["mono-iff-coimage-iso"].holds is False


# -- Pultr-style -----------------------------------------------------------------------------


def test_pultr_conditions_on_examples(groups6):
    assert check_pultr_conditions(groups6).overall
    report = check_pultr_conditions(build_ab_category(3))
    assert report.overall
    counts = report["finite-subobjects"].counts
    assert [counts[f"P{i}"] for i in range(4)] == [7, 5, 3, 1]


def test_variant_conditions():
    report = check_variant_condition(build_poset_category("N", 4))
    assert report.overall
    assert max(report["well-founded-supobjects"].counts.values()) <= 4
    negn = check_variant_condition(build_poset_category("negN", 4))
    assert negn.overall and negn["well-founded-supobjects"].counts["0"] == 4
    assert set(check_variant_condition(build_ab_category(3))["well-founded-supobjects"].counts.values()) == {0}


def test_dawar_on_ab():
    C = build_ab_category(3)
    report = check_dawar_pushouts(C)
    assert report["pushouts"].holds is False
    assert (C.mor("a2_1"), C.mor("b2_1")) in report["pushouts"].witness
    assert report["proper-factorization-system"].holds is None
    for f, g in report["pushouts"].witness:
        assert pushout(C, (f, g)) is None


def test_dawar_on_small_groups():
    C = sub_catalog("1", "Z2", "Z3")
    report = check_dawar_pushouts(C)
    spans = {(C.label(f), C.label(g)) for f, g in report["pushouts"].witness}
    assert ("1>Z2.0", "1>Z3.0") in spans


# -- identities --------------------------------------------------------------------------------


def test_pultr_identity_on_groups(groups6):
    for a in range(groups6.n_objects):
        for b in range(groups6.n_objects):
            rep = pultr_decomposition_identity(groups6, a, b)
            assert rep.holds
            assert rep.total == rep.hom


def test_pultr_identity_z2_terms(groups6):
    rep = pultr_decomposition_identity(groups6, "Z2", "Z2")
    contributions = {groups6.objects[t.T]: t.contribution for t in rep.terms if t.contribution}
    # T = 1: 1 * 1 / 1 from the trivial map; T = Z2: 1 * 1 / 1 from the identity (Aut(Z2) is trivial)
    assert contributions == {"1": Fraction(1), "Z2": Fraction(1)}
    assert rep.hom == 2


def test_pultr_identity_on_ab():
    C = build_ab_category(4)
    for a in range(C.n_objects):
        for b in range(C.n_objects):
            rep = pultr_decomposition_identity(C, a, b)
            assert rep.holds
            nonzero = [t for t in rep.terms if t.extremal]
            assert [t.T for t in nonzero] == [a]


def test_pultr_identity_trivial():
    rep = pultr_decomposition_identity(TRIVIAL, 0, 0)
    assert rep.hom == 1 and rep.total == 1


def test_pultr_identity_requires_hypotheses():
    # a two-element monoid where s . s = s: s is neither mono nor epi, and has no image
    C = FiniteCategory.from_rule(["*"], [("e", 0, 0), ("s", 0, 0)], [0], lambda g, f: 1 if 1 in (g, f) else 0)
    assert not check_pultr_conditions(C).overall
    with pytest.raises(HypothesisError):
        pultr_decomposition_identity(C, 0, 0)


def test_lovasz_lemma():
    for C in (build_ab_category(4), build_group_category(6), build_poset_category("Z", 3), TRIVIAL):
        rep = verify_lovasz_lemma(C)
        assert rep.holds and rep.pairs_checked == C.n_objects * (C.n_objects + 1) // 2


def test_pushout_hom_lemma(groups6):
    X = groups6.obj("Z4")
    q = next(f for f in hom_set(groups6, X, "Z2") if is_epi(groups6, f))
    for y in range(groups6.n_objects):
        assert verify_pushout_hom_lemma(groups6, q, q, y).holds
        e = groups6.identity[X]
        rep = verify_pushout_hom_lemma(groups6, e, e, y)
        assert rep.lhs == frozenset(hom_set(groups6, X, y))
    P = build_poset_category("N", 3)
    rep = verify_pushout_hom_lemma(P, P.mor("2>1"), P.mor("2>1"), "0")
    assert rep.holds and len(rep.lhs) == 1
    for x in range(groups6.n_objects):
        epis = [f for f in groups6.out_of(x) if is_epi(groups6, int(f))]
        for q1 in epis:
            for q2 in epis:
                if pushout(groups6, (int(q1), int(q2))) is not None:
                    for y in range(groups6.n_objects):
                        assert verify_pushout_hom_lemma(groups6, int(q1), int(q2), y).holds


def test_pushout_hom_lemma_needs_pushout():
    C = build_ab_category(2)
    with pytest.raises(HypothesisError):
        verify_pushout_hom_lemma(C, C.mor("a2_1"), C.mor("b2_1"), "P0")


# -- combinatoriality ----------------------------------------------------------------------------


def test_combinatorial_examples(groups6):
    for C in (build_ab_category(4), build_poset_category("Z", 3), groups6, sub_catalog("Z2", "Z2")):
        res = is_combinatorial(C)
        assert res.holds and res.iso_columns_equal
    m = hom_matrix(build_ab_category(2, boundary=False))
    assert m.entries == [[1, 0, 0], [2, 1, 0], [2, 2, 1]]


def set_maps_category():
    """Sets A = {0,1}, B = {0,1,2} with a hand-picked composition-closed family of maps.

    Hom counts: A->A 3, A->B 3, B->A 4, B->B 4, so both objects have the
    column (3, 4) although there is no bijection between them.
    """
    size = {0: 2, 1: 3}

    def const(n, v):
        return tuple([v] * n)

    homs = {
        (0, 0): [(0, 1), const(2, 0), const(2, 1)],
        (0, 1): [const(2, v) for v in range(3)],
        (1, 0): [const(3, 0), const(3, 1), (0, 1, 1), (0, 0, 1)],
        (1, 1): [(0, 1, 2)] + [const(3, v) for v in range(3)],
    }
    arrows, index = [], {}
    for (d, c), maps in homs.items():
        for m in maps:
            index[(d, c, m)] = len(arrows)
            arrows.append((f"{'AB'[d]}{'AB'[c]}{''.join(map(str, m))}", d, c))
    fun = {i: key for key, i in index.items()}

    def rule(g, f):
        d, _, fm = fun[f]
        _, c, gm = fun[g]
        return index[(d, c, tuple(gm[x] for x in fm))]

    identity = [index[(0, 0, (0, 1))], index[(1, 1, (0, 1, 2))]]
    assert all(len(fun[i][2]) == size[fun[i][0]] for i in fun)
    return FiniteCategory.from_rule(["A", "B"], arrows, identity, rule)


def test_non_combinatorial_witness():
    from homcount.fincat import validate

    C = set_maps_category()
    assert validate(C).ok
    res = is_combinatorial(C)
    assert not res.holds and res.witness == (0, 1)
    assert res.iso_columns_equal
    assert not any(is_iso(C, f) for f in hom_set(C, "A", "B"))
