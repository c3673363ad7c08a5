from itertools import combinations

import pytest

from homcount.categories import build_ab_category, build_group_category, build_poset_category, group_category
from homcount.fincat import (
    FiniteCategory,
    NotEpiError,
    coimage,
    hom_count,
    hom_set,
    image,
    is_epi,
    is_extremal_epi,
    is_iso,
    is_mono,
    iso_classes,
    maximal_supobjects,
    opposite,
    proper_supobjects,
    pushout,
    subobjects,
    supobjects,
    validate,
    verify_pushout,
    well_founded_supobjects,
)
from homcount.fincat.structure import representative, supobject_class_of
from homcount.groups import catalog

from oracles import brute_cocones, brute_epi, brute_iso, brute_mono, brute_pushout_exists, brute_subobject_count

SMALL = [
    ("ab2", build_ab_category(2)),
    ("ab3-plain", build_ab_category(3, boundary=False)),
    ("Z2", build_poset_category("Z", 2)),
    ("negN3", build_poset_category("negN", 3)),
    ("groups4", build_group_category(4)),
]


@pytest.mark.parametrize("name, C", SMALL, ids=[n for n, _ in SMALL])
def test_predicates_match_brute_force(name, C):
    for f in range(C.n_morphisms):
        assert is_mono(C, f) == brute_mono(C, f)
        assert is_epi(C, f) == brute_epi(C, f)
        assert is_iso(C, f) == brute_iso(C, f)


@pytest.mark.parametrize("name, C", SMALL, ids=[n for n, _ in SMALL])
def test_mono_epi_duality(name, C):
    op = opposite(C)
    for f in range(C.n_morphisms):
        assert is_mono(C, f) == is_epi(op, f)
        assert is_epi(C, f) == is_mono(op, f)
        assert is_iso(C, f) == is_iso(op, f)


@pytest.mark.parametrize("name, C", SMALL, ids=[n for n, _ in SMALL])
def test_subobject_counts_match_brute_force(name, C):
    for x in range(C.n_objects):
        assert len(subobjects(C, x)) == brute_subobject_count(C, x)
        # dual: supobjects are subobjects in the opposite category
        assert len(supobjects(C, x)) == brute_subobject_count(opposite(C), x)


def test_hom_counts_of_ab():
    C = build_ab_category(3)
    assert hom_count(C, "P2", "P1") == 2
    assert hom_count(C, "P1", "P2") == 0
    assert all(hom_count(C, x, x) >= 1 for x in range(C.n_objects))
    assert sorted(C.label(f) for f in hom_set(C, "P2", "P1")) == ["a2_1", "b2_1"]


def test_unknown_object():
    with pytest.raises(KeyError):
        hom_count(build_ab_category(1), "P7", "P0")


def test_ab_arrows_mono_not_epi():
    for k in range(1, 5):
        C = build_ab_category(k)
        for f in range(C.n_morphisms):
            if not is_iso(C, f):
                assert is_mono(C, f) and not is_epi(C, f), C.label(f)


def test_opposite_of_ab_swaps_mono_and_epi():
    C = opposite(build_ab_category(2))
    a = C.mor("a1_0")
    assert is_epi(C, a) and not is_mono(C, a)


def test_z_poset_every_arrow_mono_and_epi():
    C = build_poset_category("Z", 3)
    for f in range(C.n_morphisms):
        assert is_mono(C, f) and is_epi(C, f)
        assert is_iso(C, f) == C.is_identity(f)


def test_extremal_epi():
    C = build_group_category(4)
    quotient = next(f for f in hom_set(C, "Z4", "Z2") if is_epi(C, f))
    assert is_extremal_epi(C, quotient)
    for x in range(C.n_objects):
        assert is_extremal_epi(C, C.identity[x])
    with pytest.raises(NotEpiError):
        is_extremal_epi(C, next(f for f in hom_set(C, "Z2", "Z4") if not is_epi(C, f)))


def one_object_group(name):
    """The group itself as a category: one object, one morphism per element."""
    G = next(g for g in catalog(8) if g.name == name)
    arrows = [(f"g{i}", 0, 0) for i in range(G.order)]
    return FiniteCategory.from_rule(["*"], arrows, [0], lambda g, f: G.mul(g, f))


def test_one_object_group_category():
    for name in ("Z3", "S3", "Q8"):
        C = one_object_group(name)
        assert validate(C).ok
        for f in range(C.n_morphisms):
            assert is_iso(C, f) and is_extremal_epi(C, f)
        assert maximal_supobjects(C, 0) == []
        assert len(supobjects(C, 0)) == len(subobjects(C, 0)) == 1


def test_one_object_group_is_self_dual():
    from homcount.fincat import check_functor
    from homcount.fincat.structure import inverse

    C = one_object_group("S3")
    inv = [inverse(C, f) for f in range(C.n_morphisms)]
    assert check_functor(C, opposite(C), [0], inv)


def test_iso_classes():
    C = build_ab_category(3)
    assert all(len(b) == 1 for b in iso_classes(C))
    G = build_group_category(4)
    assert all(len(b) == 1 for b in iso_classes(G))
    # two copies of Z2: one block of size 2
    Z2 = next(g for g in catalog(2) if g.name == "Z2")
    D = group_category([Z2, Z2])
    assert iso_classes(D) == [(0, 1)]
    assert representative(D, 1) == 0


def test_iso_classes_are_an_equivalence():
    for _, C in SMALL:
        blocks = iso_classes(C)
        seen = sorted(x for b in blocks for x in b)
        assert seen == list(range(C.n_objects))
        for b in blocks:
            for x, y in combinations(b, 2):
                assert any(is_iso(C, f) for f in hom_set(C, x, y))
                assert any(is_iso(C, f) for f in hom_set(C, y, x))


def test_supobjects_of_ab_are_trivial():
    for k in range(1, 5):
        C = build_ab_category(k)
        for x in range(C.n_objects):
            assert len(supobjects(C, x)) == 1
            assert maximal_supobjects(C, x) == []
            assert well_founded_supobjects(C, x).chain_length == 0
        assert len(subobjects(C, "P0")) == 2 * k + 1


def test_supobject_order_identity_is_maximum():
    for _, C in SMALL:
        for x in range(C.n_objects):
            classes = supobjects(C, x)
            top = supobject_class_of(C, C.identity[x])
            assert all(c.id in top.order_above for c in classes)
            for c in classes:
                assert c.id in c.order_above  # reflexive
                for d in c.order_above:
                    assert classes[d].order_above <= c.order_above  # transitive


def test_maximal_supobject_of_negn():
    C = build_poset_category("negN", 3)
    (m,) = maximal_supobjects(C, "0")
    assert C.objects[C.cod(m.representative)] == "-1"


def test_image_and_coimage():
    G = build_group_category(4)
    f = next(h for h in hom_set(G, "Z4", "Z2") if is_epi(G, h))
    im = image(G, f)
    assert G.identity[G.obj("Z2")] in im.members
    for _, C in SMALL:
        for g in range(C.n_morphisms):
            if is_mono(C, g):
                assert g in image(C, g).members
        for x in range(C.n_objects):
            assert C.identity[x] in coimage(C, C.identity[x]).members


def test_pushouts_against_brute_force():
    for _, C in SMALL[:4]:
        for x in range(C.n_objects):
            out = [int(f) for f in C.out_of(x)]
            for f, g in combinations(out, 2):
                po = pushout(C, (f, g))
                assert (po is not None) == brute_pushout_exists(C, (f, g))
                if po is not None:
                    assert verify_pushout(C, po)
                    assert po.cocone in brute_cocones(C, (f, g), po.apex)


def test_pushout_of_a_and_b_is_missing():
    for k in range(2, 7):
        for C in (build_ab_category(k), build_ab_category(k, boundary=False)):
            assert pushout(C, (C.mor("a2_1"), C.mor("b2_1"))) is None


def test_pushout_with_identity():
    G = build_group_category(4)
    q = next(h for h in hom_set(G, "Z4", "Z2") if is_epi(G, h))
    po = pushout(G, (G.identity[G.obj("Z4")], q))
    assert G.objects[po.apex] == "Z2"
    assert verify_pushout(G, po)


def test_poset_pushout_is_the_smaller_target():
    C = build_poset_category("Z", 3)
    po = pushout(C, (C.mor("2>1"), C.mor("2>-1")))
    assert C.objects[po.apex] == "-1"


def test_empty_and_bad_spans():
    C = build_ab_category(2)
    po = pushout(C, (), source=1)
    assert po.apex == 1 and verify_pushout(C, po)
    with pytest.raises(ValueError):
        pushout(C, ())
    with pytest.raises(ValueError):
        pushout(C, (C.mor("a1_0"), C.mor("a2_0")))


def test_z_chain_lengths():
    for k in range(1, 6):
        C = build_poset_category("Z", k)
        assert well_founded_supobjects(C, "0").chain_length == k


def test_finite_categories_are_well_founded():
    # two classes above each other would need mutual epis that are not isos
    for _, C in SMALL:
        assert all(well_founded_supobjects(C, x).holds for x in range(C.n_objects))


def test_proper_supobjects_exclude_identity():
    C = build_poset_category("N", 3)
    for x in range(C.n_objects):
        assert all(C.identity[x] not in c.members for c in proper_supobjects(C, x))
