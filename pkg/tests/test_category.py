import numpy as np
import pytest

from homcount.categories import build_ab_category, build_group_category, build_poset_category
from homcount.fincat import (
    UNDEFINED,
    CategoryFormatError,
    FiniteCategory,
    check_functor,
    dump_category,
    full_subcategory,
    opposite,
    parse_category,
    read_category,
    thin_isomorphism,
    validate,
    write_category,
)

ARROW = """
# the walking arrow
obj A
obj B
mor idA : A -> A
mor idB : B -> B
mor f : A -> B
id A = idA
id B = idB
cmp idA . idA = idA
cmp idB . idB = idB
cmp f . idA = f
cmp idB . f = f
"""


def z2_monoid(table):
    """One object, morphisms e and s, with s . s given by ``table``."""
    return FiniteCategory.from_rule(["*"], [("e", 0, 0), ("s", 0, 0)], [0], lambda g, f: table[(g, f)])


def test_parse_arrow_category():
    C = parse_category(ARROW)
    assert C.objects == ("A", "B")
    assert C.n_morphisms == 3
    assert validate(C).ok
    f = C.mor("f")
    assert (C.dom(f), C.cod(f)) == (0, 1)
    assert C.compose(C.mor("idB"), f) == f


def test_compose_rejects_non_composable():
    C = parse_category(ARROW)
    with pytest.raises(ValueError):
        C.compose(C.mor("f"), C.mor("f"))


def test_missing_composite_reported():
    C = parse_category(ARROW.replace("cmp idB . f = f", ""))
    report = validate(C)
    assert report.kinds() == {"missing"}
    assert report.violations[0].indices == (C.mor("idB"), C.mor("f"))


def test_identity_law_violation():
    text = ARROW + "mor g : A -> B\ncmp g . idA = f\ncmp idB . g = g\n"
    C = parse_category(text)
    assert "identity-law" in validate(C).kinds()


def test_associativity_violation():
    good = {(0, 0): 0, (0, 1): 1, (1, 0): 1, (1, 1): 0}
    assert validate(z2_monoid(good)).ok
    # s . s = s makes {e, s} the two-element semilattice: still associative
    assert validate(z2_monoid({**good, (1, 1): 1})).ok
    # break the identity: e . s = e
    broken = validate(z2_monoid({**good, (0, 1): 0}))
    assert "identity-law" in broken.kinds()


def test_non_associative_table_is_caught():
    # three endomorphisms e, x, y with x.x = y, x.y = e, y.x = x: x.(x.x) = e but (x.x).x = x
    rule = {
        (0, 0): 0, (0, 1): 1, (0, 2): 2,
        (1, 0): 1, (2, 0): 2,
        (1, 1): 2, (1, 2): 0, (2, 1): 1, (2, 2): 2,
    }
    C = FiniteCategory.from_rule(["*"], [("e", 0, 0), ("x", 0, 0), ("y", 0, 0)], [0], lambda g, f: rule[(g, f)])
    report = validate(C)
    assert report.kinds() == {"associativity"}


def test_spurious_and_range_entries():
    C = parse_category(ARROW)
    t = np.array(C.table)
    f = C.mor("f")
    t[f, f] = f  # f . f is not composable
    D = FiniteCategory(C.objects, C.morphisms, C.identity, t)
    assert "spurious" in validate(D).kinds()
    t = np.array(C.table)
    t[C.mor("idB"), f] = 99
    D = FiniteCategory(C.objects, C.morphisms, C.identity, t)
    assert "range" in validate(D).kinds()


@pytest.mark.parametrize(
    "text, line, fragment",
    [
        ("obj A\nobj A\n", 2, "duplicate object"),
        ("obj A\nmor f A A\n", 2, "expected 'mor"),
        ("obj A\nmor i : A -> A\nbogus\n", 3, "unknown keyword"),
        ("obj A\nmor i : A -> B\nid A = i\n", 2, "undeclared object"),
        ("obj A\nmor i : A -> A\n", 1, "no identity"),
        ("obj A\nmor i : A -> A\nid A = j\n", 3, "undeclared morphism"),
        ("obj A\nmor i : A -> A\nid A = i\ncmp i . i = i\ncmp i . i = q\n", 5, "undeclared morphism"),
    ],
)
def test_format_errors_carry_line_numbers(text, line, fragment):
    with pytest.raises(CategoryFormatError) as info:
        parse_category(text, source="x.cat")
    assert info.value.line == line
    assert fragment in str(info.value)
    assert str(info.value).startswith(f"x.cat:{line}:")


def test_conflicting_composites():
    text = "obj A\nmor i : A -> A\nmor s : A -> A\nid A = i\ncmp s . s = i\ncmp s . s = s\n"
    with pytest.raises(CategoryFormatError, match="conflicting"):
        parse_category(text)


def test_missing_cmp_left_undefined():
    C = parse_category("obj A\nmor i : A -> A\nid A = i\n")
    assert C.table[0, 0] == UNDEFINED
    assert validate(C).kinds() == {"missing"}


@pytest.mark.parametrize(
    "C",
    [build_ab_category(3), build_ab_category(2, boundary=False), build_poset_category("Z", 2), build_group_category(4)],
    ids=["ab3", "ab2-plain", "Z2", "groups4"],
)
def test_round_trip(C, tmp_path):
    assert parse_category(dump_category(C)) == C
    path = tmp_path / "c.cat"
    write_category(C, path)
    assert read_category(path) == C


def test_dump_rejects_unwritable_names():
    C = FiniteCategory.from_rule(["a b"], [("e", 0, 0)], [0], lambda g, f: 0)
    with pytest.raises(ValueError):
        dump_category(C)


def test_opposite_is_involutive_and_valid():
    for C in (build_ab_category(3), build_group_category(4), build_poset_category("N", 3)):
        op = opposite(C)
        assert validate(op).ok
        assert opposite(op) == C
        assert C.op == op
        for f in range(C.n_morphisms):
            assert (op.dom(f), op.cod(f)) == (C.cod(f), C.dom(f))


def test_thin_isomorphism_negation_of_z():
    Z = build_poset_category("Z", 3)
    # i -> -i reverses the order, so it identifies Z with its opposite
    obj_map = [Z.obj(str(-int(name))) for name in Z.objects]
    assert thin_isomorphism(Z, opposite(Z), obj_map)
    assert not thin_isomorphism(Z, Z, obj_map)


def test_n_and_negn_are_opposite():
    N, M = build_poset_category("N", 3), build_poset_category("negN", 3)
    obj_map = [M.obj(str(-int(name))) for name in N.objects]
    assert thin_isomorphism(N, opposite(M), obj_map)


def test_identity_functor():
    C = build_ab_category(2)
    assert check_functor(C, C, list(range(C.n_objects)), list(range(C.n_morphisms)))
    swap = list(range(C.n_morphisms))
    a, b = C.mor("a1_0"), C.mor("b1_0")
    swap[a], swap[b] = b, a
    # a and b are not interchangeable: a0_inf . a1_0 = a1_inf but a0_inf . b1_0 = b1_inf
    assert not check_functor(C, C, list(range(C.n_objects)), swap)


def test_full_subcategory_drops_the_sink():
    for k in range(5):
        C = build_ab_category(k)
        sub = full_subcategory(C, range(k + 1))
        assert validate(sub).ok
        assert sub == build_ab_category(k, boundary=False)


def test_hash_and_equality_are_structural():
    assert build_ab_category(2) == build_ab_category(2)
    assert hash(build_ab_category(2)) == hash(build_ab_category(2))
    assert build_ab_category(2) != build_ab_category(3)


def test_lookup_errors():
    C = build_ab_category(1)
    with pytest.raises(KeyError):
        C.obj("nope")
    with pytest.raises(KeyError):
        C.obj(17)
    with pytest.raises(KeyError):
        C.mor("nope")
