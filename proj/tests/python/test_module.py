import pytest

cc = pytest.importorskip("coclass")


def test_zero_semigroup_roundtrip():
    t = cc.parse_table("3\n2 2 2\n2 2 2\n2 2 2\n")
    info = cc.analyze(t)
    assert info["nilpotent"]
    assert info["class"] == 1
    assert info["coclass"] == 1
    assert info["zero"] == 2
    assert cc.parse_table(cc.format_table(t)) == t


def test_non_associative_rejected():
    with pytest.raises(cc.Error):
        cc.MulTable([[1, 0], [0, 0]])


def test_list_lengths():
    assert len(cc.coclass1_list(9)) == 13
    assert len(cc.coclass2_gen2_list(7)) == 34
    assert len(cc.coclass2_gen3_list(7)) == 150


def test_realize_listing_entry():
    entry = cc.coclass1_list(7)[0]
    t = cc.realize(entry["presentation"], entry["order"])
    info = cc.analyze(t)
    assert t.order == 7
    assert info["coclass"] == 1
    assert len(info["generators"]) == 2
    assert cc.is_self_dual(t) == entry["self_dual"]


def test_keys_separate_a_table_from_its_dual():
    entry = next(p for p in cc.coclass1_list(7) if not p["self_dual"])
    t = cc.realize(entry["presentation"], 7)
    d = cc.dual(t)
    assert cc.canonical_key(t, "iso") != cc.canonical_key(d, "iso")
    assert cc.canonical_key(t, "anti-iso") == cc.canonical_key(d, "anti-iso")
    assert cc.are_equivalent(t, d, "anti-iso")


@pytest.mark.parametrize("mode", ["anti-iso", "iso", "commutative"])
def test_formula_matches_reference(mode):
    for n in range(7, 14):
        for kind in ["coclass1", "coclass2", "coclass2-gen2", "coclass2-gen3"]:
            assert cc.formula_count(kind, n, mode) == cc.table1_reference(kind, n, mode)


def test_formula_domain():
    with pytest.raises(cc.Error):
        cc.formula_count("coclass2", 6)
    with pytest.raises(ValueError):
        cc.formula_count("coclass9", 8)


def test_bruteforce_small_orders():
    assert cc.bruteforce_count(5, coclass=1) == cc.table1_reference("coclass1", 5)
    assert cc.bruteforce_count(5, coclass=1, mode="iso") == 9
    assert cc.bruteforce_count(6, coclass=2, gen_size=3, mode="commutative") == cc.table1_reference(
        "coclass2-gen3", 6, "commutative"
    )
