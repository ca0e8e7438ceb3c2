import pytest

evenres = pytest.importorskip("evenres")


def test_parse_and_compose():
    a = evenres.parse("[2,3,4,1]", 4)
    b = evenres.parse("(1,3)(2,4)", 4)
    assert (a * a) == b
    assert a.rank == 4 and a.is_permutation


def test_membership():
    assert evenres.contains("gamma", 4, evenres.parse("[2,3,4,1]", 4))
    assert not evenres.contains("delta", 4, evenres.parse("[1,2,1,2]", 4))
    assert evenres.contains("sigma", 5, evenres.parse("[1,1,2,3,4]", 5))


def test_counts():
    assert evenres.card("delta", 6) == "33702"
    rows = evenres.table(3)
    assert rows[2]["delta"] == "10" and rows[2]["sigma"] == "10"


def test_closure_matches_card():
    for fam in ("gamma", "delta", "sigma"):
        M = evenres.enumerate_family(fam, 5)
        assert len(M) == int(evenres.card(fam, 5))


def test_factor_roundtrip():
    M = evenres.enumerate_family("sigma", 4)
    gens = evenres.generating_set("sigma", 4)
    e = M.element(17)
    word = M.factor(e)
    acc = evenres.Transformation.identity(4)
    for g in word:
        acc = acc * gens[g]
    assert acc == e


def test_named_elements():
    eps = evenres.named("epsilon@6")
    assert eps.images == [1, 1, 3, 4, 5, 6]
    assert evenres.named("theta@7").cycles() == "(1,3)(2,4)"


def test_orbits():
    assert [evenres.kernel_orbit_count(n) for n in range(4, 8)] == [1, 2, 2, 4]
