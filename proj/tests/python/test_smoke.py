import pytest

import rabuild


def test_normal_forms():
    p5 = rabuild.CoxeterSystem.polygon(5)
    assert p5.normal_form("s2 s1 s2") == "s1"
    assert p5.descent_set("s1 s2") == ["s1", "s2"]
    assert [len([w for w in p5.ball(2) if p5.length(w) == k]) for k in range(3)] == [1, 5, 15]


def test_parse_racs():
    sys = rabuild.CoxeterSystem.parse("generators: a b\ncommute: a b\n")
    assert sys.normal_form("a b a") == "b"
    with pytest.raises(rabuild.ParseError):
        rabuild.CoxeterSystem.parse("generators: a b\ncommute: a c\n")


def test_half_spaces():
    a1 = rabuild.CoxeterSystem.free_product(2)
    assert a1.shortest_element("b", "a") == "b.a"
    d2 = rabuild.CoxeterSystem.commuting(2)
    assert sorted(d2.convex_hull(["1", "a.b"])) == ["1", "a", "a.b", "b"]


def test_build_and_verify():
    p5 = rabuild.CoxeterSystem.polygon(5)
    ball = rabuild.build_regular(p5, [2] * 5, 2)
    assert ball.size == 71
    assert all(passed for _, passed, _ in ball.check())
    again = rabuild.BuildingBall.parse(ball.to_bldg())
    assert again.to_bldg() == ball.to_bldg()


def test_two_constructions_agree():
    p5 = rabuild.CoxeterSystem.polygon(5)
    glued = rabuild.build_regular(p5, [2] * 5, 2)
    cover, covering = rabuild.build_by_covering(p5, [3] * 5, 2)
    assert len(covering) == cover.size
    assert rabuild.find_isomorphism(glued, cover) is not None


def test_disjoint_pair():
    p5 = rabuild.CoxeterSystem.polygon(5)
    ball = rabuild.build_regular(p5, [2] * 5, 3)
    pair = rabuild.disjoint_pair(ball, [0])
    assert pair["ok"]
    assert pair["core"] == [0]
    with pytest.raises(rabuild.PreconditionError):
        rabuild.disjoint_pair(rabuild.build_regular(p5, [1] * 5, 3), [0])


def test_homology():
    assert rabuild.antipodal_homology([3, 3]) == [(-1, 0, []), (0, 0, []), (1, 1, [])]
    assert rabuild.join_homology([3, 3, 3])[-1] == (2, 8, [])


def test_render():
    svg = rabuild.render_svg(5, 0, 200)
    assert svg.count("<path") == 1
