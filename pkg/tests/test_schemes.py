"""Group-scheme descriptors, coordinate rings, point sets, and charts."""

import random

import pytest

from jordanbundles.field import ext_field_build, prime_field
from jordanbundles.polyring import poly_eval, substitute
from jordanbundles.schemes import (
    GroupSchemeDesc,
    LieData,
    additive_kernel,
    conic_chart_sl2,
    coord_ring,
    enumerate_points,
    frobenius_point_map,
    generator_names,
    generic_p_power,
    gln_height2,
    multi_additive,
    p1_chart,
    restricted_lie,
    restricted_lie_sl2,
    sample_points,
    sl2_height2,
    sl2_height2_check_disagreements,
    sl2_lie_data,
    validate_point,
)


def test_descriptor_labels_and_height():
    assert multi_additive(3, 2).height == 1
    assert additive_kernel(3, 2).height == 2
    assert restricted_lie_sl2(5).height == 1
    assert sl2_height2(3).height == 2
    assert gln_height2(3, 2).height == 2
    for desc in (multi_additive(2, 3), additive_kernel(5, 3),
                 restricted_lie_sl2(7), sl2_height2(5), gln_height2(2, 3)):
        assert desc.label()


def test_descriptor_validation():
    with pytest.raises(ValueError):
        sl2_height2(2)  # needs p odd
    with pytest.raises(ValueError):
        gln_height2(3, 5)  # only n = 2, 3 supported


def test_coordinate_ring_weights():
    ring, rels = coord_ring(multi_additive(5, 3))
    assert ring.weights == (1, 1, 1) and not rels
    ring, rels = coord_ring(additive_kernel(3, 3))
    assert ring.weights == (1, 3, 9) and not rels
    ring, rels = coord_ring(restricted_lie_sl2(3))
    assert ring.weights == (1, 1, 1) and len(rels) == 1
    assert all(r.homogeneous_degree() == 2 for r in rels)
    ring, rels = coord_ring(sl2_height2(3))
    assert ring.weights == (1, 1, 1, 3, 3, 3)
    assert len(rels) == 5


# [DERIVED] #{p-nilpotent trace-zero 2x2 over F_p} = p^2 (the nullcone is a
# cone over a conic); oracle: brute-force matrix scan.
@pytest.mark.parametrize("p", [3, 5, 7])
def test_sl2_nullcone_point_count(p):
    desc = restricted_lie_sl2(p)
    pts = list(enumerate_points(desc, include_zero=True))
    assert len(pts) == p * p
    for pt in pts:
        assert validate_point(desc, pt)


def test_nullcone_matches_bruteforce():
    p = 3
    fld = prime_field(p)
    desc = restricted_lie_sl2(p)
    pts = set(enumerate_points(desc, include_zero=True))
    brute = set()
    for x in range(p):
        for y in range(p):
            for z in range(p):
                # [[z, x], [y, -z]] is p-nilpotent iff its determinant
                # -z^2 - xy vanishes (trace is already zero).
                if (z * z + x * y) % p == 0:
                    brute.add((x, y, z))
    assert pts == brute


def test_custom_lie_reproduces_sl2():
    p = 5
    builtin = restricted_lie_sl2(p)
    custom = restricted_lie(p, sl2_lie_data())
    pts_b = set(enumerate_points(builtin, include_zero=True))
    pts_c = set(enumerate_points(custom, include_zero=True))
    assert pts_b == pts_c


def test_jacobson_p_power_on_abelian_lie():
    # With all brackets zero the p-operation is purely the semilinear part.
    p = 3
    lie = LieData(names=("a", "b"), bracket=(), ppower=((0, 0), (0, 0)))
    desc = restricted_lie(p, lie)
    ring, rels = coord_ring(desc)
    assert not rels  # x^[p] = 0 identically: every point is p-nilpotent
    pts = list(enumerate_points(desc, include_zero=True))
    assert len(pts) == p ** 2


def test_multi_additive_points_are_everything():
    desc = multi_additive(2, 3)
    pts = list(enumerate_points(desc))
    assert len(pts) == 2 ** 3 - 1  # origin excluded by default
    fld4 = ext_field_build(2, 2)
    pts4 = list(enumerate_points(desc, fld4))
    assert len(pts4) == 4 ** 3 - 1


def test_sample_points_deterministic_and_valid():
    desc = restricted_lie_sl2(5)
    fld = ext_field_build(5, 2)
    a = sample_points(desc, fld, 10, random.Random(42))
    b = sample_points(desc, fld, 10, random.Random(42))
    assert a == b
    assert all(validate_point(desc, pt, fld) for pt in a)


def test_frobenius_point_map_shift_and_power():
    desc = additive_kernel(3, 3)
    fld = ext_field_build(3, 2)
    pt = (2, 5, 7)
    moved = frobenius_point_map(desc, pt, 1, fld)
    # coordinate block shifts down, entries are cubed
    assert moved == (0, fld.pow(2, 3), fld.pow(5, 3))
    again = frobenius_point_map(desc, moved, 1, fld)
    assert again == (0, 0, fld.pow(2, 9))
    assert frobenius_point_map(desc, pt, 0, fld) == pt


def test_conic_chart_kills_the_relation():
    for p in (3, 5):
        desc = restricted_lie_sl2(p)
        ring, rels = coord_ring(desc)
        chart = conic_chart_sl2(desc)
        for rel in rels:
            assert substitute(rel, chart).is_zero()
        # and the chart image really consists of p-nilpotent points
        fld = prime_field(p)
        for s in range(p):
            for t in range(p):
                pt = tuple(poly_eval(img, (s, t)) for img in chart.images)
                if any(pt):
                    assert validate_point(desc, pt)


def test_p1_chart_availability():
    assert p1_chart(multi_additive(3, 2)) is not None
    assert p1_chart(restricted_lie_sl2(3)) is not None
    assert p1_chart(restricted_lie_sl2(2)) is None  # conic needs p odd
    assert p1_chart(additive_kernel(3, 2)) is None  # weighted, not standard
    assert p1_chart(multi_additive(3, 3)) is None   # ambient P^2, not P^1


def test_sl2_height2_point_validation():
    desc = sl2_height2(3)
    ring, rels = coord_ring(desc)
    # a point with both components scalar multiples of the same nilpotent
    pt = (1, 0, 0, 1, 0, 0)  # x0=1, x1=1, rest 0
    assert validate_point(desc, pt)
    assert not validate_point(desc, (1, 1, 1, 0, 0, 0))
    for rel in rels:
        assert poly_eval(rel, pt) == 0


def test_sl2_height2_relations_vs_direct_check():
    # The variety cut out by the published relations agrees with the direct
    # matrix condition at every F_3 point.
    desc = sl2_height2(3)
    assert sl2_height2_check_disagreements(desc, prime_field(3)) == []


def test_gln_height2_points_commute():
    from jordanbundles.field import mat_mul

    desc = gln_height2(2, 2)
    fld = prime_field(2)
    count = 0
    for pt in enumerate_points(desc, fld):
        a0 = [[pt[0], pt[1]], [pt[2], pt[3]]]
        a1 = [[pt[4], pt[5]], [pt[6], pt[7]]]
        assert mat_mul(fld, a0, a1) == mat_mul(fld, a1, a0)
        assert mat_mul(fld, a0, a0) == [[0, 0], [0, 0]]
        assert mat_mul(fld, a1, a1) == [[0, 0], [0, 0]]
        count += 1
    assert count > 0


def test_generator_names_by_family():
    assert generator_names(multi_additive(3, 2)) == ("X_0", "X_1")
    assert generator_names(additive_kernel(3, 3)) == ("u_0", "u_1", "u_2")
    assert generator_names(restricted_lie_sl2(3)) == ("e", "f", "h")
    names = generator_names(sl2_height2(3))
    assert names[:6] == ("e", "f", "h", "e[p]", "f[p]", "h[p]")
    assert len(names) == 6 + len([
        (i, j, l) for i in range(3) for j in range(3) for l in range(3)
        if i + j + l == 3])
    assert "d(1,2,0)" in names and "d(2,1,0)" in names
