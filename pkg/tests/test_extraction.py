import random
from fractions import Fraction as F

import pytest

from geomextract import (
    Coloring,
    DepthPreconditionError,
    ImproperColoringError,
    ObjectClass,
    SizeCapError,
    UnboundedExtractionError,
    UncoverablePointError,
    check_cover,
    color_instance,
    exact_chromatic,
    exact_extraction_number,
    exact_min_cover,
    extract,
    gen_interval_pair,
    gen_kbox,
    gen_kbox_rays,
    gen_octant4,
    gen_random,
    gen_rayfan,
    make_instance,
    total_weight,
)
from geomextract.core import Interval
from geomextract.extraction import _min_weight_set_cover, _coverer_sets


def test_extract_interval_pair_achieves_half():
    inst = gen_interval_pair()
    res = extract(inst, color_instance(inst))
    assert res.extracted_weight == F(1)
    assert res.ratio == F(2)
    assert res.sol | res.extracted == frozenset({0, 1})
    assert res.sol & res.extracted == frozenset()


def test_extract_octant4_achieves_quarter():
    inst = gen_octant4()
    res = extract(inst, color_instance(inst))
    assert res.extracted_weight == F(1)
    assert res.ratio == F(4)


def test_extract_bound_holds_with_empty_class():
    inst = gen_interval_pair()
    res = extract(inst, Coloring((1, 2), 3))
    assert res.extracted_weight * 3 >= total_weight(inst, inst.indices())


def test_extract_rejects_depth_one_point():
    inst = make_instance(
        ObjectClass.INTERVALS,
        [Interval(F(0), F(2)), Interval(F(5), F(7))],
        points=[(F(1),)],
    )
    with pytest.raises(DepthPreconditionError) as err:
        extract(inst, Coloring((1, 2), 2))
    assert err.value.point == (F(1),)


def test_extract_rejects_improper_coloring():
    inst = gen_interval_pair()
    with pytest.raises(ImproperColoringError) as err:
        extract(inst, Coloring((1, 1), 2))
    assert err.value.witness == (F(3, 2),)


def test_extract_ties_prefer_lowest_color():
    inst = gen_interval_pair()
    res = extract(inst, Coloring((1, 2), 2))
    assert res.extracted == frozenset({0})


def test_min_cover_interval_pair():
    _, weight = exact_min_cover(gen_interval_pair())
    assert weight == F(1)


@pytest.mark.parametrize("k", [2, 3, 4, 5])
def test_min_cover_rayfan(k):
    cover, weight = exact_min_cover(gen_rayfan(k))
    assert weight == F(2 * k - 1)
    assert check_cover(gen_rayfan(k), cover).covered


def test_min_cover_octant4():
    cover, weight = exact_min_cover(gen_octant4())
    assert weight == F(3)
    assert len(cover) == 3


def test_min_cover_respects_weights():
    # heavy interval covers both points; two light ones cover one each
    inst = make_instance(
        ObjectClass.INTERVALS,
        [Interval(F(0), F(10)), Interval(F(1), F(3)), Interval(F(5), F(7))],
        weights=[F(5), F(1), F(1)],
        points=[(F(2),), (F(6),)],
    )
    cover, weight = exact_min_cover(inst)
    assert cover == frozenset({1, 2}) and weight == F(2)
    inst2 = make_instance(
        ObjectClass.INTERVALS,
        list(inst.objects),
        weights=[F(5), F(3), F(3)],
        points=list(inst.points),
    )
    cover2, weight2 = exact_min_cover(inst2)
    assert cover2 == frozenset({0}) and weight2 == F(5)


def test_min_cover_uncoverable_point():
    inst = make_instance(
        ObjectClass.INTERVALS, [Interval(F(0), F(1))], points=[(F(5),)]
    )
    with pytest.raises(UncoverablePointError):
        exact_min_cover(inst)


def test_min_cover_forced_depth_one_point():
    inst = make_instance(
        ObjectClass.INTERVALS,
        [Interval(F(0), F(2)), Interval(F(1), F(4))],
        weights=[F(1), F(10)],
        points=[(F(3),), (F(3, 2),)],
    )
    cover, weight = exact_min_cover(inst)
    assert cover == frozenset({1}) and weight == F(10)


def test_min_cover_size_cap():
    with pytest.raises(SizeCapError):
        exact_min_cover(gen_kbox(3), size_cap=10)


def test_vertex_cover_path_matches_generic_search():
    # dual route: every depth-exactly-2 instance must give the same optimum
    # through the conflict-graph solver and the generic set-cover solver
    cases = [gen_rayfan(2), gen_rayfan(3), gen_kbox(2), gen_octant4(),
             gen_kbox_rays(2)]
    rng = random.Random(17)
    seed = 0
    while len(cases) < 12:
        inst = gen_random(ObjectClass.INTERVALS, rng.randint(2, 14), seed)
        seed += 1
        if inst.m > 16 or not inst.points:
            continue
        two = [p for s, p in zip(_coverer_sets(inst), inst.points) if len(s) == 2]
        if not two:
            continue
        cases.append(make_instance(inst.cls, inst.objects, inst.weights, two))
    for inst in cases:
        cover_fast, w_fast = exact_min_cover(inst)
        sets = _coverer_sets(inst)
        cover_generic = _min_weight_set_cover(sets, inst.weights)
        w_generic = total_weight(inst, cover_generic)
        assert w_fast == w_generic
        assert check_cover(inst, cover_fast).covered
        assert check_cover(inst, cover_generic).covered


def test_extraction_number_examples():
    assert exact_extraction_number(gen_interval_pair()) == F(2)
    assert exact_extraction_number(gen_rayfan(4)) == F(12, 5)
    assert exact_extraction_number(gen_octant4()) == F(4)


def test_extraction_number_unbounded():
    inst = make_instance(
        ObjectClass.INTERVALS, [Interval(F(0), F(1))], points=[(F(1, 2),)]
    )
    with pytest.raises(UnboundedExtractionError):
        exact_extraction_number(inst)


def test_extraction_number_empty_targets_is_one():
    inst = make_instance(ObjectClass.INTERVALS, [Interval(F(0), F(1))])
    assert exact_extraction_number(inst) == F(1)


def test_extract_never_beats_exact_optimum():
    for seed in range(80):
        inst = gen_random(ObjectClass.INTERVALS, 1 + seed % 10, seed)
        res = extract(inst, color_instance(inst))
        _, w_cover = exact_min_cover(inst)
        w_all = total_weight(inst, inst.indices())
        assert res.extracted_weight <= w_all - w_cover


def test_chromatic_examples():
    assert exact_chromatic(gen_interval_pair()) == 2
    disjoint = make_instance(
        ObjectClass.INTERVALS, [Interval(F(0), F(1)), Interval(F(2), F(3))]
    )
    assert exact_chromatic(disjoint) == 1
    assert exact_chromatic(gen_rayfan(3)) == 3
    assert exact_chromatic(gen_octant4()) == 4
    assert exact_chromatic(gen_kbox(2)) == 2


def test_chromatic_size_cap():
    with pytest.raises(SizeCapError):
        exact_chromatic(gen_kbox(3))


def test_proposition_bound_over_random_instances():
    for cls in ObjectClass:
        for seed in range(40):
            n = 1 + (seed * 3) % (10 if cls is ObjectClass.OCTANTS else 12)
            inst = gen_random(cls, n, seed)
            col = color_instance(inst)
            res = extract(inst, col)
            w_all = total_weight(inst, inst.indices())
            assert res.extracted_weight * col.kappa >= w_all
            assert check_cover(inst, res.sol).covered
