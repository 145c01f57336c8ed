from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from recolour.colouring import Uniform, same_partition
from recolour.explorer import distance, enumerate_colourings, metrics, verify_sequence
from recolour.kpq_theory import (
    HIGH,
    LOW,
    MIDDLE,
    KpqInstance,
    diameter_interval,
    extremal_pair,
    format_regime_table,
    induction_stats,
    recolour_kpq,
    regime,
    regime_expressions,
    regime_table,
    spare_colour_sequence,
    split_swap_sequence,
    upper_bound_formula,
)


def ub(k, p, q):
    return upper_bound_formula(KpqInstance(p, q, k))


# ---------------------------------------------------------------- formulas


def test_formula_examples():
    assert ub(3, 2, 3) == 7 == 3 * 5 // 2
    assert ub(4, 18, 18) == 54
    high, middle, _ = regime_expressions(4, 1, 4)
    assert high == middle == 7


def test_instance_swaps_parts():
    inst = KpqInstance(5, 2, 3)
    assert (inst.p, inst.q) == (2, 5)
    with pytest.raises(ValueError):
        KpqInstance(1, 1, 2)


@pytest.mark.parametrize(
    "k,p,q,value,tag",
    [
        (3, 5, 9, 21, LOW),
        (4, 4, 12, 23, MIDDLE),
        (5, 1, 10, 14, HIGH),
    ],
)
def test_exact_intervals(k, p, q, value, tag):
    iv = diameter_interval(KpqInstance(p, q, k))
    assert iv.exact and iv.lower == iv.upper == value and iv.regime == tag


def test_middle_example_value_by_hand():
    # 3p + q + floor((q - kp) / floor(k^2/4)) with k=4, p=4, q=12
    assert 3 * 4 + 12 + (12 - 16) // 4 == 23 == ub(4, 4, 12)


def test_boundary_tags():
    assert regime(KpqInstance(2, 8, 4)) == MIDDLE
    assert regime(KpqInstance(2, 9, 4)) == HIGH
    assert regime(KpqInstance(2, 4, 4)) == LOW
    assert regime(KpqInstance(2, 5, 4)) == MIDDLE


def test_boundary_consistency():
    for k in range(3, 13):
        for p in range(1, 21):
            high, middle, _ = regime_expressions(k, p, k * p)
            assert high == middle
            q = (k + 1) // 2 * p
            if q >= p:
                _, middle, low = regime_expressions(k, p, q)
                assert middle == low


def test_monotone_in_q():
    for k in range(3, 9):
        for p in range(1, 8):
            values = [ub(k, p, q) for q in range(p, 12 * p)]
            assert values == sorted(values)


def test_interval_invariants():
    for k in range(3, 9):
        m = k * k // 4
        for p in range(1, 9):
            for q in range(p, 40):
                iv = diameter_interval(KpqInstance(p, q, k))
                assert iv.lower <= iv.upper and iv.g_slack == iv.upper - iv.lower
                assert iv.g_slack <= {HIGH: 0, MIDDLE: m, LOW: k // 2}[iv.regime]
                if iv.exact:
                    assert iv.lower == iv.upper
                if k == 3 or q >= k * p or (p % m == 0 and q % m == 0):
                    assert iv.exact


def test_three_colours_all_regimes_agree():
    for p in range(1, 10):
        for q in range(p, 40):
            b, g, o = regime_expressions(3, p, q)
            assert b == g == o == Fraction(3 * (p + q), 2)


@pytest.mark.parametrize("k", [3, 4])
def test_interval_contains_small_diameters(k):
    for p in range(1, 4):
        for q in range(p, 6 - p):
            inst = KpqInstance(p, q, k)
            d = metrics(inst.graph(), Uniform(k), use_colour_symmetry=True).diameter
            iv = diameter_interval(inst)
            assert iv.lower <= d <= iv.upper
            if iv.exact:
                assert d == iv.upper


# ---------------------------------------------------------------- regime table


def test_regime_table_crossings_k4():
    for p in range(1, 6):
        rows = {r["q"]: r for r in regime_table(4, p, 6 * p)}
        assert rows[4 * p]["B"] == rows[4 * p]["G"]
        assert rows[2 * p]["O"] == rows[2 * p]["G"]
        for q, r in rows.items():
            assert r["active"] == max(r["B"], min(r["O"], r["G"]))


def test_regime_table_k3_coincides():
    for r in regime_table(3, 2, 20):
        assert r["B"] == r["O"] == r["G"] == r["active"]


def test_regime_table_text():
    text = format_regime_table(regime_table(4, 1, 2))
    assert text == "q\tB\tO\tG\tactive\n1\t3\t3\t13/4\t3\n2\t13/3\t9/2\t9/2\t9/2\n"
    with pytest.raises(ValueError):
        regime_table(4, 3, 2)


# ---------------------------------------------------------------- extremal pair


def test_extremal_small_star():
    inst = KpqInstance(1, 2, 3)
    a, b, shape = extremal_pair(inst)
    assert a == (1, 2, 3) and b == (2, 1, 1)
    assert (shape.a, shape.b) == (1, 2)
    assert distance(inst.graph(), Uniform(3), a, b).distance == 4 == 2 * 1 + 2 + (2 - 1) // 2


def test_extremal_balanced_split():
    a, b, shape = extremal_pair(KpqInstance(2, 4, 4))
    assert (shape.a, shape.b) == (2, 2)
    assert set(a[:2]) == {1, 2} and set(a[2:]) == {3, 4}


def test_extremal_k3_square_reaches_diameter():
    inst = KpqInstance(2, 2, 3)
    a, b, _ = extremal_pair(inst)
    d = distance(inst.graph(), Uniform(3), a, b).distance
    assert d == 6 == metrics(inst.graph(), Uniform(3)).diameter


@settings(max_examples=300, deadline=None)
@given(st.integers(3, 9), st.integers(1, 12), st.integers(0, 60))
def test_extremal_block_structure(k, p, extra):
    inst = KpqInstance(p, p + extra, k)
    a, b, shape = extremal_pair(inst)
    p, q = inst.p, inst.q
    assert shape.a + shape.b == k
    assert (shape.a, shape.b) == ((1, k - 1) if q >= k * p else (k // 2, (k + 1) // 2))
    assert sum(t[2] for t in shape.blocks) == p and sum(t[3] for t in shape.blocks) == q
    ab = shape.a * shape.b
    for i, j, su, sv in shape.blocks:
        assert su in (p // ab, -(-p // ab)) and sv in (q // ab, -(-q // ab))
    us = [t[2] for t in shape.blocks]
    vs = [t[3] for t in shape.blocks]
    assert us == sorted(us, reverse=True) and vs == sorted(vs, reverse=True)
    for x in inst.U:
        assert 1 <= a[x] <= shape.a < b[x]
    for x in inst.V:
        assert 1 <= b[x] <= shape.a < a[x]
    if shape.a == 1:
        for _, j, su, sv in shape.blocks:
            assert sv - su >= (q - p) // ab


def test_induction_stats():
    a = (1, 2, 3, 3, 4)
    b = (2, 1, 3, 4, 3)
    s = induction_stats(a, b, range(2, 5), 3)
    assert (s.y0, s.y1, s.y2, s.y) == (1, 1, 1, 3)


# ---------------------------------------------------------------- constructions


def test_spare_colour_examples():
    inst = KpqInstance(1, 1, 3)
    seq = spare_colour_sequence(inst, (1, 2), (2, 1), 3)
    assert seq.steps == ((0, 3), (1, 1), (0, 2))
    inst = KpqInstance(1, 2, 4)
    seq = spare_colour_sequence(inst, (1, 2, 2), (2, 3, 3), 4)
    assert len(seq) == 4 <= 2 * 1 + 2
    assert verify_sequence(inst.graph(), Uniform(4), seq, (2, 3, 3)).valid
    assert len(spare_colour_sequence(inst, (1, 2, 2), (1, 2, 2), 3)) == 0
    with pytest.raises(ValueError):
        spare_colour_sequence(inst, (1, 2, 2), (2, 3, 3), 3)


def test_split_swap_examples():
    inst = KpqInstance(2, 4, 4)
    a, b, _ = extremal_pair(inst)
    seq = split_swap_sequence(inst, a, b)
    assert len(seq) <= 2 * 2 + 4 + (4 - 2) // 2
    assert verify_sequence(inst.graph(), Uniform(4), seq, b).valid
    inst = KpqInstance(1, 2, 3)
    a, b, _ = extremal_pair(inst)
    seq = split_swap_sequence(inst, a, b)
    assert len(seq) == 4 == distance(inst.graph(), Uniform(3), a, b).distance
    assert verify_sequence(inst.graph(), Uniform(3), seq, b).valid


@pytest.mark.parametrize("p", [2, 4, 6])
def test_split_swap_symmetric_bound(p):
    inst = KpqInstance(p, p, 4)
    a, b, _ = extremal_pair(inst)
    seq = split_swap_sequence(inst, a, b)
    assert verify_sequence(inst.graph(), Uniform(4), seq, b).valid
    assert len(seq) <= 3 * p + p + (p - 4 * p) // 4


def test_split_swap_rejects_shared_colour():
    with pytest.raises(ValueError):
        split_swap_sequence(KpqInstance(1, 2, 3), (1, 2, 3), (2, 3, 1))


def all_pairs(inst):
    cols = list(enumerate_colourings(inst.graph(), Uniform(inst.k)))
    return [(a, b) for a in cols for b in cols]


@pytest.mark.parametrize("p,q", [(p, q) for p in range(1, 4) for q in range(p, 4)])
def test_three_colour_all_pairs_within_bound(p, q):
    inst = KpqInstance(p, q, 3)
    g = inst.graph()
    for a, b in all_pairs(inst):
        seq = recolour_kpq(inst, a, b)
        assert len(seq) <= 3 * (p + q) // 2
        assert verify_sequence(g, Uniform(3), seq, b).valid


def test_star_four_colours_all_pairs():
    inst = KpqInstance(1, 4, 4)
    g = inst.graph()
    for a, b in all_pairs(inst):
        seq = recolour_kpq(inst, a, b)
        assert len(seq) <= 7
        assert verify_sequence(g, Uniform(4), seq, b).valid


def test_identity_and_errors():
    inst = KpqInstance(2, 2, 4)
    assert len(recolour_kpq(inst, (1, 1, 2, 2), (1, 1, 2, 2))) == 0
    with pytest.raises(ValueError):
        recolour_kpq(inst, (1, 2, 1, 3), (1, 1, 2, 2))
    with pytest.raises(ValueError):
        recolour_kpq(inst, (1, 1, 5, 5), (1, 1, 2, 2))


@st.composite
def kpq_pairs(draw, max_total=12, max_k=7):
    k = draw(st.integers(3, max_k))
    p = draw(st.integers(1, max_total // 2))
    q = draw(st.integers(p, max_total - p))

    def colouring():
        on_u = draw(st.lists(st.integers(1, k), min_size=1, max_size=k - 1, unique=True))
        rest = [x for x in range(1, k + 1) if x not in on_u]
        return tuple(draw(st.sampled_from(on_u)) for _ in range(p)) + tuple(
            draw(st.sampled_from(rest)) for _ in range(q)
        )

    return KpqInstance(p, q, k), colouring(), colouring()


@settings(max_examples=400, deadline=None)
@given(kpq_pairs())
def test_random_pairs_within_formula(case):
    inst, a, b = case
    seq = recolour_kpq(inst, a, b)
    assert verify_sequence(inst.graph(), Uniform(inst.k), seq, b).valid
    assert len(seq) <= upper_bound_formula(inst)


@settings(max_examples=200, deadline=None)
@given(st.integers(3, 8), st.integers(1, 6), st.integers(0, 12))
def test_extremal_pairs_within_formula(k, p, extra):
    inst = KpqInstance(p, p + extra, k)
    a, b, _ = extremal_pair(inst)
    seq = recolour_kpq(inst, a, b)
    assert verify_sequence(inst.graph(), Uniform(k), seq, b).valid
    assert len(seq) <= upper_bound_formula(inst)


@settings(max_examples=300, deadline=None)
@given(kpq_pairs(max_total=9, max_k=6), st.randoms(use_true_random=False))
def test_length_is_invariant_under_symmetries(case, rnd):
    # colour permutations and permutations inside each part are automorphisms
    inst, a, b = case
    colours = list(range(1, inst.k + 1))
    rnd.shuffle(colours)
    U, V = list(inst.U), list(inst.V)
    rnd.shuffle(U)
    rnd.shuffle(V)
    order = U + V
    ga = tuple(colours[a[order[x]] - 1] for x in range(inst.n))
    gb = tuple(colours[b[order[x]] - 1] for x in range(inst.n))
    assert len(recolour_kpq(inst, a, b)) == len(recolour_kpq(inst, ga, gb))


@settings(max_examples=200, deadline=None)
@given(kpq_pairs(max_total=10), st.randoms(use_true_random=False))
def test_same_partition_pairs_stay_within_three_halves(case, rnd):
    inst, a, _ = case
    used = sorted(set(a))
    image = rnd.sample(range(1, inst.k + 1), len(used))
    b = tuple(dict(zip(used, image))[x] for x in a)
    assert same_partition(a, b)
    assert len(recolour_kpq(inst, a, b)) <= 3 * inst.n // 2
