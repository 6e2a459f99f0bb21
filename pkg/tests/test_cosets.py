import pytest
from hypothesis import given, settings, strategies as st

from eaqecc.cosets import (
    FrameError,
    coset_of,
    coset_union,
    consecutive_run,
    decompose,
    dual_containing,
    is_coset_closed,
    make_frame,
    neg_q_image,
    omega,
    partition,
)

SUPPORTED = [8, 23, 32, 47, 128]


def test_frame_q8():
    f = make_frame(8)
    assert (f.n, f.ord_lambda, f.rn, f.s, f.r_start) == (13, 9, 117, 91, 28)


def test_frame_q23():
    f = make_frame(23)
    assert (f.n, f.ord_lambda, f.rn, f.s, f.r_start) == (106, 24, 2544, 265, None)


@pytest.mark.parametrize("q,msg", [(6, "prime power"), (4, "not divisible by 5"), (9, "not divisible by 5")])
def test_frame_rejects(q, msg):
    with pytest.raises(FrameError, match=msg):
        make_frame(q)


def test_omega():
    f = make_frame(8)
    om = omega(f)
    assert om[0] == 1 and om[-1] == 109 and len(om) == 13
    om23 = omega(make_frame(23))
    assert len(om23) == 106 and all(x % 24 == 1 for x in om23)


def test_coset_examples():
    f8, f23 = make_frame(8), make_frame(23)
    assert coset_of(91, f8).elems == (91,)
    assert coset_of(28, f8).elems == (28, 37)
    assert coset_of(37, f8).rep == 28
    assert coset_of(265, f23).elems == (265,)
    with pytest.raises(FrameError):
        coset_of(2, f8)


def test_partition_examples():
    f8, f23 = make_frame(8), make_frame(23)
    p8 = partition(f8)
    assert len(p8) == 7 and sum(len(c) == 1 for c in p8) == 1
    p23 = partition(f23)
    singles = sorted(c.rep for c in p23 if len(c) == 1)
    assert singles == [265, 265 + 1272]
    assert len(p23) - len(singles) == 52


@pytest.mark.parametrize("q", SUPPORTED)
def test_partition_covers_omega(q):
    f = make_frame(q)
    cosets = partition(f)
    elems = [z for c in cosets for z in c.elems]
    assert sorted(elems) == sorted(omega(f))
    singles = sum(len(c) == 1 for c in cosets)
    assert singles == (1 if q % 2 == 0 else 2)
    assert all(len(c) <= 2 for c in cosets)
    for c in cosets:
        assert coset_of(c.rep * q * q % f.rn, f) == c


def test_neg_q_examples():
    assert neg_q_image({10}, make_frame(8)) == {37}
    f23 = make_frame(23)
    assert neg_q_image({97}, f23) == {313}
    assert 313 in coset_of(217, f23).elems


@pytest.mark.parametrize("q", [8, 23, 47])
def test_neg_q_involution_on_cosets(q):
    f = make_frame(q)
    for c in partition(f)[:20]:
        assert neg_q_image(neg_q_image(c.elems, f), f) == frozenset(c.elems)


def test_decompose_examples():
    f = make_frame(8)
    Z = coset_union([28, 19, 10], f)
    assert Z == {10, 19, 28, 37, 46, 55}
    dec = decompose(Z, f)
    assert dec.Z1 == (10, 28, 37, 55) and dec.c == 4
    assert len(dec.Z1) + len(dec.Z2) == len(Z)
    Z2 = coset_union([28, 19], f)
    assert Z2 == {19, 28, 37, 46}
    assert decompose(Z2, f).c == 0
    assert decompose(set(), f).c == 0


def test_decompose_warns_on_non_closed_set():
    with pytest.warns(UserWarning):
        decompose({28}, make_frame(8))


def test_dual_containing_examples():
    f8, f23 = make_frame(8), make_frame(23)
    assert dual_containing(coset_union([28 - 9 * i for i in range(2)], f8), f8)
    assert dual_containing(coset_union([265 - 24 * j for j in range(7)], f23), f23)
    assert not dual_containing(coset_union([28, 19, 10], f8), f8)


def test_consecutive_run_examples():
    f8, f23 = make_frame(8), make_frame(23)
    assert consecutive_run({10, 19, 28, 37, 46, 55}, f8) == 6
    assert consecutive_run(set(), f8) == 0
    Z = coset_union([265 - 24 * i for i in range(8)], f23)
    assert consecutive_run(Z, f23) == 15
    # wrap-around: 109 is followed by 1
    assert consecutive_run({100, 109, 1, 10}, f8) == 4
    assert consecutive_run(set(omega(f8)), f8) == 13


@settings(max_examples=50, deadline=None)
@given(st.sampled_from([8, 23]), st.data())
def test_decomposition_identity(q, data):
    f = make_frame(q)
    cosets = partition(f)
    picked = data.draw(st.lists(st.sampled_from(cosets), unique_by=lambda c: c.rep))
    Z = coset_union([c.rep for c in picked], f)
    assert is_coset_closed(Z, f)
    dec = decompose(Z, f)
    image = {(-q * z) % f.rn for z in Z}
    assert set(dec.Z1) == Z & image
    assert set(dec.Z1) | set(dec.Z2) == Z
    assert dual_containing(Z, f) == (dec.c == 0)
    # Z1 is itself closed under x -> -qx
    assert neg_q_image(dec.Z1, f) == frozenset(dec.Z1)
