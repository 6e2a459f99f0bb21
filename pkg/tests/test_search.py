import pytest

from eaqecc.cosets import make_frame
from eaqecc.search import SearchError, search


def test_consecutive_search_q8_contains_table2():
    hits = search(make_frame(8), 7, consecutive_only=True)
    at4 = {str(h.params) for h in hits if h.params.c == 4 and h.is_ea_mds}
    assert at4 == {"[[13,5,7;4]]_8", "[[13,1,9;4]]_8"}


def test_search_finds_maximal_set():
    hits = search(make_frame(8), 2)
    found = [h for h in hits if set(h.Z) == {10, 28, 37, 55}]
    assert len(found) == 1
    assert found[0].params.c == 4 and found[0].params.is_maximal_entanglement


def test_search_empty_when_k_zero():
    assert search(make_frame(8), 0) == []


def test_search_guard():
    with pytest.raises(SearchError):
        search(make_frame(47), 20)
    with pytest.raises(SearchError):
        search(make_frame(8), -1)


def test_search_sorted():
    hits = search(make_frame(8), 3)
    keys = [(h.params.c, -h.params.d_lower, -h.params.k) for h in hits]
    assert keys == sorted(keys)
