import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from heapsize.errors import ConfigError, FitError
from heapsize.growth import (
    GrowthPoint,
    cumulative_series,
    order_by_types_desc,
    order_manifest,
    order_pinned_shuffle,
    read_growth_csv,
    write_growth_csv,
)
from heapsize.sampler import SubCorpus
from heapsize.tokenizer import build_inventory

from conftest import data_path


class Stub:
    """Only type_total and id matter for ordering."""

    def __init__(self, id, type_total):
        self.id, self.type_total = id, type_total


def sub(cid, tokens):
    return SubCorpus(cid, build_inventory(tokens))


def test_types_desc_starts_with_richest():
    stats = [Stub("C1", 17903), Stub("C2", 12000), Stub("C8", 19765), Stub("C4", 2100)]
    assert order_by_types_desc(stats).permutation[:2] == ("C8", "C1")


def test_types_desc_singleton_and_ties():
    assert order_by_types_desc([Stub("C3", 5)]).permutation == ("C3",)
    assert order_by_types_desc([Stub("B", 5), Stub("A", 5)]).permutation == ("A", "B")
    with pytest.raises(ConfigError):
        order_by_types_desc([])


def test_manifest_order():
    stats = [Stub(f"C{i}", i) for i in range(1, 11)]
    assert order_manifest(stats).permutation == tuple(f"C{i}" for i in range(1, 11))


def test_pinned_shuffle():
    stats = [Stub(f"C{i}", 1) for i in range(1, 11)]
    ids = {s.id for s in stats}
    seen = set()
    for seed in range(30):
        o = order_pinned_shuffle(stats, {1: "C1", 10: "C10"}, seed)
        assert o.permutation[0] == "C1" and o.permutation[-1] == "C10"
        assert set(o.permutation) == ids and len(o.permutation) == 10
        seen.add(o.permutation)
        assert order_pinned_shuffle(stats, {1: "C1", 10: "C10"}, seed) == o
    assert len(seen) > 1


def test_pinned_shuffle_all_pinned_and_no_pins():
    stats = [Stub(c, 1) for c in "ABC"]
    pins = {1: "C", 2: "A", 3: "B"}
    assert order_pinned_shuffle(stats, pins, 1).permutation == ("C", "A", "B")
    assert order_pinned_shuffle(stats, pins, 99).permutation == ("C", "A", "B")
    assert sorted(order_pinned_shuffle(stats, {}, 4).permutation) == ["A", "B", "C"]


@pytest.mark.parametrize("pins", [{0: "A"}, {4: "A"}, {1: "Z"}, {1: "A", 2: "A"}])
def test_pinned_shuffle_errors(pins):
    with pytest.raises(ConfigError):
        order_pinned_shuffle([Stub(c, 1) for c in "ABC"], pins, 0)


def test_cumulative_disjoint_vocabularies():
    a, b = sub("A", ["x", "y", "x"]), sub("B", ["p", "q"])
    s = cumulative_series([a, b], order_manifest([a, b]))
    assert s.points == (GrowthPoint(3, 2), GrowthPoint(5, 4))
    assert s.corpus_ids == ("A", "B")


def test_cumulative_requires_matching_ordering():
    a, b = sub("A", ["x"]), sub("B", ["y"])
    with pytest.raises(ConfigError):
        cumulative_series([a], order_manifest([a, b]))


corpora = st.lists(
    st.lists(st.sampled_from("abcdefghijklmnop"), min_size=1, max_size=25), min_size=1, max_size=6
)


@settings(max_examples=150)
@given(corpora, st.integers(0, 2**64 - 1))
def test_series_matches_brute_force(streams, seed):
    subs = [sub(f"D{i}", s) for i, s in enumerate(streams)]
    ordering = order_pinned_shuffle(subs, {}, seed)
    series = cumulative_series(subs, ordering)
    by_id = dict(zip((s.id for s in subs), streams))
    concat = []
    for cid, p in zip(ordering.permutation, series.points):
        concat += by_id[cid]
        assert p == GrowthPoint(len(concat), len(set(concat)))
    toks = [p.cum_tokens for p in series.points]
    types = [p.cum_types for p in series.points]
    assert toks == sorted(set(toks)) and types == sorted(types)


@settings(max_examples=60)
@given(corpora.filter(lambda c: len(c) <= 5))
def test_final_point_permutation_invariant_and_types_desc_first(streams):
    subs = [sub(f"D{i}", s) for i, s in enumerate(streams)]
    finals, firsts = set(), set()
    for perm in itertools.permutations(subs):
        series = cumulative_series(subs, order_manifest(list(perm)))
        finals.add(series.points[-1])
        firsts.add(series.points[0].cum_types)
    assert len(finals) == 1
    best = cumulative_series(subs, order_by_types_desc(subs)).points[0].cum_types
    assert best == max(firsts)


def test_csv_round_trip(tmp_path):
    a, b = sub("A", ["x", "y"]), sub("B", ["y", "z", "w"])
    s = cumulative_series([a, b], order_manifest([a, b]))
    p = tmp_path / "g.csv"
    write_growth_csv(s, p)
    assert p.read_text() == "order_index,corpus_id,cum_tokens,cum_types\n1,A,2,2\n2,B,5,4\n"
    back = read_growth_csv(p)
    assert back.points == s.points and back.corpus_ids == ("A", "B")


def test_read_published_growth_with_thousands_separators():
    s = read_growth_csv(data_path("growth_types_desc.csv"))
    assert s.points[:2] == (GrowthPoint(90_605, 19_765), GrowthPoint(181_210, 31_546))
    assert s.points[-1] == GrowthPoint(906_064, 66_101)
    s2 = read_growth_csv(data_path("growth_manifest_order.csv"))
    assert s2.corpus_ids == tuple(f"C{i}" for i in range(1, 11))
    assert s2.points[-1] == s.points[-1]


def test_read_malformed_csv(tmp_path):
    p = tmp_path / "bad.csv"
    p.write_text("order_index,corpus_id,cum_tokens,cum_types\n1,A,ten,3\n")
    with pytest.raises(FitError, match="line 2"):
        read_growth_csv(p)
