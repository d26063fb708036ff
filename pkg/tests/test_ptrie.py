"""Core queue behavior: ordering, stability, structure, instrumentation."""

import pytest

from helpers import run_differential
from prefixpq import ABSENT, PTrie, PTrieConfig
from prefixpq.ptrie import Layer


def make(word_bits=32, stride_bits=4):
    return PTrie(PTrieConfig(word_bits, stride_bits))


class TestConfig:
    def test_defaults(self):
        t = PTrie()
        assert t.config.word_bits == 32
        assert t.config.stride_bits == 4
        assert t.config.degree == 16
        assert t.config.depth_max == 8

    def test_single_level_config(self):
        # an 8/8 trie is one 256-slot table
        t = make(8, 8)
        assert t.config.degree == 256
        assert t.config.depth_max == 1
        for k in (0, 255, 17, 17):
            t.insert(k, k)
        assert t.root.level == 1
        assert all(type(s) is not Layer for s in t.root.slots if s is not None)
        assert [k for k, _ in t] == [0, 17, 17, 255]
        assert t.validate().ok

    @pytest.mark.parametrize(
        "m,k", [(32, 5), (32, 0), (32, 9), (0, 4), (7, 2), (12, 8)]
    )
    def test_bad_config_rejected(self, m, k):
        with pytest.raises(ValueError):
            PTrieConfig(m, k)

    def test_wide_config(self):
        t = make(64, 8)
        big = (1 << 64) - 1
        t.insert(big, "top")
        t.insert(0, "bottom")
        assert t.minimum() == (0, "bottom")
        assert t.maximum() == (big, "top")
        assert t.validate().ok


class TestInsert:
    def test_fifo_at_equal_keys(self):
        t = make()
        for key, payload in [(7, "a"), (3, "b"), (7, "c")]:
            t.insert(key, payload)
        assert [t.delete_min() for _ in range(3)] == [
            (3, "b"), (7, "a"), (7, "c"),
        ]

    def test_duplicate_insert_grows_queue_not_structure(self):
        t = make()
        t.insert(42, 1)
        fp_before = t.validate().fingerprint
        t.insert(42, 2)
        assert t.count == 2
        st = t.stats()
        assert st.index_ops == 0
        assert st.nodes_spliced == 0
        # same leaves, deeper queue
        node = t.find_node(42)
        assert list(node.queue) == [1, 2]
        fp_after = t.validate().fingerprint
        assert fp_before != fp_after  # queue depth is part of the shape

    def test_shared_prefix_pushdown(self):
        # 0x10 and 0x1F share the top nibble at 8/4: one child layer,
        # leaves in its slots 0x0 and 0xF
        t = make(8, 4)
        t.insert(0x10, "x")
        t.insert(0x1F, "y")
        child = t.root.slots[0x1]
        assert type(child) is Layer and child.level == 2
        assert child.slots[0x0].key == 0x10
        assert child.slots[0xF].key == 0x1F
        assert t.head.key == 0x10 and t.tail.key == 0x1F
        assert t.validate().ok

    def test_deep_prefix_pushdown_to_last_level(self):
        t = make()
        t.insert(0x1234ABCD, 1)
        t.insert(0x1234ABCE, 2)
        layer, depth = t.root, 1
        while type(layer.slots[_chunk(t, 0x1234ABCD, depth - 1)]) is Layer:
            layer = layer.slots[_chunk(t, 0x1234ABCD, depth - 1)]
            depth += 1
        assert depth == 8  # both leaves live at the deepest level
        assert layer.slots[0xD].key == 0x1234ABCD
        assert layer.slots[0xE].key == 0x1234ABCE
        assert [k for k, _ in t] == [0x1234ABCD, 0x1234ABCE]
        assert t.validate().ok

    def test_interleaved_inserts_link_in_key_order(self):
        t = make(16, 4)
        keys = [0x8000, 0x0001, 0xFFFF, 0x8001, 0x7FFF, 0x8000]
        for i, k in enumerate(keys):
            t.insert(k, i)
        assert list(t.keys()) == [0x0001, 0x7FFF, 0x8000, 0x8001, 0xFFFF]
        assert [p for _, p in t] == [1, 4, 0, 5, 3, 2]
        assert t.validate().ok

    @pytest.mark.parametrize("key", [-1, 1 << 32, 1 << 40])
    def test_insert_rejects_out_of_range(self, key):
        with pytest.raises(ValueError):
            make().insert(key)

    def test_insert_rejects_non_int(self):
        with pytest.raises(TypeError):
            make().insert("7")
        with pytest.raises(TypeError):
            make().insert(True)

    def test_none_payload_is_storable(self):
        t = make()
        t.insert(5, None)
        assert t.minimum() == (5, None)
        assert t.remove(5) is None
        assert t.remove(5) is ABSENT


def _chunk(t, key, depth):
    return (key >> t._shifts[depth]) & t._chunk_mask


class TestRemove:
    def test_remove_absent_returns_sentinel(self):
        t = make()
        assert t.remove(9) is ABSENT
        t.insert(9, "here")
        assert t.remove(10) is ABSENT
        assert t.remove(9) == "here"
        assert t.remove(9) is ABSENT

    def test_remove_dequeues_fifo(self):
        t = make()
        for p in "abc":
            t.insert(4, p)
        assert [t.remove(4) for _ in range(3)] == ["a", "b", "c"]

    def test_remove_snips_dead_chain(self):
        # deep shared prefix, then remove one of the pair: the chain of
        # single-slot layers below the branch disappears from the root
        t = make(8, 4)
        t.insert(0x10, "x")
        t.insert(0x1F, "y")
        assert t.remove(0x10) == "x"
        child = t.root.slots[0x1]
        assert type(child) is Layer
        assert child.occupied == 1 << 0xF
        assert t.minimum() == (0x1F, "y")
        assert t.validate().ok

    def test_remove_last_leaf_under_root(self):
        t = make()
        t.insert(123, "only")
        assert t.remove(123) == "only"
        assert t.count == 0
        assert t.minimum() is None and t.maximum() is None
        assert t.root.occupied == 0
        assert t.validate().ok

    def test_min_max_caches_repair_on_remove(self):
        t = make(16, 4)
        keys = [0x1111, 0x1112, 0x1120, 0x2000]
        for k in keys:
            t.insert(k, k)
        assert t.remove(0x1111) == 0x1111  # was the global minimum
        assert t.minimum() == (0x1112, 0x1112)
        assert t.remove(0x2000) == 0x2000  # was the global maximum
        assert t.maximum() == (0x1120, 0x1120)
        assert t.validate().ok

    def test_delete_min_equals_remove_of_minimum(self):
        t1, t2 = make(16, 4), make(16, 4)
        import random
        rng = random.Random(7)
        keys = [rng.randrange(1 << 16) for _ in range(500)]
        for i, k in enumerate(keys):
            t1.insert(k, i)
            t2.insert(k, i)
        while t1.count:
            key, _ = t1.minimum()
            assert t1.delete_min() == (key, t2.remove(key))
        assert t2.count == 0

    def test_delete_min_on_empty(self):
        assert make().delete_min() is None


class TestIteration:
    def test_node_walk_both_directions(self):
        t = make(16, 4)
        for k in [9, 1, 500, 3, 9]:
            t.insert(k, k)
        forward = []
        node = t.first_node()
        while node is not None:
            forward.append(node.key)
            node = node.next
        backward = []
        node = t.last_node()
        while node is not None:
            backward.append(node.key)
            node = node.prev
        assert forward == [1, 3, 9, 500]
        assert backward == list(reversed(forward))

    def test_iter_yields_drain_order(self):
        t = make()
        pairs = [(5, "a"), (2, "b"), (5, "c"), (1, "d")]
        for k, p in pairs:
            t.insert(k, p)
        assert list(t) == [(1, "d"), (2, "b"), (5, "a"), (5, "c")]
        # iteration is pure
        assert t.count == 4

    def test_find_node(self):
        t = make()
        t.insert(77, "p")
        assert t.find_node(77).key == 77
        assert t.find_node(78) is None


class TestSearch:
    def test_membership(self):
        t = make()
        t.insert(100, 1)
        t.insert(0xFFFFFFFF, 2)
        assert t.search(100)
        assert t.search(0xFFFFFFFF)
        assert not t.search(101)
        assert not t.search(0)

    def test_search_is_pure(self):
        t = make()
        for k in [3, 3, 99, 0x12345678, 0x12345679]:
            t.insert(k, k)
        before = t.validate()
        for probe in [3, 4, 99, 0x12345678, 0x00345678, 0]:
            t.search(probe)
        after = t.validate()
        assert after.ok
        assert after.fingerprint == before.fingerprint


class TestInstrumentation:
    def test_step_bound_on_deep_collision(self):
        t = make()  # 32/4: bound is 8 + 4 = 12
        t.insert(0x1234ABCD, 1)
        t.insert(0x1234ABCE, 2)
        st = t.stats()
        assert st.layers_visited == 8
        assert st.index_ops == 1
        assert st.primitive_steps == 12
        t.remove(0x1234ABCE)
        st = t.stats()
        assert st.layers_visited == 8
        assert st.primitive_steps == 12

    def test_search_charges_no_index_ops(self):
        t = make()
        t.insert(0xDEADBEEF, 1)
        t.search(0xDEADBEEF)
        st = t.stats()
        assert st.index_ops == 0
        assert st.nodes_spliced == 0
        assert 1 <= st.layers_visited <= 8

    def test_shallow_ops_are_cheap(self):
        t = make()
        t.insert(0, "a")
        assert t.stats().primitive_steps == 1 + 4  # root visit + one index op
        t.insert(1 << 31, "b")  # lands in a different root slot
        assert t.stats().layers_visited == 1

    def test_stats_snapshot_is_independent(self):
        t = make()
        t.insert(1)
        snap = t.stats()
        t.insert(0x0FFFFFFF)
        assert snap.layers_visited == 1

    def test_bound_holds_for_8_8(self):
        t = make(8, 8)  # bound is 1 + 8 = 9
        for k in range(256):
            t.insert(k)
            assert t.stats().primitive_steps <= 9
        while t.count:
            t.delete_min()
            assert t.stats().primitive_steps <= 9


class TestValidate:
    def test_empty_trie_validates(self):
        rep = make().validate()
        assert rep.ok and rep.error is None
        assert rep.fingerprint

    def test_fingerprint_deterministic(self):
        def build():
            t = make()
            for k in [5, 1, 5, 0xABCDEF, 3]:
                t.insert(k, "p")
            return t
        assert build().validate().fingerprint == build().validate().fingerprint

    def test_detects_bad_occupancy_mask(self):
        t = make()
        t.insert(10)
        t.root.occupied = 0
        rep = t.validate()
        assert not rep.ok
        assert "occupancy mask" in rep.error

    def test_detects_stale_min_cache(self):
        t = make(8, 4)
        t.insert(0x10)
        t.insert(0x1F)
        t.root.slots[1].min_leaf = t.root.slots[1].max_leaf
        rep = t.validate()
        assert not rep.ok
        assert "min_leaf mismatch" in rep.error

    def test_detects_broken_list(self):
        t = make()
        t.insert(1)
        t.insert(2)
        t.head.next = None  # tail now unreachable from head
        rep = t.validate()
        assert not rep.ok

    def test_detects_count_drift(self):
        t = make()
        t.insert(1)
        t.count = 5
        rep = t.validate()
        assert not rep.ok
        assert "count" in rep.error


class TestDifferential:
    @pytest.mark.parametrize("seed", range(8))
    def test_matches_sorted_list_reference(self, seed):
        verdict = run_differential(seed, n_ops=2000, word_bits=16)
        assert verdict.matched, verdict.first_divergence

    def test_small_words_stress_pushdown(self):
        # 8-bit keys collide constantly; every structural path gets hit
        for seed in range(6):
            verdict = run_differential(
                seed, n_ops=1500, word_bits=8, stride_bits=2,
                validate_every=250,
            )
            assert verdict.matched, verdict.first_divergence

    @pytest.mark.parametrize("m,k", [(8, 1), (8, 8), (16, 2), (32, 8), (64, 8)])
    def test_other_geometries(self, m, k):
        verdict = run_differential(99, n_ops=1200, word_bits=m, stride_bits=k)
        assert verdict.matched, verdict.first_divergence
