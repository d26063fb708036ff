"""Stable multilevel prefix-tree priority queue over fixed-width integer keys.

A ``PTrie`` stores unsigned integers of ``word_bits`` bits and serves them in
ascending key order.  The key space is cut into MSB-first chunks of
``stride_bits`` bits; each chunk indexes a slot in a layer of degree
``2**stride_bits``.  A slot is empty, holds a leaf, or holds a deeper layer.
Layers exist only where at least two distinct stored keys share the chunk
prefix leading to them, so the structure stays shallow for clustered keys and
never exceeds ``word_bits // stride_bits`` levels below the root.

Each distinct key owns one leaf carrying a FIFO queue of payloads, so equal
keys drain in insertion order (the queue is stable).  All leaves are threaded
into a doubly linked list in ascending key order, which makes ``minimum``,
``maximum`` and neighbor iteration O(1) and lets a full drain run in O(n)
list traversals plus the per-extraction trie maintenance.

Per-layer bookkeeping kept alongside the slot array:

* ``occupied`` -- an integer bitmask over slot indexes, the "which slots are
  in use" ordered set.  Predecessor/successor slot queries are bit scans.
* ``min_leaf`` / ``max_leaf`` -- the extreme leaves of the whole subtree,
  maintained on every mutation so that splicing a new leaf next to a
  neighboring subtree needs no descent.

Every mutating or searching operation refreshes ``last_op_stats`` with the
number of layers it touched and the number of ordered-set operations it
charged; ``OpStats.primitive_steps`` folds those into the cost model used by
the benchmark (each ordered-set operation costs ``stride_bits`` comparisons).
For any legal configuration the step count of a single operation is bounded
by ``word_bits // stride_bits + stride_bits``.

The structure is single-writer: no locking, and mutating it from concurrent
threads or from inside an iteration is unsupported.
"""

from __future__ import annotations

import hashlib
from collections import deque
from dataclasses import dataclass
from typing import Any, Iterator


class _Absent:
    """Sentinel distinguishing "key not present" from a stored None payload."""

    __slots__ = ()

    def __repr__(self) -> str:
        return "ABSENT"


ABSENT = _Absent()


@dataclass(frozen=True)
class PTrieConfig:
    """Shape of a trie: key width and per-level chunk width, both in bits.

    ``stride_bits`` must divide ``word_bits`` evenly and lie in 1..8, so a
    layer's slot array has at most 256 entries and the deepest possible
    layer sits ``word_bits // stride_bits - 1`` levels below the root.
    """

    word_bits: int = 32
    stride_bits: int = 4

    def __post_init__(self) -> None:
        if self.word_bits < 1:
            raise ValueError(f"word_bits must be positive, got {self.word_bits}")
        if not 1 <= self.stride_bits <= 8:
            raise ValueError(f"stride_bits must be in 1..8, got {self.stride_bits}")
        if self.word_bits % self.stride_bits != 0:
            raise ValueError(
                f"stride_bits {self.stride_bits} does not divide "
                f"word_bits {self.word_bits}"
            )

    @property
    def degree(self) -> int:
        """Slots per layer."""
        return 1 << self.stride_bits

    @property
    def depth_max(self) -> int:
        """Number of chunk levels; the root is level 1."""
        return self.word_bits // self.stride_bits

    @property
    def key_mask(self) -> int:
        return (1 << self.word_bits) - 1


class LeafNode:
    """One distinct key plus the FIFO queue of payloads filed under it.

    ``prev`` / ``next`` are the ascending-key linked-list neighbors; they are
    the O(1) iterator steps and stay valid until the leaf's last payload is
    removed.
    """

    __slots__ = ("key", "queue", "prev", "next")

    def __init__(self, key: int, payload: Any) -> None:
        self.key = key
        self.queue: deque[Any] = deque((payload,))
        self.prev: LeafNode | None = None
        self.next: LeafNode | None = None

    def __repr__(self) -> str:
        return f"LeafNode(key={self.key:#x}, depth_of_queue={len(self.queue)})"


class Layer:
    """One slot array plus its occupancy bitmask and subtree extrema."""

    __slots__ = ("level", "slots", "occupied", "min_leaf", "max_leaf")

    def __init__(self, level: int, degree: int) -> None:
        self.level = level
        self.slots: list[Any] = [None] * degree
        self.occupied = 0
        self.min_leaf: LeafNode | None = None
        self.max_leaf: LeafNode | None = None

    def __repr__(self) -> str:
        return f"Layer(level={self.level}, occupied={self.occupied:#x})"


class OpStats:
    """Instrumentation for the most recent operation.

    ``layers_visited`` counts layers touched on the descent (the root
    included); ``index_ops`` counts charged ordered-set operations on a
    layer's occupancy set -- at most one per insert (the placement
    neighbor query) and one per remove (clearing the branch-point slot).
    ``nodes_spliced`` counts linked-list splice/unsplice events.

    ``primitive_steps`` is the benchmark cost: one step per layer visited
    plus ``stride_bits`` steps per ordered-set operation, since a scan of a
    ``2**stride_bits``-slot mask resolves in at most ``stride_bits``
    word-sized probes.
    """

    __slots__ = ("stride_bits", "layers_visited", "index_ops", "nodes_spliced")

    def __init__(self, stride_bits: int) -> None:
        self.stride_bits = stride_bits
        self.layers_visited = 0
        self.index_ops = 0
        self.nodes_spliced = 0

    @property
    def primitive_steps(self) -> int:
        return self.layers_visited + self.stride_bits * self.index_ops

    def snapshot(self) -> "OpStats":
        dup = OpStats(self.stride_bits)
        dup.layers_visited = self.layers_visited
        dup.index_ops = self.index_ops
        dup.nodes_spliced = self.nodes_spliced
        return dup

    def __repr__(self) -> str:
        return (
            f"OpStats(layers_visited={self.layers_visited}, "
            f"index_ops={self.index_ops}, nodes_spliced={self.nodes_spliced}, "
            f"primitive_steps={self.primitive_steps})"
        )


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of a structural audit plus a structure fingerprint."""

    ok: bool
    error: str | None
    fingerprint: str


class PTrie:
    """The queue itself.  See the module docstring for the data layout.

    >>> t = PTrie()
    >>> t.insert(7, "a"); t.insert(3, "b"); t.insert(7, "c")
    >>> t.delete_min()
    (3, 'b')
    >>> t.delete_min(), t.delete_min()
    ((7, 'a'), (7, 'c'))
    """

    __slots__ = (
        "config",
        "root",
        "head",
        "tail",
        "count",
        "last_op_stats",
        "_shifts",
        "_chunk_mask",
        "_key_mask",
        "_degree",
        "_depth_max",
        "_path",
        "_path_slots",
    )

    def __init__(self, config: PTrieConfig | None = None) -> None:
        self.config = config if config is not None else PTrieConfig()
        cfg = self.config
        self._degree = cfg.degree
        self._depth_max = cfg.depth_max
        self._key_mask = cfg.key_mask
        self._chunk_mask = self._degree - 1
        # shift per depth, MSB-first: depth 0 reads the top chunk
        self._shifts = tuple(
            cfg.word_bits - cfg.stride_bits * (d + 1) for d in range(cfg.depth_max)
        )
        self.root = Layer(1, self._degree)
        self.head: LeafNode | None = None
        self.tail: LeafNode | None = None
        self.count = 0
        self.last_op_stats = OpStats(cfg.stride_bits)
        # reusable descent scratch, safe under the single-writer contract
        self._path: list[Layer] = [self.root] * self._depth_max
        self._path_slots = [0] * self._depth_max

    # ------------------------------------------------------------------ core

    def __len__(self) -> int:
        return self.count

    def __bool__(self) -> bool:
        return self.count > 0

    def _check_key(self, key: int) -> None:
        if not isinstance(key, int) or isinstance(key, bool):
            raise TypeError(f"key must be an int, got {type(key).__name__}")
        if key < 0 or key > self._key_mask:
            raise ValueError(
                f"key {key} outside the {self.config.word_bits}-bit unsigned range"
            )

    def insert(self, key: int, payload: Any = None) -> None:
        """File ``payload`` under ``key``; equal keys keep arrival order."""
        self._check_key(key)
        st = self.last_op_stats
        st.layers_visited = 1
        st.index_ops = 0
        st.nodes_spliced = 0
        shifts = self._shifts
        cmask = self._chunk_mask
        path = self._path
        layer = self.root
        depth = 0
        path[0] = layer
        while True:
            c = (key >> shifts[depth]) & cmask
            slot = layer.slots[c]
            if slot is None:
                self._place(layer, c, key, payload, path, depth, st)
                self.count += 1
                return
            if type(slot) is LeafNode:
                if slot.key == key:
                    slot.queue.append(payload)
                    self.count += 1
                    return
                # occupied by a different key: push the resident one level
                # down and retry there
                if depth + 1 >= self._depth_max:
                    raise RuntimeError("distinct keys collide at maximum depth")
                child = Layer(layer.level + 1, self._degree)
                oc = (slot.key >> shifts[depth + 1]) & cmask
                child.slots[oc] = slot
                child.occupied = 1 << oc
                child.min_leaf = slot
                child.max_leaf = slot
                layer.slots[c] = child
                layer = child
            else:
                layer = slot
            depth += 1
            path[depth] = layer
            st.layers_visited += 1

    def _place(
        self,
        layer: Layer,
        c: int,
        key: int,
        payload: Any,
        path: list[Layer],
        depth: int,
        st: OpStats,
    ) -> None:
        """Put a fresh leaf into empty slot ``c`` and splice it into the list.

        The linked-list neighbor comes from the nearest occupied slot on
        either side: everything under a lower slot sorts below ``key`` and
        everything under a higher slot sorts above it, so the predecessor
        subtree's ``max_leaf`` (or the successor subtree's ``min_leaf``) is
        the exact splice point.
        """
        leaf = LeafNode(key, payload)
        occ = layer.occupied
        st.index_ops += 1
        lower = occ & ((1 << c) - 1)
        if lower:
            nb = layer.slots[lower.bit_length() - 1]
            left = nb if type(nb) is LeafNode else nb.max_leaf
            leaf.prev = left
            leaf.next = left.next
            if left.next is None:
                self.tail = leaf
            else:
                left.next.prev = leaf
            left.next = leaf
        else:
            higher = occ >> (c + 1)
            if higher:
                s = c + 1 + (higher & -higher).bit_length() - 1
                nb = layer.slots[s]
                right = nb if type(nb) is LeafNode else nb.min_leaf
                leaf.next = right
                leaf.prev = right.prev
                if right.prev is None:
                    self.head = leaf
                else:
                    right.prev.next = leaf
                right.prev = leaf
            else:
                # only an empty trie reaches here: non-root layers are
                # created around a displaced resident
                self.head = leaf
                self.tail = leaf
        layer.slots[c] = leaf
        layer.occupied = occ | (1 << c)
        st.nodes_spliced += 1
        for d in range(depth + 1):
            ly = path[d]
            ml = ly.min_leaf
            if ml is None or key < ml.key:
                ly.min_leaf = leaf
            xl = ly.max_leaf
            if xl is None or key > xl.key:
                ly.max_leaf = leaf

    def remove(self, key: int) -> Any:
        """Dequeue the oldest payload filed under ``key``.

        Returns ``ABSENT`` when the key is not stored.  When the dequeue
        empties the leaf, the leaf is unlinked and the occupancy bit is
        cleared at the deepest surviving branch point; any single-occupancy
        chain hanging below it is dropped wholesale rather than walked.
        """
        self._check_key(key)
        st = self.last_op_stats
        st.layers_visited = 1
        st.index_ops = 0
        st.nodes_spliced = 0
        shifts = self._shifts
        cmask = self._chunk_mask
        path = self._path
        pslots = self._path_slots
        layer = self.root
        depth = 0
        while True:
            c = (key >> shifts[depth]) & cmask
            path[depth] = layer
            pslots[depth] = c
            slot = layer.slots[c]
            if slot is None:
                return ABSENT
            if type(slot) is LeafNode:
                if slot.key != key:
                    return ABSENT
                leaf = slot
                break
            layer = slot
            depth += 1
            st.layers_visited += 1
        payload = leaf.queue.popleft()
        self.count -= 1
        if leaf.queue:
            return payload
        prv = leaf.prev
        nxt = leaf.next
        if prv is None:
            self.head = nxt
        else:
            prv.next = nxt
        if nxt is None:
            self.tail = prv
        else:
            nxt.prev = prv
        st.nodes_spliced += 1
        j = depth
        while j > 0 and path[j].occupied == (path[j].occupied & -path[j].occupied):
            j -= 1
        ly = path[j]
        ly.occupied &= ~(1 << pslots[j])
        ly.slots[pslots[j]] = None
        st.index_ops += 1
        for d in range(j + 1):
            ly = path[d]
            if ly.min_leaf is leaf:
                ly.min_leaf = nxt
            if ly.max_leaf is leaf:
                ly.max_leaf = prv
        return payload

    def search(self, key: int) -> bool:
        """Pure membership probe; touches nothing."""
        self._check_key(key)
        st = self.last_op_stats
        st.layers_visited = 1
        st.index_ops = 0
        st.nodes_spliced = 0
        shifts = self._shifts
        cmask = self._chunk_mask
        layer = self.root
        depth = 0
        while True:
            slot = layer.slots[(key >> shifts[depth]) & cmask]
            if slot is None:
                return False
            if type(slot) is LeafNode:
                return slot.key == key
            layer = slot
            depth += 1
            st.layers_visited += 1

    def minimum(self) -> tuple[int, Any] | None:
        """Smallest key and its oldest payload, or None when empty.  O(1)."""
        h = self.head
        if h is None:
            return None
        return (h.key, h.queue[0])

    def maximum(self) -> tuple[int, Any] | None:
        """Largest key and its oldest payload, or None when empty.  O(1)."""
        t = self.tail
        if t is None:
            return None
        return (t.key, t.queue[0])

    def delete_min(self) -> tuple[int, Any] | None:
        """Extract the minimum; equivalent to ``remove(minimum().key)``."""
        h = self.head
        if h is None:
            return None
        key = h.key
        payload = self.remove(key)
        if payload is ABSENT:
            raise RuntimeError("head leaf vanished during delete_min")
        return (key, payload)

    # ------------------------------------------------------------- iteration

    def first_node(self) -> LeafNode | None:
        """Leaf with the smallest key; ``node.next`` walks ascending keys."""
        return self.head

    def last_node(self) -> LeafNode | None:
        """Leaf with the largest key; ``node.prev`` walks descending keys."""
        return self.tail

    def find_node(self, key: int) -> LeafNode | None:
        """The leaf storing ``key``, or None.  Same descent as ``search``."""
        self._check_key(key)
        shifts = self._shifts
        cmask = self._chunk_mask
        layer = self.root
        depth = 0
        while True:
            slot = layer.slots[(key >> shifts[depth]) & cmask]
            if slot is None:
                return None
            if type(slot) is LeafNode:
                return slot if slot.key == key else None
            layer = slot
            depth += 1

    def __iter__(self) -> Iterator[tuple[int, Any]]:
        """Yield ``(key, payload)`` pairs in exact drain order."""
        node = self.head
        while node is not None:
            for payload in node.queue:
                yield (node.key, payload)
            node = node.next

    def keys(self) -> Iterator[int]:
        """Distinct keys in ascending order."""
        node = self.head
        while node is not None:
            yield node.key
            node = node.next

    # ------------------------------------------------------------ validation

    def validate(self) -> ValidationReport:
        """Audit every structural invariant; O(size), not for hot paths.

        Checks, in order: occupancy masks match slot contents, no empty
        non-root layer, level numbering and depth bounds, every leaf sits
        on its key's chunk path, subtree ``min_leaf``/``max_leaf`` caches
        are exact, no empty payload queue, the linked list is doubly
        consistent, ascends strictly by key, agrees with the trie's
        left-to-right leaf order, and ``count`` equals the payload total.
        The fingerprint hashes the audited shape and is stable across
        processes for equal structures.
        """
        trail: list[bytes] = []
        leaves: list[LeafNode] = []

        def fail(msg: str) -> ValidationReport:
            return ValidationReport(False, msg, "")

        def walk(layer: Layer, depth: int) -> str | None:
            expect_level = depth + 1
            if layer.level != expect_level:
                return f"level mismatch at depth {depth}: {layer.level}"
            if depth >= self._depth_max:
                return f"layer deeper than depth_max at level {layer.level}"
            if len(layer.slots) != self._degree:
                return f"slot array of wrong degree at level {layer.level}"
            occ = 0
            first_here: LeafNode | None = None
            last_here: LeafNode | None = None
            trail.append(b"L%d:%x" % (layer.level, layer.occupied))
            for c, slot in enumerate(layer.slots):
                if slot is None:
                    continue
                occ |= 1 << c
                before = len(leaves)
                if type(slot) is LeafNode:
                    chunk = (slot.key >> self._shifts[depth]) & self._chunk_mask
                    if chunk != c:
                        return (
                            f"leaf {slot.key:#x} filed in slot {c} at "
                            f"level {layer.level}"
                        )
                    if not slot.queue:
                        return f"empty payload queue at key {slot.key:#x}"
                    trail.append(b"K%x:%d" % (slot.key, len(slot.queue)))
                    leaves.append(slot)
                else:
                    err = walk(slot, depth + 1)
                    if err is not None:
                        return err
                    if len(leaves) == before:
                        return f"empty layer at level {slot.level}"
                    sub = slot
                    if sub.min_leaf is not leaves[before]:
                        return f"min_leaf mismatch at level {sub.level}"
                    if sub.max_leaf is not leaves[-1]:
                        return f"max_leaf mismatch at level {sub.level}"
                if first_here is None:
                    first_here = leaves[before]
                last_here = leaves[-1]
            if occ != layer.occupied:
                return (
                    f"occupancy mask {layer.occupied:#x} != contents {occ:#x} "
                    f"at level {layer.level}"
                )
            if layer is not self.root and occ == 0:
                return f"empty layer at level {layer.level}"
            if layer is self.root:
                if self.root.min_leaf is not first_here:
                    return "min_leaf mismatch at level 1"
                if self.root.max_leaf is not last_here:
                    return "max_leaf mismatch at level 1"
            return None

        err = walk(self.root, 0)
        if err is not None:
            return fail(err)

        node = self.head
        seen = 0
        payloads = 0
        prev: LeafNode | None = None
        order: list[bytes] = []
        while node is not None:
            if node.prev is not prev:
                return fail(f"broken prev link at key {node.key:#x}")
            if prev is not None and prev.key >= node.key:
                return fail(
                    f"list not ascending: {prev.key:#x} before {node.key:#x}"
                )
            if seen >= len(leaves) or leaves[seen] is not node:
                return fail(f"list order diverges from trie at key {node.key:#x}")
            order.append(b"%x" % node.key)
            payloads += len(node.queue)
            prev = node
            node = node.next
            seen += 1
        if seen != len(leaves):
            return fail(f"list has {seen} leaves, trie has {len(leaves)}")
        if self.tail is not prev:
            return fail("tail does not end the list")
        if payloads != self.count:
            return fail(f"count {self.count} != stored payloads {payloads}")

        digest = hashlib.sha256(b"|".join(trail) + b"#" + b",".join(order))
        return ValidationReport(True, None, digest.hexdigest())

    def stats(self) -> OpStats:
        """Copy of the most recent operation's instrumentation."""
        return self.last_op_stats.snapshot()

    def __repr__(self) -> str:
        return (
            f"PTrie(word_bits={self.config.word_bits}, "
            f"stride_bits={self.config.stride_bits}, count={self.count})"
        )
