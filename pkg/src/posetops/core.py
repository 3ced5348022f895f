"""Finite posets as immutable values.

A poset is a finite ground set of string labels together with a reflexive,
antisymmetric, transitive relation.  The relation is stored as its full
transitive closure in a dense bit matrix: row ``i`` is an integer whose bit
``j`` is set exactly when ``element[i] <= element[j]``.  Labels are opaque;
all equality is by label.  Elements are kept sorted, so two posets compare
equal exactly when they have the same ground set and the same order relation.

Conventions:
  * ``build`` accepts arbitrary generator pairs (covers or the full relation)
    and closes them, rejecting anything whose closure is not antisymmetric.
  * Every derived poset (restriction, opposite, union, quotient) is again a
    closed, validated value; operations never mutate.
  * All outputs that enumerate elements, pairs or components are sorted, so
    renderings are reproducible.
"""

from __future__ import annotations

import json
from typing import Iterable, Iterator, Sequence


class PosetError(Exception):
    """Base class for all domain errors raised by this package."""


class DuplicateLabel(PosetError):
    pass


class UnknownLabel(PosetError):
    pass


class CycleDetected(PosetError):
    """The generators force x <= y <= x for distinct x, y."""

    def __init__(self, x: str, y: str):
        super().__init__(f"cycle through {x!r} and {y!r}")
        self.cycle = (x, y)


class LabelClash(PosetError):
    pass


class GroundSetMismatch(PosetError):
    pass


class NotConvex(PosetError):
    pass


class EmptySubset(PosetError):
    pass


def _closed(rows: list[int]) -> list[int]:
    """Reflexive-transitive closure of bit-matrix rows (Warshall)."""
    n = len(rows)
    for i in range(n):
        rows[i] |= 1 << i
    for k in range(n):
        bit = 1 << k
        rk = rows[k]
        for i in range(n):
            if rows[i] & bit:
                rows[i] |= rk
    return rows


class Poset:
    """Immutable finite poset; construct through :func:`build` or helpers."""

    __slots__ = ("elements", "_idx", "_up", "_hash")

    def __init__(self, elements: tuple[str, ...], up: tuple[int, ...]):
        # Trusted constructor: callers must pass sorted elements and a closed,
        # antisymmetric relation.  External input goes through build().
        self.elements = elements
        self._idx = {e: i for i, e in enumerate(elements)}
        self._up = up
        self._hash = hash((elements, up))

    # -- basic queries -----------------------------------------------------

    def __len__(self) -> int:
        return len(self.elements)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Poset)
            and self.elements == other.elements
            and self._up == other._up
        )

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        rel = ", ".join(f"{u}<={v}" for u, v in self.strict_pairs())
        return f"Poset({list(self.elements)}; {rel})"

    def index(self, label: str) -> int:
        try:
            return self._idx[label]
        except KeyError:
            raise UnknownLabel(f"unknown element {label!r}") from None

    def leq(self, x: str, y: str) -> bool:
        return bool(self._up[self.index(x)] >> self.index(y) & 1)

    def up_mask(self, i: int) -> int:
        return self._up[i]

    def down_masks(self) -> tuple[int, ...]:
        n = len(self.elements)
        down = [0] * n
        for i, row in enumerate(self._up):
            bit = 1 << i
            for j in range(n):
                if row >> j & 1:
                    down[j] |= bit
        return tuple(down)

    def strict_pairs(self) -> list[tuple[str, str]]:
        """All pairs (u, v) with u < v, sorted."""
        out = []
        els = self.elements
        for i, row in enumerate(self._up):
            row &= ~(1 << i)
            while row:
                j = (row & -row).bit_length() - 1
                out.append((els[i], els[j]))
                row &= row - 1
        out.sort()
        return out

    def relation_key(self) -> tuple:
        """Hashable identity of this labeled poset (ground set + relation)."""
        return (self.elements, self._up)

    # -- serialization -----------------------------------------------------

    def to_doc(self) -> dict:
        """Canonical JSON document: sorted elements, sorted cover pairs."""
        return {
            "elements": list(self.elements),
            "relations": [list(p) for p in hasse_covers(self)],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_doc(), sort_keys=True)


def build(elements: Iterable[str], generators: Iterable[Sequence[str]] = ()) -> Poset:
    """Create a poset from labels and generator pairs.

    The generator pairs may be any relation whose reflexive-transitive closure
    is a partial order; covers and full relations are both accepted.
    """
    els = list(elements)
    if len(set(els)) != len(els):
        seen = set()
        for e in els:
            if e in seen:
                raise DuplicateLabel(f"duplicate element {e!r}")
            seen.add(e)
    if not all(isinstance(e, str) for e in els):
        raise PosetError("element labels must be strings")
    els = tuple(sorted(els))
    idx = {e: i for i, e in enumerate(els)}
    rows = [0] * len(els)
    for pair in generators:
        u, v = pair
        if u not in idx:
            raise UnknownLabel(f"unknown element {u!r}")
        if v not in idx:
            raise UnknownLabel(f"unknown element {v!r}")
        rows[idx[u]] |= 1 << idx[v]
    rows = _closed(rows)
    for i in range(len(els)):
        for j in range(i + 1, len(els)):
            if rows[i] >> j & 1 and rows[j] >> i & 1:
                raise CycleDetected(els[i], els[j])
    return Poset(els, tuple(rows))


def from_doc(doc: dict) -> Poset:
    if not isinstance(doc, dict) or "elements" not in doc:
        raise PosetError("poset document must be an object with 'elements'")
    elements = doc["elements"]
    relations = doc.get("relations", ())
    if not isinstance(elements, (list, tuple)) or not all(
        isinstance(e, str) for e in elements
    ):
        raise PosetError("'elements' must be an array of strings")
    if not isinstance(relations, (list, tuple)) or not all(
        isinstance(r, (list, tuple)) and len(r) == 2 for r in relations
    ):
        raise PosetError("'relations' must be an array of [low, high] pairs")
    return build(elements, relations)


def from_json(text: str) -> Poset:
    return from_doc(json.loads(text))


# -- derived posets ---------------------------------------------------------


def hasse_covers(p: Poset) -> list[tuple[str, str]]:
    """The cover pairs (e, e') with e < e' and nothing strictly between."""
    n = len(p)
    down = p.down_masks()
    out = []
    for i in range(n):
        row = p._up[i] & ~(1 << i)
        r = row
        while r:
            j = (r & -r).bit_length() - 1
            between = row & down[j] & ~(1 << j)
            if not between:
                out.append((p.elements[i], p.elements[j]))
            r &= r - 1
    out.sort()
    return out


def restrict(p: Poset, subset: Iterable[str]) -> Poset:
    """Induced subposet on the given labels."""
    labels = sorted(set(subset))
    keep = [p.index(e) for e in labels]
    rows = []
    for i in keep:
        row = 0
        for newj, j in enumerate(keep):
            if p._up[i] >> j & 1:
                row |= 1 << newj
        rows.append(row)
    return Poset(tuple(labels), tuple(rows))


def opposite(p: Poset) -> Poset:
    """The poset with the order reversed (an involution)."""
    return Poset(p.elements, p.down_masks())


def disjoint_union(p: Poset, q: Poset) -> Poset:
    clash = set(p.elements) & set(q.elements)
    if clash:
        raise LabelClash(f"shared labels {sorted(clash)}")
    els = sorted(p.elements + q.elements)
    idx = {e: i for i, e in enumerate(els)}
    rows = [1 << i for i in range(len(els))]
    for src in (p, q):
        for u, v in src.strict_pairs():
            rows[idx[u]] |= 1 << idx[v]
    return Poset(tuple(els), tuple(_closed(rows)))


def relabel(p: Poset, mapping: dict[str, str]) -> Poset:
    """Rename elements through a bijective label map (species functoriality)."""
    new = [mapping.get(e, e) for e in p.elements]
    if len(set(new)) != len(new):
        raise DuplicateLabel("relabeling is not injective")
    order = sorted(range(len(new)), key=lambda i: new[i])
    pos = {old: rank for rank, old in enumerate(order)}
    rows = [0] * len(new)
    for i, row in enumerate(p._up):
        acc = 0
        for j in range(len(new)):
            if row >> j & 1:
                acc |= 1 << pos[j]
        rows[pos[i]] = acc
    return Poset(tuple(new[i] for i in order), tuple(rows))


def is_finer(p: Poset, q: Poset) -> bool:
    """True when every comparability of p also holds in q (p is finer)."""
    if p.elements != q.elements:
        raise GroundSetMismatch("refinement needs a common ground set")
    return all(pr & ~qr == 0 for pr, qr in zip(p._up, q._up))


def connected_components(p: Poset) -> list[tuple[str, ...]]:
    """Partition into comparability components, ordered by smallest label."""
    n = len(p)
    down = p.down_masks()
    adj = [p._up[i] | down[i] for i in range(n)]
    seen = 0
    comps = []
    for i in range(n):
        if seen >> i & 1:
            continue
        mask = 1 << i
        while True:
            grow = mask
            m = mask
            while m:
                j = (m & -m).bit_length() - 1
                grow |= adj[j]
                m &= m - 1
            if grow == mask:
                break
            mask = grow
        seen |= mask
        comps.append(tuple(p.elements[j] for j in range(n) if mask >> j & 1))
    return comps


def extrema(p: Poset) -> tuple[tuple[str, ...], tuple[str, ...]]:
    """(minimal elements, maximal elements), each sorted."""
    n = len(p)
    down = p.down_masks()
    mins = tuple(p.elements[i] for i in range(n) if down[i] == 1 << i)
    maxs = tuple(p.elements[i] for i in range(n) if p._up[i] == 1 << i)
    return mins, maxs


def _subset_mask(p: Poset, subset: Iterable[str]) -> int:
    mask = 0
    for e in subset:
        mask |= 1 << p.index(e)
    return mask


def is_convex(p: Poset, subset: Iterable[str]) -> bool:
    """True when every interval [x, y] with x, y in the subset stays inside."""
    mask = _subset_mask(p, subset)
    n = len(p)
    down = p.down_masks()
    m = mask
    while m:
        i = (m & -m).bit_length() - 1
        m &= m - 1
        mm = mask
        while mm:
            j = (mm & -mm).bit_length() - 1
            mm &= mm - 1
            if p._up[i] >> j & 1 and p._up[i] & down[j] & ~mask:
                return False
    return True


def quotient(p: Poset, subset: Iterable[str], new_label: str) -> Poset:
    """Collapse a nonempty convex subset to a single new element.

    The quotient relation saturates through the collapsed block: for x, y
    outside it, x <= y holds when it held before or when x reaches into the
    block and the block reaches y.
    """
    block = sorted(set(subset))
    if not block:
        raise EmptySubset("cannot collapse an empty subset")
    mask = _subset_mask(p, block)
    if not is_convex(p, block):
        raise NotConvex(f"subset {block} is not convex")
    rest = [e for e in p.elements if e not in set(block)]
    if new_label in rest:
        raise DuplicateLabel(f"label {new_label!r} already present")
    down = p.down_masks()
    pairs = []
    for x in rest:
        i = p.index(x)
        for y in rest:
            j = p.index(y)
            if p._up[i] >> j & 1 or (p._up[i] & mask and down[j] & mask):
                pairs.append((x, y))
        if p._up[i] & mask:
            pairs.append((x, new_label))
    for y in rest:
        j = p.index(y)
        if down[j] & mask:
            pairs.append((new_label, y))
    return build(rest + [new_label], pairs)


def covered_ground(p: Poset, subset: Iterable[str]) -> tuple[str, ...]:
    """Validate a ground subset and return it sorted."""
    out = tuple(sorted(set(subset)))
    for e in out:
        p.index(e)
    return out


def _component_iter(p: Poset) -> Iterator[Poset]:
    for comp in connected_components(p):
        yield restrict(p, comp)
