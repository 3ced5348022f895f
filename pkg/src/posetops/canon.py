"""Isomorphism classes of small posets.

Canonical form is computed by exhaustive search over relabelings: elements are
assigned to positions 1..n one at a time, and at each step only the candidates
producing the lexicographically smallest partial encoding survive.  The
encoding of a placement is the pair of comparability bit-vectors against the
already placed prefix, preceded by an isomorphism-invariant color, so the
search tree stays narrow for asymmetric posets.  Every leaf of the surviving
tree produces the same canonical labeled poset, and the number of leaves is
exactly the order of the automorphism group.

This is exact and intended for desk-scale inputs; anything larger than the
size limit is refused rather than approximated.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .core import Poset, PosetError

DEFAULT_SIZE_LIMIT = 8


class SizeLimitExceeded(PosetError):
    pass


@dataclass(frozen=True)
class IsoClass:
    """A poset isomorphism class.

    representative: the canonical labeled poset on elements "1".."n".
    key: hex string identifying the class (size byte + closure rows).
    aut_count: order of the automorphism group of any member.
    """

    representative: Poset
    key: str
    aut_count: int

    @property
    def size(self) -> int:
        return len(self.representative)


def _colors(p: Poset) -> tuple[int, ...]:
    """Invariant color per element, refined once by neighbor colors."""
    n = len(p)
    down = p.down_masks()
    up = [p.up_mask(i) for i in range(n)]
    # height = longest chain strictly below, computed by peeling minima
    height = [0] * n
    order = sorted(range(n), key=lambda i: bin(down[i]).count("1"))
    for i in order:
        m = down[i] & ~(1 << i)
        h = 0
        while m:
            j = (m & -m).bit_length() - 1
            h = max(h, height[j] + 1)
            m &= m - 1
        height[i] = h
    base = [
        (height[i], bin(up[i]).count("1"), bin(down[i]).count("1"))
        for i in range(n)
    ]
    refined = []
    for i in range(n):
        ups, downs = [], []
        m = up[i] & ~(1 << i)
        while m:
            j = (m & -m).bit_length() - 1
            ups.append(base[j])
            m &= m - 1
        m = down[i] & ~(1 << i)
        while m:
            j = (m & -m).bit_length() - 1
            downs.append(base[j])
            m &= m - 1
        refined.append((base[i], tuple(sorted(ups)), tuple(sorted(downs))))
    ranks = {c: r for r, c in enumerate(sorted(set(refined)))}
    return tuple(ranks[c] for c in refined)


def _canonical_search(p: Poset) -> tuple[tuple[int, ...], int]:
    """Return (canonical closure rows, automorphism count)."""
    n = len(p)
    if n == 0:
        return (), 1
    colors = _colors(p)
    up = [p.up_mask(i) for i in range(n)]
    prefixes = [[i] for i in range(n) if colors[i] == min(colors)]
    for depth in range(1, n):
        best_step = None
        extended: list[list[int]] = []
        for pre in prefixes:
            taken = set(pre)
            for cand in range(n):
                if cand in taken:
                    continue
                lo = hi = 0
                for q, placed in enumerate(pre):
                    if up[placed] >> cand & 1:
                        lo |= 1 << q
                    if up[cand] >> placed & 1:
                        hi |= 1 << q
                step = (colors[cand], lo, hi)
                if best_step is None or step < best_step:
                    best_step = step
                    extended = [pre + [cand]]
                elif step == best_step:
                    extended.append(pre + [cand])
        prefixes = extended
    perm = prefixes[0]
    pos = {old: i for i, old in enumerate(perm)}
    rows = [0] * n
    for old, i in pos.items():
        acc = 0
        row = up[old]
        for oldj in range(n):
            if row >> oldj & 1:
                acc |= 1 << pos[oldj]
        rows[i] = acc
    return tuple(rows), len(prefixes)


@lru_cache(maxsize=250000)
def _canonicalize_cached(elements: tuple[str, ...], up: tuple[int, ...]) -> IsoClass:
    p = Poset(elements, up)
    rows, aut = _canonical_search(p)
    n = len(elements)
    width = max(1, (n + 7) // 8)
    key = bytes([n]) + b"".join(r.to_bytes(width, "big") for r in rows)
    rep = Poset(tuple(str(i + 1) for i in range(n)), rows)
    return IsoClass(representative=rep, key=key.hex(), aut_count=aut)


def canonicalize(p: Poset, limit: int | None = None) -> IsoClass:
    """Canonical representative, class key and automorphism count."""
    cap = DEFAULT_SIZE_LIMIT if limit is None else limit
    if len(p) > cap:
        raise SizeLimitExceeded(f"poset has {len(p)} elements, limit is {cap}")
    return _canonicalize_cached(p.elements, p._up)


def class_key(p: Poset, limit: int | None = None) -> str:
    return canonicalize(p, limit).key


def are_isomorphic(p: Poset, q: Poset, limit: int | None = None) -> bool:
    if len(p) != len(q):
        return False
    if sorted(_colors(p)) != sorted(_colors(q)):
        return False
    return canonicalize(p, limit).key == canonicalize(q, limit).key


def contains_induced(p: Poset, pattern: Poset) -> bool:
    """Does some subset of p induce a poset isomorphic to the pattern?

    Backtracking over injective maps that preserve both comparability and
    incomparability; the first completed embedding wins.
    """
    k, n = len(pattern), len(p)
    if k > n:
        return False
    if k == 0:
        return True
    pup = [pattern.up_mask(i) for i in range(k)]
    pdown = pattern.down_masks()
    # visit pattern vertices most-connected-first so contradictions show early
    order = sorted(
        range(k),
        key=lambda i: -(bin(pup[i]).count("1") + bin(pdown[i]).count("1")),
    )
    up = [p.up_mask(i) for i in range(n)]

    def extend(step: int, image: list[int]) -> bool:
        if step == k:
            return True
        v = order[step]
        for cand in range(n):
            if cand in image:
                continue
            ok = True
            for prev_step in range(step):
                u = order[prev_step]
                q = image[prev_step]
                if (pup[u] >> v & 1) != (up[q] >> cand & 1):
                    ok = False
                    break
                if (pup[v] >> u & 1) != (up[cand] >> q & 1):
                    ok = False
                    break
            if ok:
                image.append(cand)
                if extend(step + 1, image):
                    return True
                image.pop()
        return False

    return extend(0, [])
