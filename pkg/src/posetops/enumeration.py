"""Exhaustive generation of small posets and the counting table.

Labeled posets on {"1", ..., "n"} are generated by extension: a poset on the
first k labels grows by one element whose strict down-set D and strict up-set
U are chosen among the down-closed / up-closed subsets with D x U already
related.  Every labeled poset arises exactly once, so the labeled counts are
exact, and isomorphism classes are obtained by canonical-key deduplication.

The default ceiling keeps runs at desk scale; it can be raised by one at the
call site, beyond which generation refuses to start.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from math import factorial
from typing import Callable, Iterator

from .canon import IsoClass, SizeLimitExceeded, _canonical_search
from .core import Poset, connected_components

DEFAULT_MAX_N = 6
HARD_CAP = 7

_FILTERS: dict[str, Callable[[Poset], bool]] = {}


def _filters() -> dict[str, Callable[[Poset], bool]]:
    if not _FILTERS:
        from .structure import is_nabla_compatible, is_wn

        _FILTERS["connected"] = lambda p: len(connected_components(p)) <= 1
        _FILTERS["wn"] = is_wn
        _FILTERS["nabla"] = is_nabla_compatible
    return _FILTERS


def _check_cap(n: int, cap: int | None) -> None:
    ceiling = DEFAULT_MAX_N if cap is None else min(cap, HARD_CAP)
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > ceiling:
        raise SizeLimitExceeded(
            f"refusing to enumerate posets on {n} elements (ceiling {ceiling})"
        )


def all_posets(n: int, cap: int | None = None, reverse: bool = False) -> Iterator[Poset]:
    """Every partial order on the labels "1".."n", each exactly once."""
    _check_cap(n, cap)
    labels = tuple(str(i + 1) for i in range(n))
    if n == 0:
        yield Poset((), ())
        return

    def grow(k: int, rows: list[int], down: list[int]) -> Iterator[tuple]:
        if k == n:
            yield tuple(rows)
            return
        full = (1 << k) - 1
        downsets = [m for m in range(full + 1)
                    if not any(m >> i & 1 and (down[i] & ~m) for i in range(k))]
        upsets = [m for m in range(full + 1)
                  if not any(m >> i & 1 and (rows[i] & ~m & full) for i in range(k))]
        d_iter = reversed(downsets) if reverse else downsets
        for dmask in d_iter:
            u_candidates = [u for u in upsets if not u & dmask]
            u_iter = reversed(u_candidates) if reverse else u_candidates
            for umask in u_iter:
                ok = True
                m = dmask
                while m and ok:
                    i = (m & -m).bit_length() - 1
                    m &= m - 1
                    if umask & ~rows[i]:
                        ok = False
                if not ok:
                    continue
                new_rows = [rows[i] | (1 << k if dmask >> i & 1 else 0)
                            for i in range(k)]
                new_rows.append(1 << k | umask)
                new_down = [down[i] for i in range(k)]
                for j in range(k):
                    if umask >> j & 1:
                        new_down[j] |= 1 << k
                new_down.append(1 << k | dmask)
                yield from grow(k + 1, new_rows, new_down)

    for rows in grow(0, [], []):
        yield Poset(labels, rows)


@lru_cache(maxsize=None)
def labeled_count(n: int, filter_name: str | None = None) -> int:
    pred = _filters()[filter_name] if filter_name else None
    total = 0
    for p in all_posets(n):
        if pred is None or pred(p):
            total += 1
    return total


@lru_cache(maxsize=None)
def all_isoclasses(n: int, filter_name: str | None = None) -> tuple[IsoClass, ...]:
    """One IsoClass per isomorphism class at size n, sorted by key.

    The optional filter restricts to connected, WN, or grafting-built posets;
    all three properties are isomorphism-invariant, so they are decided on
    the canonical representatives.
    """
    if filter_name is not None:
        pred = _filters()[filter_name]
        return tuple(ic for ic in all_isoclasses(n) if pred(ic.representative))
    seen: dict[str, IsoClass] = {}
    labels = tuple(str(i + 1) for i in range(n))
    for p in all_posets(n):
        rows, aut = _canonical_search(p)
        key = (bytes([n]) + bytes(rows)).hex()
        if key not in seen:
            seen[key] = IsoClass(
                representative=Poset(labels, rows), key=key, aut_count=aut
            )
    return tuple(sorted(seen.values(), key=lambda ic: ic.key))


@dataclass(frozen=True)
class CountRow:
    n: int
    labeled: int
    isoclasses: int
    connected_isoclasses: int
    wn_labeled: int
    wn_isoclasses: int
    nabla_labeled: int
    nabla_isoclasses: int


@dataclass(frozen=True)
class CountTable:
    rows: tuple[CountRow, ...]

    FIELDS = (
        "n", "labeled", "isoclasses", "connected_isoclasses",
        "wn_labeled", "wn_isoclasses", "nabla_labeled", "nabla_isoclasses",
    )

    def to_doc(self) -> list[dict]:
        return [
            {f: getattr(r, f) for f in self.FIELDS}
            for r in self.rows
        ]

    def render_csv(self) -> str:
        lines = [",".join(self.FIELDS)]
        for r in self.rows:
            lines.append(",".join(str(getattr(r, f)) for f in self.FIELDS))
        return "\n".join(lines)

    def render_markdown(self) -> str:
        head = "| " + " | ".join(self.FIELDS) + " |"
        sep = "|" + "|".join(" --- " for _ in self.FIELDS) + "|"
        lines = [head, sep]
        for r in self.rows:
            lines.append(
                "| " + " | ".join(str(getattr(r, f)) for f in self.FIELDS) + " |"
            )
        return "\n".join(lines)


def count_table(n_max: int, cap: int | None = None) -> CountTable:
    """Counting summary for sizes 1..n_max, with internal cross-checks.

    The orbit identity (sum over classes of n!/|Aut| equals the labeled
    count) is asserted for every row and every filter.
    """
    rows = []
    for n in range(1, n_max + 1):
        _check_cap(n, cap)
        data = {}
        for name in (None, "wn", "nabla"):
            classes = all_isoclasses(n, name)
            lab = labeled_count(n, name)
            orbit = sum(factorial(n) // ic.aut_count for ic in classes)
            if orbit != lab:
                raise AssertionError(
                    f"orbit identity failed at n={n}, filter={name}: "
                    f"{orbit} != {lab}"
                )
            data[name] = (lab, len(classes))
        rows.append(
            CountRow(
                n=n,
                labeled=data[None][0],
                isoclasses=data[None][1],
                connected_isoclasses=len(all_isoclasses(n, "connected")),
                wn_labeled=data["wn"][0],
                wn_isoclasses=data["wn"][1],
                nabla_labeled=data["nabla"][0],
                nabla_isoclasses=data["nabla"][1],
            )
        )
    return CountTable(rows=tuple(rows))


def pinned_sequences() -> dict:
    """Reference integer sequences pinned in the package data."""
    text = resources.files("posetops").joinpath("data/sequences.json").read_text()
    return json.loads(text)
