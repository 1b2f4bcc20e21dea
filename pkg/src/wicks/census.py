"""Isomorph-free enumeration of maximal Wicks forms of a given genus.

Two engines produce the same census:

* :func:`enumerate_constructive` grows every genus-(g-1) class by all
  alpha/beta/gamma constructions and deduplicates canonical words;
* :func:`enumerate_backtrack` searches fixed-point-free involutions of the
  ``12g - 6`` positions directly (small genus only).

A census is only returned once its mass matches the closed formula.
"""

from __future__ import annotations

import json
import logging
import os
import tempfile
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from . import _codes, counting, errors
from .moves import ARITY, attachment_configs, construct_codes
from .symmetry import SymmetryProfile, profile_codes
from .topology import POSITIVE, cycle_sign
from .words import Word, from_codes, parse

log = logging.getLogger(__name__)

MAX_FREE_GENUS = 3
MAX_LARGE_GENUS = 4
MAX_BACKTRACK_GENUS = 2


@dataclass(frozen=True)
class ClassRecord:
    key: tuple[int, ...]
    profile: SymmetryProfile
    pos: int
    neg: int

    @property
    def word(self) -> Word:
        return from_codes(_codes.from_rank(self.key))

    @property
    def aut_order(self) -> int:
        return self.profile.aut_order

    def to_json(self, genus) -> dict:
        p = self.profile
        return {"genus": genus, "word": str(self.word), "aut_order": p.aut_order,
                "pos": self.pos, "neg": self.neg, "r": p.r, "s": p.s, "t": p.t}


def make_record(key) -> ClassRecord:
    codes = _codes.from_rank(key)
    partner = _codes.partners(codes)
    _, profile = profile_codes(codes, partner)
    signs = [cycle_sign(c) for c in _codes.vertex_cycles(partner)]
    pos = signs.count(POSITIVE)
    return ClassRecord(tuple(key), profile, pos, len(signs) - pos)


@dataclass(frozen=True)
class Census:
    genus: int
    records: tuple[ClassRecord, ...]

    @property
    def classes(self) -> list[Word]:
        return [r.word for r in self.records]

    @property
    def keys(self) -> list[tuple[int, ...]]:
        return [r.key for r in self.records]

    def __len__(self):
        return len(self.records)

    @property
    def mass(self) -> Fraction:
        return sum((Fraction(1, r.aut_order) for r in self.records), Fraction(0))

    def to_jsonl(self) -> str:
        return "".join(json.dumps(r.to_json(self.genus)) + "\n" for r in self.records)

    def metadata(self) -> dict:
        st = census_stats(self)
        return {
            "genus": self.genus,
            "classes": len(self),
            "mass": str(st["mass"]),
            "exact": {str(d): v for d, v in st["exact"].items()},
            "m2": {str(r): str(v) for r, v in st["m2"].items()},
            "m3": {f"{s},{t}": str(v) for (s, t), v in st["m3"].items()},
            "m6": {f"{r};{s},{t}": str(v) for (r, s, t), v in st["m6"].items()},
        }


def census_from_keys(genus, keys) -> Census:
    return Census(genus, tuple(make_record(k) for k in sorted(set(keys))))


def census_stats(c: Census) -> dict:
    """Exact-order class counts and per-stratum masses.

    Order-6 strata are keyed by their labels ``(3r, 2s, 2t)``.
    """
    exact = {1: 0, 2: 0, 3: 0, 6: 0}
    m2, m3, m6 = {}, {}, {}
    for rec in c.records:
        p = rec.profile
        exact[p.aut_order] = exact.get(p.aut_order, 0) + 1
        w = Fraction(1, p.aut_order)
        if p.r is not None:
            m2[p.r] = m2.get(p.r, 0) + w
        if p.s is not None:
            m3[(p.s, p.t)] = m3.get((p.s, p.t), 0) + w
        if p.r is not None and p.s is not None:
            m6[(p.r, p.s, p.t)] = m6.get((p.r, p.s, p.t), 0) + w
    return {"classes": len(c), "mass": c.mass, "exact": exact,
            "m2": dict(sorted(m2.items())), "m3": dict(sorted(m3.items())),
            "m6": dict(sorted(m6.items()))}


def certify(c: Census) -> None:
    """Raise CensusMismatch unless the census reproduces every formula mass."""
    g = c.genus
    if c.mass != counting.m1(g):
        raise errors.CensusMismatch(
            f"genus {g}: census mass {c.mass} != {counting.m1(g)} ({len(c)} classes)")
    st = census_stats(c)
    expected6 = {counting.m6_label(*k): v for k, v in counting.strata6(g).items()}
    for name, got, want in (("m2", st["m2"], counting.strata2(g)),
                            ("m3", st["m3"], counting.strata3(g)),
                            ("m6", st["m6"], expected6)):
        if got != want:
            raise errors.CensusMismatch(f"genus {g}: stratum masses {name} {got} != {want}")


def check_genus(g, allow_large=False, limit=None):
    if g < 1:
        raise errors.GenusGuard(f"genus must be >= 1, got {g}")
    if limit is not None and g > limit:
        raise errors.GenusGuard(f"genus {g} exceeds the limit {limit} of this engine")
    if g > MAX_LARGE_GENUS:
        raise errors.GenusGuard(f"genus {g} census is out of reach")
    if g > MAX_FREE_GENUS and not allow_large:
        raise errors.GenusGuard(f"genus {g} census needs allow_large")


# -- constructive engine -----------------------------------------------------

GENUS_ONE_KEY = _codes.canonical(parse("a b c a' b' c'").codes())


def children(parent_key) -> set:
    """Canonical keys of all valid children of one parent class."""
    codes = _codes.from_rank(parent_key)
    partner = _codes.partners(codes)
    out = set()
    for kind, k in ARITY.items():
        for pts in attachment_configs(codes, k):
            res = construct_codes(codes, partner, kind, pts)
            if res is not None:
                out.add(_codes.canonical(res[0]))
    return out


def _children_batch(keys):
    out = set()
    for key in keys:
        out |= children(key)
    return out


def _grow(parent_keys, jobs):
    parent_keys = sorted(parent_keys)
    if jobs <= 1 or len(parent_keys) < 2:
        return _children_batch(parent_keys)
    batches = [parent_keys[i::jobs * 4] for i in range(jobs * 4)]
    result = set()
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for part in pool.map(_children_batch, batches):
            result |= part
    return result


def enumerate_constructive(g: int, jobs: int = 1, allow_large: bool = False,
                           parent: Census | None = None, cache=None) -> Census:
    check_genus(g, allow_large)
    if cache is not None:
        hit = cache.load(g)
        if hit is not None:
            return hit
    if g == 1:
        c = census_from_keys(1, [GENUS_ONE_KEY])
    else:
        if parent is None or parent.genus != g - 1:
            parent = enumerate_constructive(g - 1, jobs, allow_large, cache=cache)
        log.info("growing %d genus-%d classes", len(parent), g - 1)
        c = census_from_keys(g, _grow(parent.keys, jobs))
    certify(c)
    if cache is not None:
        cache.store(c)
    return c


# -- backtracking engine -----------------------------------------------------

def _pointed_words(n):
    """All rank-encoded linear words of length n with trivalent corner orbits."""
    partner = [-1] * n

    def sig(k):
        p = partner[k]
        return -1 if p < 0 else (p + 1) % n

    def ok(k):
        a = sig(k)
        if a < 0:
            return True
        if a == k:
            return False
        b = sig(a)
        if b < 0:
            return True
        if b == k:
            return False
        c = sig(b)
        return c < 0 or c == k

    def pre(x):
        return partner[(x - 1) % n]

    def affected(i, j):
        out = set()
        for x in (i, j):
            out.add(x)
            y = pre(x)
            if y >= 0:
                out.add(y)
                z = pre(y)
                if z >= 0:
                    out.add(z)
        return out

    found = []

    def rec(i):
        while i < n and partner[i] >= 0:
            i += 1
        if i == n:
            found.append(tuple(partner))
            return
        for j in range(i + 1, n):
            if partner[j] >= 0:
                continue
            partner[i], partner[j] = j, i
            if all(ok(k) for k in affected(i, j)):
                rec(i + 1)
            partner[i] = partner[j] = -1

    rec(0)
    words = []
    for p in found:
        rank = {}
        codes = []
        for i in range(n):
            if p[i] > i:
                rank[i] = len(rank) + 1
                codes.append(rank[i])
            else:
                codes.append(-rank[p[i]])
        words.append(tuple(codes))
    return words


def enumerate_backtrack(g: int) -> Census:
    check_genus(g, limit=MAX_BACKTRACK_GENUS)
    keys = set()
    for codes in _pointed_words(12 * g - 6):
        _codes.check(codes)
        keys.add(_codes.canonical(codes))
    c = census_from_keys(g, keys)
    certify(c)
    return c


def enumerate_census(g, method="construct", jobs=1, allow_large=False, cache=None):
    """Run one engine, or both and insist that they agree."""
    if method == "construct":
        return enumerate_constructive(g, jobs, allow_large, cache=cache)
    if method == "backtrack":
        return enumerate_backtrack(g)
    if method == "both":
        a = enumerate_constructive(g, jobs, allow_large, cache=cache)
        b = enumerate_backtrack(g)
        if a.keys != b.keys:
            raise errors.CensusMismatch(
                f"engines disagree at genus {g}: {len(a)} vs {len(b)} classes")
        return a
    raise ValueError(f"unknown method {method!r}")


# -- persistence -------------------------------------------------------------

def write_atomic(path, text):
    path = Path(path)
    fd, tmp = tempfile.mkstemp(dir=path.parent or ".", prefix=path.name + ".", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        Path(tmp).unlink(missing_ok=True)
        raise


def save(c: Census, path) -> None:
    """Write the JSON-lines census and its ``.meta.json`` sidecar."""
    path = Path(path)
    write_atomic(path, c.to_jsonl())
    write_atomic(path.with_name(path.name + ".meta.json"),
                 json.dumps(c.metadata(), indent=2) + "\n")


def load(path) -> Census:
    keys = []
    genus = None
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            if not line.strip():
                continue
            rec = json.loads(line)
            genus = rec["genus"]
            keys.append(_codes.canonical(parse(rec["word"], "verbose").codes()))
    if genus is None:
        raise errors.WicksError(f"{path}: empty census file")
    c = census_from_keys(genus, keys)
    certify(c)
    return c


class CensusCache:
    """Directory of persisted censuses, ``genus-<g>.jsonl``."""

    ENV = "WICKS_CACHE_DIR"

    def __init__(self, directory):
        self.directory = Path(directory)

    @classmethod
    def from_env(cls):
        d = os.environ.get(cls.ENV)
        return cls(d) if d else None

    def path(self, g) -> Path:
        return self.directory / f"genus-{g}.jsonl"

    def load(self, g):
        p = self.path(g)
        if not p.exists():
            return None
        try:
            return load(p)
        except (errors.WicksError, ValueError, KeyError) as exc:
            log.warning("ignoring unusable cache file %s: %s", p, exc)
            return None

    def store(self, c: Census):
        self.directory.mkdir(parents=True, exist_ok=True)
        save(c, self.path(c.genus))
