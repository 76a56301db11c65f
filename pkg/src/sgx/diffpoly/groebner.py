"""A small Buchberger implementation over Q(i).

Polynomials are dicts ``{exponent_tuple: GaussRational}`` over a fixed
variable list. The monomial order is graded reverse lexicographic inside
each block, blocks compared left to right (block 0 is eliminated first).
"""

from __future__ import annotations

import heapq
import time
from typing import Optional

from sgx.errors import ResourceBudgetExceeded
from sgx.ratfunc import GaussRational

MAX_DEGREE = 12
MAX_BASIS = 2000


class PolyRing:
    """Variables listed from largest to smallest, split into blocks."""

    def __init__(self, variables, blocks=None):
        self.variables = tuple(variables)
        self.index = {v: k for k, v in enumerate(self.variables)}
        n = len(self.variables)
        blocks = tuple(blocks) if blocks else (n,)
        if sum(blocks) != n:
            raise ValueError("block sizes must add up to the number of variables")
        self.blocks = blocks
        bounds, start = [], 0
        for b in blocks:
            bounds.append((start, start + b))
            start += b
        self._bounds = bounds
        self._keys = {}
        self.one = (0,) * n

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def key(self, m: tuple) -> tuple:
        """Sort key: a larger key is a larger monomial."""
        k = self._keys.get(m)
        if k is None:
            parts = []
            for lo, hi in self._bounds:
                seg = m[lo:hi]
                parts.append(sum(seg))
                parts.extend(-e for e in reversed(seg))
            k = tuple(parts)
            self._keys[m] = k
        return k

    def neg_key(self, m: tuple) -> tuple:
        return tuple(-v for v in self.key(m))

    def leading(self, p: dict) -> tuple:
        return max(p, key=self.key)

    def from_sigma(self, sp) -> dict:
        """Convert a SigmaPolynomial whose variables all lie in this ring."""
        out = {}
        n = self.nvars
        for mono, c in sp.terms.items():
            e = [0] * n
            for v, k in mono:
                e[self.index[v]] += k
            out[tuple(e)] = c
        return out

    def to_sigma(self, p: dict):
        from sgx.diffpoly.sigmapoly import SigmaPolynomial

        terms = {}
        for e, c in p.items():
            mono = tuple(sorted((self.variables[k], x) for k, x in enumerate(e) if x))
            terms[mono] = c
        return SigmaPolynomial._wrap(terms)


def _divides(a: tuple, b: tuple) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _lcm(a: tuple, b: tuple) -> tuple:
    return tuple(x if x >= y else y for x, y in zip(a, b))


def _coprime(a: tuple, b: tuple) -> bool:
    return all(not (x and y) for x, y in zip(a, b))


def _monic(p: dict, lt: tuple) -> dict:
    c = p[lt]
    if c == 1:
        return p
    inv = c.inverse()
    return {m: v * inv for m, v in p.items()}


def _degree(m: tuple) -> int:
    return sum(m)


class _Deadline:
    def __init__(self, deadline: Optional[float]):
        self.deadline = deadline
        self.count = 0

    def check(self):
        self.count += 1
        if self.deadline is not None and self.count % 16 == 0 and time.monotonic() > self.deadline:
            raise ResourceBudgetExceeded("deadline exceeded during Groebner computation")


def reduce(p: dict, basis, ring: PolyRing, lts=None, clock: Optional[_Deadline] = None) -> dict:
    """Full normal form of ``p`` modulo ``basis`` (a list of monic dicts)."""
    if not p:
        return {}
    if lts is None:
        lts = [ring.leading(g) for g in basis]
    p = dict(p)
    heap = [(ring.neg_key(m), m) for m in p]
    heapq.heapify(heap)
    out = {}
    while heap:
        _, m = heapq.heappop(heap)
        c = p.pop(m, None)
        if c is None:
            continue
        for g, lt in zip(basis, lts):
            if _divides(lt, m):
                q = tuple(x - y for x, y in zip(m, lt))
                for gm, gc in g.items():
                    if gm == lt:
                        continue
                    t = tuple(x + y for x, y in zip(q, gm))
                    old = p.get(t)
                    if old is None:
                        p[t] = -c * gc
                        heapq.heappush(heap, (ring.neg_key(t), t))
                    else:
                        s = old - c * gc
                        if s:
                            p[t] = s
                        else:
                            del p[t]
                break
        else:
            out[m] = c
        if clock is not None:
            clock.check()
    return out


def _spoly(f: dict, lf: tuple, g: dict, lg: tuple) -> dict:
    l = _lcm(lf, lg)
    qf = tuple(x - y for x, y in zip(l, lf))
    qg = tuple(x - y for x, y in zip(l, lg))
    out = {}
    for m, c in f.items():
        if m == lf:
            continue
        out[tuple(x + y for x, y in zip(qf, m))] = c
    for m, c in g.items():
        if m == lg:
            continue
        t = tuple(x + y for x, y in zip(qg, m))
        s = out.get(t, GaussRational(0)) - c
        if s:
            out[t] = s
        else:
            out.pop(t, None)
    return out


def _check_caps(p: dict, basis_len: int, max_degree: int, max_basis: int):
    if p and max(_degree(m) for m in p) > max_degree:
        raise ResourceBudgetExceeded(f"polynomial of total degree > {max_degree}")
    if basis_len > max_basis:
        raise ResourceBudgetExceeded(f"basis size > {max_basis}")


def groebner_basis(polys, ring: PolyRing, deadline: Optional[float] = None,
                   max_degree: int = MAX_DEGREE, max_basis: int = MAX_BASIS) -> list:
    """Reduced Groebner basis (monic dicts, sorted by leading monomial).

    ``deadline`` is an absolute ``time.monotonic()`` value.
    """
    clock = _Deadline(deadline)
    basis, lts = [], []
    pairs = []  # heap of (lcm degree, lcm neg key, i, j)

    def add(h):
        lt = ring.leading(h)
        h = _monic(h, lt)
        k = len(basis)
        for j, ltj in enumerate(lts):
            if ltj is None:
                continue
            l = _lcm(lt, ltj)
            heapq.heappush(pairs, (_degree(l), ring.neg_key(l), j, k))
        basis.append(h)
        lts.append(lt)
        # drop elements whose leading term is now redundant; keep indices stable
        for j in range(k):
            if lts[j] is not None and _divides(lt, lts[j]) and lts[j] != lt:
                lts[j] = None
        _check_caps(h, sum(1 for t in lts if t is not None), max_degree, max_basis)

    def live():
        return [(g, lt) for g, lt in zip(basis, lts) if lt is not None]

    for p in polys:
        if not p:
            continue
        _check_caps(p, 0, max_degree, max_basis)
        cur = live()
        h = reduce(p, [g for g, _ in cur], ring, [lt for _, lt in cur], clock)
        if h:
            if ring.leading(h) == ring.one:
                return [{ring.one: GaussRational(1)}]
            add(h)
    done = set()
    while pairs:
        clock.check()
        _, _, i, j = heapq.heappop(pairs)
        done.add((i, j))
        lti = lts[i] if lts[i] is not None else ring.leading(basis[i])
        ltj = lts[j] if lts[j] is not None else ring.leading(basis[j])
        if _coprime(lti, ltj):
            continue
        l = _lcm(lti, ltj)
        chain = False
        for k, ltk in enumerate(lts):
            if ltk is None or k in (i, j) or not _divides(ltk, l):
                continue
            a, b = (i, k) if i < k else (k, i)
            c, d = (j, k) if j < k else (k, j)
            if (a, b) in done and (c, d) in done:
                chain = True
                break
        if chain:
            continue
        s = _spoly(basis[i], lti, basis[j], ltj)
        cur = live()
        h = reduce(s, [g for g, _ in cur], ring, [lt for _, lt in cur], clock)
        if h:
            if ring.leading(h) == ring.one:
                return [{ring.one: GaussRational(1)}]
            add(h)
    return _interreduce([g for g, lt in zip(basis, lts) if lt is not None], ring, clock)


def _interreduce(basis, ring: PolyRing, clock) -> list:
    items = sorted(basis, key=lambda g: ring.key(ring.leading(g)))
    # minimal basis: leading terms pairwise non-divisible
    minimal = []
    for g in items:
        lt = ring.leading(g)
        if any(_divides(ring.leading(h), lt) for h in minimal):
            continue
        minimal.append(g)
    out = []
    for k, g in enumerate(minimal):
        others = minimal[:k] + minimal[k + 1:]
        lt = ring.leading(g)
        tail = {m: c for m, c in g.items() if m != lt}
        tail = reduce(tail, others, ring, None, clock)
        red = dict(tail)
        red[lt] = g[lt]
        out.append(_monic(red, lt))
    out.sort(key=lambda g: ring.key(ring.leading(g)))
    return out


def is_unit_basis(basis, ring: PolyRing) -> bool:
    return len(basis) == 1 and set(basis[0]) == {ring.one}


def max_independent_set(basis, ring: PolyRing) -> int:
    """Largest set of variables containing no leading-term support."""
    n = ring.nvars
    masks = []
    for g in basis:
        lt = ring.leading(g)
        masks.append(sum(1 << k for k, e in enumerate(lt) if e))
    if any(m == 0 for m in masks):
        return -1
    # a set is admissible iff it contains no full mask
    masks = sorted(set(masks), key=lambda m: bin(m).count("1"))
    best = 0

    def admissible(s):
        return all(m & s != m for m in masks)

    def dfs(k, chosen, size):
        nonlocal best
        if size + (n - k) <= best:
            return
        if k == n:
            best = max(best, size)
            return
        with_k = chosen | (1 << k)
        if admissible(with_k):
            dfs(k + 1, with_k, size + 1)
        dfs(k + 1, chosen, size)

    dfs(0, 0, 0)
    return best
