"""Exact counting of clique covers, independent sets and matchings, and the
signed polynomials built from those counts.

All counts are unsigned Python integers; alternating signs are applied only
when a spectrum is materialized into an IntPolynomial.  The counting
routines are exponential-time exact algorithms with explicit caps:

* clique covers: subset DP that picks the lowest-indexed vertex of the
  current subset and sums over the cliques containing it (cap 20);
* independent sets: branch on a maximum-degree vertex v via
  counts(G) = counts(G-v) + x * counts(G-N[v]), memoized on subset masks
  (cap 40);
* matchings: branch on a maximum-degree vertex u, either leaving u exposed
  or matching it to a neighbour (cap 40);
* chromatic polynomial: plain deletion--contraction (cap 12), used as an
  independent oracle for the falling-factorial cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .errors import CapExceededError
from .graphs import Graph
from .polynomials import IntPolynomial

COVER_CAP = 20
INDEPENDENCE_CAP = 40
MATCHING_CAP = 40
CHROMATIC_CAP = 12


@dataclass(frozen=True)
class CoverSpectrum:
    """counts[k] = number of partitions of the vertex set into exactly k
    nonempty cliques, for k = 0..n (counts[0] is always 0 for n >= 1)."""

    n: int
    counts: tuple[int, ...]

    def a(self, k: int) -> int:
        return self.counts[k]


@dataclass(frozen=True)
class IndependenceSpectrum:
    """counts[k] = number of independent sets of size k; the last entry is
    the count at the independence number (so it is positive)."""

    counts: tuple[int, ...]

    def i(self, k: int) -> int:
        return self.counts[k] if k < len(self.counts) else 0


@dataclass(frozen=True)
class MatchingSpectrum:
    """counts[k] = number of k-edge matchings; n is the vertex count of the
    source graph (needed for the x^(n-k) exponents of the polynomial)."""

    n: int
    counts: tuple[int, ...]

    def m(self, k: int) -> int:
        return self.counts[k] if k < len(self.counts) else 0


def _trim(counts: list[int]) -> tuple[int, ...]:
    while len(counts) > 1 and counts[-1] == 0:
        counts.pop()
    return tuple(counts)


# ---------------------------------------------------------------------------
# clique covers


def _clique_masks_with_lowest(S: int, masks) -> list[int]:
    """All cliques of the induced subgraph on mask S that contain S's
    lowest-indexed vertex, as bitmasks."""
    low = S & -S
    out = []

    def grow(cur: int, cand: int):
        out.append(cur)
        m = cand
        while m:
            u = m & -m
            m ^= u
            grow(cur | u, m & masks[u.bit_length() - 1])

    grow(low, S & masks[low.bit_length() - 1])
    return out


def clique_cover_spectrum(g: Graph, cap: int = COVER_CAP) -> CoverSpectrum:
    """Count partitions of V(g) into k cliques for every k."""
    if g.n > cap:
        raise CapExceededError(f"clique cover counting capped at n={cap}")
    masks = g.masks
    memo: dict[int, tuple[int, ...]] = {0: (1,)}

    def rec(S: int) -> tuple[int, ...]:
        r = memo.get(S)
        if r is not None:
            return r
        acc = [0] * (S.bit_count() + 1)
        for C in _clique_masks_with_lowest(S, masks):
            for k, c in enumerate(rec(S ^ C)):
                if c:
                    acc[k + 1] += c
        r = tuple(acc)
        memo[S] = r
        return r

    counts = list(rec((1 << g.n) - 1))
    counts += [0] * (g.n + 1 - len(counts))
    return CoverSpectrum(g.n, tuple(counts))


# ---------------------------------------------------------------------------
# independent sets


def _independence_counts(masks, S: int, memo) -> tuple[int, ...]:
    if S == 0:
        return (1,)
    r = memo.get(S)
    if r is not None:
        return r
    best_bit, best_deg = 0, -1
    m = S
    while m:
        u = m & -m
        m ^= u
        d = (masks[u.bit_length() - 1] & S).bit_count()
        if d > best_deg:
            best_deg, best_bit = d, u
    if best_deg == 0:
        k = S.bit_count()
        r = tuple(comb(k, j) for j in range(k + 1))
        memo[S] = r
        return r
    v = best_bit.bit_length() - 1
    without = _independence_counts(masks, S ^ best_bit, memo)
    closed = _independence_counts(masks, S & ~(masks[v] | best_bit), memo)
    out = [0] * max(len(without), len(closed) + 1)
    for k, c in enumerate(without):
        out[k] += c
    for k, c in enumerate(closed):
        out[k + 1] += c
    r = _trim(out)
    memo[S] = r
    return r


def independence_spectrum(g: Graph, cap: int = INDEPENDENCE_CAP) -> IndependenceSpectrum:
    """Count independent sets of every size, including the empty set."""
    if g.n > cap:
        raise CapExceededError(f"independent-set counting capped at n={cap}")
    return IndependenceSpectrum(_independence_counts(g.masks, (1 << g.n) - 1, {}))


# ---------------------------------------------------------------------------
# matchings


def _matching_counts(masks, S: int, memo) -> tuple[int, ...]:
    best_bit, best_deg = 0, 0
    m = S
    while m:
        u = m & -m
        m ^= u
        d = (masks[u.bit_length() - 1] & S).bit_count()
        if d > best_deg:
            best_deg, best_bit = d, u
    if best_deg == 0:
        return (1,)
    r = memo.get(S)
    if r is not None:
        return r
    u = best_bit.bit_length() - 1
    out = list(_matching_counts(masks, S ^ best_bit, memo))
    nb = masks[u] & S
    while nb:
        vb = nb & -nb
        nb ^= vb
        sub = _matching_counts(masks, S ^ best_bit ^ vb, memo)
        if len(out) < len(sub) + 1:
            out += [0] * (len(sub) + 1 - len(out))
        for k, c in enumerate(sub):
            out[k + 1] += c
    r = _trim(out)
    memo[S] = r
    return r


def matching_spectrum(g: Graph, cap: int = MATCHING_CAP) -> MatchingSpectrum:
    """Count k-edge matchings for every k (the empty matching included)."""
    if g.n > cap:
        raise CapExceededError(f"matching counting capped at n={cap}")
    return MatchingSpectrum(g.n, _matching_counts(g.masks, (1 << g.n) - 1, {}))


# ---------------------------------------------------------------------------
# signed polynomials


def adjoint_from_spectrum(s: CoverSpectrum) -> IntPolynomial:
    """sum_k (-1)^(n-k) a_k x^k for k = 1..n."""
    coeffs = [0] * (s.n + 1)
    for k in range(1, s.n + 1):
        coeffs[k] = s.counts[k] if (s.n - k) % 2 == 0 else -s.counts[k]
    return IntPolynomial(tuple(coeffs))


def hstar_from_spectrum(s: CoverSpectrum) -> IntPolynomial:
    """The reversal x^n h(1/x) = sum_k (-1)^k a_(n-k) x^k; constant term 1."""
    coeffs = [0] * s.n
    for k in range(s.n):
        coeffs[k] = s.counts[s.n - k] if k % 2 == 0 else -s.counts[s.n - k]
    return IntPolynomial(tuple(coeffs))


def independence_poly_from_spectrum(s: IndependenceSpectrum) -> IntPolynomial:
    """sum_k (-1)^k i_k x^k; constant term 1."""
    return IntPolynomial(
        tuple(c if k % 2 == 0 else -c for k, c in enumerate(s.counts))
    )


def matching_poly_from_spectrum(s: MatchingSpectrum) -> IntPolynomial:
    """sum_k (-1)^k m_k x^(n-k).

    Note the exponent is n-k (the reversal of the independence polynomial of
    the line graph), not the classical n-2k.
    """
    coeffs = [0] * (s.n + 1)
    for k, c in enumerate(s.counts):
        coeffs[s.n - k] = c if k % 2 == 0 else -c
    return IntPolynomial(tuple(coeffs))


def adjoint_polynomial(g: Graph, cap: int = COVER_CAP) -> IntPolynomial:
    return adjoint_from_spectrum(clique_cover_spectrum(g, cap))


def hstar_polynomial(g: Graph, cap: int = COVER_CAP) -> IntPolynomial:
    return hstar_from_spectrum(clique_cover_spectrum(g, cap))


def independence_polynomial(g: Graph, cap: int = INDEPENDENCE_CAP) -> IntPolynomial:
    return independence_poly_from_spectrum(independence_spectrum(g, cap))


def matching_polynomial_modified(g: Graph, cap: int = MATCHING_CAP) -> IntPolynomial:
    return matching_poly_from_spectrum(matching_spectrum(g, cap))


# ---------------------------------------------------------------------------
# chromatic polynomial (deletion--contraction) and the cross-check


def _contract(n: int, edges: frozenset, u: int, v: int):
    """Contract v into u and relabel vertices above v down by one."""

    def relabel(w: int) -> int:
        if w == v:
            w = u
        return w - 1 if w > v else w

    out = set()
    for a, b in edges:
        ra, rb = relabel(a), relabel(b)
        if ra != rb:
            out.add((ra, rb) if ra < rb else (rb, ra))
    return n - 1, frozenset(out)


def chromatic_polynomial(g: Graph, cap: int = CHROMATIC_CAP) -> IntPolynomial:
    """Chromatic polynomial via deletion--contraction, exact integers."""
    if g.n > cap:
        raise CapExceededError(f"chromatic polynomial capped at n={cap}")
    memo: dict = {}

    def rec(n: int, edges: frozenset) -> IntPolynomial:
        if not edges:
            return IntPolynomial.x().shift_up(n - 1) if n else IntPolynomial.one()
        key = (n, edges)
        r = memo.get(key)
        if r is not None:
            return r
        e = min(edges)
        deleted = rec(n, edges - {e})
        contracted = rec(*_contract(n, edges - {e}, *e))
        r = deleted - contracted
        memo[key] = r
        return r

    return rec(g.n, frozenset(g.edges))


def chromatic_cross_check(g: Graph, cap: int = CHROMATIC_CAP) -> bool:
    """Check sum_k a_k(g) x(x-1)...(x-k+1) == chromatic polynomial of the
    complement of g, both sides computed by independent routes."""
    if g.n > cap:
        raise CapExceededError(f"chromatic cross-check capped at n={cap}")
    spec = clique_cover_spectrum(g)
    lhs = IntPolynomial.zero()
    for k in range(1, g.n + 1):
        if spec.counts[k]:
            lhs = lhs + IntPolynomial.falling_factorial(k).scale(spec.counts[k])
    return lhs == chromatic_polynomial(g.complement(), cap)
