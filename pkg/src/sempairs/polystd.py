"""Standard pairs of monomial ideals in the free commutative monoid N^k.

This is the polynomial-ring subroutine behind pair differences.  A pair
(root, sigma) stands for the set root + N^sigma; it is proper when that set
misses the ideal, and standard when it is maximal proper.  The recursion
splits on one variable at a time: either the variable joins sigma (its
coordinate is projected out of every generator) or its root value is fixed
below the largest exponent the generators show in it.
"""

from __future__ import annotations

from dataclasses import dataclass

Vector = tuple[int, ...]


@dataclass(frozen=True)
class PolyPair:
    """root + N^sigma, with the root zeroed on sigma."""

    root: Vector
    sigma: tuple[int, ...]


def _minimalize(gens: frozenset) -> frozenset:
    out = set()
    for g in gens:
        if not any(
            h != g and all(a <= b for a, b in zip(h, g)) for h in gens
        ):
            out.add(g)
    return frozenset(out)


def _contained(p: PolyPair, q: PolyPair) -> bool:
    # root_p + N^sigma_p inside root_q + N^sigma_q: coordinates off q's
    # sigma are pinned, so they must agree exactly
    if not set(p.sigma) <= set(q.sigma):
        return False
    return all(
        a == b
        for i, (a, b) in enumerate(zip(p.root, q.root))
        if i not in q.sigma
    )


def poly_standard_pairs(generators, nvars: int) -> tuple[PolyPair, ...]:
    """The standard pairs of the ideal generated by ``generators`` in N^nvars.

    The zero ideal yields the single pair (0, all variables); the unit
    ideal yields no pairs.
    """
    gens = frozenset(tuple(int(x) for x in g) for g in generators)
    for g in gens:
        if len(g) != nvars:
            raise ValueError("generator %s does not have %d coordinates" % (g, nvars))
        if any(x < 0 for x in g):
            raise ValueError("generator %s has a negative exponent" % (g,))
    memo: dict = {}

    def rec(gens: frozenset, alive: frozenset) -> frozenset:
        key = (gens, alive)
        if key in memo:
            return memo[key]
        if not gens:
            result = frozenset({((0,) * nvars, alive)})
        elif any(not any(g) for g in gens):
            result = frozenset()
        else:
            j = min(i for i in alive if any(g[i] > 0 for g in gens))
            top = max(g[j] for g in gens)
            out = set()
            zeroed = _minimalize(
                frozenset(g[:j] + (0,) + g[j + 1 :] for g in gens)
            )
            for root, sigma in rec(zeroed, alive - {j}):
                out.add((root, sigma | {j}))
            for t in range(top):
                kept = _minimalize(
                    frozenset(
                        g[:j] + (0,) + g[j + 1 :] for g in gens if g[j] <= t
                    )
                )
                for root, sigma in rec(kept, alive - {j}):
                    out.add((root[:j] + (t,) + root[j + 1 :], sigma))
            result = frozenset(out)
        memo[key] = result
        return result

    candidates = [
        PolyPair(root, tuple(sorted(sigma)))
        for root, sigma in rec(_minimalize(gens), frozenset(range(nvars)))
    ]
    pairs = [
        p
        for p in candidates
        if not any(q != p and _contained(p, q) for q in candidates)
    ]
    pairs.sort(key=lambda p: (sum(p.root), p.root, len(p.sigma), p.sigma))
    return tuple(pairs)
