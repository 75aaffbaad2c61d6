#!/usr/bin/env python3
"""Independent exhaustive oracle for canonical minimum hitting sets.

Enumerates every subset of the union of the family, ordered by (cardinality,
sorted-element sequence), and reports:
  n0 = least size at which some x misses at most K members,
  k0 = least admissible miss count at size n0,
  F  = all witnesses of size n0 with miss count <= k0,
  f  = union of F.
This is a from-first-principles reference used to pin frozen expected values
before and independently of the C++ implementation.  It is also imported by
the python smoke tests as a cross-language oracle.
"""

from itertools import combinations


def canonical_subsets(universe):
    """All subsets of `universe` (an iterable of ints) in canonical order:
    by cardinality, then lexicographically on the sorted element tuple."""
    elems = sorted(universe)
    for size in range(len(elems) + 1):
        for combo in combinations(elems, size):
            yield frozenset(combo)


def miss_count(family, x):
    return sum(1 for a in family if not (a & x))


def canonical_min_hitting(family, k_cap):
    """Exhaustive reference for the canonical minimum-hitting computation."""
    family = [frozenset(a) for a in family]
    universe = sorted(set().union(*family)) if family else []
    for size in range(len(universe) + 1):
        best_k = None
        for combo in combinations(universe, size):
            k = miss_count(family, frozenset(combo))
            if k <= k_cap and (best_k is None or k < best_k):
                best_k = k
        if best_k is not None:
            witnesses = [
                frozenset(c)
                for c in combinations(universe, size)
                if miss_count(family, frozenset(c)) <= best_k
            ]
            f = sorted(set().union(*witnesses)) if witnesses else []
            return {
                "n0": size,
                "k0": best_k,
                "F": sorted(tuple(sorted(w)) for w in witnesses),
                "f": tuple(f),
            }
    return None


def fmt(result):
    if result is None:
        return "no admissible hitting set"
    F = ", ".join("{" + ",".join(map(str, w)) + "}" for w in result["F"])
    return (
        f"n0={result['n0']} k0={result['k0']} "
        f"F=[{F}] f={{{','.join(map(str, result['f']))}}}"
    )


def main(argv):
    # With arguments, evaluate one instance: m members_json [k_cap].
    if len(argv) > 1:
        import json

        m = int(argv[1])
        members = [set(a) for a in json.loads(argv[2])]
        k_cap = int(argv[3]) if len(argv) > 3 else 0
        for a in members:
            if not a or not all(0 <= e < m for e in a):
                raise SystemExit("members must be non-empty subsets of "
                                 f"range({m})")
        print(fmt(canonical_min_hitting(members, k_cap)))
        return

    fixtures = [
        ("three chained pairs", [{0, 1}, {1, 2}, {2, 3}], 0),
        ("single singleton", [{5}], 0),
        ("two disjoint pairs", [{0, 1}, {2, 3}], 0),
        ("chained pairs, one miss allowed", [{0, 1}, {1, 2}, {2, 3}], 1),
    ]
    for name, family, k_cap in fixtures:
        print(f"{name}: {fmt(canonical_min_hitting(family, k_cap))}")

    # Transversal-family cross-check: all z with |z| <= 2 inside {0,1,2,3}
    # meeting every member of each family.
    def card_at_most(m, s):
        return [frozenset(c) for size in range(s + 1)
                for c in combinations(range(m), size)]

    for fam_name, fam in [
        ("A0 = {{0,1},{2,3}}", [{0, 1}, {2, 3}]),
        ("A1 = {{0,2},{1,3}}", [{0, 2}, {1, 3}]),
        ("B0 = {{0},{1}}", [{0}, {1}]),
        ("B1 = {{2},{3}}", [{2}, {3}]),
    ]:
        c = [z for z in card_at_most(4, 2) if all(z & a for a in fam)]
        c.sort(key=lambda z: (len(z), tuple(sorted(z))))
        print(f"C[{fam_name}] = " +
              ", ".join("{" + ",".join(map(str, sorted(z))) + "}" for z in c))


if __name__ == "__main__":
    import sys

    main(sys.argv)
