"""Shared helpers for the test suite."""

from __future__ import annotations

from cycledual import CyclicCode, DefiningSet, all_cosets, field_create


def divisor_defining_sets(field, n):
    """Defining sets of every divisor of x^n - 1 over the field (all unions
    of cyclotomic cosets), in a deterministic order."""
    orbits = [frozenset(orb) for _, orb in sorted(all_cosets(n, field.order).items())]
    out = []
    for bits in range(1 << len(orbits)):
        members: frozenset[int] = frozenset()
        for i, orb in enumerate(orbits):
            if bits >> i & 1:
                members |= orb
        out.append(DefiningSet(n, field.order, members))
    return out


def divisor_codes(field, n):
    return [CyclicCode.from_defining_set(field, n, T) for T in divisor_defining_sets(field, n)]


GF2 = field_create(1)
GF4 = field_create(2)
