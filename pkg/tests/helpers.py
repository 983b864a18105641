"""Random model generators shared by the property and acceptance tests.

Models are built from factor multisets: each class is labeled by a multiset
of growth factors c, its Poincare series being the product of 1/(1 - c*t)
over the multiset.  Ordering a class below another requires its multiset to
contain the other's, which makes every hom quotient a genuine product of
nonnegative series, so generated models are valid by construction.
"""

import random
from itertools import combinations

from sdcm import LaurentSeries, SdcClass, SdcModel


def series_from_multiset(ms):
    out = LaurentSeries.from_int(1)
    for c in ms:
        out = out * LaurentSeries.geometric(c)
    return out


def multiset_id(ms):
    return "R" if not ms else "K" + "_".join(str(c) for c in ms)


def contains(big, small):
    """Multiset containment."""
    big = list(big)
    for x in small:
        if x in big:
            big.remove(x)
        else:
            return False
    return True


def multiset_diff(big, small):
    out = list(big)
    for x in small:
        out.remove(x)
    return tuple(sorted(out))


def _random_multiset(rng, max_factor, max_size):
    return tuple(sorted(rng.choice(range(1, max_factor + 1))
                        for _ in range(rng.randint(1, max_size))))


def random_valid_model(rng, max_classes=8, max_factor=5, name="random"):
    """A valid model with the empty multiset on top; the asserted order is a
    random transitive suborder of multiset containment that keeps the top
    above everything."""
    n_extra = rng.randint(1, max_classes - 1)
    multisets = {()}
    while len(multisets) < n_extra + 1:
        multisets.add(_random_multiset(rng, max_factor, 3))
    multisets = sorted(multisets)
    ids = {ms: multiset_id(ms) for ms in multisets}
    classes = [SdcClass(ids[ms], series_from_multiset(ms)) for ms in multisets]
    order = [(ids[ms], "R") for ms in multisets]
    for a in multisets:
        for b in multisets:
            if a != b and b != () and contains(a, b) and rng.random() < 0.5:
                order.append((ids[a], ids[b]))
    ring_bass = None
    if rng.random() < 0.5:
        union = ()
        for ms in multisets:
            union = _multiset_union(union, ms)
        ring_bass = series_from_multiset(union)
    return SdcModel(name, classes, order, top="R", ring_bass=ring_bass)


def _multiset_union(a, b):
    """Smallest multiset containing both."""
    out = list(a)
    pool = list(a)
    for x in b:
        if x in pool:
            pool.remove(x)
        else:
            out.append(x)
    return tuple(sorted(out))


def random_duality_closed_model(rng, max_factor=5, max_pairs=3, name="dual_random"):
    """A model closed under complementation inside a total multiset U: the
    empty multiset is the top, U is the dualizing class, and pairing by
    complement is order-reversing for free.  Self-complementary members are
    skipped so non-Gorenstein instances stay realizable."""
    u = _random_multiset(rng, max_factor, 4)
    members = {(), tuple(sorted(u))}
    for _ in range(rng.randint(0, max_pairs)):
        sub = tuple(sorted(x for x in _random_subset(rng, u)))
        comp = multiset_diff(u, sub)
        if sub == comp:
            continue
        members.add(sub)
        members.add(comp)
    members = sorted(members)
    ids = {ms: multiset_id(ms) for ms in members}
    classes = [SdcClass(ids[ms], series_from_multiset(ms)) for ms in members]
    order = [(ids[a], ids[b]) for a in members for b in members
             if a != b and contains(a, b)]
    return SdcModel(name, classes, order, top=ids[()],
                    dualizing=ids[tuple(sorted(u))],
                    ring_bass=series_from_multiset(u))


def _random_subset(rng, ms):
    return [x for x in ms if rng.random() < 0.5]


def enumerate_trichotomy_grid():
    """All quotient-closed families over the factor pool {2, 3} with at most
    four classes, each with every suborder of containment that keeps the top
    above everything; yields SdcModel instances."""
    pool = [(), (2,), (3,), (2, 2), (2, 3), (3, 3)]
    for k in range(0, 4):
        for extra in combinations([ms for ms in pool if ms != ()], k):
            family = [()] + list(extra)
            pairs = [(a, b) for a in family for b in family
                     if a != b and contains(a, b)]
            optional = [(a, b) for (a, b) in pairs if b != ()]
            for mask in range(1 << len(optional)):
                chosen = [p for i, p in enumerate(optional) if mask >> i & 1]
                order = [(a, ()) for a in family] + chosen
                if not _quotient_closed(family, order):
                    continue
                ids = {ms: multiset_id(ms) for ms in family}
                classes = [SdcClass(ids[ms], series_from_multiset(ms))
                           for ms in family]
                named = [(ids[a], ids[b]) for (a, b) in order]
                yield SdcModel(f"grid_{k}_{mask}", classes, named, top="R")


def _quotient_closed(family, order):
    fams = set(family)
    for (a, b) in order:
        if a != b and multiset_diff(a, b) not in fams:
            return False
    return True
