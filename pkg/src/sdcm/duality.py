"""Dualizing-class involution at the series level.

With a dualizing class and the ring Bass series present, every class pairs
with the class whose Poincare series is the ring Bass series divided by its
own, up to shift.  The pairing reverses the order, swaps the top class with
the dualizing one, and preserves every distance.  Its fixed points certify
Gorenstein rings, so a non-Gorenstein model whose pairing would be forced to
fix a class is not realizable.
"""

from dataclasses import dataclass

from .errors import NoDualizing, NotClosedUnderDuality
from .metric import distance_table, sigma
from .model import is_gorenstein
from .report import CheckReport
from .series import possibly_equal


@dataclass
class DaggerMap:
    """Involutive bijection on class ids."""

    pairing: dict

    def image(self, cid):
        return self.pairing[cid]

    def is_fixed(self, cid):
        return self.pairing[cid] == cid

    def fixed_points(self):
        return sorted(k for k, v in self.pairing.items() if k == v)


def _order_reversing(model, pairing):
    ids = model.class_ids()
    for a in ids:
        for b in ids:
            if ((a, b) in model.order) != ((pairing[b], pairing[a]) in model.order):
                return False
    return True


def build_dagger(model, n_terms=None):
    """Match each class with its dual partner.

    Matching is by series division up to shift.  When several classes share
    the required series the pairing is completed by search under the
    involution, top-to-dualizing, and order-reversal constraints, preferring
    a fixed-point-free pairing on non-Gorenstein models (a fixed point there
    would certify the model unrealizable).  Raises NotClosedUnderDuality
    naming an orphan class when no partner exists at all, and without an
    orphan when no consistent pairing exists.
    """
    if model.dualizing is None:
        raise NoDualizing(f"model {model.name} has no dualizing class")
    if model.ring_bass is None:
        raise NoDualizing(f"model {model.name} has no ring Bass series")
    ids = model.class_ids()
    candidates = {}
    for k in ids:
        wanted = model.ring_bass / model.poincare(k)
        cands = [h for h in ids if model.poincare(h).eq_up_to_shift(wanted)]
        if not cands:
            raise NotClosedUnderDuality(
                f"no class carries the dual series of {k}", orphan=k)
        candidates[k] = cands
    if model.dualizing not in candidates[model.top]:
        raise NotClosedUnderDuality(
            f"the dualizing class {model.dualizing} does not carry the dual "
            f"series of the top class {model.top}")
    prefer_moving = not is_gorenstein(model)

    def ordered_candidates(k):
        cands = sorted(candidates[k])
        if prefer_moving:
            cands.sort(key=lambda h: (h == k, h))
        return cands

    pairing = {model.top: model.dualizing, model.dualizing: model.top}

    def extend():
        free = [k for k in ids if k not in pairing]
        if not free:
            return _order_reversing(model, pairing)
        k = free[0]
        for h in ordered_candidates(k):
            if h != k and h in pairing:
                continue
            if k not in candidates[h]:
                continue
            pairing[k] = h
            pairing[h] = k
            if extend():
                return True
            del pairing[k]
            if h != k:
                del pairing[h]
        return False

    if not extend():
        raise NotClosedUnderDuality(
            f"no involutive order-reversing pairing exists on {model.name}")
    return DaggerMap(dict(sorted(pairing.items())))


def check_isometry(model, dagger, table=None):
    """Distances, and edge weights of comparable pairs, are invariant under
    the pairing."""
    table = table or distance_table(model)
    ids = model.class_ids()
    witnesses = []
    for a in ids:
        for b in ids:
            d = table[(a, b)]
            dd = table[(dagger.image(a), dagger.image(b))]
            if not possibly_equal(d, dd):
                witnesses.append(
                    f"dist({a}, {b}) = {d} but dist({dagger.image(a)}, "
                    f"{dagger.image(b)}) = {dd}")
    for (small, large) in sorted(model.order):
        da, db = dagger.image(large), dagger.image(small)
        if (da, db) not in model.order:
            witnesses.append(f"pairing does not reverse ({small}, {large})")
            continue
        if not possibly_equal(sigma(model, small, large), sigma(model, da, db)):
            witnesses.append(
                f"edge weight of ({small}, {large}) differs from its dual "
                f"({da}, {db})")
    return CheckReport("dagger-isometry", not witnesses, witnesses)


def check_fixed_points(model, dagger):
    """A fixed point, or odd cardinality, certifies a Gorenstein ring; on a
    non-Gorenstein model either one flags the model unrealizable."""
    gor = is_gorenstein(model)
    fixed = dagger.fixed_points()
    odd = len(model.classes) % 2 == 1
    witnesses = []
    if fixed and not gor:
        witnesses.append(
            f"pairing fixes {', '.join(fixed)} but the model is not "
            f"Gorenstein; no ring realizes it")
    if odd and not gor:
        witnesses.append(
            f"{len(model.classes)} classes (odd) on a non-Gorenstein model; "
            f"no ring realizes it")
    return CheckReport("dagger-fixed-points", not witnesses, witnesses)
