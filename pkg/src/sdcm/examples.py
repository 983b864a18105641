"""Constructors for the worked models used as the golden corpus.

The square-zero extension of a field by r copies of itself carries exactly
two classes when r >= 2: the ring class and the dualizing class.  Extending
again by s copies and applying cobase change yields the four-class model
whose distance table exercises every theorem checker.  The localization
cases pair a model with a smaller one under a specialization map.
"""

import os

from .change_of_rings import HomomorphismDescriptor, cobase_change_model
from .model import SdcClass, SdcModel, save_model
from .series import IntPolynomial, LaurentSeries


def dual_class_poincare(r):
    """Poincare series of the dualizing class over the square-zero extension
    of embedding dimension r: (r - t)/(1 - r*t).

    The closed form packages beta_0 = r and syzygy ranks (r^2 - 1)*r^(i-1)
    for i >= 1.  Those integers are derived by the brute-force minimal free
    resolution oracle in tests/test_examples.py (exact linear algebra over a
    small finite field), not asserted from theory; only the growth rate r is
    contract-bearing downstream.
    """
    if r < 2:
        raise ValueError("embedding dimension must be at least 2")
    return LaurentSeries(0, IntPolynomial([r, -1]), IntPolynomial([1, -r]))


def square_zero_model(r):
    """Two classes over the square-zero extension ring of embedding
    dimension r: the ring class R on top and the dualizing class D below,
    at distance r."""
    pd = dual_class_poincare(r)
    classes = [SdcClass("R", LaurentSeries.from_int(1)), SdcClass("D", pd)]
    return SdcModel(f"square_zero_{r}", classes, [("D", "R")], top="R",
                    dualizing="D", ring_bass=pd)


def square_zero_fiber_phi(s, source="square_zero", target_name="S"):
    """The flat local map with closed fiber a square-zero extension of
    embedding dimension s; its Bass series is that fiber's ring Bass series,
    with injective curvature s."""
    return HomomorphismDescriptor(f"extend_by_{s}", dual_class_poincare(s),
                                  source, target_name)


def iterated_model(r, s):
    """Cobase change of the two-class model along the square-zero fiber map:
    four classes S, DtensorS, cbcR, cbcD with edge weights r, s, s, r and
    max(r, s), and the long diagonal at distance r + s."""
    base = square_zero_model(r)
    phi = square_zero_fiber_phi(s, source=base.name)
    built = cobase_change_model(base, phi)
    return SdcModel(f"iterated_{r}_{s}", built.classes, built.order,
                    top=built.top, dualizing=built.dualizing,
                    ring_bass=built.ring_bass)


def paper_instance_models():
    """The concrete worked instances: square-zero models for r in {2, 3, 5}
    and the iterated model at (2, 3).  Their series all have simple dominant
    poles, where the sampled growth-rate estimate converges fast."""
    return [square_zero_model(r) for r in (2, 3, 5)] + [iterated_model(2, 3)]


def golden_corpus():
    """The models every acceptance suite runs over: the worked instances
    plus the full iterated grid."""
    models = paper_instance_models()
    models += [iterated_model(r, s) for r in (2, 3, 4) for s in (2, 3, 4)
               if (r, s) != (2, 3)]
    return models


def write_golden_corpus(directory):
    """Emit every corpus model as a model file; returns the paths."""
    os.makedirs(directory, exist_ok=True)
    paths = []
    for m in golden_corpus():
        path = os.path.join(directory, f"{m.name}.json")
        save_model(m, path)
        paths.append(path)
    return paths


def localization_cases():
    """Two (big model, small model, class map) triples for the
    specialization checker.

    First: a two-class model collapsing onto a Gorenstein localization,
    where the distance drops strictly from r = 2 to 0.  Second: a dimension
    one ring whose dualizing module resolves exactly as over its Artinian
    slice, localized at the relevant prime; the distance 2 is preserved.
    """
    one = LaurentSeries.from_int(1)
    pd = dual_class_poincare(2)

    big1 = SdcModel("germ_xy", [SdcClass("R", one), SdcClass("D", pd)],
                    [("D", "R")], top="R", dualizing="D", ring_bass=pd)
    small1 = SdcModel("germ_xy_at_x", [SdcClass("Rp", one)], [], top="Rp",
                      dualizing="Rp", ring_bass=one)
    map1 = {"R": "Rp", "D": "Rp"}

    shifted_bass = LaurentSeries.monomial(1) * pd
    big2 = SdcModel("cylinder_xyz", [SdcClass("S", one), SdcClass("E", pd)],
                    [("E", "S")], top="S", dualizing="E", ring_bass=shifted_bass)
    small2 = SdcModel("cylinder_xyz_at_xy",
                      [SdcClass("Sq", one), SdcClass("Eq", pd)],
                      [("Eq", "Sq")], top="Sq", dualizing="Eq", ring_bass=pd)
    map2 = {"S": "Sq", "E": "Eq"}

    return [(big1, small1, map1), (big2, small2, map2)]
