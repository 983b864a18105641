"""The data model for a finite set of semidualizing-complex classes.

A model records, for a local ring, the classes the user asserts to exist,
each labeled by its Poincare series (and optionally its Bass series), plus
the reflexivity partial order with the ring class on top.  The validator
checks every necessary condition the series identities impose; it cannot
certify that an asserted order pair is a genuine reflexivity relation, so a
valid model is consistent rather than proven realizable.

Series equalities are required only up to a power of t throughout: growth
rates and distances are shift-invariant and classes are taken up to shift.
"""

import json
from dataclasses import dataclass

from . import config
from .errors import ModelFormatError, NonNegativityViolation, NotComparable
from .parse import parse_series, render
from .report import ValidationReport
from .series import Curvature, certainly_gt, curvature


@dataclass(frozen=True)
class SdcClass:
    """One class: an identifier, its Poincare series, optional Bass series."""

    id: str
    poincare: object
    bass: object = None


def close_order(pairs, ids):
    """Reflexive-transitive closure of a relation over the given ids."""
    closed = {(a, a) for a in ids}
    closed.update(pairs)
    changed = True
    while changed:
        changed = False
        for (a, b) in list(closed):
            for (c, d) in list(closed):
                if b == c and (a, d) not in closed:
                    closed.add((a, d))
                    changed = True
    return frozenset(closed)


class SdcModel:
    """Immutable model: classes, order closure, top class, optional
    dualizing class and ring Bass series."""

    def __init__(self, name, classes, order, top, dualizing=None, ring_bass=None):
        if not isinstance(classes, dict):
            classes = list(classes)
            seen = set()
            for c in classes:
                if c.id in seen:
                    raise ModelFormatError(f"duplicate class id {c.id!r}")
                seen.add(c.id)
            classes = {c.id: c for c in classes}
        else:
            classes = dict(classes)
        ids = set(classes)
        if top not in ids:
            raise ModelFormatError(f"top class {top!r} is not among the classes")
        if dualizing is not None and dualizing not in ids:
            raise ModelFormatError(f"dualizing class {dualizing!r} is not among the classes")
        for (a, b) in order:
            if a not in ids or b not in ids:
                raise ModelFormatError(f"order pair ({a!r}, {b!r}) names an unknown class")
        self.name = name
        self.classes = classes
        self.order = close_order(order, ids)
        self.top = top
        self.dualizing = dualizing
        self.ring_bass = ring_bass

    def class_ids(self):
        return sorted(self.classes)

    def poincare(self, cid):
        return self.classes[cid].poincare

    def leq(self, small, large):
        """True when [small] is below [large] in the reflexivity order."""
        return (small, large) in self.order

    def comparable(self, a, b):
        return self.leq(a, b) or self.leq(b, a)

    def implied_bass(self, cid):
        """Bass series of a class, explicit or derived as ring_bass/poincare."""
        cls = self.classes[cid]
        if cls.bass is not None:
            return cls.bass
        if self.ring_bass is None:
            return None
        return self.ring_bass / cls.poincare


def hom_series(model, large, small, n_terms=None):
    """Poincare series of the internal hom from the larger class into the
    smaller: the exact quotient P_small / P_large, checked nonnegative."""
    if not model.leq(small, large):
        raise NotComparable(f"{small!r} is not below {large!r} in {model.name}")
    q = model.poincare(small) / model.poincare(large)
    if not q.check_nonneg(n_terms):
        raise NonNegativityViolation(
            f"hom series {render(q)} for ({small!r}, {large!r}) has a negative "
            f"or fractional coefficient")
    return q


def validate(model, n_terms=None):
    """Check every model invariant; failures carry a witness, never raise."""
    rep = ValidationReport(model.name)
    ids = model.class_ids()

    refl = [a for a in ids if (a, a) not in model.order]
    rep.add("order-reflexive", not refl, [f"missing ({a}, {a})" for a in refl])

    anti = sorted((a, b) for (a, b) in model.order
                  if a < b and (b, a) in model.order)
    rep.add("order-antisymmetric", not anti,
            [f"both ({a}, {b}) and ({b}, {a}) asserted" for a, b in anti])

    trans = sorted((a, b, d) for (a, b) in model.order for (c, d) in model.order
                   if b == c and (a, d) not in model.order)
    rep.add("order-transitive", not trans,
            [f"({a}, {b}) and ({b}, {d}) without ({a}, {d})" for a, b, d in trans])

    not_below_top = [a for a in ids if (a, model.top) not in model.order]
    rep.add("top-maximal", not_below_top == [],
            [f"({a}, {model.top}) missing" for a in not_below_top])

    top_p = model.poincare(model.top)
    rep.add("top-poincare-one", top_p.eq_up_to_shift(parse_series("1")),
            [] if top_p.eq_up_to_shift(parse_series("1"))
            else [f"poincare of top is {render(top_p)}"])

    if model.dualizing is not None:
        above = [a for a in ids if (model.dualizing, a) not in model.order]
        rep.add("dualizing-minimal", not above,
                [f"({model.dualizing}, {a}) missing" for a in above])

    bad_p = []
    for a in ids:
        if not model.poincare(a).check_nonneg(n_terms):
            bad_p.append(f"poincare of {a} fails the nonnegative-integer scan")
    rep.add("poincare-nonneg", not bad_p, bad_p)
    if bad_p:
        return rep  # curvature is undefined below this point

    bad_hom = []
    for (small, large) in sorted(model.order):
        q = model.poincare(small) / model.poincare(large)
        if not q.check_nonneg(n_terms):
            cs = q.expansion(config.effective_n_check(n_terms))
            idx = next(i for i, c in enumerate(cs) if c < 0 or c.denominator != 1)
            bad_hom.append(f"hom series for ({small}, {large}) is {render(q)}; "
                           f"coefficient {cs[idx]} at t^{idx}")
    rep.add("hom-series-nonneg", not bad_hom, bad_hom)

    explicit_bass = [a for a in ids if model.classes[a].bass is not None]
    if explicit_bass:
        if model.ring_bass is None:
            rep.add("bass-product", False,
                    [f"class {a} carries a Bass series but the model has no "
                     f"ring Bass series to check it against" for a in explicit_bass])
        else:
            bad = []
            for a in explicit_bass:
                prod = model.poincare(a) * model.classes[a].bass
                if not prod.eq_up_to_shift(model.ring_bass):
                    bad.append(f"poincare * bass of {a} is {render(prod)}, "
                               f"ring Bass series is {render(model.ring_bass)}")
            rep.add("bass-product", not bad, bad)

    if model.ring_bass is not None:
        rb_ok = model.ring_bass.check_nonneg(n_terms)
        rep.add("ring-bass-nonneg", rb_ok,
                [] if rb_ok else [f"ring Bass series {render(model.ring_bass)} "
                                  f"fails the nonnegative-integer scan"])
        if rb_ok:
            bad = []
            for a in ids:
                ib = model.ring_bass / model.poincare(a)
                if not ib.check_nonneg(n_terms):
                    bad.append(f"implied Bass series of {a} is {render(ib)}")
            rep.add("implied-bass-nonneg", not bad, bad)

            rb_curv = curvature(model.ring_bass)
            bad = []
            for a in ids:
                ca = curvature(model.poincare(a))
                if certainly_gt(ca, rb_curv):
                    bad.append(f"curvature of {a} is {ca} above ring bound {rb_curv}")
            rep.add("curvature-bounded", not bad, bad)

    bad = []
    for a in ids:
        zero = curvature(model.poincare(a)) == Curvature.exact(0)
        if zero and a != model.top:
            bad.append(f"{a} has curvature 0 but is not the top class")
        if not zero and a == model.top:
            bad.append(f"top class {a} has nonzero curvature")
    rep.add("curvature-zero-only-top", not bad, bad)

    if model.dualizing is not None and model.ring_bass is not None:
        pd = model.poincare(model.dualizing)
        ok = pd.eq_up_to_shift(model.ring_bass)
        rep.add("dualizing-bass-monomial", ok,
                [] if ok else [f"poincare of {model.dualizing} is {render(pd)} but the "
                               f"ring Bass series is {render(model.ring_bass)}; a dualizing "
                               f"class must have a monomial Bass series"])
    return rep


def is_gorenstein(model):
    """A ring with these classes is Gorenstein exactly when the dualizing
    class is the ring class, equivalently the ring Bass series is a
    monomial (injective curvature zero)."""
    if model.dualizing is not None:
        return model.dualizing == model.top
    if model.ring_bass is not None:
        return curvature(model.ring_bass) == Curvature.exact(0)
    return len(model.classes) == 1


# ---------------------------------------------------------------------------
# Model files
# ---------------------------------------------------------------------------


def model_from_dict(doc):
    """Build a model from the documented JSON structure.  Order pairs may
    omit reflexive and transitive consequences; construction closes them."""
    try:
        name = doc["name"]
        classes = [SdcClass(c["id"], parse_series(c["poincare"]),
                            parse_series(c["bass"]) if c.get("bass") is not None else None)
                   for c in doc["classes"]]
        order = [(a, b) for a, b in doc["order"]]
        top = doc["top"]
    except (KeyError, TypeError) as exc:
        raise ModelFormatError(f"malformed model document: {exc}") from exc
    seen = set()
    for c in classes:
        if c.id in seen:
            raise ModelFormatError(f"duplicate class id {c.id!r}")
        seen.add(c.id)
    ring_bass = parse_series(doc["ring_bass"]) if doc.get("ring_bass") is not None else None
    return SdcModel(name, classes, order, top,
                    dualizing=doc.get("dualizing"), ring_bass=ring_bass)


def model_to_dict(model):
    doc = {"name": model.name}
    if model.ring_bass is not None:
        doc["ring_bass"] = render(model.ring_bass)
    doc["classes"] = [
        {"id": cid, "poincare": render(model.classes[cid].poincare),
         **({"bass": render(model.classes[cid].bass)}
            if model.classes[cid].bass is not None else {})}
        for cid in model.class_ids()
    ]
    doc["order"] = [[a, b] for (a, b) in sorted(model.order) if a != b]
    doc["top"] = model.top
    if model.dualizing is not None:
        doc["dualizing"] = model.dualizing
    return doc


def load_model(path):
    with open(path, "r", encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ModelFormatError(f"{path}: {exc}") from exc
    return model_from_dict(doc)


def save_model(model, path):
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(model_to_dict(model), fh, indent=2, sort_keys=False)
        fh.write("\n")
