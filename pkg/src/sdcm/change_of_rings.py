"""Base change and cobase change along a finite-flat-dimension local map.

The map is described by its Bass series alone: every quantity the transported
models need (growth rates, edge weights, merges) depends only on that series
up to shift.  Base change copies the model onto the target ring with the same
series and order.  Cobase change adds a second family whose series pick up
the Bass series of the map as a factor; the two families merge exactly when
that series is a monomial (the map is Gorenstein at the closed point).
"""

import json
from dataclasses import dataclass

from .errors import MapNotOrderPreserving, ModelFormatError
from .metric import distance_table
from .model import SdcClass, SdcModel
from .parse import parse_series, render
from .report import CheckReport
from .series import Curvature, curv_max, curvature, possibly_equal


@dataclass(frozen=True)
class HomomorphismDescriptor:
    """A local map of finite flat dimension, given by its Bass series."""

    name: str
    bass_phi: object
    source: str
    target_name: str


def injcurv_phi(phi):
    """Injective curvature of the map; zero exactly when the map is
    Gorenstein at the closed point (monomial Bass series)."""
    return curvature(phi.bass_phi)


def is_gorenstein_map(phi):
    return injcurv_phi(phi) == Curvature.exact(0)


def phi_from_dict(doc):
    try:
        return HomomorphismDescriptor(doc["name"], parse_series(doc["bass_phi"]),
                                      doc["source"], doc["target_name"])
    except (KeyError, TypeError) as exc:
        raise ModelFormatError(f"malformed homomorphism document: {exc}") from exc


def phi_to_dict(phi):
    return {"name": phi.name, "bass_phi": render(phi.bass_phi),
            "source": phi.source, "target_name": phi.target_name}


def load_phi(path):
    with open(path, "r", encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ModelFormatError(f"{path}: {exc}") from exc
    return phi_from_dict(doc)


# ---------------------------------------------------------------------------
# Naming of transported classes
# ---------------------------------------------------------------------------


def tensor_class_id(cid, source_top, target_name):
    """Id of the tensor image of a source class; the image of the top class
    is the target ring class itself."""
    return target_name if cid == source_top else f"{cid}tensor{target_name}"


def cobase_class_id(cid):
    return f"cbc{cid}"


def _cobase_naming(model, phi):
    """Tensor and cobase id maps for the combined model.  A cobase id that
    would collide with a tensor id (possible when the source is itself a
    transported model) gains underscores until unique."""
    t_id = {cid: tensor_class_id(cid, model.top, phi.target_name)
            for cid in model.class_ids()}
    used = set(t_id.values())
    c_id = {}
    for cid in model.class_ids():
        candidate = cobase_class_id(cid)
        while candidate in used:
            candidate += "_"
        used.add(candidate)
        c_id[cid] = candidate
    return t_id, c_id


def cobase_ids(model, phi):
    """Map each source id to its (tensor image, cobase image) ids in the
    cobase-change model; the two coincide when the map is Gorenstein."""
    t_id, c_id = _cobase_naming(model, phi)
    if is_gorenstein_map(phi):
        return {cid: (t_id[cid], t_id[cid]) for cid in model.class_ids()}
    return {cid: (t_id[cid], c_id[cid]) for cid in model.class_ids()}


# ---------------------------------------------------------------------------
# The two transported models
# ---------------------------------------------------------------------------


def base_change(model, phi):
    """Transport the model along the map: same series, same order, renamed
    ids, ring Bass series multiplied by the Bass series of the map.  Every
    pairwise distance is preserved because the comparability graph and its
    weights are carried over unchanged.  The dualizing designation survives
    only for a Gorenstein map."""
    rename = {cid: tensor_class_id(cid, model.top, phi.target_name)
              for cid in model.classes}
    classes = [SdcClass(rename[cid], model.poincare(cid))
               for cid in model.class_ids()]
    order = [(rename[a], rename[b]) for (a, b) in model.order]
    ring_bass = (model.ring_bass * phi.bass_phi
                 if model.ring_bass is not None else None)
    dualizing = (rename[model.dualizing]
                 if model.dualizing is not None and is_gorenstein_map(phi) else None)
    return SdcModel(f"{model.name}_tensor_{phi.target_name}", classes, order,
                    top=rename[model.top], dualizing=dualizing, ring_bass=ring_bass)


def cobase_change_model(model, phi):
    """Combined model over the target: the tensor family with unchanged
    series, the cobase family with series multiplied by the Bass series of
    the map, cross relations from cobase images down below tensor images of
    larger classes, and a merge into one family for a Gorenstein map."""
    if is_gorenstein_map(phi):
        merged = base_change(model, phi)
        return SdcModel(f"{model.name}_cobase_{phi.target_name}", merged.classes,
                        merged.order, top=merged.top,
                        dualizing=(tensor_class_id(model.dualizing, model.top, phi.target_name)
                                   if model.dualizing is not None else None),
                        ring_bass=merged.ring_bass)
    ids = model.class_ids()
    t_id, c_id = _cobase_naming(model, phi)
    classes = [SdcClass(t_id[cid], model.poincare(cid)) for cid in ids]
    classes += [SdcClass(c_id[cid], model.poincare(cid) * phi.bass_phi) for cid in ids]
    order = []
    for (a, b) in model.order:
        order.append((t_id[a], t_id[b]))
        order.append((c_id[a], c_id[b]))
        order.append((c_id[a], t_id[b]))
    ring_bass = (model.ring_bass * phi.bass_phi
                 if model.ring_bass is not None else None)
    dualizing = c_id[model.dualizing] if model.dualizing is not None else None
    return SdcModel(f"{model.name}_cobase_{phi.target_name}", classes, order,
                    top=t_id[model.top], dualizing=dualizing, ring_bass=ring_bass)


# ---------------------------------------------------------------------------
# Checkers
# ---------------------------------------------------------------------------


def check_mixed_distance(model_s, phi, source, pairs=None):
    """Distances between the two families of a cobase-change model.

    For source classes K below L the distance from the cobase image of K to
    the tensor image of L equals max(source distance, injective curvature of
    the map); for arbitrary pairs it is bounded by their sum.  The source
    model is required explicitly: the combined model alone cannot recover
    source distances once series collide across families.
    """
    ic = injcurv_phi(phi)
    names = cobase_ids(source, phi)
    if pairs is None:
        ids = source.class_ids()
        pairs = [(a, b) for a in ids for b in ids]
    table_s = distance_table(model_s)
    table_r = distance_table(source)
    witnesses = []
    for (k, l) in pairs:
        d_mixed = table_s[(names[k][1], names[l][0])]
        d_src = table_r[(k, l)]
        cap = ic + d_src
        if d_mixed.lo > cap.hi:
            witnesses.append(
                f"dist({names[k][1]}, {names[l][0]}) = {d_mixed} exceeds "
                f"injcurv + source distance = {cap}")
        if source.leq(k, l):
            expect = curv_max([d_src, ic])
            if not possibly_equal(d_mixed, expect):
                witnesses.append(
                    f"dist({names[k][1]}, {names[l][0]}) = {d_mixed} but "
                    f"max(source distance, injcurv) = {expect}")
    return CheckReport("mixed-distance", not witnesses, witnesses)


def check_specialization(model_big, model_small, class_map):
    """Distances never grow under an order-preserving specialization map
    (localization).  Witnesses record where the drop is strict and where
    equality holds."""
    for cid in model_big.classes:
        if cid not in class_map:
            raise MapNotOrderPreserving(f"class_map misses {cid!r}")
        if class_map[cid] not in model_small.classes:
            raise MapNotOrderPreserving(
                f"class_map sends {cid!r} to unknown {class_map[cid]!r}")
    for (a, b) in model_big.order:
        if (class_map[a], class_map[b]) not in model_small.order:
            raise MapNotOrderPreserving(
                f"({a}, {b}) maps to ({class_map[a]}, {class_map[b]}), "
                f"not an order pair of {model_small.name}")
    table_big = distance_table(model_big)
    table_small = distance_table(model_small)
    ids = model_big.class_ids()
    violations = []
    findings = []
    for i, a in enumerate(ids):
        for b in ids[i:]:
            d_big = table_big[(a, b)]
            d_small = table_small[(class_map[a], class_map[b])]
            if d_small.lo > d_big.hi:
                violations.append(
                    f"dist({class_map[a]}, {class_map[b]}) = {d_small} exceeds "
                    f"dist({a}, {b}) = {d_big}")
            elif d_small.hi < d_big.lo:
                findings.append(
                    f"strict: dist({a}, {b}) = {d_big} drops to "
                    f"dist({class_map[a]}, {class_map[b]}) = {d_small}")
            else:
                findings.append(
                    f"equal: dist({a}, {b}) = {d_big} is preserved at "
                    f"({class_map[a]}, {class_map[b]})")
    return CheckReport("specialization", not violations, violations + findings)
