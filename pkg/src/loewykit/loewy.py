"""Loewy diagrams: layers of a socle or radical series plus extension arrows."""
from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field

import numpy as np

from . import modth
from .errors import PreconditionError, SchemaError
from .modth import ModuleRep, SimpleLabel

KINDS = ("socle", "radical")


@dataclass(eq=False)
class LoewyDiagram:
    """Layers bottom to top, each a sorted list of simple-label names.

    An arrow ``(k, i, j)`` joins factor ``i`` of layer ``k`` to factor ``j``
    of layer ``k - 1`` (layers indexed from 0 at the bottom).
    """

    kind: str
    layers: list
    arrows: frozenset
    labels: dict = field(default_factory=dict, repr=False)  # name -> SimpleLabel

    @property
    def length(self) -> int:
        return len(self.layers)

    def class_arrows(self) -> set:
        """Arrows as (k, upper name, lower name)."""
        return {(k, self.layers[k][i], self.layers[k - 1][j]) for k, i, j in self.arrows}

    def layer_counts(self) -> list:
        return [Counter(layer) for layer in self.layers]

    def __eq__(self, other):
        if not isinstance(other, LoewyDiagram):
            return NotImplemented
        return (self.kind, self.layers, self.arrows) == (other.kind, other.layers, other.arrows)

    def __hash__(self):
        return hash((self.kind, tuple(map(tuple, self.layers)), self.arrows))


def _isotypic(m: ModuleRep, s: ModuleRep):
    """Sum of images of all maps s -> m (the s-isotypic part when m is semisimple)."""
    F = m.field
    hom = modth.hom_space(s, m)
    if hom.shape[0] == 0:
        return F.zeros(0, m.dim)
    return F.span(np.transpose(hom, (0, 2, 1)).reshape(-1, m.dim), m.dim)


def non_split_ext_exists(n: ModuleRep, s: SimpleLabel, s_prime: SimpleLabel) -> bool:
    """Is some subquotient of ``n`` a non-split extension of s by s_prime?

    With T = n / Jn and N_s the preimage of the s-isotypic part of T, the
    answer is yes iff s_prime is a composition factor of J N_s.  Since
    J^2 n = 0, J N_s is semisimple and the test is Hom(s_prime, J N_s) != 0.
    """
    if n.dim == 0:
        return False
    rad = modth.radical(n)
    if rad.shape[0] and modth.radical_of(n, rad).shape[0]:
        raise PreconditionError("non_split_ext_exists needs Loewy length at most 2")
    if rad.shape[0] == 0:
        return False
    top, proj = modth.quotient_module(n, rad, check=False)
    iso = _isotypic(top, s.module)
    if iso.shape[0] == 0:
        return False
    n_s = modth.preimage(n, rad, proj, top._cache["lift"], iso)
    j_ns = modth.radical_of(n, n_s)
    if j_ns.shape[0] == 0:
        return False
    sub, _ = modth.submodule(n, j_ns, check=False)
    return modth.hom_space(s_prime.module, sub).shape[0] > 0


def length_two_subquotients(m: ModuleRep) -> list:
    """m itself when its Loewy length is at most 2, plus every two-layer
    subquotient of its socle and radical series."""
    out = []
    if modth.loewy_length(m) <= 2:
        out.append(m)
    for kind in KINDS:
        f = modth.series(m, kind)
        for k in range(2, f.length + 1):
            out.append(modth.subquotient(m, f.chain[k], f.chain[k - 2]))
    return out


def _layer_labels(layer: ModuleRep, catalog) -> list:
    counts = modth.decompose_semisimple(layer, catalog)
    out = []
    for lab in sorted(counts, key=lambda lab: lab.name):
        out += [lab] * counts[lab]
    return out


def loewy_diagram(m: ModuleRep, kind: str = "socle") -> LoewyDiagram:
    if kind not in KINDS:
        raise ValueError(f"unknown filtration kind {kind!r}")
    catalog = m.alg.catalog
    filt = modth.series(m, kind)
    layers = [_layer_labels(filt.layer(k), catalog) for k in range(1, filt.length + 1)]
    arrows = set()
    for k in range(1, len(layers)):
        # layer k (0-based) is chain[k+1]/chain[k]; N = chain[k+1]/chain[k-1]
        n = modth.subquotient(m, filt.chain[k + 1], filt.chain[k - 1])
        upper = sorted(set(layers[k]), key=lambda lab: lab.name)
        lower = sorted(set(layers[k - 1]), key=lambda lab: lab.name)
        for s in upper:
            for t in lower:
                if non_split_ext_exists(n, s, t):
                    for i, x in enumerate(layers[k]):
                        for j, y in enumerate(layers[k - 1]):
                            if x is s and y is t:
                                arrows.add((k, i, j))
    labels = {lab.name: lab for layer in layers for lab in layer}
    return LoewyDiagram(kind, [[lab.name for lab in layer] for layer in layers], frozenset(arrows), labels)


def diagrams_match(d1: LoewyDiagram, d2: LoewyDiagram, label_map=None) -> bool:
    """Layers of d1 map onto those of d2 and every arrow of d1 has an image.

    ``label_map`` maps label names of d1 to label names of d2 (a dict or a
    callable); the identity when omitted.
    """
    if label_map is None:
        def f(x):
            return x
    elif callable(label_map):
        f = label_map
    else:
        missing = {x for layer in d1.layers for x in layer} - set(label_map)
        if missing:
            raise PreconditionError(f"label map is undefined on {sorted(missing)}")
        f = label_map.__getitem__
    if d1.length != d2.length:
        return False
    for l1, l2 in zip(d1.layers, d2.layers):
        if Counter(f(x) for x in l1) != Counter(l2):
            return False
    image = {(k, f(x), f(y)) for k, x, y in d1.class_arrows()}
    return image <= d2.class_arrows()


# -- output ---------------------------------------------------------------------

def to_json(d: LoewyDiagram) -> dict:
    return {
        "kind": d.kind,
        "layers": [list(layer) for layer in d.layers],
        "arrows": sorted([list(a) for a in d.arrows]),
    }


def _dot(d: LoewyDiagram) -> str:
    lines = ["digraph loewy {", "  rankdir=BT;", "  node [shape=plaintext];"]
    for k, layer in enumerate(d.layers):
        ids = [f'"{k}:{i}:{name}"' for i, name in enumerate(layer)]
        lines.append(f"  subgraph layer{k} {{ rank=same; " + " ".join(ids) + " }")
        for i, name in enumerate(layer):
            lines.append(f'  "{k}:{i}:{name}" [label="{name}"];')
    for k, i, j in sorted(d.arrows):
        up, low = d.layers[k][i], d.layers[k - 1][j]
        lines.append(f'  "{k}:{i}:{up}" -> "{k - 1}:{j}:{low}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def _ascii(d: LoewyDiagram) -> str:
    lines = [f"{d.kind} series, Loewy length {d.length}"]
    for k in reversed(range(d.length)):
        lines.append(f"[{k}] " + "  ".join(d.layers[k]))
        if k:
            down = sorted({(d.layers[k][i], d.layers[k - 1][j]) for kk, i, j in d.arrows if kk == k})
            if down:
                lines.append("     " + "  ".join(f"{a} -> {b}" for a, b in down))
            else:
                lines.append("     (split)")
    return "\n".join(lines) + "\n"


def emit(d: LoewyDiagram, fmt: str = "json") -> str:
    if fmt == "json":
        return json.dumps(to_json(d), sort_keys=True) + "\n"
    if fmt == "dot":
        return _dot(d)
    if fmt == "ascii":
        return _ascii(d)
    raise ValueError(f"unknown format {fmt!r}")


def parse(text_or_data) -> LoewyDiagram:
    data = json.loads(text_or_data) if isinstance(text_or_data, str) else text_or_data
    try:
        kind = data["kind"]
        layers = [[str(x) for x in layer] for layer in data["layers"]]
        arrows = frozenset(tuple(int(v) for v in a) for a in data["arrows"])
    except (KeyError, TypeError, ValueError) as exc:
        raise SchemaError(f"bad diagram JSON: {exc}") from exc
    if kind not in KINDS:
        raise SchemaError(f"bad diagram kind {kind!r}")
    for k, i, j in arrows:
        if not (1 <= k < len(layers) and 0 <= i < len(layers[k]) and 0 <= j < len(layers[k - 1])):
            raise SchemaError(f"arrow {(k, i, j)} does not index existing factors")
    return LoewyDiagram(kind, layers, arrows)
