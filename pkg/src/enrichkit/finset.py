"""Skeletal finite sets: the computable cocomplete base.

Objects are bare cardinalities (the set {0, ..., card-1}), maps are lookup
tables.  The chosen product encoding pair(i, j) = i*|Y| + j makes the
cartesian structure associative and unital as plain integer arithmetic, so
no associator bookkeeping exists anywhere downstream.  Coequalizers go
through union-find with minimal-element representatives and classes
renumbered by increasing representative, which pins a canonical choice
among isomorphic quotients.
"""

from dataclasses import dataclass
import itertools

from .caps import Caps, DEFAULT_CAPS
from .errors import Overflow, ShapeMismatch, SizeBound


@dataclass(frozen=True, order=True)
class SkSet:
    card: int

    def __post_init__(self):
        if self.card < 0:
            raise ShapeMismatch("negative cardinality")


@dataclass(frozen=True, order=True)
class SkMap:
    dom: SkSet
    cod: SkSet
    table: tuple

    def __post_init__(self):
        if len(self.table) != self.dom.card:
            raise ShapeMismatch("table length differs from dom cardinality")
        if any(not (0 <= v < self.cod.card) for v in self.table):
            raise ShapeMismatch("table entry out of codomain range")

    def __call__(self, i):
        return self.table[i]


def identity(x: SkSet) -> SkMap:
    return SkMap(x, x, tuple(range(x.card)))


def compose(g: SkMap, f: SkMap) -> SkMap:
    """g after f."""
    if f.cod != g.dom:
        raise ShapeMismatch(f"cannot compose {g} after {f}")
    return SkMap(f.dom, g.cod, tuple(g.table[v] for v in f.table))


def is_bijection(f: SkMap) -> bool:
    return f.dom.card == f.cod.card and len(set(f.table)) == f.dom.card


def inverse(f: SkMap) -> SkMap:
    if not is_bijection(f):
        raise ShapeMismatch("map is not a bijection")
    inv = [0] * f.cod.card
    for i, v in enumerate(f.table):
        inv[v] = i
    return SkMap(f.cod, f.dom, tuple(inv))


# --- product ---------------------------------------------------------------

def product(x: SkSet, y: SkSet, caps: Caps = DEFAULT_CAPS) -> SkSet:
    card = x.card * y.card
    if card > caps.max_card:
        raise Overflow(f"product cardinality {card} exceeds cap {caps.max_card}")
    return SkSet(card)


def pair(i: int, j: int, y: SkSet) -> int:
    return i * y.card + j


def unpair(p: int, y: SkSet):
    return divmod(p, y.card)


def proj1(x: SkSet, y: SkSet) -> SkMap:
    return SkMap(product(x, y), x, tuple(i for i in range(x.card) for _ in range(y.card)))


def proj2(x: SkSet, y: SkSet) -> SkMap:
    return SkMap(product(x, y), y, tuple(j for _ in range(x.card) for j in range(y.card)))


def product_map(f: SkMap, g: SkMap, caps: Caps = DEFAULT_CAPS) -> SkMap:
    """f x g on the pair encoding (f acts on the left factor)."""
    dom = product(f.dom, g.dom, caps)
    cod = product(f.cod, g.cod, caps)
    table = tuple(pair(f.table[i], g.table[j], g.cod)
                  for i in range(f.dom.card) for j in range(g.dom.card))
    return SkMap(dom, cod, table)


# --- coproduct --------------------------------------------------------------

def coproduct(parts, caps: Caps = DEFAULT_CAPS) -> SkSet:
    card = sum(p.card for p in parts)
    if card > caps.max_card:
        raise Overflow(f"coproduct cardinality {card} exceeds cap {caps.max_card}")
    return SkSet(card)


def offsets(parts):
    out = []
    acc = 0
    for p in parts:
        out.append(acc)
        acc += p.card
    return out


def injection(parts, k: int, caps: Caps = DEFAULT_CAPS) -> SkMap:
    total = coproduct(parts, caps)
    off = offsets(parts)[k]
    return SkMap(parts[k], total, tuple(off + i for i in range(parts[k].card)))


def copair(parts, maps, caps: Caps = DEFAULT_CAPS) -> SkMap:
    """The unique map out of the coproduct restricting to each given map."""
    if len(parts) != len(maps):
        raise ShapeMismatch("copair: parts/maps length mismatch")
    cods = {m.cod for m in maps}
    if len(cods) > 1:
        raise ShapeMismatch("copair: maps do not share a codomain")
    for p, m in zip(parts, maps):
        if m.dom != p:
            raise ShapeMismatch("copair: map domain differs from its part")
    cod = maps[0].cod if maps else SkSet(0)
    table = tuple(v for m in maps for v in m.table)
    return SkMap(coproduct(parts, caps), cod, table)


def coproduct_map(fs, caps: Caps = DEFAULT_CAPS) -> SkMap:
    doms = [f.dom for f in fs]
    cods = [f.cod for f in fs]
    out_off = offsets(cods)
    table = tuple(out_off[k] + v for k, f in enumerate(fs) for v in f.table)
    return SkMap(coproduct(doms, caps), coproduct(cods, caps), table)


# --- coequalizer ------------------------------------------------------------

def coequalizer(f: SkMap, g: SkMap):
    """Canonical coequalizer of a parallel pair: (quotient, projection).

    Union-find keeps the minimal element of each class as representative;
    classes are numbered in increasing order of representative, so the first
    occurrence of each class index in the projection table is its
    representative.
    """
    if f.dom != g.dom or f.cod != g.cod:
        raise ShapeMismatch("coequalizer arguments must be parallel")
    parent = list(range(f.cod.card))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for x in range(f.dom.card):
        a, b = find(f.table[x]), find(g.table[x])
        if a != b:
            if a < b:
                parent[b] = a
            else:
                parent[a] = b

    reps = sorted({find(i) for i in range(f.cod.card)})
    index = {r: k for k, r in enumerate(reps)}
    proj = SkMap(f.cod, SkSet(len(reps)), tuple(index[find(i)] for i in range(f.cod.card)))
    return proj.cod, proj


def class_representatives(proj: SkMap):
    """Minimal representative per class, indexed by class number."""
    reps = [None] * proj.cod.card
    for i, c in enumerate(proj.table):
        if reps[c] is None:
            reps[c] = i
    return reps


def factor_through_coequalizer(proj: SkMap, h: SkMap):
    """The unique u with u∘proj = h, or None when h is not constant on classes."""
    if h.dom != proj.dom:
        raise ShapeMismatch("factor: map does not start at the coequalized object")
    table = [None] * proj.cod.card
    for i in range(proj.dom.card):
        c = proj.table[i]
        if table[c] is None:
            table[c] = h.table[i]
        elif table[c] != h.table[i]:
            return None
    return SkMap(proj.cod, h.cod, tuple(table))


# --- hom enumeration --------------------------------------------------------

def count_maps(x: SkSet, y: SkSet) -> int:
    if x.card == 0:
        return 1
    return y.card ** x.card


def all_maps(x: SkSet, y: SkSet):
    """All maps x -> y in lexicographic table order."""
    for table in itertools.product(range(y.card), repeat=x.card):
        yield SkMap(x, y, table)


def hom_maps(x: SkSet, y: SkSet, caps: Caps = DEFAULT_CAPS):
    n = count_maps(x, y)
    if n > caps.max_search:
        raise SizeBound(f"{n} maps from {x} to {y} exceeds cap {caps.max_search}")
    return tuple(all_maps(x, y))


class SkSetCat:
    """Skeletal finite sets packaged with the carrier interface the
    monoidal/enriched layers expect.  Objects are not enumerable; hom-sets
    are finite and enumerated on demand."""

    is_finite = False

    def __init__(self, caps: Caps = DEFAULT_CAPS):
        self.caps = caps

    def identity(self, x):
        return identity(x)

    id_of = identity

    def compose(self, g, f):
        return compose(g, f)

    def dom(self, m):
        return m.dom

    def cod(self, m):
        return m.cod

    def hom(self, x, y):
        return hom_maps(x, y, self.caps)

    def is_iso(self, m):
        return is_bijection(m)

    def inverses(self, m):
        return (inverse(m),) if is_bijection(m) else ()

    def obj_name(self, x):
        return f"card{x.card}"

    def mor_name(self, m):
        return f"{list(m.table)}:{m.dom.card}->{m.cod.card}"

    def __eq__(self, other):
        return isinstance(other, SkSetCat)

    def __hash__(self):
        return hash("SkSetCat")
