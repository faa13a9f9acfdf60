"""Presheaves valued in the base, their enumeration, and the Yoneda checks.

A presheaf is stored in unfolded form: values f(x) in the base plus action
maps f(y) ⊗ hom(x,y) -> f(x) using the base's own tensor.  The translation
to a functor out of the opposite enriched category over the opposite base
is a tested dictionary (``presheaf_to_mfun_et``), not the storage format:
the unfolded form is what the Yoneda maps and the colimit layer consume,
and keeping it primary avoids double-op bookkeeping, which is the main
foot-gun of the subject.

Over a finite base the whole presheaf category is enumerated, returned as a
validated FinCat together with its left-tensoring.  Over the finite-sets
base presheaves stay structured values (see the colimit layer).
"""

import itertools
from dataclasses import dataclass

from .caps import Caps, DEFAULT_CAPS
from .errors import (
    CompatibilityViolation,
    InternalError,
    SizeBound,
    TypeMismatch,
    UnitActionViolation,
)
from .enriched import MCat
from .mfunctor import MFunET, validate_mfun_et
from .search import backtrack, guard_space, search_space
from .tensored import base_as_module, validate_module
from .fincat import validate_fincat


class Presheaf:
    """values: base object per source object; action: {(x, y): base morphism
    values[y] ⊗ hom(x,y) -> values[x]}.  Construct via validate_presheaf."""

    def __init__(self, source: MCat, values, action):
        self.source = source
        self.values = tuple(values)
        self.action = dict(action)
        self._key = (id(source), self.values, tuple(sorted(self.action.items())))

    def value(self, x):
        return self.values[x]

    def __eq__(self, other):
        if not isinstance(other, Presheaf):
            return NotImplemented
        return self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        return f"Presheaf({self.values!r})"


@dataclass(frozen=True)
class PresheafMor:
    source: Presheaf
    target: Presheaf
    components: tuple


def validate_presheaf(source: MCat, values, action) -> Presheaf:
    """Typing, the compatibility law for all triples, and the unit action."""
    base = source.base
    n = source.n_objects
    values = tuple(values)
    action = dict(action)
    for x in range(n):
        for y in range(n):
            a = action.get((x, y))
            if a is None:
                raise TypeMismatch("missing action component",
                                   witness={"x": source.obj_name(x),
                                            "y": source.obj_name(y)})
            want_dom = base.tensor_ob(values[y], source.hom(x, y))
            if base.dom(a) != want_dom or base.cod(a) != values[x]:
                raise TypeMismatch("action component has wrong dom/cod",
                                   witness={"x": source.obj_name(x),
                                            "y": source.obj_name(y)})
    for x in range(n):
        e = base.compose(action[(x, x)],
                         base.tensor_mor(base.id_of(values[x]), source.unit(x)))
        if e != base.id_of(values[x]):
            raise UnitActionViolation("presheaf unit action is not the identity",
                                      witness={"x": source.obj_name(x)})
    for x in range(n):
        for y in range(n):
            for z in range(n):
                c1 = base.compose(action[(x, y)],
                                  base.tensor_mor(action[(y, z)],
                                                  base.id_of(source.hom(x, y))))
                c2 = base.compose(action[(x, z)],
                                  base.tensor_mor(base.id_of(values[z]),
                                                  source.comp(x, y, z)))
                if c1 != c2:
                    raise CompatibilityViolation(
                        "presheaf compatibility fails",
                        witness={"x": source.obj_name(x), "y": source.obj_name(y),
                                 "z": source.obj_name(z)})
    return Presheaf(source, values, action)


def check_presheaf_mor(f: Presheaf, g: Presheaf, components):
    """Witness list for the morphism square; empty means valid."""
    source = f.source
    base = source.base
    fails = []
    for x in range(source.n_objects):
        t = components[x]
        if base.dom(t) != f.values[x] or base.cod(t) != g.values[x]:
            fails.append({"x": source.obj_name(x), "kind": "ill-typed"})
    if fails:
        return fails
    for x in range(source.n_objects):
        for y in range(source.n_objects):
            lhs = base.compose(g.action[(x, y)],
                               base.tensor_mor(components[y],
                                               base.id_of(source.hom(x, y))))
            rhs = base.compose(components[x], f.action[(x, y)])
            if lhs != rhs:
                fails.append({"x": source.obj_name(x), "y": source.obj_name(y),
                              "kind": "square"})
    return fails


def tensor_presheaf(m, f: Presheaf, caps: Caps = DEFAULT_CAPS) -> Presheaf:
    """m ⊗ f: values tensored on the left, actions tensored with id_m.

    Strict associativity of the base makes the new actions well typed.
    """
    base = f.source.base
    values = tuple(base.tensor_ob(m, v) for v in f.values)
    action = {k: base.tensor_mor(base.id_of(m), a) for k, a in f.action.items()}
    return Presheaf(f.source, values, action)


def yoneda_presheaf(source: MCat, z) -> Presheaf:
    """Y(z): values hom(-, z), actions given by composition."""
    n = source.n_objects
    values = tuple(source.hom(w, z) for w in range(n))
    action = {(x, y): source.comp(x, y, z) for x in range(n) for y in range(n)}
    return Presheaf(source, values, action)


# --- the enumerated presheaf category over a finite base --------------------

class PresheafCategory:
    """Complete enumeration of P_M(A): presheaves in lexicographic order of
    (value assignment, action choices), all morphisms, a validated FinCat
    presentation, and the left-tensoring by the base."""

    def __init__(self, source, presheaves, morphisms, fincat, caps):
        self.source = source
        self.presheaves = tuple(presheaves)
        self.morphisms = tuple(morphisms)
        self.fincat = fincat
        self.caps = caps
        self._index = {p: i for i, p in enumerate(self.presheaves)}
        self._mor_index = {}
        self._mor_by_pair = {}
        for k, mor in enumerate(self.morphisms):
            i, j = self._index[mor.source], self._index[mor.target]
            self._mor_index[(i, j, mor.components)] = k
            self._mor_by_pair.setdefault((i, j), []).append(k)
        self._module = None

    def index_of(self, p: Presheaf):
        if p not in self._index:
            raise InternalError("presheaf missing from a complete enumeration")
        return self._index[p]

    def mor_index(self, i, j, components):
        key = (i, j, tuple(components))
        if key not in self._mor_index:
            raise InternalError("presheaf morphism missing from a complete enumeration")
        return self._mor_index[key]

    def mors_between(self, i, j):
        return tuple(self._mor_by_pair.get((i, j), ()))

    def as_module(self):
        """The left-tensoring of the enumerated category, as a validated
        finite module over the base."""
        if self._module is None:
            base = self.source.base
            aob = {}
            for m in base.objects():
                for i, p in enumerate(self.presheaves):
                    aob[(m, i)] = self.index_of(tensor_presheaf(m, p, self.caps))
            amor = {}
            for u in base.morphisms():
                for k, t in enumerate(self.morphisms):
                    i, j = self._index[t.source], self._index[t.target]
                    comps = tuple(base.tensor_mor(u, c) for c in t.components)
                    amor[(u, k)] = self.mor_index(aob[(base.dom(u), i)],
                                                  aob[(base.cod(u), j)], comps)
            self._module = validate_module(base, self.fincat, aob, amor,
                                           name=f"P({self.source.name})")
        return self._module


def enumerate_presheaves(source: MCat, caps: Caps = DEFAULT_CAPS) -> PresheafCategory:
    """All presheaves (value maps x action choices passing the laws), all
    morphisms between them, with identities and composition."""
    base = source.base
    if not base.is_finite:
        raise SizeBound("presheaf enumeration needs a finite base")
    n = source.n_objects
    pairs = [(x, y) for x in range(n) for y in range(n)]
    n_obs = len(list(base.objects()))

    total = 0
    plans = []
    guard_space(n_obs ** n if n else 1, caps, "presheaf value-map")
    for values in itertools.product(base.objects(), repeat=n):
        cands = {}
        for (x, y) in pairs:
            cands[(x, y)] = list(base.hom(
                base.tensor_ob(values[y], source.hom(x, y)), values[x]))
        total += max(search_space(pairs, cands), 1)
        guard_space(total, caps, "presheaf action-map")
        plans.append((values, cands))

    presheaves = []
    for values, cands in plans:
        constraints = []
        for x in range(n):
            def unit_law(asg, x=x):
                e = base.compose(asg[(x, x)],
                                 base.tensor_mor(base.id_of(values[x]), source.unit(x)))
                return e == base.id_of(values[x])

            constraints.append(({(x, x)}, unit_law))
        for x in range(n):
            for y in range(n):
                for z in range(n):
                    def compat(asg, x=x, y=y, z=z):
                        c1 = base.compose(
                            asg[(x, y)],
                            base.tensor_mor(asg[(y, z)], base.id_of(source.hom(x, y))))
                        c2 = base.compose(
                            asg[(x, z)],
                            base.tensor_mor(base.id_of(values[z]), source.comp(x, y, z)))
                        return c1 == c2

                    constraints.append(({(x, y), (y, z), (x, z)}, compat))
        for action in backtrack(pairs, cands, constraints):
            presheaves.append(Presheaf(source, values, action))

    morphisms = []
    slots = list(range(n))
    for f in presheaves:
        for g in presheaves:
            mcands = {x: list(base.hom(f.values[x], g.values[x])) for x in slots}
            constraints = []
            for x in range(n):
                for y in range(n):
                    def square(asg, x=x, y=y, f=f, g=g):
                        lhs = base.compose(
                            g.action[(x, y)],
                            base.tensor_mor(asg[y], base.id_of(source.hom(x, y))))
                        rhs = base.compose(asg[x], f.action[(x, y)])
                        return lhs == rhs

                    constraints.append(({x, y}, square))
            for asg in backtrack(slots, mcands, constraints):
                morphisms.append(PresheafMor(f, g, tuple(asg[x] for x in slots)))

    fincat = _presheaf_fincat(source, presheaves, morphisms, caps)
    return PresheafCategory(source, presheaves, morphisms, fincat, caps)


def _presheaf_fincat(source, presheaves, morphisms, caps):
    base = source.base
    index = {p: i for i, p in enumerate(presheaves)}
    obj_names = [f"F{i}" for i in range(len(presheaves))]
    mor_decls = [(f"p{k}", f"F{index[m.source]}", f"F{index[m.target]}")
                 for k, m in enumerate(morphisms)]
    mor_lookup = {(index[m.source], index[m.target], m.components): k
                  for k, m in enumerate(morphisms)}
    identity = {}
    for i, p in enumerate(presheaves):
        idc = tuple(base.id_of(v) for v in p.values)
        identity[f"F{i}"] = f"p{mor_lookup[(i, i, idc)]}"
    compose = []
    for k2, m2 in enumerate(morphisms):
        for k1, m1 in enumerate(morphisms):
            if m1.target != m2.source:
                continue
            comp = tuple(base.compose(c2, c1)
                         for c1, c2 in zip(m1.components, m2.components))
            compose.append((f"p{k2}", f"p{k1}",
                            f"p{mor_lookup[(index[m1.source], index[m2.target], comp)]}"))
    return validate_fincat(obj_names, mor_decls, compose, identity,
                           name=f"P({source.name})", caps=caps)


def yoneda(pscat: PresheafCategory, caps: Caps = DEFAULT_CAPS) -> MFunET:
    """The Yoneda embedding of A into its enumerated presheaf category,
    revalidated as an enriched-to-tensored functor."""
    source = pscat.source
    module = pscat.as_module()
    n = source.n_objects
    ob_map = []
    for z in range(n):
        ob_map.append(pscat.index_of(yoneda_presheaf(source, z)))
    phi = {}
    for x in range(n):
        for y in range(n):
            comps = tuple(source.comp(w, x, y) for w in range(n))
            phi[(x, y)] = pscat.mor_index(
                module.act_ob(source.hom(x, y), ob_map[x]), ob_map[y], comps)
    return validate_mfun_et(source, module, ob_map, phi, name="Yoneda", caps=caps)


# --- Yoneda lemma and full faithfulness -------------------------------------

@dataclass(frozen=True)
class BijectionReport:
    checked: int
    failures: tuple

    @property
    def passed(self):
        return not self.failures


def _forward_map(pscat, F: Presheaf, x, m, alpha):
    """eq. (F-action) ∘ (alpha ⊗ id): the presheaf map m ⊗ Y(x) -> F
    induced by alpha: m -> F(x), given by its component tuple."""
    source = pscat.source
    base = source.base
    return tuple(
        base.compose(F.action[(z, x)],
                     base.tensor_mor(alpha, base.id_of(source.hom(z, x))))
        for z in range(source.n_objects))


def _backward_map(pscat, x, m, components):
    """alpha~ = (m -> m ⊗ hom(x,x) -> F(x)), the proof's inverse."""
    source = pscat.source
    base = source.base
    return base.compose(components[x],
                        base.tensor_mor(base.id_of(m), source.unit(x)))


def check_yoneda_lemma(pscat: PresheafCategory) -> BijectionReport:
    """For every presheaf F, object x and base object m, verify that
    alpha -> (F-action ∘ (alpha ⊗ id)) bijects Hom(m, F(x)) with
    Hom(m ⊗ Y(x), F), with the proof's explicit inverse, both round trips
    included.  Failures falsify the implementation, not the lemma."""
    source = pscat.source
    base = source.base
    checked = 0
    failures = []
    ys = [pscat.index_of(yoneda_presheaf(source, x)) for x in range(source.n_objects)]
    module = pscat.as_module()
    for iF, F in enumerate(pscat.presheaves):
        for x in range(source.n_objects):
            for m in base.objects():
                checked += 1
                imx = module.act_ob(m, ys[x])
                lhs = list(base.hom(m, F.values[x]))
                rhs = pscat.mors_between(imx, iF)
                rhs_comps = {pscat.morphisms[k].components for k in rhs}
                images = [_forward_map(pscat, F, x, m, a) for a in lhs]
                witness = {"F": f"F{iF}", "x": source.obj_name(x),
                           "m": base.obj_name(m)}
                if len(set(images)) != len(images):
                    failures.append({**witness, "kind": "not-injective"})
                    continue
                if set(images) != rhs_comps:
                    failures.append({**witness, "kind": "not-onto"})
                    continue
                ok = all(_backward_map(pscat, x, m, img) == a
                         for a, img in zip(lhs, images))
                if not ok:
                    failures.append({**witness, "kind": "round-trip-forward"})
                    continue
                ok = all(_forward_map(pscat, F, x, m,
                                      _backward_map(pscat, x, m, comps)) == comps
                         for comps in rhs_comps)
                if not ok:
                    failures.append({**witness, "kind": "round-trip-backward"})
    return BijectionReport(checked, tuple(failures))


@dataclass(frozen=True)
class FullyFaithfulReport:
    checked: int
    failures: tuple
    hom_objects: tuple  # (x, y, found, exact, present, isomorphic)

    @property
    def passed(self):
        return (not self.failures
                and all(rec[3] or rec[5] for rec in self.hom_objects)
                and all(rec[4] for rec in self.hom_objects))


def check_fully_faithful(pscat: PresheafCategory,
                         caps: Caps = DEFAULT_CAPS) -> FullyFaithfulReport:
    """The Yoneda bijection with F = Y(y) for all (m, x, y), plus recovery
    of hom(x, y) by the representing-object search on the enumerated
    presheaf category."""
    from .tensored import hom_object_all

    source = pscat.source
    base = source.base
    checked = 0
    failures = []
    ys = [pscat.index_of(yoneda_presheaf(source, x)) for x in range(source.n_objects)]
    module = pscat.as_module()

    for x in range(source.n_objects):
        for y in range(source.n_objects):
            Fy = pscat.presheaves[ys[y]]
            for m in base.objects():
                checked += 1
                imx = module.act_ob(m, ys[x])
                lhs = list(base.hom(m, source.hom(x, y)))
                rhs_comps = {pscat.morphisms[k].components
                             for k in pscat.mors_between(imx, ys[y])}
                images = [_forward_map(pscat, Fy, x, m, a) for a in lhs]
                witness = {"x": source.obj_name(x), "y": source.obj_name(y),
                           "m": base.obj_name(m)}
                if len(set(images)) != len(images):
                    failures.append({**witness, "kind": "not-injective"})
                elif set(images) != rhs_comps:
                    failures.append({**witness, "kind": "not-onto"})

    hom_records = []
    for x in range(source.n_objects):
        for y in range(source.n_objects):
            all_reps = hom_object_all(module, ys[x], ys[y], caps)
            hs = [h for h, _ in all_reps]
            found = hs[0] if hs else None
            expected = source.hom(x, y)
            exact = found == expected
            present = expected in hs
            isomorphic = exact or (found is not None and _objects_isomorphic(
                base, found, expected))
            hom_records.append((source.obj_name(x), source.obj_name(y),
                                None if found is None else base.obj_name(found),
                                exact, present, isomorphic))
    return FullyFaithfulReport(checked, tuple(failures), tuple(hom_records))


def _objects_isomorphic(base, a, b):
    return any(base.is_iso(f) for f in base.hom(a, b))


# --- the op-dictionary -------------------------------------------------------

def presheaf_to_mfun_et(f: Presheaf, source_op: MCat,
                        caps: Caps = DEFAULT_CAPS) -> MFunET:
    """A presheaf on A is exactly a functor from A-op (over the opposite
    base) to the base acting on itself through the opposite tensor.

    source_op must be opposite_mcat(f.source); it is passed in so the
    round trip lands on the caller's instances.
    """
    target = base_as_module(source_op.base)
    n = f.source.n_objects
    phi = {(u, v): f.action[(v, u)] for u in range(n) for v in range(n)}
    return validate_mfun_et(source_op, target, f.values, phi, caps=caps)


def mfun_et_to_presheaf(g: MFunET, source: MCat,
                        caps: Caps = DEFAULT_CAPS) -> Presheaf:
    """Inverse dictionary; source must be the category g's source is the
    opposite of."""
    n = source.n_objects
    action = {(x, y): g.phi[(y, x)] for x in range(n) for y in range(n)}
    return validate_presheaf(source, g.ob_map, action)
