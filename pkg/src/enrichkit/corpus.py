"""Shipped test instances and the seeded random corpus.

The shipped instances are the ones the acceptance checks name: the Boolean
2-chain, a two-object category enriched in the discrete symmetric group S3
(a genuinely non-symmetric base), a one-object category over discrete C3,
small Z_k one-object bases for mutation tests, and the idempotent-target
instance that separates the compatibility square from the unit-action law.

Random generation is rejection sampling: raw tables are drawn uniformly
from the type-correct choices and kept only when the validator accepts, so
the generator cannot emit an invalid structure by construction.  Acceptance
rates are *reported*, never assumed.
"""

import random
from dataclasses import dataclass

from . import finset
from .caps import Caps, DEFAULT_CAPS
from .enriched import MCat, mcat_from_fincat, validate_mcat
from .errors import EnrichKitError, SizeBound
from .fincat import (
    chain_cat,
    discrete_cat,
    loop_cat,
    monoid_cat,
    parallel_pair,
    terminal_cat,
    walking_arrow,
)
from .finset import SkMap, SkSet
from .mfunctor import MFunET, validate_mfun_et
from .monoidal import (
    boolean_monoidal,
    chain_meet_monoidal,
    discrete_monoid_monoidal,
    loop_monoidal,
)
from .presheaf import Presheaf, validate_presheaf
from .tensored import validate_module
from .wcolim import FinSetModule


S3_ELEMENTS = ["e", "s12", "s13", "s23", "r123", "r132"]
S3_TABLE_ROWS = {
    "e": ["e", "s12", "s13", "s23", "r123", "r132"],
    "s12": ["s12", "e", "r132", "r123", "s23", "s13"],
    "s13": ["s13", "r123", "e", "r132", "s12", "s23"],
    "s23": ["s23", "r132", "r123", "e", "s13", "s12"],
    "r123": ["r123", "s13", "s23", "s12", "r132", "e"],
    "r132": ["r132", "s23", "s12", "s13", "e", "r123"],
}


def s3_mult():
    return {(g, h): S3_TABLE_ROWS[g][S3_ELEMENTS.index(h)]
            for g in S3_ELEMENTS for h in S3_ELEMENTS}


def s3_monoidal():
    return discrete_monoid_monoidal(S3_ELEMENTS, s3_mult(), "e", name="discrete-S3")


def c3_mult():
    elems = ["e", "g", "g2"]
    return {(elems[a], elems[b]): elems[(a + b) % 3] for a in range(3) for b in range(3)}


def c3_monoidal():
    return discrete_monoid_monoidal(["e", "g", "g2"], c3_mult(), "e", name="discrete-C3")


def boolean_chain_mcat():
    """The 2-chain a <= b enriched over the Boolean base."""
    B = boolean_monoidal()
    bc = B.carrier
    one, zero = bc.obj("1"), bc.obj("0")
    hom = {(0, 0): one, (0, 1): one, (1, 1): one, (1, 0): zero}
    unit = {0: bc.mor("id_1"), 1: bc.mor("id_1")}
    names = {(zero, zero): "id_0", (one, one): "id_1", (zero, one): "le01"}
    comp = {}
    for x in range(2):
        for y in range(2):
            for z in range(2):
                d = B.tensor_ob(hom[(y, z)], hom[(x, y)])
                comp[(x, y, z)] = bc.mor(names[(d, hom[(x, z)])])
    return validate_mcat(B, ["a", "b"], hom, unit, comp, name="bool-chain2")


def s3_two_object_mcat(cross="s12"):
    """Two objects with hom(x,y) = hom(y,x) = a transposition, diag = e."""
    M = s3_monoidal()
    mc = M.carrier
    e = mc.obj("e")
    c = mc.obj(cross)
    hom = {(0, 0): e, (1, 1): e, (0, 1): c, (1, 0): c}
    unit = {0: mc.id_of(e), 1: mc.id_of(e)}
    comp = {}
    for x in range(2):
        for y in range(2):
            for z in range(2):
                comp[(x, y, z)] = mc.id_of(M.tensor_ob(hom[(y, z)], hom[(x, y)]))
    return validate_mcat(M, ["x", "y"], hom, unit, comp, name="s3-pair")


def c3_one_object_mcat():
    """One object over discrete C3 with hom = e."""
    M = c3_monoidal()
    mc = M.carrier
    e = mc.obj("e")
    return validate_mcat(M, ["*"], {(0, 0): e}, {0: mc.id_of(e)},
                         {(0, 0, 0): mc.id_of(e)}, name="c3-loop")


def z2_two_object_mcat():
    """Two objects over the one-object Z2 base, all structure maps r0."""
    M = loop_monoidal(2)
    r0 = M.carrier.mor("r0")
    hom = {(x, y): 0 for x in range(2) for y in range(2)}
    unit = {0: r0, 1: r0}
    comp = {(x, y, z): r0 for x in range(2) for y in range(2) for z in range(2)}
    return validate_mcat(M, ["x", "y"], hom, unit, comp, name="z2-pair")


def idempotent_unit_instance():
    """A one-object enriched category over the trivial base, and a module
    whose carrier has a non-identity idempotent endomorphism.

    The compatibility square alone admits the idempotent as an action map;
    only the unit law rules it out.  This is the separating instance for
    the unit-automatism experiment.
    """
    M = loop_monoidal(1)
    A = validate_mcat(M, ["*"], {(0, 0): 0}, {0: 0}, {(0, 0, 0): 0},
                      name="unit-probe")
    idem = monoid_cat(["e", "z"], {("e", "e"): "e", ("e", "z"): "z",
                                   ("z", "e"): "z", ("z", "z"): "z"},
                      name="idempotent")
    act_ob = {(0, 0): 0}
    act_mor = {(0, h): h for h in range(idem.n_morphisms)}
    B = validate_module(M, idem, act_ob, act_mor, name="idempotent-module")
    return A, B


def boolean_on_chain3_module():
    """The Boolean base acting on the 3-chain: act(m, b) = b if m = 1 else 0."""
    M = boolean_monoidal()
    C = chain_cat(3)
    act_ob = {}
    for m in range(2):
        for b in range(3):
            act_ob[(m, b)] = b if m == 1 else 0
    mor_ends = {h: (C.dom(h), C.cod(h)) for h in range(C.n_morphisms)}
    chain_mor = {}
    for h, (d, c) in mor_ends.items():
        chain_mor[(d, c)] = h
    act_mor = {}
    for u in range(M.carrier.n_morphisms):
        for h in range(C.n_morphisms):
            d = act_ob[(M.dom(u), C.dom(h))]
            c = act_ob[(M.cod(u), C.cod(h))]
            act_mor[(u, h)] = chain_mor[(d, c)]
    return validate_module(M, C, act_ob, act_mor, name="bool-on-chain3")


def swap_instance(caps: Caps = DEFAULT_CAPS):
    """The parallel-pair category with the identity/swap diagram and the
    terminal weight; its conical colimit has one element."""
    A = mcat_from_fincat(parallel_pair(), caps)
    B = FinSetModule(caps)
    tw = terminal_weight(A)
    vals = [SkSet(2), SkSet(2)]
    phi = {
        (0, 0): SkMap(finset.product(SkSet(1), SkSet(2)), SkSet(2), (0, 1)),
        (1, 1): SkMap(finset.product(SkSet(1), SkSet(2)), SkSet(2), (0, 1)),
        (0, 1): SkMap(finset.product(SkSet(2), SkSet(2)), SkSet(2), (0, 1, 1, 0)),
        (1, 0): SkMap(finset.product(SkSet(0), SkSet(2)), SkSet(2), ()),
    }
    F = validate_mfun_et(A, B, vals, phi, name="swap-diagram", caps=caps)
    return A, tw, F


def terminal_weight(A: MCat) -> Presheaf:
    """The weight with every value a singleton."""
    n = A.n_objects
    values = [SkSet(1)] * n
    action = {}
    for x in range(n):
        for y in range(n):
            dom = finset.product(SkSet(1), A.hom(x, y))
            action[(x, y)] = SkMap(dom, SkSet(1), tuple(0 for _ in range(dom.card)))
    return validate_presheaf(A, values, action)


def shipped_yoneda_corpus():
    """(name, MCat) pairs for the Yoneda acceptance checks."""
    return [
        ("bool-chain2", boolean_chain_mcat()),
        ("s3-pair", s3_two_object_mcat()),
        ("c3-loop", c3_one_object_mcat()),
    ]


# --- random corpus -----------------------------------------------------------

@dataclass
class SampleStats:
    attempts: int = 0
    accepted: int = 0

    @property
    def acceptance_rate(self):
        return self.accepted / self.attempts if self.attempts else 0.0


class CorpusSampler:
    """Seeded generator for bases, enriched categories, presheaves and
    diagrams, all within the desk-scale bounds of the acceptance checks."""

    def __init__(self, seed: int, caps: Caps = DEFAULT_CAPS):
        self.rng = random.Random(seed)
        self.caps = caps
        self.mcat_stats = SampleStats()
        self.presheaf_stats = SampleStats()

    # -- monoidal bases
    def random_monoidal(self):
        pick = self.rng.randrange(6)
        if pick == 0:
            return boolean_monoidal()
        if pick == 1:
            return chain_meet_monoidal(3)
        if pick == 2:
            return loop_monoidal(self.rng.choice([2, 3, 4]))
        if pick == 3:
            return self._random_discrete_monoid(2)
        if pick == 4:
            return self._random_discrete_monoid(3)
        return c3_monoidal()

    def _random_discrete_monoid(self, n):
        """Uniform raw tables with forced unit row/column, rejected until
        associative."""
        elems = [f"m{i}" for i in range(n)]
        while True:
            table = {}
            for a in range(n):
                table[(0, a)] = a
                table[(a, 0)] = a
            for a in range(1, n):
                for b in range(1, n):
                    table[(a, b)] = self.rng.randrange(n)
            if all(table[(table[(a, b)], c)] == table[(a, table[(b, c)])]
                   for a in range(n) for b in range(n) for c in range(n)):
                mult = {(elems[a], elems[b]): elems[table[(a, b)]]
                        for a in range(n) for b in range(n)}
                return discrete_monoid_monoidal(elems, mult, elems[0],
                                                name=f"random-monoid{n}")

    # -- enriched categories
    def random_mcat(self, M, max_objects=3, presheaf_budget=400):
        """Rejection sampling over hom/unit/comp tables; returns the
        accepted MCat together with its presheaf enumeration.

        Choices are drawn uniformly from the type-correct candidates (a
        diagonal hom must admit a unit, a composable pair must admit some
        composition morphism); everything else is left to the validator.
        """
        from .presheaf import enumerate_presheaves

        unit_ok = [h for h in M.objects() if M.hom(M.unit, h)]
        while True:
            self.mcat_stats.attempts += 1
            n = self.rng.choice([1, 1, 2, 2, 2, 3])
            hom = {}
            ok = True
            for x in range(n):
                hom[(x, x)] = self.rng.choice(unit_ok)
            for x in range(n):
                for y in range(n):
                    if x != y:
                        hom[(x, y)] = self.rng.choice(list(M.objects()))
            unit = {}
            for x in range(n):
                cands = M.hom(M.unit, hom[(x, x)])
                unit[x] = self.rng.choice(list(cands))
            comp = {}
            for x in range(n):
                for y in range(n):
                    for z in range(n):
                        cands = M.hom(M.tensor_ob(hom[(y, z)], hom[(x, y)]),
                                      hom[(x, z)])
                        if not cands:
                            ok = False
                            break
                        comp[(x, y, z)] = self.rng.choice(list(cands))
                    if not ok:
                        break
                if not ok:
                    break
            if not ok:
                continue
            try:
                A = validate_mcat(M, [f"a{i}" for i in range(n)], hom, unit, comp,
                                  name="random-mcat", caps=self.caps)
            except EnrichKitError:
                continue
            try:
                pscat = enumerate_presheaves(A, self.caps)
            except SizeBound:
                continue
            if len(pscat.presheaves) > presheaf_budget:
                continue
            self.mcat_stats.accepted += 1
            return A, pscat

    # -- ordinary categories for the colimit layer
    def random_fincat(self):
        pick = self.rng.randrange(7)
        if pick == 0:
            return terminal_cat()
        if pick == 1:
            return walking_arrow()
        if pick == 2:
            return parallel_pair()
        if pick == 3:
            return chain_cat(3)
        if pick == 4:
            return discrete_cat(["d0", "d1"])
        if pick == 5:
            return loop_cat(2)
        return loop_cat(3)

    def random_presheaf(self, A: MCat, max_card=3):
        """Random functor data by randomized backtracking over action
        tables; value cards drawn uniformly, retried until valid."""
        n = A.n_objects
        for _ in range(64):
            self.presheaf_stats.attempts += 1
            values = [SkSet(self.rng.randrange(1, max_card + 1)) for _ in range(n)]
            action = self._random_presheaf_actions(A, values)
            if action is not None:
                self.presheaf_stats.accepted += 1
                return validate_presheaf(A, values, action)
        self.presheaf_stats.accepted += 1
        return terminal_weight(A)

    def _random_presheaf_actions(self, A, values):
        n = A.n_objects
        pairs = [(x, y) for x in range(n) for y in range(n)]
        assignment = {}

        def consistent(px, py):
            a = assignment
            for x in range(n):
                for y in range(n):
                    for z in range(n):
                        keys = {(x, y), (y, z), (x, z)}
                        if not keys <= set(a):
                            continue
                        base = A.base
                        c1 = base.compose(a[(x, y)],
                                          base.tensor_mor(a[(y, z)],
                                                          base.id_of(A.hom(x, y))))
                        c2 = base.compose(a[(x, z)],
                                          base.tensor_mor(base.id_of(values[z]),
                                                          A.comp(x, y, z)))
                        if c1 != c2:
                            return False
            for x in range(n):
                if (x, x) in a:
                    base = A.base
                    e = base.compose(a[(x, x)],
                                     base.tensor_mor(base.id_of(values[x]),
                                                     A.unit(x)))
                    if e != base.id_of(values[x]):
                        return False
            return True

        def rec(i):
            if i == len(pairs):
                return True
            x, y = pairs[i]
            dom = A.base.tensor_ob(values[y], A.hom(x, y))
            cands = list(finset.all_maps(dom, values[x]))
            self.rng.shuffle(cands)
            for c in cands:
                assignment[(x, y)] = c
                if consistent(x, y) and rec(i + 1):
                    return True
            assignment.pop((x, y), None)
            return False

        if rec(0):
            return dict(assignment)
        return None

    def random_diagram(self, A: MCat, max_card=3) -> MFunET:
        """Random enriched-to-tensored functor into finite sets."""
        B = FinSetModule(self.caps)
        n = A.n_objects
        for _ in range(64):
            vals = [SkSet(self.rng.randrange(1, max_card + 1)) for _ in range(n)]
            phi = self._random_diagram_actions(A, vals)
            if phi is not None:
                return validate_mfun_et(A, B, vals, phi, name="random-diagram",
                                        caps=self.caps)
        vals = [SkSet(1)] * n
        phi = {}
        for x in range(n):
            for y in range(n):
                dom = finset.product(A.hom(x, y), SkSet(1))
                phi[(x, y)] = SkMap(dom, SkSet(1), tuple(0 for _ in range(dom.card)))
        return validate_mfun_et(A, B, vals, phi, name="terminal-diagram",
                                caps=self.caps)

    def _random_diagram_actions(self, A, vals):
        n = A.n_objects
        base = A.base
        pairs = [(x, y) for x in range(n) for y in range(n)]
        assignment = {}

        def consistent():
            a = assignment
            for x in range(n):
                for y in range(n):
                    for z in range(n):
                        if not {(x, y), (y, z), (x, z)} <= set(a):
                            continue
                        lhs = finset.compose(
                            a[(x, z)],
                            finset.product_map(A.comp(x, y, z),
                                               finset.identity(vals[x])))
                        rhs = finset.compose(
                            a[(y, z)],
                            finset.product_map(finset.identity(A.hom(y, z)),
                                               a[(x, y)]))
                        if lhs != rhs:
                            return False
            for x in range(n):
                if (x, x) in a:
                    e = finset.compose(
                        a[(x, x)],
                        finset.product_map(A.unit(x), finset.identity(vals[x])))
                    if e != finset.identity(vals[x]):
                        return False
            return True

        def rec(i):
            if i == len(pairs):
                return True
            x, y = pairs[i]
            dom = finset.product(A.hom(x, y), vals[x])
            cands = list(finset.all_maps(dom, vals[y]))
            self.rng.shuffle(cands)
            for c in cands:
                assignment[(x, y)] = c
                if consistent() and rec(i + 1):
                    return True
            assignment.pop((x, y), None)
            return False

        if rec(0):
            return dict(assignment)
        return None
