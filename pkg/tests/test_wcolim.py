import random

from enrichkit import finset
from enrichkit.corpus import CorpusSampler, swap_instance, terminal_weight
from enrichkit.enriched import mcat_from_fincat, validate_mcat
from enrichkit.finset import SkMap, SkSet
from enrichkit.fincat import terminal_cat, walking_arrow
from enrichkit.mfunctor import check_mfun_mor, validate_mfun_et
from enrichkit.monoidal import boolean_monoidal
from enrichkit.presheaf import (
    tensor_presheaf,
    validate_presheaf,
    yoneda_presheaf,
)
from enrichkit.wcolim import (
    FinSetModule,
    PresheafModule,
    canonical_presentation,
    check_equivalence,
    check_round_trip,
    check_universal,
    ext,
    mediate,
    res,
    round_trip_components,
    sample_probes,
    weighted_colimit,
)


def arrow_diagram(fa=2, fb=3, table=(0, 2)):
    """A functor from the walking arrow into finite sets."""
    A = mcat_from_fincat(walking_arrow())
    B = FinSetModule()
    vals = [SkSet(fa), SkSet(fb)]
    phi = {
        (0, 0): SkMap(finset.product(SkSet(1), SkSet(fa)), SkSet(fa),
                      tuple(range(fa))),
        (1, 1): SkMap(finset.product(SkSet(1), SkSet(fb)), SkSet(fb),
                      tuple(range(fb))),
        (0, 1): SkMap(finset.product(SkSet(1), SkSet(fa)), SkSet(fb), table),
        (1, 0): SkMap(finset.product(SkSet(0), SkSet(fb)), SkSet(fa), ()),
    }
    return A, validate_mfun_et(A, B, vals, phi), B


def test_trivial_hom_gives_product():
    A = mcat_from_fincat(terminal_cat())
    B = FinSetModule()
    W = validate_presheaf(A, [SkSet(2)],
                          {(0, 0): SkMap(SkSet(2), SkSet(2), (0, 1))})
    F = validate_mfun_et(A, B, [SkSet(3)],
                         {(0, 0): SkMap(SkSet(3), SkSet(3), (0, 1, 2))})
    wc = weighted_colimit(W, F, B)
    assert wc.apex.card == 6
    # the two parallel maps in the presentation coincide
    assert wc.witness.left_map == wc.witness.right_map


def test_swap_example_collapses_to_point():
    # oracle: union-find glues 0~1 in F(q) via identity and swap, and both
    # elements of F(p) map onto that class
    A, W, F = swap_instance()
    wc = weighted_colimit(W, F)
    assert wc.apex.card == 1


def test_identity_probe_mediates_identically():
    A, W, F = swap_instance()
    wc = weighted_colimit(W, F)
    u = mediate(wc, wc.cocone.legs, wc.apex, F.target)
    assert u == finset.identity(wc.apex)


def test_collapse_probe_mediator_is_collapse():
    A, F2, B = arrow_diagram()
    W = terminal_weight(A)
    wc = weighted_colimit(W, F2, B)
    collapse = SkMap(wc.apex, SkSet(1), tuple(0 for _ in range(wc.apex.card)))
    probe = tuple(finset.compose(collapse, leg) for leg in wc.cocone.legs)
    assert mediate(wc, probe, SkSet(1), B) == collapse


def test_random_postcompositions_recovered():
    A, F2, B = arrow_diagram()
    W = yoneda_presheaf(A, 1)
    wc = weighted_colimit(W, F2, B)
    rng = random.Random(3)
    for _ in range(20):
        t = SkSet(rng.randrange(1, 5))
        g = SkMap(wc.apex, t, tuple(rng.randrange(t.card)
                                    for _ in range(wc.apex.card)))
        probe = tuple(finset.compose(g, leg) for leg in wc.cocone.legs)
        assert mediate(wc, probe, t, B) == g


def test_check_universal_reports_zero_failures():
    A, W, F = swap_instance()
    wc = weighted_colimit(W, F)
    rep = check_universal(wc, sample_probes(wc, random.Random(11), 20))
    assert rep.passed and rep.probes == 20


def test_legs_jointly_surjective():
    sampler = CorpusSampler(23)
    for _ in range(10):
        A = mcat_from_fincat(sampler.random_fincat())
        W = sampler.random_presheaf(A)
        F = sampler.random_diagram(A)
        wc = weighted_colimit(W, F)
        assert F.target.jointly_surjective(wc.cocone.legs, wc.apex)


def test_co_yoneda_ext_on_representables():
    A, F2, B = arrow_diagram()
    G = ext(F2)
    for x in range(A.n_objects):
        mu = round_trip_components(F2, G)[x]
        assert finset.is_bijection(mu)
        assert mu.dom == G.apex(yoneda_presheaf(A, x))
        assert mu.cod == F2.ob_map[x]


def test_ext_on_tensor_weights():
    # Ext(F)(m ⊗ Y(x)) ≅ act(m, F(x)) through the canonical comparison
    A, F2, B = arrow_diagram()
    G = ext(F2)
    for x in range(A.n_objects):
        Y = yoneda_presheaf(A, x)
        for card in range(1, 4):
            m = SkSet(card)
            cmp = G.tensor_comparison(m, Y)
            assert finset.is_bijection(cmp)
            assert cmp.dom == G.apex(tensor_presheaf(m, Y))
            assert cmp.cod.card == m.card * G.apex(Y).card


def test_ext_identity_mor_is_identity():
    A, F2, B = arrow_diagram()
    G = ext(F2)
    PM = PresheafModule(A)
    W = yoneda_presheaf(A, 0)
    ident = PM.id_of(W)
    assert G.on_mor(ident) == finset.identity(G.apex(W))


def test_ext_functorial_on_composable_mors():
    A, F2, B = arrow_diagram()
    PM = PresheafModule(A)
    G = ext(F2)
    ys = [yoneda_presheaf(A, x) for x in range(2)]
    _, injs2 = PM.coproduct([ys[0], ys[0]])
    Q, q = PM.coequalizer(injs2[0], injs2[1])
    comp = PM.compose(q, injs2[0])
    assert G.on_mor(comp) == finset.compose(G.on_mor(q), G.on_mor(injs2[0]))


def _diagram_map(W, src_wc, tgt_wc, comps, B):
    legs = tuple(
        finset.compose(tgt_wc.cocone.legs[x],
                       B.act_mor(finset.identity(W.values[x]), comps[x]))
        for x in range(len(comps)))
    return mediate(src_wc, legs, tgt_wc.apex, B)


def test_wcolim_functorial_in_diagram():
    # morphisms of diagrams induce mediators that compose correctly,
    # including a non-identity component family
    A, F2, B = arrow_diagram(2, 3, (0, 2))
    W = terminal_weight(A)
    wc2 = weighted_colimit(W, F2, B)
    ident = tuple(finset.identity(F2.ob_map[x]) for x in range(A.n_objects))
    assert _diagram_map(W, wc2, wc2, ident, B) == finset.identity(wc2.apex)
    # t: F2 -> F2 with t_a = id, t_b collapsing the unreached element 1
    comps = (finset.identity(SkSet(2)), SkMap(SkSet(3), SkSet(3), (0, 0, 2)))
    assert check_mfun_mor(F2, F2, comps) == []
    u = _diagram_map(W, wc2, wc2, comps, B)
    uu = finset.compose(u, u)
    double = tuple(finset.compose(c, c) for c in comps)
    assert check_mfun_mor(F2, F2, double) == []
    assert uu == _diagram_map(W, wc2, wc2, double, B)


def test_canonical_presentation_terminal():
    A = mcat_from_fincat(terminal_cat())
    F = validate_presheaf(A, [SkSet(3)],
                          {(0, 0): SkMap(SkSet(3), SkSet(3), (0, 1, 2))})
    assert canonical_presentation(F).passed


def test_canonical_presentation_representable_on_arrow():
    A = mcat_from_fincat(walking_arrow())
    F = yoneda_presheaf(A, 1)
    assert tuple(v.card for v in F.values) == (1, 1)
    assert canonical_presentation(F).passed


def test_canonical_presentation_random():
    sampler = CorpusSampler(29)
    for _ in range(20):
        A = mcat_from_fincat(sampler.random_fincat())
        F = sampler.random_presheaf(A)
        rep = canonical_presentation(F)
        assert rep.passed, (A.name, [v.card for v in F.values], rep.failures)


def test_res_ext_round_trip():
    A, F2, B = arrow_diagram()
    Fp, mu, fails = check_round_trip(F2)
    assert fails == []
    assert all(finset.is_bijection(c) for c in mu)


def test_res_of_ext_of_yoneda_is_yoneda():
    # B = the pointwise presheaf module; the Yoneda embedding lands there
    # and res(ext(Y)) must be isomorphic to Y itself
    A = mcat_from_fincat(walking_arrow())
    PM = PresheafModule(A)
    n = A.n_objects
    ob_map = tuple(yoneda_presheaf(A, x) for x in range(n))
    phi = {}
    for x in range(n):
        for y in range(n):
            from enrichkit.wcolim import structure_presheaf_mor
            phi[(x, y)] = structure_presheaf_mor(A, x, y)
    Y = validate_mfun_et(A, PM, ob_map, phi, name="Yoneda-pointwise")
    G = ext(Y, PM)
    Yp = res(G)
    mu = round_trip_components(Y, G)
    assert all(PM.is_iso(c) for c in mu)
    assert check_mfun_mor(Yp, Y, mu) == []


def test_res_on_empty_source_is_empty():
    B = boolean_monoidal()
    from enrichkit.monoidal import finset_product_monoidal

    A = validate_mcat(finset_product_monoidal(), [], {}, {}, {})
    F = validate_mfun_et(A, FinSetModule(), (), {})
    G = ext(F)
    assert res(G).ob_map == ()


def test_check_equivalence_arrow_instance():
    A, F2, B = arrow_diagram()
    W = terminal_weight(A)
    rep = check_equivalence([(A, F2, [W])])
    assert rep.passed and rep.checks > 0


def test_coproduct_of_representables_two_routes():
    # ext(F)(Y(a) ⊔ Y(b)) has the cardinality of F(a) ⊔ F(b)
    A, F2, B = arrow_diagram()
    PM = PresheafModule(A)
    ys = [yoneda_presheaf(A, x) for x in range(2)]
    co, _ = PM.coproduct(ys)
    G = ext(F2)
    assert G.apex(co).card == F2.ob_map[0].card + F2.ob_map[1].card


def test_terminal_weight_two_routes_match():
    # the conical apex through check_equivalence machinery matches the
    # direct weighted_colimit computation
    A, W, F = swap_instance()
    direct = weighted_colimit(W, F).apex
    assert ext(F).apex(W) == direct
    assert direct.card == 1


def test_quotient_weight_universal():
    A, F2, B = arrow_diagram()
    PM = PresheafModule(A)
    y0 = yoneda_presheaf(A, 0)
    _, injs = PM.coproduct([y0, y0])
    Q, q = PM.coequalizer(injs[0], injs[1])
    # the quotient weight is a genuine presheaf and ext evaluates on it
    G = ext(F2)
    _, p = B.coequalizer(G.on_mor(injs[0]), G.on_mor(injs[1]))
    med = B.factor(p, G.on_mor(q))
    assert med is not None and finset.is_bijection(med)


def test_check_equivalence_random_corpus():
    sampler = CorpusSampler(31)
    entries = []
    for _ in range(5):
        A = mcat_from_fincat(sampler.random_fincat())
        F = sampler.random_diagram(A)
        entries.append((A, F, [sampler.random_presheaf(A)]))
    rep = check_equivalence(entries)
    assert rep.passed, rep.failures
