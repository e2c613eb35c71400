#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mhcat/datasets.hpp"

using namespace mhcat;

namespace {
Complex unit_cx(const CategoryPresentation& cat)
{
    return Complex::concentrated(FormalSum::single(cat.unit));
}
}  // namespace

TEST_CASE("constructors keep d∘d = 0")
{
    Dataset d = dataset_genus1();
    const CategoryPresentation& cat = d.built.cat;
    Complex x = d.window_complex("X");
    Complex u = unit_cx(cat);

    ChainMap idx = identity_chain_map(cat, x);
    Cone c = cone(cat, idx);
    check_complex(cat, c.cone);
    check_chain_map(cat, c.incl);
    check_chain_map(cat, c.proj);

    check_complex(cat, shift_complex(cat, c.cone, 1));
    check_complex(cat, shift_complex(cat, c.cone, -3));
    check_complex(cat, tensor_complex(cat, c.cone, x));
    check_complex(cat, tensor_complex(cat, c.cone, c.cone));
    check_complex(cat, dual_complex(cat, c.cone));
    check_complex(cat, sum_complex(cat, c.cone, shift_complex(cat, x, 2)));
    (void)u;
}

TEST_CASE("shift round trip and tensor unit strictness")
{
    Dataset d = dataset_genus1();
    const CategoryPresentation& cat = d.built.cat;
    Complex x = d.window_complex("X");
    CHECK(shift_complex(cat, x, 0) == x);
    CHECK(shift_complex(cat, shift_complex(cat, x, 1), -1) == x);
    CHECK(tensor_complex(cat, unit_cx(cat), x) == x);
    CHECK(tensor_complex(cat, x, unit_cx(cat)) == x);
}

TEST_CASE("kb hom dimensions")
{
    Dataset d = dataset_genus1();
    const CategoryPresentation& cat = d.built.cat;
    Complex u = unit_cx(cat);
    CHECK(kb_hom(cat, u, u).dim() == 1);
    // contractible target
    Cone c = cone(cat, identity_chain_map(cat, u));
    CHECK(kb_hom(cat, u, c.cone).dim() == 0);
    CHECK(kb_hom(cat, c.cone, c.cone).dim() == 0);
    // no maps into the shifted line
    CHECK(kb_hom(cat, u, shift_complex(cat, u, 1)).dim() == 0);
}

TEST_CASE("apply_kunneth basics")
{
    Dataset d = dataset_genus1();
    const CategoryPresentation& cat = d.built.cat;
    const FunctorData& h = d.built.h;
    Complex u = unit_cx(cat);

    HomologyData hu = apply_kunneth(cat, h, u);
    CHECK(hu.dims == GradedSpace::line(Deg{0, 0}));

    Cone c = cone(cat, identity_chain_map(cat, u));
    CHECK(apply_kunneth(cat, h, c.cone).dims.is_zero());

    // two-term complex with zero differential
    Complex two;
    two.lo = 0;
    two.hi = 1;
    two.terms = {FormalSum::single(cat.unit), FormalSum::single(cat.unit)};
    two.diffs = {cat.zero_mor(two.terms[1], two.terms[0])};
    GradedSpace expect;
    expect.set(Deg{0, 0}, 1);
    expect.set(Deg{1, 0}, 1);
    CHECK(apply_kunneth(cat, h, two).dims == expect);

    // H of the shifted unit sits in homological degree 1
    CHECK(apply_kunneth(cat, h, shift_complex(cat, u, 1)).dims == GradedSpace::line(Deg{1, 0}));

    // genus-1 object: dims (1,2,1) in internal degrees 0,1,2 at chain degree 0
    HomologyData hx = apply_kunneth(cat, h, d.window_complex("X"));
    GradedSpace ex;
    ex.set(Deg{0, 0}, 1);
    ex.set(Deg{0, 1}, 2);
    ex.set(Deg{0, 2}, 1);
    CHECK(hx.dims == ex);
}

TEST_CASE("cone of the fold map has homology in degree 1")
{
    Dataset d = dataset_genus1();
    const CategoryPresentation& cat = d.built.cat;
    const FunctorData& h = d.built.h;
    ChainMap fold = d.cover_epis[0].second;
    Cone c = cone(cat, fold);
    GradedSpace expect = GradedSpace::line(Deg{1, 0});
    CHECK(apply_kunneth(cat, h, c.cone).dims == expect);
}

TEST_CASE("h-epi detection")
{
    Dataset d = dataset_genus1();
    const CategoryPresentation& cat = d.built.cat;
    const FunctorData& h = d.built.h;
    Complex u = unit_cx(cat);
    CHECK(is_h_epi(cat, h, identity_chain_map(cat, u)));
    CHECK(!is_h_epi(cat, h, zero_chain_map(cat, Complex::empty(), u)));
    ChainMap fold = d.cover_epis[0].second;
    CHECK(is_h_epi(cat, h, fold));
    // invariance under composing with isomorphisms
    ChainMap two = scale_chain(cat, identity_chain_map(cat, u), 2);
    CHECK(is_h_epi(cat, h, compose_chain(cat, fold, scale_chain(cat, identity_chain_map(cat, fold.src), 3))));
    CHECK(is_h_epi(cat, h, compose_chain(cat, two, fold)));
}

TEST_CASE("sigma exactness")
{
    Dataset d = dataset_genus1();
    const CategoryPresentation& cat = d.built.cat;
    const FunctorData& h = d.built.h;
    Complex u = unit_cx(cat);

    // triangle of the identity: 1 → 1 → 0 (the cone is contractible)
    Triangle t1 = cone_triangle(cat, identity_chain_map(cat, u));
    SigmaExactReport r1 = verify_sigma_exact(cat, h, t1);
    CHECK(r1.exact);

    // split triangle A → A⊕B → B
    Complex a = d.window_complex("L");
    Complex b = d.window_complex("e1");
    Complex ab = sum_complex(cat, a, b);
    ChainMap incl = zero_chain_map(cat, a, ab);
    AMor im = cat.zero_mor(a.term(0), ab.term(0));
    im.blocks[0][0] = cat.identity_coords[static_cast<size_t>(a.term(0).slots[0])];
    incl.comps[0] = im;
    ChainMap proj = zero_chain_map(cat, ab, b);
    AMor pm = cat.zero_mor(ab.term(0), b.term(0));
    pm.blocks[0][1] = cat.identity_coords[static_cast<size_t>(b.term(0).slots[0])];
    proj.comps[0] = pm;
    Cone spl = cone(cat, incl);
    (void)spl;
    Triangle split{incl, proj, zero_chain_map(cat, b, shift_complex(cat, a, 1))};
    SigmaExactReport rs = verify_sigma_exact(cat, h, split);
    CHECK(rs.exact);

    // fiber triangle of the fold map: ranks 1+1 = 2 at bidegree (0,0)
    ChainMap fold = d.cover_epis[0].second;
    HomotopyPullback hp = homotopy_pullback(cat, fold, identity_chain_map(cat, fold.tgt));
    SigmaExactReport r2 = verify_sigma_exact(cat, h, hp.triangle);
    CHECK(r2.exact);
    HomologyData ha = apply_kunneth(cat, h, hp.triangle.f.src);
    CHECK(ha.dims.dim(Deg{0, 0}) == 1);

    // precondition violation: second map not an H-epimorphism
    Triangle bad = cone_triangle(cat, zero_chain_map(cat, u, shift_complex(cat, u, 2)));
    CHECK_THROWS_AS(verify_sigma_exact(cat, h, bad), Error);
}

TEST_CASE("h-epimorphisms are stable under homotopy pullback")
{
    Dataset d = dataset_rep_z2();
    const CategoryPresentation& cat = d.built.cat;
    const FunctorData& h = d.built.h;
    for (auto& [name, p] : d.cover_epis) {
        REQUIRE(is_h_epi(cat, h, p));
        for (auto& [name2, g] : d.cover_epis) {
            if (!(g.tgt == p.tgt))
                continue;
            HomotopyPullback hp = homotopy_pullback(cat, p, g);
            CHECK(is_h_epi(cat, h, hp.to_y));
        }
    }
}

TEST_CASE("kunneth comparison is an isomorphism")
{
    Dataset d = dataset_genus1();
    const CategoryPresentation& cat = d.built.cat;
    const FunctorData& h = d.built.h;
    std::vector<Complex> window;
    for (auto& [n, c] : d.window)
        window.push_back(c);
    window.push_back(cone(cat, d.cover_epis[0].second).cone);
    for (auto& x : window)
        for (auto& y : window) {
            GradedMap k = kunneth_iso(cat, h, x, y);
            CHECK(k.is_iso());
        }
}

TEST_CASE("dual complex zig-zags are exact identities")
{
    Dataset d = dataset_genus1();
    const CategoryPresentation& cat = d.built.cat;
    Complex x = d.window_complex("X");
    for (const Complex& c : {x, cone(cat, identity_chain_map(cat, x)).cone}) {
        ChainMap cv = coev_chain_map(cat, c);
        ChainMap ev = ev_chain_map(cat, c);
        check_chain_map(cat, cv);
        check_chain_map(cat, ev);
        Complex cd = dual_complex(cat, c);
        // the zig-zag composites reassociate through the explicit associator
        ChainMap a1 = assoc_chain_map(cat, c, cd, c);
        check_chain_map(cat, a1);
        ChainMap z1 = compose_chain(
            cat, tensor_chain_map(cat, identity_chain_map(cat, c), ev),
            compose_chain(cat, a1, tensor_chain_map(cat, cv, identity_chain_map(cat, c))));
        CHECK(z1 == identity_chain_map(cat, c));
        ChainMap a2 = assoc_chain_map(cat, cd, c, cd);
        check_chain_map(cat, a2);
        ChainMap z2 = compose_chain(
            cat, tensor_chain_map(cat, ev, identity_chain_map(cat, cd)),
            compose_chain(cat, a2, tensor_chain_map(cat, identity_chain_map(cat, cd), cv)));
        CHECK(z2 == identity_chain_map(cat, cd));
    }
}

TEST_CASE("dual complex under H reflects dimensions")
{
    Dataset d = dataset_genus1();
    const CategoryPresentation& cat = d.built.cat;
    const FunctorData& h = d.built.h;
    Complex x = d.window_complex("X");
    HomologyData hx = apply_kunneth(cat, h, x);
    HomologyData hd = apply_kunneth(cat, h, dual_complex(cat, x));
    CHECK(hd.dims == dual_graded(hx.dims));
}

TEST_CASE("symmetry chain map is an involutive chain map")
{
    Dataset d = dataset_genus1();
    const CategoryPresentation& cat = d.built.cat;
    Complex x = d.window_complex("X");
    Complex w = cone(cat, d.cover_epis[0].second).cone;
    for (const Complex& a : {x, w})
        for (const Complex& b : {x, w}) {
            ChainMap s = symmetry_chain_map(cat, a, b);
            check_chain_map(cat, s);
            ChainMap s2 = symmetry_chain_map(cat, b, a);
            CHECK(compose_chain(cat, s2, s) == identity_chain_map(cat, tensor_complex(cat, a, b)));
        }
}

TEST_CASE("same strength")
{
    Dataset d = dataset_graded_line();
    const CategoryPresentation& cat = d.built.cat;
    const FunctorData& h = d.built.h;
    std::vector<Complex> window;
    for (auto& [n, c] : d.window)
        window.push_back(c);

    SameStrengthResult same = same_strength(cat, h, h, window);
    CHECK(same.same);
    SameStrengthResult re = same_strength(cat, h, d.extra_functors.at("H2"), window);
    CHECK(re.same);

    // a functor that kills a morphism H does not kill: zero out one hom image.
    // Synthetic data, not a validated functor; exercises the kernel comparison.
    FunctorData broken = h;
    ObjId e0 = cat.object_id("e0");
    broken.on_mor[{e0, e0}][0] = GradedMap::zero(h.on_obj[e0], h.on_obj[e0]);
    SameStrengthResult diff = same_strength(cat, h, broken, window);
    CHECK(!diff.same);
    CHECK(diff.witness.has_value());
}

TEST_CASE("homotopy equivalence testing")
{
    Dataset d = dataset_genus1();
    const CategoryPresentation& cat = d.built.cat;
    Complex u = unit_cx(cat);
    Cone c = cone(cat, identity_chain_map(cat, u));
    CHECK(nullhomotopic(cat, identity_chain_map(cat, c.cone)));
    CHECK(!nullhomotopic(cat, identity_chain_map(cat, u)));
}
