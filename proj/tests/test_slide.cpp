#include "doctest.h"

#include "soergel/homsolve.hpp"
#include "soergel/slide.hpp"

using namespace soergel;

TEST_CASE("atomic slides are certified and normalized") {
    const SlideMap& r = atomic_slide_right();
    r.cert.verify();
    CHECK(r.map == r.cert.fwd);
    const SlideMap& l = atomic_slide_left();
    l.cert.verify();
    // dim H^0 of the morphism complex is 1: unique up to homotopy and scalar
    auto dims = hom_complex_cohomology_dims(*r.map.src, *r.map.tgt, 0, -1, 1);
    CHECK(dims == std::vector<int>{0, 1, 0});
}

TEST_CASE("two solver runs give homotopic atomic slides after normalization") {
    const SlideMap& s = atomic_slide_right();
    SlideMap second = solve_atomic_slide(1, 2, 12345);
    second.cert.verify();
    GradedMap diff = s.map - second.map;
    CHECK(solve_homotopy(diff).has_value());
}

TEST_CASE("single-factor word slide is the atomic slide") {
    SlideMap w = slide_for_word(1, 2, {}, {1});
    CHECK(w.map == atomic_slide_right().map);
    w.cert.verify();
}

TEST_CASE("degenerate slides are identities") {
    SlideMap d0 = slide_for_word(0, 2, {}, {1});
    CHECK(d0.map == identity_map(d0.map.src));
    SlideMap d1 = slide_for_word(2, 0, {1}, {});
    CHECK(d1.map == identity_map(d1.map.src));
    SlideMap e = slide_for_word(2, 2, {}, {});
    CHECK(e.map == identity_map(e.map.src));
}

TEST_CASE("letter slides through longer Coxeter braids certify") {
    for (int j = 1; j <= 2; ++j) {
        SlideMap s = slide_letter_right(3, j);
        s.cert.verify();
        CHECK(*s.map.src == tensor_complexes(cabled_crossing(1, 3, true),
                                             single_complex(bs_object(4, {j + 1}))));
        CHECK(*s.map.tgt == tensor_complexes(single_complex(bs_object(4, {j})),
                                             cabled_crossing(1, 3, true)));
    }
    SlideMap sl = slide_letter_left(3, 2);
    sl.cert.verify();
}

TEST_CASE("coxeter factorization equivalence") {
    const HomEquiv& phi = coxeter_factorization_equiv(2, 2);
    phi.verify();
    CHECK(*phi.fwd.src == cabled_crossing(2, 2, true));
}

TEST_CASE("word slides for both factors with the tensorator reorder") {
    SlideMap s = slide_for_word(2, 2, {1}, {1});
    s.cert.verify();
    // source is X o (Y1 [x] Y2) with word (1, 3); target (Y2 [x] Y1) o X
    CHECK(s.map.src->summands[0].obj.word == std::vector<int>{2, 1, 3, 2, 1, 3});
    CHECK(s.map.tgt->summands[0].obj.word == std::vector<int>{1, 3, 2, 1, 3, 2});
}

TEST_CASE("mixed word slides and the tensorator square") {
    int m = 2, n = 2;
    SlideMap s13 = slide_for_object(m, n, {1, 3});
    s13.cert.verify();
    SlideMap s31 = slide_for_object(m, n, {3, 1});
    s31.cert.verify();
    ComplexPtr x = share(cabled_crossing(m, n, true));
    BimodMorphism theta = block_swap(4, {1}, {3});          // (1,3) -> (3,1)
    BimodMorphism theta_sw = swap_mn(theta, m, n);          // (3,1) -> (1,3)
    GradedMap defect =
        compose(tensor_maps(single_map(theta_sw), identity_map(x)), s13.map) -
        compose(s31.map, tensor_maps(identity_map(x), single_map(theta)));
    CHECK(differential_of(defect).is_zero());
    // the compatibility square commutes up to homotopy with scalar one
    CHECK(solve_homotopy(defect).has_value());
}

TEST_CASE("negative slide certificate") {
    SlideMap s = slide_negative(1, 2, {}, {1});
    s.cert.verify();
    CHECK(*s.map.src ==
          tensor_complexes(cabled_crossing(1, 2, false), single_complex(bs_object(3, {2}))));
    CHECK(*s.map.tgt ==
          tensor_complexes(single_complex(bs_object(3, {1})), cabled_crossing(1, 2, false)));
}

TEST_CASE("composite R2 data stays on the nose") {
    BraidWord w{3, {2, 1}};
    HomEquiv u = unit_to_wwinv_equiv(w);
    // bwd o fwd = ev o coev' = id on the nose
    CHECK(compose(u.bwd, u.fwd) == identity_map(u.fwd.src));
    CHECK(u.h_src.is_zero());
    u.verify();
}

TEST_CASE("r2 cancellation whiskers into words") {
    BraidWord w{3, {2, 1, -1}};
    HomEquiv e = r2_cancel_equiv(w, 1);
    e.verify();
    CHECK(*e.fwd.src == rouquier_of_word(w));
    CHECK(*e.fwd.tgt == rouquier_of_word({3, {2}}));
}
