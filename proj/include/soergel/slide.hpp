#pragma once

#include "soergel/rouquier.hpp"

namespace soergel {

// A certified slide chain map X_{m,n} o (Y1 [x] Y2) -> (Y2 [x] Y1) o X_{m,n}.
struct SlideMap {
    int m = 0, n = 0;
    std::vector<int> y1, y2;  // word objects in D_m and D_n
    GradedMap map;            // equals cert.fwd
    HomEquiv cert;
};

// Atomic slides, solved and normalized so that the start-dot naturality
// square holds with scalar +1; the dot probe pins the scalar ambiguity left
// by homotopy uniqueness.
const SlideMap& atomic_slide_right();  // (m,n) = (1,2), Y2 = B_1
const SlideMap& atomic_slide_left();   // (m,n) = (2,1), Y1 = B_1

// Fresh solver run of an atomic slide with the given seed, normalized the
// same way; different runs are homotopic on the nose.
SlideMap solve_atomic_slide(int m, int n, uint64_t seed);

// slide_{1_1, B_j} through the Coxeter braid X_{1,k} (ambient 1+k), built
// from the atomic slide and far-commutativity isomorphisms.
SlideMap slide_letter_right(int k, int j);
// slide_{B_j, 1_1} through X_{k,1} (ambient k+1).
SlideMap slide_letter_left(int k, int j);

// General word slide for the positive cabled crossing, assembled per the
// three-stage reduction: Y1 through first, then Y2, then the tensorator.
SlideMap slide_for_word(int m, int n, const std::vector<int>& y1, const std::vector<int>& y2);

// Slide for an arbitrary word object of D_{m,n} (letters != m, possibly
// interleaved), one letter at a time.
SlideMap slide_for_object(int m, int n, const std::vector<int>& word);

// Negative-crossing slide, by conjugating the positive (n,m)-slide with the
// evaluation and coevaluation maps of the mutually inverse cabled crossings.
SlideMap slide_negative(int m, int n, const std::vector<int>& y1, const std::vector<int>& y2);

const SlideMap& slide_cached(int m, int n, const std::vector<int>& y1,
                             const std::vector<int>& y2);

// Solver equivalence X_{m,n} ~ (1_{n-1} [x] X_{m,1}) o ... o (X_{m,1} [x] 1_{n-1}),
// cached per (m,n).
const HomEquiv& coxeter_factorization_equiv(int m, int n);

// ev/coev pair for the mutually inverse cabled words, composed from
// elementary Reidemeister 2 data; fwd is the coevaluation 1 -> F(w) o F(w^{-1})
// and ev o coev = id holds on the nose.
HomEquiv unit_to_wwinv_equiv(const BraidWord& w);

}  // namespace soergel
