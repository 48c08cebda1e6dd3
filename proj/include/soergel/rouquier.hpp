#pragma once

#include "soergel/complexes.hpp"
#include "soergel/homsolve.hpp"

namespace soergel {

struct BraidWord {
    int n = 0;
    std::vector<int> letters;  // signed: +i for sigma_i, -i for sigma_i^{-1}
};

// "1 2 -1" style: space-separated signed integers.
BraidWord parse_braid_word(const std::string& text, int n);
BraidWord inverse_word(const BraidWord& w);

// F(sigma_i) = (B_i -> R<-1>), F(sigma_i^{-1}) = (R<1> -> B_i), B_i in
// homological degree 0.
Complex rouquier_elementary(int n, int letter);
Complex rouquier_of_word(const BraidWord& w);

// Positive cabled crossing X_{m,n} and negative X'_{m,n} in ambient m+n.
std::vector<int> cabled_crossing_word(int m, int n, bool positive);
Complex cabled_crossing(int m, int n, bool positive);

// r_yz dual with negated quantum and homological degrees; sends F(w) to
// F(w^{-1}) structurally for braid words.
Complex dual_complex(const Complex& x);

// Reidemeister 2 structure maps for X = F(sigma_i), X' = F(sigma_i^{-1}),
// normalized so the identity-braid components of ev and ev' are identities;
// ev o coev' = id and ev' o coev = id hold on the nose.
struct R2Data {
    GradedMap ev;     // X o X' -> 1
    GradedMap coev;   // 1 -> X' o X
    GradedMap evp;    // X' o X -> 1
    GradedMap coevp;  // 1 -> X o X'
    GradedMap h_xxp;  // d = coev' o ev - id
    GradedMap h_xpx;  // d = coev o ev' - id
};
const R2Data& r2_structure_maps(int n, int i);

// Homotopy equivalence F(w) ~ F(w with letters pos, pos+1 removed) when these
// two letters are mutually inverse, by whiskering the elementary R2 data.
HomEquiv r2_cancel_equiv(const BraidWord& w, int pos);

}  // namespace soergel
