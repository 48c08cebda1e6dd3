#pragma once

#include "soergel/slide.hpp"

namespace soergel {

// phi/psi placements of a morphism f0 of D_n inside D_{m+n}: psi shifts
// colors by m, phi leaves them in place.
BimodMorphism psi_place(const BimodMorphism& f0, int m);
BimodMorphism phi_place(const BimodMorphism& f0, int m);

// Closed degree-0 defect (phi(f) o_1 id_X) o_2 slide_Y - slide_{Y'} o_2 (id_X o_1 psi(f))
// for f = id_{1_m} [x] f0, f0: Y -> Y' in D_n.
GradedMap naturality_defect(int m, int n, const BimodMorphism& f0);

// h with d(h) = naturality_defect(f0); direct exact solve.
std::optional<GradedMap> solve_slide_homotopy(int m, int n, const BimodMorphism& f0);

// Composition rules for homotopies.  Each returns a homotopy whose d-check
// against the appropriate defect is the caller's verification.
//
// h for f' o_2 f from h_{f'}, h_f.
GradedMap h_vcomp(int m, int n, const BimodMorphism& f0, const BimodMorphism& f0p,
                  const GradedMap& h_f, const GradedMap& h_fp);
// h for id_W o_1 f o_1 id_Z from h_f (W, Z words in D_n).
GradedMap h_hcomp(int m, int n, const std::vector<int>& w, const BimodMorphism& f0,
                  const std::vector<int>& z, const GradedMap& h_f);
// h for id_{1_m} [x] f0 with respect to X_{m,n}, from the m = 1 homotopy.
GradedMap h_coxeter_assembly(int m, int n, const BimodMorphism& f0, const GradedMap& h_1);
// h for f0 = id_{1_l} [x] f' [x] id_{1_{n-l-k}} at (1,n), from the (1,k) homotopy.
GradedMap h_parabolic_embed(int l, int k, int n, const BimodMorphism& fprime,
                            const GradedMap& h_small);

// Slide for cone(f): blocks [slide_Y, 0; -h_f, slide_{Y'}], certified.
SlideMap cone_slide(int m, int n, const BimodMorphism& f0, const GradedMap& h_f);

// Truncated tau table on bar elements over a finite family of word objects
// and closed morphisms of D_{m,n}.  The registry extends the generating
// family by the pairwise composites, deduplicated by value, so the length-1
// assignment is a function of the morphism and the bar differential is
// evaluated consistently.
struct TauTable {
    int m = 0, n = 0, rmax = 2;
    std::vector<std::vector<int>> objects;            // word objects of D_n
    std::vector<BimodMorphism> morphisms;             // generating family
    std::map<std::vector<int>, GradedMap> slides;     // r = 0, keyed by word
    std::vector<GradedMap> h1;                        // r = 1, per family member

    std::vector<BimodMorphism> registry;              // family ++ composites
    std::vector<GradedMap> registry_h;
    std::map<std::pair<int, int>, int> composite_id;  // family pair -> registry id

    // r = 2, keyed by registry ids (family ids come first)
    std::map<std::pair<int, int>, GradedMap> tau2;
    // r = 3, keyed by family triples (i applied after j applied after k)
    std::map<std::tuple<int, int, int>, GradedMap> tau3;
};

// Builds the table for bar length <= rmax (2 or 3; length 3 multiplies the
// number of solves by the composable-triple count).  Morphism family:
// whiskered generators between words of length <= maxlen over D_n, plus
// linear polynomial boxes.  Throws if any antiderivative fails to exist.
TauTable build_tau_table(int m, int n, int rmax = 2, int maxlen = 1);

// d(tau2) = phi(f_i) o h_{f_j} - h_{f_i o f_j} + h_{f_i} o psi(f_j) over
// registry ids; returns the right-hand side for verification.
GradedMap tau2_rhs(const TauTable& table, int i, int j);

// Bar image of a length-3 element over family ids.
GradedMap tau3_rhs(const TauTable& table, int i, int j, int k);

}  // namespace soergel
