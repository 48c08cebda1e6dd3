#pragma once

#include <optional>
#include <random>

#include "soergel/complexes.hpp"
#include "soergel/linalg.hpp"

namespace soergel {

// Q-basis of the degree-d bimodule maps u -> v.
std::vector<BimodMorphism> hom_space_basis(const BSObject& u, const BSObject& v, int d);

// Same, cached across calls (shift-normalized internally).
const std::vector<BimodMorphism>& hom_space_basis_cached(const BSObject& u, const BSObject& v,
                                                         int d);

// Coordinates of m in the span of basis, if it lies there.
std::optional<std::vector<Rat>> coords_in_basis(const std::vector<BimodMorphism>& basis,
                                                const BimodMorphism& m);

// Linear systems whose unknowns are graded maps between fixed complexes and
// whose constraints are of the form  sum_k c_k * L_k o U_{i_k} o R_k = rhs
// for fixed graded maps L_k, R_k.  Entry degrees are forced by the shifts,
// so the unknown coordinate space is finite automatically.
class MapSolver {
public:
    struct Term {
        Rat coeff;
        std::optional<GradedMap> left;
        int unknown;
        std::optional<GradedMap> right;
    };

    int add_unknown(ComplexPtr src, ComplexPtr tgt, int hdeg, int qdeg = 0);

    // A single rational unknown a; a term {c, L, a, R} contributes c*a*(L o R).
    int add_scalar_unknown();

    // terms for d(U_i) = D_tgt o U_i - (-1)^{hdeg_i} U_i o D_src
    std::vector<Term> d_of_unknown(int i) const;

    void add_equation(std::vector<Term> terms, const GradedMap& rhs);

    // One exact solution with zeros in all free slots, or nullopt.
    std::optional<std::vector<GradedMap>> solve();

    // Basis of the solution space of the homogeneous system (all rhs zero).
    std::vector<std::vector<GradedMap>> nullspace();

    // Value of a scalar unknown in the particular solution.
    Rat scalar_value(int unknown) const;

private:
    // Unknown blocks range over bases of the bimodule-hom spaces, so every
    // solution is a morphism of the category, not just a left-linear map.
    struct Slot {
        int block_t, block_s;
        const std::vector<BimodMorphism>* basis;
        int offset;
    };
    struct Unknown {
        ComplexPtr src, tgt;
        int hdeg, qdeg;
        bool is_scalar = false;
        std::vector<Slot> slots;
        int offset;
    };

    void assemble();
    std::vector<GradedMap> rebuild(const std::vector<Rat>& x) const;

    std::vector<Unknown> unknowns_;
    std::vector<std::pair<std::vector<Term>, GradedMap>> equations_;
    int ncols_ = 0;
    bool assembled_ = false;
    std::optional<RowReducer> reducer_;
    std::optional<std::vector<Rat>> solution_;
};

// Space of closed degree-0 maps X -> Y (chain maps), as a Q-basis.
std::vector<GradedMap> chain_map_space(ComplexPtr x, ComplexPtr y, int qdeg = 0);

// Exact h with d(h) = delta, or nullopt.  delta must be closed.
std::optional<GradedMap> solve_homotopy(const GradedMap& delta);

// Nullhomotopy test: h with d(h) = f for a closed f.
bool is_nullhomotopic(const GradedMap& f);

// Given a closed degree-0 map fwd, solve linearly for a homotopy inverse and
// both homotopies; nullopt if fwd is not a homotopy equivalence witnessed at
// this level.
std::optional<HomEquiv> complete_equivalence(const GradedMap& fwd);

// Search for a homotopy equivalence certificate between X and Y.  Candidates
// for the forward map are chain-map basis vectors followed by seeded random
// combinations; for each candidate the inverse and both homotopies are one
// linear solve.  "nullopt" means the search failed, not a proof of
// non-equivalence.
std::optional<HomEquiv> solve_homotopy_equivalence(ComplexPtr x, ComplexPtr y,
                                                   uint64_t seed = 1);

// dim H^k of the morphism complex Hom(A, B) in quantum degree qdeg, for k in
// [klo, khi].
std::vector<int> hom_complex_cohomology_dims(const Complex& a, const Complex& b, int qdeg,
                                             int klo, int khi);

// Quantum degrees in which Hom(A, B) can be nonzero.
std::vector<int> feasible_qdegs(const Complex& a, const Complex& b);

// Spec-facing alias: a MapSolver instance is the artifact's LinearSystem.
using LinearSystem = MapSolver;
inline std::optional<std::vector<GradedMap>> solve_morphism_equation(LinearSystem& sys) {
    return sys.solve();
}

}  // namespace soergel
