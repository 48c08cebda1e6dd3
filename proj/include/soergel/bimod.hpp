#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "soergel/poly.hpp"

namespace soergel {

// A Bott-Samelson bimodule B_{word}<qshift> over R_n, as a free left
// R_n-module of rank 2^len(word).  The left basis element for a bitmask m
// is the pure tensor 1 (x) z_1 (x) ... (x) z_k with z_t = x_{word[t-1]} when
// bit t-1 of m is set and z_t = 1 otherwise.
struct BSObject {
    int n = 0;
    std::vector<int> word;
    int qshift = 0;

    int len() const { return (int)word.size(); }
    int rank() const { return 1 << word.size(); }
    int elt_degree(uint32_t mask) const {
        return 2 * __builtin_popcount(mask) - len() + qshift;
    }

    bool operator==(const BSObject& o) const {
        return n == o.n && word == o.word && qshift == o.qshift;
    }
    bool operator!=(const BSObject& o) const { return !(*this == o); }
    bool operator<(const BSObject& o) const {
        if (n != o.n) return n < o.n;
        if (word != o.word) return word < o.word;
        return qshift < o.qshift;
    }

    BSObject shifted(int dq) const { return {n, word, qshift + dq}; }
    std::string str() const;  // e.g. "B[1,2,1]<-3>@n=3"
};

BSObject unit_object(int n, int qshift = 0);
BSObject bs_object(int n, std::vector<int> word, int qshift = 0);
BSObject concat(const BSObject& a, const BSObject& b);
BSObject color_shift(const BSObject& a, int left, int right);

// A finite left-linear combination of left basis elements.
struct BimodElement {
    BSObject obj;
    std::map<uint32_t, Poly> coeffs;

    bool is_zero() const { return coeffs.empty(); }
    void add(uint32_t mask, const Poly& p);
    BimodElement& operator+=(const BimodElement& o);
    BimodElement operator*(const Rat& c) const;
    bool operator==(const BimodElement& o) const {
        return obj == o.obj && coeffs == o.coeffs;
    }
};

// Unique left-basis expansion of a pure tensor slots[0] (x) ... (x) slots[k]
// over the invariant subrings determined by word.
BimodElement normal_form(int n, const std::vector<int>& word, const std::vector<Poly>& slots,
                         int qshift = 0);

BimodElement basis_element(const BSObject& obj, uint32_t mask);
BimodElement right_mult_var(const BimodElement& e, int j);
BimodElement right_mult_poly(const BimodElement& e, const Poly& p);
BimodElement left_mult_poly(const BimodElement& e, const Poly& p);

// A left-module map between Bott-Samelson bimodules, stored as a matrix over
// the left bases.  Bimodule-ness (commutation with the right action) is a
// certified property, not a representation constraint.
struct BimodMorphism {
    BSObject src, tgt;
    int degree = 0;
    std::vector<Poly> mat;  // tgt.rank() x src.rank(), row-major

    BimodMorphism() = default;
    BimodMorphism(BSObject s, BSObject t, int deg);

    Poly& at(int trow, int scol) { return mat[(size_t)trow * src.rank() + scol]; }
    const Poly& at(int trow, int scol) const { return mat[(size_t)trow * src.rank() + scol]; }

    bool is_zero() const;
    BimodElement apply(const BimodElement& e) const;
    BimodElement apply_basis(uint32_t mask) const;

    BimodMorphism& operator+=(const BimodMorphism& o);
    BimodMorphism& operator-=(const BimodMorphism& o);
    BimodMorphism operator+(const BimodMorphism& o) const;
    BimodMorphism operator-(const BimodMorphism& o) const;
    BimodMorphism operator-() const;
    BimodMorphism operator*(const Rat& c) const;
    bool operator==(const BimodMorphism& o) const;

    // Move the quantum shifts of source and target without touching entries;
    // declared degree changes by dtgt - dsrc.
    BimodMorphism reshifted(int dsrc, int dtgt) const;

    std::string str() const;
};

BimodMorphism identity_morphism(const BSObject& obj);
BimodMorphism zero_morphism(const BSObject& src, const BSObject& tgt, int degree);
BimodMorphism compose(const BimodMorphism& g, const BimodMorphism& f);  // g after f
BimodMorphism tensor_h(const BimodMorphism& f, const BimodMorphism& g);  // horizontal
BimodMorphism color_shift(const BimodMorphism& f, int left, int right);
BimodMorphism boxtimes(const BimodMorphism& f, const BimodMorphism& g);
BSObject boxtimes(const BSObject& a, const BSObject& b);

bool entries_homogeneous(const BimodMorphism& f);
bool is_bimodule_map(const BimodMorphism& f);

// Diagrammatic generators, between unshifted objects.
BimodMorphism gen_startdot(int n, int i);                // R -> B_i, degree 1
BimodMorphism gen_enddot(int n, int i);                  // B_i -> R, degree 1
BimodMorphism gen_merge(int n, int i);                   // B_i B_i -> B_i, degree -1
BimodMorphism gen_split(int n, int i);                   // B_i -> B_i B_i, degree -1
BimodMorphism gen_sixv(int n, int i, bool up);           // degree 0, solved from anchors
BimodMorphism gen_fourv(int n, int i, int j);            // B_i B_j -> B_j B_i distant
BimodMorphism gen_polybox(int n, const Poly& p);         // R -> R, multiplication

struct GeneratorKind {
    enum Kind { startdot, enddot, merge, split, sixv, fourv, polybox } kind;
    int i = 0;
    int j = 0;        // fourv second color
    bool up = true;   // sixv orientation
    Poly p;           // polybox payload
};
BimodMorphism generator_morphism(const GeneratorKind& k, int n);

// Product of four-valent crossings moving the left block past the right
// block; all colors of left_word must be distant from all of right_word.
BimodMorphism block_swap(int n, const std::vector<int>& left_word,
                         const std::vector<int>& right_word);

// Tensorator of D_{m,n}: (c_i [x] 1) o (1 [x] c_j) -> (1 [x] c_j) o (c_i [x] 1),
// the (k,l)-shuffle of four-valent vertices.  word_i lives in D_m, word_j in D_n.
BimodMorphism tensorator(int m, int n, const std::vector<int>& word_i,
                         const std::vector<int>& word_j);

// swap_{m,n}: D_{m,n} -> D_{n,m}.  Colors are moved by the (m-1,n-1)-shuffle,
// variables by the (m,n)-shuffle.  Objects may not use color m.
BSObject swap_mn(const BSObject& obj, int m, int n);
BimodMorphism swap_mn(const BimodMorphism& f, int m, int n);

// Dynkin diagram automorphism r_x: covariant monoidal, c_i -> c_{n-i},
// x_i -> -x_{n+1-i}.
BSObject rx_object(const BSObject& obj);
BimodElement rx_element(const BimodElement& e);
BimodMorphism apply_rx(const BimodMorphism& f);

// pi-rotation r_yz: contravariant, reverses words.  rotate_pi(f): rev(tgt) -> rev(src).
BimodMorphism rotate_pi(const BimodMorphism& f);

enum class Symmetry { rx, ryz };
inline BimodMorphism apply_symmetry(Symmetry s, const BimodMorphism& f) {
    return s == Symmetry::rx ? apply_rx(f) : rotate_pi(f);
}

// Evaluation cap B_rev(w) o B_w -> R and cup R -> B_w o B_rev(w), degree 0.
BimodMorphism cap_morphism(int n, const std::vector<int>& word);
BimodMorphism cup_morphism(int n, const std::vector<int>& word);

namespace detail {
// Q-basis of the space of degree-d bimodule maps u -> v (right-action
// commutation imposed on left-linear maps).
std::vector<BimodMorphism> hom_basis(const BSObject& u, const BSObject& v, int d);
}  // namespace detail

}  // namespace soergel
