#pragma once

#include <memory>
#include <optional>

#include "soergel/bimod.hpp"

namespace soergel {

struct Summand {
    BSObject obj;
    int hdeg = 0;
    bool operator==(const Summand& o) const { return obj == o.obj && hdeg == o.hdeg; }
    bool operator!=(const Summand& o) const { return !(*this == o); }
};

// Bounded complex over the Bott-Samelson category: an ordered list of
// homologically shifted objects plus a differential matrix.  Summand order is
// part of the value; tensoring merges summand lists lexicographically, which
// is what makes the tensor strictly associative.
struct Complex {
    int n = 0;
    std::vector<Summand> summands;
    std::map<std::pair<int, int>, BimodMorphism> diff;  // key (to, from)

    int size() const { return (int)summands.size(); }
    const BimodMorphism* diff_at(int to, int from) const;
    void set_diff(int to, int from, BimodMorphism m);

    bool operator==(const Complex& o) const {
        return n == o.n && summands == o.summands && diff == o.diff;
    }
    bool operator!=(const Complex& o) const { return !(*this == o); }

    // d connects hdeg a -> a+1, entries are quantum-degree-0 maps of the
    // right objects, and d o d = 0 exactly.
    void validate() const;

    std::string str() const;
};

using ComplexPtr = std::shared_ptr<const Complex>;
ComplexPtr share(Complex c);

Complex single_complex(const BSObject& obj, int hdeg = 0);
Complex unit_complex(int n);

Complex tensor_complexes(const Complex& x, const Complex& y);    // circ_1
Complex boxtimes_complexes(const Complex& x, const Complex& y);  // external product

// Deliberately wrong summand order (sorted by total homological degree
// instead of the lexicographic merge): reproduces the failure of strict
// associativity and exists only for that negative check.
Complex tensor_complexes_misordered(const Complex& x, const Complex& y);
Complex qshift_complex(const Complex& x, int j);
Complex hshift_complex(const Complex& x, int k);  // d picks up (-1)^k
Complex color_shift(const Complex& x, int left, int right);

// A graded collection of degree-homogeneous maps between two complexes:
// hdeg 0 for chain maps, hdeg -1 for homotopies.  Blocks connect source
// summand s to target summand t with hdeg(t) = hdeg(s) + hdeg; every block
// is a BimodMorphism of declared degree qdeg.
struct GradedMap {
    ComplexPtr src, tgt;
    int hdeg = 0;
    int qdeg = 0;
    std::map<std::pair<int, int>, BimodMorphism> blocks;  // key (t, s)

    const BimodMorphism* block_at(int t, int s) const;
    void set_block(int t, int s, BimodMorphism m);
    bool is_zero() const;
    void validate_shape() const;

    GradedMap& operator+=(const GradedMap& o);
    GradedMap& operator-=(const GradedMap& o);
    GradedMap operator+(const GradedMap& o) const;
    GradedMap operator-(const GradedMap& o) const;
    GradedMap operator-() const;
    GradedMap operator*(const Rat& c) const;
    bool operator==(const GradedMap& o) const;

    std::string str() const;
};

GradedMap zero_map(ComplexPtr src, ComplexPtr tgt, int hdeg, int qdeg = 0);
GradedMap identity_map(ComplexPtr x);
GradedMap differential_map(ComplexPtr x);  // X -> X of hdeg +1
GradedMap compose(const GradedMap& g, const GradedMap& f);

// d(h) = d_tgt o h - (-1)^{hdeg(h)} h o d_src.
GradedMap differential_of(const GradedMap& h);
bool is_chain_map(const GradedMap& f);

// Tensor of graded maps with the Koszul sign (-1)^{hdeg(g) * a} on the
// component whose first-factor source summand sits in homological degree a.
GradedMap tensor_maps(const GradedMap& f, const GradedMap& g);
GradedMap boxtimes_maps(const GradedMap& f, const GradedMap& g);
GradedMap color_shift(const GradedMap& f, int left, int right);
GradedMap qshift_map(const GradedMap& f, int j);
// Independent quantum shifts of source and target; qdeg changes by dtgt - dsrc.
GradedMap reshift_map(const GradedMap& f, int dsrc, int dtgt);

// Promote an object-level morphism to a one-block map of single complexes.
GradedMap single_map(const BimodMorphism& m, int src_hdeg = 0, int tgt_hdeg = 0);

// cone of a degree-0 chain map f: X -> Y: summands of X at hdeg-1 with -d_X,
// then summands of Y, with f as the connecting block.
Complex cone(const GradedMap& f);

// Homotopy equivalence certificate: d(h_src) = bwd o fwd - id_src and
// d(h_tgt) = fwd o bwd - id_tgt, all exact.
struct HomEquiv {
    GradedMap fwd, bwd, h_src, h_tgt;
    void verify() const;
};

HomEquiv identity_equiv(ComplexPtr x);
HomEquiv compose_equiv(const HomEquiv& second, const HomEquiv& first);
HomEquiv inverse_equiv(const HomEquiv& e);
HomEquiv tensor_equiv(const HomEquiv& a, const HomEquiv& b);
HomEquiv color_shift(const HomEquiv& e, int left, int right);
HomEquiv qshift_equiv(const HomEquiv& e, int j);

// Exact iso X o Y -> Y o X for complexes over distant color sets, built from
// four-valent crossings with the Koszul swap sign.
HomEquiv far_comm_equiv(const Complex& x, const Complex& y);

}  // namespace soergel
