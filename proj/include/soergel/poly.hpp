#pragma once

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace soergel {

using Rat = mpq_class;

/// Exponent sequence of a monomial; length equals the ambient variable count.
using Expo = std::vector<int>;

// Sparse multivariate polynomial over Q in variables x_1..x_n, graded with
// deg x_i = 2.  The ambient variable count n is part of the value; mixing
// polynomials with different n is an error, never a silent promotion.
struct Poly {
    int n = 0;
    std::map<Expo, Rat> terms;  // no zero coefficients stored

    Poly() = default;
    explicit Poly(int nvars) : n(nvars) {}

    static Poly zero(int n) { return Poly(n); }
    static Poly constant(int n, const Rat& c);
    static Poly variable(int n, int i);  // x_i, 1-based
    static Poly alpha(int n, int i);     // x_i - x_{i+1}

    bool is_zero() const { return terms.empty(); }
    bool is_constant() const;
    Rat constant_value() const;  // requires is_constant()

    // Graded degree (2 * total exponent) if homogeneous, throws otherwise.
    // Degree of the zero polynomial is reported as INT_MIN.
    int degree() const;
    bool is_homogeneous() const;
    // Largest graded degree among terms (0 for the zero polynomial).
    int max_degree() const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Rat& c) const;
    bool operator==(const Poly& o) const { return n == o.n && terms == o.terms; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    void add_term(const Expo& e, const Rat& c);

    std::string str() const;
};

// s_i action: swap x_i and x_{i+1}.  1 <= i <= n-1.
Poly transpose_action(const Poly& p, int i);

// Demazure operator  f |-> (f - s_i f) / (x_i - x_{i+1}).  Always exact.
Poly demazure(const Poly& p, int i);

// Writes p = a + x_i * b with a, b both s_i-invariant; returns (a, b).
std::pair<Poly, Poly> invariant_decompose(const Poly& p, int i);

// Variable shift j_{a|c}: R_n -> R_{a+n+c}, x_i |-> x_{i+a}.
struct VarShift {
    int a = 0;
    int c = 0;
};
Poly shift_vars(const Poly& p, const VarShift& s);

// Apply a permutation of variables: x_i |-> x_{perm[i-1]}.
Poly permute_vars(const Poly& p, const std::vector<int>& perm);

// Dynkin involution substitution x_i |-> -x_{n+1-i}.
Poly dynkin_flip(const Poly& p);

bool is_invariant(const Poly& p, int i);

// All exponent vectors in n variables with total exponent = halfdeg,
// in increasing map order.  Used to index homogeneous components.
std::vector<Expo> monomials_of_halfdegree(int n, int halfdeg);

// Grammar: sums of terms "c", "c*x3", "x1^2*x3", "-1/2*x2"; whitespace free
// or separated around +/-.
Poly parse_poly(const std::string& text, int n);

}  // namespace soergel
