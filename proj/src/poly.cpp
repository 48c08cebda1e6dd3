#include "soergel/poly.hpp"

#include <algorithm>
#include <climits>
#include <sstream>

namespace soergel {

namespace {

void check_same_n(const Poly& a, const Poly& b) {
    if (a.n != b.n)
        throw std::invalid_argument("polynomial ambient mismatch: " + std::to_string(a.n) +
                                    " vs " + std::to_string(b.n));
}

int total(const Expo& e) {
    int t = 0;
    for (int v : e) t += v;
    return t;
}

}  // namespace

Poly Poly::constant(int n, const Rat& c) {
    Poly p(n);
    if (c != 0) p.terms.emplace(Expo(n, 0), c);
    return p;
}

Poly Poly::variable(int n, int i) {
    if (i < 1 || i > n) throw std::out_of_range("variable index out of range");
    Poly p(n);
    Expo e(n, 0);
    e[i - 1] = 1;
    p.terms.emplace(std::move(e), Rat(1));
    return p;
}

Poly Poly::alpha(int n, int i) {
    return variable(n, i) - variable(n, i + 1);
}

bool Poly::is_constant() const {
    if (terms.empty()) return true;
    return terms.size() == 1 && total(terms.begin()->first) == 0;
}

Rat Poly::constant_value() const {
    if (terms.empty()) return Rat(0);
    if (!is_constant()) throw std::logic_error("not a constant polynomial");
    return terms.begin()->second;
}

int Poly::degree() const {
    if (terms.empty()) return INT_MIN;
    int d = 2 * total(terms.begin()->first);
    for (const auto& [e, c] : terms)
        if (2 * total(e) != d) throw std::logic_error("degree of inhomogeneous polynomial");
    return d;
}

bool Poly::is_homogeneous() const {
    if (terms.empty()) return true;
    int d = total(terms.begin()->first);
    for (const auto& [e, c] : terms)
        if (total(e) != d) return false;
    return true;
}

int Poly::max_degree() const {
    int d = 0;
    for (const auto& [e, c] : terms) d = std::max(d, 2 * total(e));
    return d;
}

void Poly::add_term(const Expo& e, const Rat& c) {
    if (c == 0) return;
    auto it = terms.find(e);
    if (it == terms.end()) {
        terms.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

Poly& Poly::operator+=(const Poly& o) {
    check_same_n(*this, o);
    for (const auto& [e, c] : o.terms) add_term(e, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    check_same_n(*this, o);
    for (const auto& [e, c] : o.terms) add_term(e, -c);
    return *this;
}

Poly Poly::operator+(const Poly& o) const {
    Poly r = *this;
    r += o;
    return r;
}

Poly Poly::operator-(const Poly& o) const {
    Poly r = *this;
    r -= o;
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    check_same_n(*this, o);
    Poly r(n);
    for (const auto& [e1, c1] : terms) {
        for (const auto& [e2, c2] : o.terms) {
            Expo e(n);
            for (int k = 0; k < n; ++k) e[k] = e1[k] + e2[k];
            r.add_term(e, c1 * c2);
        }
    }
    return r;
}

Poly Poly::operator-() const {
    Poly r(n);
    for (const auto& [e, c] : terms) r.terms.emplace(e, -c);
    return r;
}

Poly Poly::operator*(const Rat& c) const {
    Poly r(n);
    if (c == 0) return r;
    for (const auto& [e, k] : terms) r.terms.emplace(e, k * c);
    return r;
}

std::string Poly::str() const {
    if (terms.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms) {
        Rat a = c;
        if (first) {
            if (a < 0) { out << "-"; a = -a; }
        } else {
            out << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool has_var = total(e) > 0;
        bool coeff_shown = !has_var || a != 1;
        if (coeff_shown) out << a.get_str();
        bool need_star = coeff_shown;
        for (int k = 0; k < n; ++k) {
            if (e[k] == 0) continue;
            if (need_star) out << "*";
            out << "x" << (k + 1);
            if (e[k] > 1) out << "^" << e[k];
            need_star = true;
        }
    }
    return out.str();
}

Poly transpose_action(const Poly& p, int i) {
    if (i < 1 || i >= p.n) throw std::out_of_range("transpose index out of range");
    Poly r(p.n);
    for (const auto& [e, c] : p.terms) {
        Expo f = e;
        std::swap(f[i - 1], f[i]);
        r.add_term(f, c);
    }
    return r;
}

Poly demazure(const Poly& p, int i) {
    if (i < 1 || i >= p.n) throw std::out_of_range("demazure index out of range");
    // On a monomial x_i^a x_{i+1}^b m (m free of x_i, x_{i+1}):
    //   a > b:  sum_{j=0}^{a-b-1} x_i^{b+j} x_{i+1}^{a-1-j} m
    //   a < b:  minus the mirrored sum
    //   a = b:  0
    Poly r(p.n);
    for (const auto& [e, c] : p.terms) {
        int a = e[i - 1], b = e[i];
        if (a == b) continue;
        int lo = std::min(a, b), hi = std::max(a, b);
        Rat s = (a > b) ? c : -c;
        for (int j = lo; j <= hi - 1; ++j) {
            Expo f = e;
            f[i - 1] = j;
            f[i] = hi + lo - 1 - j;
            r.add_term(f, s);
        }
    }
    return r;
}

std::pair<Poly, Poly> invariant_decompose(const Poly& p, int i) {
    Poly b = demazure(p, i);
    Poly a = p - Poly::variable(p.n, i) * b;
    return {std::move(a), std::move(b)};
}

Poly shift_vars(const Poly& p, const VarShift& s) {
    if (s.a < 0 || s.c < 0) throw std::invalid_argument("negative variable shift");
    Poly r(s.a + p.n + s.c);
    for (const auto& [e, c] : p.terms) {
        Expo f(r.n, 0);
        for (int k = 0; k < p.n; ++k) f[k + s.a] = e[k];
        r.terms.emplace(std::move(f), c);
    }
    return r;
}

Poly permute_vars(const Poly& p, const std::vector<int>& perm) {
    if ((int)perm.size() != p.n) throw std::invalid_argument("permutation size mismatch");
    Poly r(p.n);
    for (const auto& [e, c] : p.terms) {
        Expo f(p.n, 0);
        for (int k = 0; k < p.n; ++k) f[perm[k] - 1] = e[k];
        r.add_term(f, c);
    }
    return r;
}

Poly dynkin_flip(const Poly& p) {
    Poly r(p.n);
    for (const auto& [e, c] : p.terms) {
        Expo f(p.n, 0);
        int sign = 0;
        for (int k = 0; k < p.n; ++k) {
            f[p.n - 1 - k] = e[k];
            sign += e[k];
        }
        r.add_term(f, (sign % 2 == 0) ? c : -c);
    }
    return r;
}

bool is_invariant(const Poly& p, int i) { return transpose_action(p, i) == p; }

std::vector<Expo> monomials_of_halfdegree(int n, int halfdeg) {
    std::vector<Expo> out;
    if (halfdeg < 0) return out;
    Expo cur(n, 0);
    // lexicographic enumeration by recursion on the first slot
    struct Rec {
        int n;
        std::vector<Expo>& out;
        Expo& cur;
        void go(int pos, int left) {
            if (pos == n - 1) {
                cur[pos] = left;
                out.push_back(cur);
                cur[pos] = 0;
                return;
            }
            for (int v = 0; v <= left; ++v) {
                cur[pos] = v;
                go(pos + 1, left - v);
            }
            cur[pos] = 0;
        }
    } rec{n, out, cur};
    if (n == 0) {
        if (halfdeg == 0) out.push_back({});
        return out;
    }
    rec.go(0, halfdeg);
    return out;
}

namespace {

struct PolyParser {
    const std::string& s;
    size_t pos = 0;
    int n;

    void skip_ws() {
        while (pos < s.size() && isspace((unsigned char)s[pos])) ++pos;
    }

    [[noreturn]] void fail(const std::string& msg) {
        throw std::invalid_argument("poly parse error at " + std::to_string(pos) + ": " + msg);
    }

    Rat parse_number() {
        size_t start = pos;
        while (pos < s.size() && isdigit((unsigned char)s[pos])) ++pos;
        if (start == pos) fail("expected number");
        std::string num = s.substr(start, pos - start);
        if (pos < s.size() && s[pos] == '/') {
            ++pos;
            size_t dstart = pos;
            while (pos < s.size() && isdigit((unsigned char)s[pos])) ++pos;
            if (dstart == pos) fail("expected denominator");
            num += "/" + s.substr(dstart, pos - dstart);
        }
        Rat r(num);
        r.canonicalize();
        return r;
    }

    Poly parse_factor() {
        skip_ws();
        if (pos < s.size() && s[pos] == 'x') {
            ++pos;
            size_t start = pos;
            while (pos < s.size() && isdigit((unsigned char)s[pos])) ++pos;
            if (start == pos) fail("expected variable index");
            int idx = std::stoi(s.substr(start, pos - start));
            int e = 1;
            if (pos < s.size() && s[pos] == '^') {
                ++pos;
                size_t estart = pos;
                while (pos < s.size() && isdigit((unsigned char)s[pos])) ++pos;
                if (estart == pos) fail("expected exponent");
                e = std::stoi(s.substr(estart, pos - estart));
            }
            Poly p = Poly::constant(n, 1);
            for (int k = 0; k < e; ++k) p = p * Poly::variable(n, idx);
            return p;
        }
        if (pos < s.size() && isdigit((unsigned char)s[pos]))
            return Poly::constant(n, parse_number());
        fail("expected factor");
    }

    Poly parse_term() {
        Poly p = parse_factor();
        skip_ws();
        while (pos < s.size() && s[pos] == '*') {
            ++pos;
            p = p * parse_factor();
            skip_ws();
        }
        return p;
    }

    Poly parse_sum() {
        skip_ws();
        bool neg = false;
        if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
            neg = s[pos] == '-';
            ++pos;
        }
        Poly p = parse_term();
        if (neg) p = -p;
        skip_ws();
        while (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
            bool minus = s[pos] == '-';
            ++pos;
            Poly q = parse_term();
            if (minus) p -= q; else p += q;
            skip_ws();
        }
        return p;
    }
};

}  // namespace

Poly parse_poly(const std::string& text, int n) {
    PolyParser parser{text, 0, n};
    Poly p = parser.parse_sum();
    parser.skip_ws();
    if (parser.pos != text.size()) parser.fail("trailing input");
    return p;
}

}  // namespace soergel
