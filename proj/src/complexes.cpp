#include "soergel/complexes.hpp"

#include <algorithm>
#include <sstream>

namespace soergel {

namespace {

void require(bool cond, const std::string& msg) {
    if (!cond) throw std::logic_error(msg);
}

}  // namespace

const BimodMorphism* Complex::diff_at(int to, int from) const {
    auto it = diff.find({to, from});
    return it == diff.end() ? nullptr : &it->second;
}

void Complex::set_diff(int to, int from, BimodMorphism m) {
    if (m.is_zero()) {
        diff.erase({to, from});
        return;
    }
    diff[{to, from}] = std::move(m);
}

void Complex::validate() const {
    for (const auto& [key, m] : diff) {
        auto [to, from] = key;
        require(summands[to].hdeg == summands[from].hdeg + 1,
                "differential entry not of homological degree +1");
        require(m.src == summands[from].obj && m.tgt == summands[to].obj,
                "differential entry object mismatch");
        require(m.degree == 0, "differential entry not quantum degree 0");
        require(entries_homogeneous(m), "differential entry inhomogeneous");
    }
    // d o d = 0
    for (int from = 0; from < size(); ++from) {
        std::map<int, BimodMorphism> acc;
        for (const auto& [key, m] : diff) {
            if (key.second != from) continue;
            int mid = key.first;
            for (const auto& [key2, m2] : diff) {
                if (key2.second != mid) continue;
                BimodMorphism prod = compose(m2, m);
                auto it = acc.find(key2.first);
                if (it == acc.end())
                    acc.emplace(key2.first, std::move(prod));
                else
                    it->second += prod;
            }
        }
        for (const auto& [to, m] : acc) require(m.is_zero(), "d*d != 0");
    }
}

std::string Complex::str() const {
    std::ostringstream out;
    for (int i = 0; i < size(); ++i) {
        if (i) out << " ";
        out << summands[i].obj.str() << "@" << summands[i].hdeg;
    }
    return out.str();
}

ComplexPtr share(Complex c) { return std::make_shared<const Complex>(std::move(c)); }

Complex single_complex(const BSObject& obj, int hdeg) {
    Complex x;
    x.n = obj.n;
    x.summands.push_back({obj, hdeg});
    return x;
}

Complex unit_complex(int n) { return single_complex(unit_object(n)); }

Complex tensor_complexes(const Complex& x, const Complex& y) {
    require(x.n == y.n, "tensor_complexes: ambient mismatch");
    Complex out;
    out.n = x.n;
    int ny = y.size();
    out.summands.reserve((size_t)x.size() * ny);
    for (int i = 0; i < x.size(); ++i)
        for (int j = 0; j < ny; ++j)
            out.summands.push_back({concat(x.summands[i].obj, y.summands[j].obj),
                                    x.summands[i].hdeg + y.summands[j].hdeg});
    // d_X (x) id_Y
    for (const auto& [key, m] : x.diff) {
        auto [to, from] = key;
        for (int j = 0; j < ny; ++j) {
            BimodMorphism entry = tensor_h(m, identity_morphism(y.summands[j].obj));
            out.set_diff(to * ny + j, from * ny + j, std::move(entry));
        }
    }
    // (-1)^{hdeg(X_i)} id_X (x) d_Y
    for (const auto& [key, m] : y.diff) {
        auto [to, from] = key;
        for (int i = 0; i < x.size(); ++i) {
            BimodMorphism entry = tensor_h(identity_morphism(x.summands[i].obj), m);
            if (x.summands[i].hdeg % 2) entry = -entry;
            out.set_diff(i * ny + to, i * ny + from, std::move(entry));
        }
    }
    return out;
}

Complex boxtimes_complexes(const Complex& x, const Complex& y) {
    return tensor_complexes(color_shift(x, 0, y.n), color_shift(y, x.n, 0));
}

Complex tensor_complexes_misordered(const Complex& x, const Complex& y) {
    Complex lex = tensor_complexes(x, y);
    std::vector<int> order(lex.size());
    for (int i = 0; i < lex.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return lex.summands[a].hdeg < lex.summands[b].hdeg;
    });
    std::vector<int> pos(lex.size());
    for (int i = 0; i < lex.size(); ++i) pos[order[i]] = i;
    Complex out;
    out.n = lex.n;
    for (int i = 0; i < lex.size(); ++i) out.summands.push_back(lex.summands[order[i]]);
    for (const auto& [key, m] : lex.diff) out.diff.emplace(
        std::make_pair(pos[key.first], pos[key.second]), m);
    return out;
}

Complex qshift_complex(const Complex& x, int j) {
    Complex out;
    out.n = x.n;
    for (const Summand& s : x.summands) out.summands.push_back({s.obj.shifted(j), s.hdeg});
    for (const auto& [key, m] : x.diff) out.diff.emplace(key, m.reshifted(j, j));
    return out;
}

Complex hshift_complex(const Complex& x, int k) {
    Complex out;
    out.n = x.n;
    for (const Summand& s : x.summands) out.summands.push_back({s.obj, s.hdeg + k});
    for (const auto& [key, m] : x.diff)
        out.diff.emplace(key, (k % 2) ? -m : m);
    return out;
}

Complex color_shift(const Complex& x, int left, int right) {
    Complex out;
    out.n = x.n + left + right;
    for (const Summand& s : x.summands)
        out.summands.push_back({color_shift(s.obj, left, right), s.hdeg});
    for (const auto& [key, m] : x.diff) out.diff.emplace(key, color_shift(m, left, right));
    return out;
}

// ---------------------------------------------------------------------------
// Graded maps

const BimodMorphism* GradedMap::block_at(int t, int s) const {
    auto it = blocks.find({t, s});
    return it == blocks.end() ? nullptr : &it->second;
}

void GradedMap::set_block(int t, int s, BimodMorphism m) {
    if (m.is_zero()) {
        blocks.erase({t, s});
        return;
    }
    blocks[{t, s}] = std::move(m);
}

bool GradedMap::is_zero() const {
    for (const auto& [key, m] : blocks)
        if (!m.is_zero()) return false;
    return true;
}

void GradedMap::validate_shape() const {
    for (const auto& [key, m] : blocks) {
        auto [t, s] = key;
        require(tgt->summands[t].hdeg == src->summands[s].hdeg + hdeg,
                "graded map block at wrong homological degree");
        require(m.src == src->summands[s].obj && m.tgt == tgt->summands[t].obj,
                "graded map block object mismatch");
        require(m.degree == qdeg, "graded map block at wrong quantum degree");
        require(entries_homogeneous(m), "graded map block inhomogeneous");
    }
}

GradedMap& GradedMap::operator+=(const GradedMap& o) {
    require(*src == *o.src && *tgt == *o.tgt && hdeg == o.hdeg && qdeg == o.qdeg,
            "graded map shape mismatch in +");
    for (const auto& [key, m] : o.blocks) {
        auto it = blocks.find(key);
        if (it == blocks.end())
            blocks.emplace(key, m);
        else {
            it->second += m;
            if (it->second.is_zero()) blocks.erase(it);
        }
    }
    return *this;
}

GradedMap& GradedMap::operator-=(const GradedMap& o) {
    *this += -o;
    return *this;
}

GradedMap GradedMap::operator+(const GradedMap& o) const {
    GradedMap r = *this;
    r += o;
    return r;
}

GradedMap GradedMap::operator-(const GradedMap& o) const {
    GradedMap r = *this;
    r -= o;
    return r;
}

GradedMap GradedMap::operator-() const {
    GradedMap r = *this;
    for (auto& [key, m] : r.blocks) m = -m;
    return r;
}

GradedMap GradedMap::operator*(const Rat& c) const {
    if (c == 0) return zero_map(src, tgt, hdeg, qdeg);
    GradedMap r = *this;
    for (auto& [key, m] : r.blocks) m = m * c;
    return r;
}

bool GradedMap::operator==(const GradedMap& o) const {
    return *src == *o.src && *tgt == *o.tgt && hdeg == o.hdeg && qdeg == o.qdeg &&
           (*this - o).is_zero();
}

std::string GradedMap::str() const {
    std::ostringstream out;
    out << "map hdeg " << hdeg << " qdeg " << qdeg << " : [" << src->str() << "] -> ["
        << tgt->str() << "]\n";
    for (const auto& [key, m] : blocks)
        out << " block (" << key.first << "," << key.second << "):\n" << m.str();
    return out.str();
}

GradedMap zero_map(ComplexPtr src, ComplexPtr tgt, int hdeg, int qdeg) {
    GradedMap f;
    f.src = std::move(src);
    f.tgt = std::move(tgt);
    f.hdeg = hdeg;
    f.qdeg = qdeg;
    return f;
}

GradedMap identity_map(ComplexPtr x) {
    GradedMap f = zero_map(x, x, 0, 0);
    for (int i = 0; i < x->size(); ++i)
        f.set_block(i, i, identity_morphism(x->summands[i].obj));
    return f;
}

GradedMap differential_map(ComplexPtr x) {
    GradedMap f = zero_map(x, x, 1, 0);
    for (const auto& [key, m] : x->diff) f.blocks.emplace(key, m);
    return f;
}

GradedMap compose(const GradedMap& g, const GradedMap& f) {
    require(*f.tgt == *g.src, "graded compose: object mismatch");
    GradedMap out = zero_map(f.src, g.tgt, f.hdeg + g.hdeg, f.qdeg + g.qdeg);
    for (const auto& [kf, mf] : f.blocks) {
        auto [mid, s] = kf;
        for (const auto& [kg, mg] : g.blocks) {
            if (kg.second != mid) continue;
            BimodMorphism prod = compose(mg, mf);
            if (prod.is_zero()) continue;
            auto key = std::make_pair(kg.first, s);
            auto it = out.blocks.find(key);
            if (it == out.blocks.end())
                out.blocks.emplace(key, std::move(prod));
            else {
                it->second += prod;
                if (it->second.is_zero()) out.blocks.erase(it);
            }
        }
    }
    return out;
}

GradedMap differential_of(const GradedMap& h) {
    GradedMap a = compose(differential_map(h.tgt), h);
    GradedMap b = compose(h, differential_map(h.src));
    return (h.hdeg % 2) ? a + b : a - b;
}

bool is_chain_map(const GradedMap& f) { return f.hdeg == 0 && differential_of(f).is_zero(); }

GradedMap tensor_maps(const GradedMap& f, const GradedMap& g) {
    Complex src = tensor_complexes(*f.src, *g.src);
    Complex tgt = tensor_complexes(*f.tgt, *g.tgt);
    GradedMap out = zero_map(share(std::move(src)), share(std::move(tgt)),
                             f.hdeg + g.hdeg, f.qdeg + g.qdeg);
    int nys = g.src->size(), nyt = g.tgt->size();
    for (const auto& [kf, mf] : f.blocks) {
        auto [ti, si] = kf;
        int a = f.src->summands[si].hdeg;
        bool flip = (g.hdeg % 2) && (a % 2);
        for (const auto& [kg, mg] : g.blocks) {
            auto [tj, sj] = kg;
            BimodMorphism entry = tensor_h(mf, mg);
            if (flip) entry = -entry;
            out.set_block(ti * nyt + tj, si * nys + sj, std::move(entry));
        }
    }
    return out;
}

GradedMap boxtimes_maps(const GradedMap& f, const GradedMap& g) {
    return tensor_maps(color_shift(f, 0, g.src->n), color_shift(g, f.src->n, 0));
}

GradedMap color_shift(const GradedMap& f, int left, int right) {
    GradedMap out = zero_map(share(color_shift(*f.src, left, right)),
                             share(color_shift(*f.tgt, left, right)), f.hdeg, f.qdeg);
    for (const auto& [key, m] : f.blocks) out.blocks.emplace(key, color_shift(m, left, right));
    return out;
}

GradedMap qshift_map(const GradedMap& f, int j) {
    GradedMap out = zero_map(share(qshift_complex(*f.src, j)),
                             share(qshift_complex(*f.tgt, j)), f.hdeg, f.qdeg);
    for (const auto& [key, m] : f.blocks) out.blocks.emplace(key, m.reshifted(j, j));
    return out;
}

GradedMap reshift_map(const GradedMap& f, int dsrc, int dtgt) {
    GradedMap out = zero_map(share(qshift_complex(*f.src, dsrc)),
                             share(qshift_complex(*f.tgt, dtgt)), f.hdeg,
                             f.qdeg + dtgt - dsrc);
    for (const auto& [key, m] : f.blocks) out.blocks.emplace(key, m.reshifted(dsrc, dtgt));
    return out;
}

GradedMap single_map(const BimodMorphism& m, int src_hdeg, int tgt_hdeg) {
    GradedMap out = zero_map(share(single_complex(m.src, src_hdeg)),
                             share(single_complex(m.tgt, tgt_hdeg)),
                             tgt_hdeg - src_hdeg, m.degree);
    out.set_block(0, 0, m);
    return out;
}

Complex cone(const GradedMap& f) {
    require(f.hdeg == 0 && f.qdeg == 0, "cone requires a degree-0 map");
    require(is_chain_map(f), "cone of a non-chain-map");
    const Complex& x = *f.src;
    const Complex& y = *f.tgt;
    Complex out;
    out.n = x.n;
    for (const Summand& s : x.summands) out.summands.push_back({s.obj, s.hdeg - 1});
    for (const Summand& s : y.summands) out.summands.push_back(s);
    int off = x.size();
    for (const auto& [key, m] : x.diff) out.set_diff(key.first, key.second, -m);
    for (const auto& [key, m] : y.diff) out.set_diff(key.first + off, key.second + off, m);
    for (const auto& [key, m] : f.blocks) out.set_diff(key.first + off, key.second, m);
    return out;
}

// ---------------------------------------------------------------------------
// Homotopy equivalence certificates

void HomEquiv::verify() const {
    require(is_chain_map(fwd), "certificate fwd is not a chain map");
    require(is_chain_map(bwd), "certificate bwd is not a chain map");
    GradedMap lhs = compose(bwd, fwd) - identity_map(fwd.src);
    require(differential_of(h_src) == lhs, "certificate h_src fails its d-check");
    GradedMap rhs = compose(fwd, bwd) - identity_map(fwd.tgt);
    require(differential_of(h_tgt) == rhs, "certificate h_tgt fails its d-check");
}

HomEquiv identity_equiv(ComplexPtr x) {
    GradedMap id = identity_map(x);
    return {id, id, zero_map(x, x, -1), zero_map(x, x, -1)};
}

HomEquiv compose_equiv(const HomEquiv& second, const HomEquiv& first) {
    // first: A ~ B, second: B ~ C
    GradedMap fwd = compose(second.fwd, first.fwd);
    GradedMap bwd = compose(first.bwd, second.bwd);
    GradedMap h_src = first.h_src + compose(first.bwd, compose(second.h_src, first.fwd));
    GradedMap h_tgt = second.h_tgt + compose(second.fwd, compose(first.h_tgt, second.bwd));
    return {std::move(fwd), std::move(bwd), std::move(h_src), std::move(h_tgt)};
}

HomEquiv inverse_equiv(const HomEquiv& e) { return {e.bwd, e.fwd, e.h_tgt, e.h_src}; }

HomEquiv tensor_equiv(const HomEquiv& a, const HomEquiv& b) {
    GradedMap fwd = tensor_maps(a.fwd, b.fwd);
    GradedMap bwd = tensor_maps(a.bwd, b.bwd);
    // (ga fa - id) (x) gb fb + id (x) (gb fb - id)
    GradedMap h_src = tensor_maps(a.h_src, compose(b.bwd, b.fwd)) +
                      tensor_maps(identity_map(a.fwd.src), b.h_src);
    GradedMap h_tgt = tensor_maps(a.h_tgt, compose(b.fwd, b.bwd)) +
                      tensor_maps(identity_map(a.fwd.tgt), b.h_tgt);
    return {std::move(fwd), std::move(bwd), std::move(h_src), std::move(h_tgt)};
}

HomEquiv color_shift(const HomEquiv& e, int left, int right) {
    return {color_shift(e.fwd, left, right), color_shift(e.bwd, left, right),
            color_shift(e.h_src, left, right), color_shift(e.h_tgt, left, right)};
}

HomEquiv qshift_equiv(const HomEquiv& e, int j) {
    return {qshift_map(e.fwd, j), qshift_map(e.bwd, j), qshift_map(e.h_src, j),
            qshift_map(e.h_tgt, j)};
}

HomEquiv far_comm_equiv(const Complex& x, const Complex& y) {
    for (const Summand& sx : x.summands)
        for (int a : sx.obj.word)
            for (const Summand& sy : y.summands)
                for (int b : sy.obj.word)
                    if (std::abs(a - b) < 2)
                        throw std::logic_error("far_comm_equiv: color sets not distant");
    ComplexPtr xy = share(tensor_complexes(x, y));
    ComplexPtr yx = share(tensor_complexes(y, x));
    GradedMap fwd = zero_map(xy, yx, 0, 0);
    GradedMap bwd = zero_map(yx, xy, 0, 0);
    int ny = y.size(), nx = x.size();
    for (int i = 0; i < nx; ++i) {
        for (int j = 0; j < ny; ++j) {
            const BSObject& u = x.summands[i].obj;
            const BSObject& v = y.summands[j].obj;
            int sign = (x.summands[i].hdeg % 2) && (y.summands[j].hdeg % 2) ? -1 : 1;
            BimodMorphism theta =
                block_swap(x.n, u.word, v.word).reshifted(u.qshift + v.qshift, u.qshift + v.qshift);
            BimodMorphism theta_inv =
                block_swap(x.n, v.word, u.word).reshifted(u.qshift + v.qshift, u.qshift + v.qshift);
            if (sign < 0) {
                theta = -theta;
                theta_inv = -theta_inv;
            }
            fwd.set_block(j * nx + i, i * ny + j, std::move(theta));
            bwd.set_block(i * ny + j, j * nx + i, std::move(theta_inv));
        }
    }
    if (!is_chain_map(fwd) || !is_chain_map(bwd))
        throw std::logic_error("far_comm_equiv: swap is not a chain map");
    if (!(compose(bwd, fwd) == identity_map(xy)) || !(compose(fwd, bwd) == identity_map(yx)))
        throw std::logic_error("far_comm_equiv: swap is not an isomorphism");
    return {std::move(fwd), std::move(bwd), zero_map(xy, xy, -1), zero_map(yx, yx, -1)};
}

}  // namespace soergel
