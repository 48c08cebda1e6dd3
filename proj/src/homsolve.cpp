#include "soergel/homsolve.hpp"

#include <algorithm>

namespace soergel {

namespace {

void require(bool cond, const std::string& msg) {
    if (!cond) throw std::logic_error(msg);
}

}  // namespace

std::vector<BimodMorphism> hom_space_basis(const BSObject& u, const BSObject& v, int d) {
    return detail::hom_basis(u, v, d);
}

const std::vector<BimodMorphism>& hom_space_basis_cached(const BSObject& u, const BSObject& v,
                                                         int d) {
    // shift-normalize: basis for shifted objects is the unshifted basis at the
    // adjusted degree, reshifted
    static std::map<std::tuple<int, std::vector<int>, std::vector<int>, int, int, int>,
                    std::vector<BimodMorphism>>
        cache;
    auto key = std::make_tuple(u.n, u.word, v.word, d, u.qshift, v.qshift);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    auto base_key = std::make_tuple(u.n, u.word, v.word, d + u.qshift - v.qshift, 0, 0);
    auto bit = cache.find(base_key);
    if (bit == cache.end()) {
        BSObject u0{u.n, u.word, 0}, v0{v.n, v.word, 0};
        bit = cache.emplace(base_key,
                            detail::hom_basis(u0, v0, d + u.qshift - v.qshift)).first;
    }
    if (u.qshift == 0 && v.qshift == 0) return bit->second;
    std::vector<BimodMorphism> shifted;
    shifted.reserve(bit->second.size());
    for (const BimodMorphism& m : bit->second)
        shifted.push_back(m.reshifted(u.qshift, v.qshift));
    return cache.emplace(key, std::move(shifted)).first->second;
}

std::optional<std::vector<Rat>> coords_in_basis(const std::vector<BimodMorphism>& basis,
                                                const BimodMorphism& m) {
    if (basis.empty()) return m.is_zero() ? std::optional<std::vector<Rat>>({}) : std::nullopt;
    // coordinates indexed by (t, s, monomial); unknowns are the basis coefficients
    std::map<std::tuple<int, int, Expo>, SparseRow> rows;
    std::map<std::tuple<int, int, Expo>, Rat> rhs;
    for (size_t b = 0; b < basis.size(); ++b) {
        const BimodMorphism& f = basis[b];
        for (int t = 0; t < f.tgt.rank(); ++t)
            for (int s = 0; s < f.src.rank(); ++s)
                for (const auto& [e, c] : f.at(t, s).terms)
                    rows[{t, s, e}].emplace_back((int)b, c);
    }
    for (int t = 0; t < m.tgt.rank(); ++t)
        for (int s = 0; s < m.src.rank(); ++s)
            for (const auto& [e, c] : m.at(t, s).terms) rhs[{t, s, e}] = c;
    RowReducer red((int)basis.size());
    for (auto& [key, row] : rows) {
        auto it = rhs.find(key);
        Rat r = (it == rhs.end()) ? Rat(0) : it->second;
        if (!red.add_row(std::move(row), r)) return std::nullopt;
        if (it != rhs.end()) rhs.erase(it);
    }
    for (auto& [key, r] : rhs)
        if (r != 0) return std::nullopt;  // coordinate outside the basis support
    if (!red.consistent()) return std::nullopt;
    std::vector<Rat> x = red.particular_solution();
    // must be an exact expression, not least squares: verify
    BimodMorphism acc = zero_morphism(m.src, m.tgt, m.degree);
    for (size_t b = 0; b < basis.size(); ++b) acc += basis[b] * x[b];
    if (!(acc == m)) return std::nullopt;
    return x;
}

// ---------------------------------------------------------------------------
// MapSolver

int MapSolver::add_unknown(ComplexPtr src, ComplexPtr tgt, int hdeg, int qdeg) {
    require(!assembled_, "MapSolver: add_unknown after solving");
    Unknown u;
    u.src = std::move(src);
    u.tgt = std::move(tgt);
    u.hdeg = hdeg;
    u.qdeg = qdeg;
    u.offset = ncols_;
    for (int t = 0; t < u.tgt->size(); ++t) {
        for (int s = 0; s < u.src->size(); ++s) {
            if (u.tgt->summands[t].hdeg != u.src->summands[s].hdeg + hdeg) continue;
            const auto& basis =
                hom_space_basis_cached(u.src->summands[s].obj, u.tgt->summands[t].obj, qdeg);
            if (basis.empty()) continue;
            Slot sl{t, s, &basis, ncols_};
            ncols_ += (int)basis.size();
            u.slots.push_back(sl);
        }
    }
    unknowns_.push_back(std::move(u));
    return (int)unknowns_.size() - 1;
}

int MapSolver::add_scalar_unknown() {
    require(!assembled_, "MapSolver: add_scalar_unknown after solving");
    Unknown u;
    u.is_scalar = true;
    u.hdeg = 0;
    u.qdeg = 0;
    u.offset = ncols_++;
    unknowns_.push_back(std::move(u));
    return (int)unknowns_.size() - 1;
}

Rat MapSolver::scalar_value(int unknown) const {
    require(solution_.has_value(), "MapSolver: no solution computed");
    return (*solution_)[unknowns_[unknown].offset];
}

std::vector<MapSolver::Term> MapSolver::d_of_unknown(int i) const {
    const Unknown& u = unknowns_[i];
    std::vector<Term> terms;
    terms.push_back({Rat(1), differential_map(u.tgt), i, std::nullopt});
    terms.push_back({(u.hdeg % 2) ? Rat(1) : Rat(-1), std::nullopt, i, differential_map(u.src)});
    return terms;
}

void MapSolver::add_equation(std::vector<Term> terms, const GradedMap& rhs) {
    require(!assembled_, "MapSolver: add_equation after solving");
    for (const Term& t : terms) {
        const Unknown& u = unknowns_[t.unknown];
        if (u.is_scalar) {
            require(t.left || t.right, "MapSolver: scalar term needs a fixed map");
            if (t.left && t.right)
                require(*t.right->tgt == *t.left->src, "MapSolver: scalar factors don't compose");
            int h = (t.left ? t.left->hdeg : 0) + (t.right ? t.right->hdeg : 0);
            int q = (t.left ? t.left->qdeg : 0) + (t.right ? t.right->qdeg : 0);
            require(h == rhs.hdeg && q == rhs.qdeg, "MapSolver: scalar term degree mismatch");
            const Complex& esrc = t.right ? *t.right->src : *t.left->src;
            const Complex& etgt = t.left ? *t.left->tgt : *t.right->tgt;
            require(esrc == *rhs.src && etgt == *rhs.tgt,
                    "MapSolver: scalar term shape mismatch with rhs");
            continue;
        }
        int h = u.hdeg, q = u.qdeg;
        if (t.left) {
            require(*t.left->src == *u.tgt, "MapSolver: left factor does not compose");
            h += t.left->hdeg;
            q += t.left->qdeg;
        }
        if (t.right) {
            require(*t.right->tgt == *u.src, "MapSolver: right factor does not compose");
            h += t.right->hdeg;
            q += t.right->qdeg;
        }
        require(h == rhs.hdeg && q == rhs.qdeg, "MapSolver: term degree mismatch with rhs");
        const Complex& esrc = t.right ? *t.right->src : *u.src;
        const Complex& etgt = t.left ? *t.left->tgt : *u.tgt;
        require(esrc == *rhs.src && etgt == *rhs.tgt, "MapSolver: term shape mismatch with rhs");
    }
    equations_.emplace_back(std::move(terms), rhs);
}

void MapSolver::assemble() {
    if (assembled_) return;
    assembled_ = true;
    reducer_.emplace(ncols_);
    for (size_t eq = 0; eq < equations_.size(); ++eq) {
        const auto& [terms, rhs] = equations_[eq];
        // rows keyed by (TB, SB, UT, SE, monomial)
        std::map<std::tuple<int, int, int, int, Expo>, SparseRow> rows;
        std::map<std::tuple<int, int, int, int, Expo>, Rat> rvals;
        for (const auto& [key, m] : rhs.blocks) {
            auto [tb, sb] = key;
            for (int t = 0; t < m.tgt.rank(); ++t)
                for (int s = 0; s < m.src.rank(); ++s)
                    for (const auto& [e, c] : m.at(t, s).terms) rvals[{tb, sb, t, s, e}] = c;
        }

        for (const Term& term : terms) {
            const Unknown& u = unknowns_[term.unknown];
            if (u.is_scalar) {
                GradedMap fixed = term.left && term.right ? compose(*term.left, *term.right)
                                  : term.left             ? *term.left
                                                          : *term.right;
                for (const auto& [key, m] : fixed.blocks) {
                    auto [tb, sb] = key;
                    for (int t = 0; t < m.tgt.rank(); ++t)
                        for (int s = 0; s < m.src.rank(); ++s)
                            for (const auto& [e, c] : m.at(t, s).terms)
                                rows[{tb, sb, t, s, e}].emplace_back(u.offset, term.coeff * c);
                }
                continue;
            }
            // iterate L-blocks x R-blocks around each unknown block
            auto for_each_lblock = [&](int tb, auto&& fn) {
                if (!term.left) {
                    fn(tb, nullptr);
                    return;
                }
                for (const auto& [k, m] : term.left->blocks)
                    if (k.second == tb) fn(k.first, &m);
            };
            auto for_each_rblock = [&](int sb, auto&& fn) {
                if (!term.right) {
                    fn(sb, nullptr);
                    return;
                }
                for (const auto& [k, m] : term.right->blocks)
                    if (k.first == sb) fn(k.second, &m);
            };
            for (const Slot& sl : u.slots) {
                for_each_lblock(sl.block_t, [&](int TB, const BimodMorphism* Lm) {
                    for_each_rblock(sl.block_s, [&](int SB, const BimodMorphism* Rm) {
                        for (size_t bi = 0; bi < sl.basis->size(); ++bi) {
                            const BimodMorphism& phi = (*sl.basis)[bi];
                            int col = sl.offset + (int)bi;
                            for (int ut = 0; ut < phi.tgt.rank(); ++ut) {
                                for (int us = 0; us < phi.src.rank(); ++us) {
                                    const Poly& pe = phi.at(ut, us);
                                    if (pe.is_zero()) continue;
                                    int lrank = Lm ? Lm->tgt.rank() : 1;
                                    int rrank = Rm ? Rm->src.rank() : 1;
                                    for (int UT = 0; UT < lrank; ++UT) {
                                        int row_t = Lm ? UT : ut;
                                        if (Lm && Lm->at(UT, ut).is_zero()) continue;
                                        for (int SE = 0; SE < rrank; ++SE) {
                                            int row_s = Rm ? SE : us;
                                            if (Rm && Rm->at(us, SE).is_zero()) continue;
                                            Poly q = pe;
                                            if (Lm) q = q * Lm->at(UT, ut);
                                            if (Rm) q = q * Rm->at(us, SE);
                                            for (const auto& [rho, a] : q.terms)
                                                rows[{TB, SB, row_t, row_s, rho}].emplace_back(
                                                    col, term.coeff * a);
                                        }
                                    }
                                }
                            }
                        }
                    });
                });
            }
        }

        for (auto& [key, row] : rows) {
            Rat r(0);
            auto it = rvals.find(key);
            if (it != rvals.end()) {
                r = it->second;
                rvals.erase(it);
            }
            reducer_->add_row(std::move(row), std::move(r));
        }
        // rhs coordinates with no unknown support: 0 = r
        for (auto& [key, r] : rvals)
            if (r != 0) reducer_->add_row({}, r);
    }
}

std::vector<GradedMap> MapSolver::rebuild(const std::vector<Rat>& x) const {
    std::vector<GradedMap> out;
    for (const Unknown& u : unknowns_) {
        if (u.is_scalar) {
            out.push_back(GradedMap{});
            continue;
        }
        GradedMap f = zero_map(u.src, u.tgt, u.hdeg, u.qdeg);
        for (const Slot& sl : u.slots) {
            BimodMorphism m(u.src->summands[sl.block_s].obj, u.tgt->summands[sl.block_t].obj,
                            u.qdeg);
            bool nonzero = false;
            for (size_t bi = 0; bi < sl.basis->size(); ++bi) {
                const Rat& c = x[sl.offset + bi];
                if (c == 0) continue;
                m += (*sl.basis)[bi] * c;
                nonzero = true;
            }
            if (nonzero) f.set_block(sl.block_t, sl.block_s, std::move(m));
        }
        out.push_back(std::move(f));
    }
    return out;
}

std::optional<std::vector<GradedMap>> MapSolver::solve() {
    assemble();
    if (!reducer_->consistent()) return std::nullopt;
    solution_ = reducer_->particular_solution();
    return rebuild(*solution_);
}

std::vector<std::vector<GradedMap>> MapSolver::nullspace() {
    assemble();
    std::vector<std::vector<GradedMap>> out;
    for (const auto& vec : reducer_->nullspace_basis()) out.push_back(rebuild(vec));
    return out;
}

// ---------------------------------------------------------------------------

std::vector<GradedMap> chain_map_space(ComplexPtr x, ComplexPtr y, int qdeg) {
    MapSolver solver;
    int u = solver.add_unknown(x, y, 0, qdeg);
    solver.add_equation(solver.d_of_unknown(u), zero_map(x, y, 1, qdeg));
    std::vector<GradedMap> out;
    for (auto& sol : solver.nullspace()) out.push_back(std::move(sol[0]));
    return out;
}

std::optional<GradedMap> solve_homotopy(const GradedMap& delta) {
    require(differential_of(delta).is_zero(), "solve_homotopy: delta is not closed");
    MapSolver solver;
    int u = solver.add_unknown(delta.src, delta.tgt, delta.hdeg - 1, delta.qdeg);
    solver.add_equation(solver.d_of_unknown(u), delta);
    auto sol = solver.solve();
    if (!sol) return std::nullopt;
    return std::move((*sol)[0]);
}

bool is_nullhomotopic(const GradedMap& f) { return solve_homotopy(f).has_value(); }

std::optional<HomEquiv> complete_equivalence(const GradedMap& f) {
    ComplexPtr x = f.src, y = f.tgt;
    MapSolver solver;
    int g = solver.add_unknown(y, x, 0, 0);
    int hx = solver.add_unknown(x, x, -1, 0);
    int hy = solver.add_unknown(y, y, -1, 0);
    solver.add_equation(solver.d_of_unknown(g), zero_map(y, x, 1, 0));
    // g o f - d(hx) = id_x
    std::vector<MapSolver::Term> eq2{{Rat(1), std::nullopt, g, f}};
    for (auto t : solver.d_of_unknown(hx)) {
        t.coeff = -t.coeff;
        eq2.push_back(std::move(t));
    }
    solver.add_equation(std::move(eq2), identity_map(x));
    // f o g - d(hy) = id_y
    std::vector<MapSolver::Term> eq3{{Rat(1), f, g, std::nullopt}};
    for (auto t : solver.d_of_unknown(hy)) {
        t.coeff = -t.coeff;
        eq3.push_back(std::move(t));
    }
    solver.add_equation(std::move(eq3), identity_map(y));
    auto sol = solver.solve();
    if (!sol) return std::nullopt;
    return HomEquiv{f, std::move((*sol)[0]), std::move((*sol)[1]), std::move((*sol)[2])};
}

std::optional<HomEquiv> solve_homotopy_equivalence(ComplexPtr x, ComplexPtr y, uint64_t seed) {
    std::vector<GradedMap> basis = chain_map_space(x, y);
    if (basis.empty()) return std::nullopt;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coef(-2, 2);
    auto try_candidate = [&](const GradedMap& f) -> std::optional<HomEquiv> {
        return complete_equivalence(f);
    };
    for (const GradedMap& f : basis) {
        if (auto e = try_candidate(f)) return e;
    }
    for (int attempt = 0; attempt < 12; ++attempt) {
        GradedMap f = zero_map(x, y, 0, 0);
        bool nonzero = false;
        for (const GradedMap& b : basis) {
            int c = coef(rng);
            if (c == 0) continue;
            f += b * Rat(c);
            nonzero = true;
        }
        if (!nonzero) continue;
        if (auto e = try_candidate(f)) return e;
    }
    return std::nullopt;
}

std::vector<int> feasible_qdegs(const Complex& a, const Complex& b) {
    bool any = false;
    int lo = 0, hi = 0;
    for (const Summand& sa : a.summands) {
        for (const Summand& sb : b.summands) {
            // entry degree g = deg_src_elt + q - deg_tgt_elt >= 0 possible when
            // q >= deg_tgt_elt - deg_src_elt for some basis pair
            int src_min = sa.obj.elt_degree(0);
            int src_max = sa.obj.elt_degree(sa.obj.rank() - 1);
            int tgt_min = sb.obj.elt_degree(0);
            int tgt_max = sb.obj.elt_degree(sb.obj.rank() - 1);
            int qlo = tgt_min - src_max;
            int qhi = tgt_max - src_min + 2 * 4;  // headroom for polynomial entries
            if (!any) {
                lo = qlo;
                hi = qhi;
                any = true;
            } else {
                lo = std::min(lo, qlo);
                hi = std::max(hi, qhi);
            }
        }
    }
    std::vector<int> out;
    for (int q = lo; q <= hi; ++q) out.push_back(q);
    return out;
}

std::vector<int> hom_complex_cohomology_dims(const Complex& a, const Complex& b, int qdeg,
                                             int klo, int khi) {
    // hom-space bases per summand pair and homological level
    struct Pair {
        int i, j;
        const std::vector<BimodMorphism>* basis;
        int offset;
    };
    auto pairs_at = [&](int k) {
        std::vector<Pair> out;
        int off = 0;
        for (int i = 0; i < a.size(); ++i)
            for (int j = 0; j < b.size(); ++j) {
                if (b.summands[j].hdeg - a.summands[i].hdeg != k) continue;
                const auto& basis =
                    hom_space_basis_cached(a.summands[i].obj, b.summands[j].obj, qdeg);
                if (basis.empty()) continue;
                Pair p{i, j, &basis, off};
                off += (int)basis.size();
                out.push_back(std::move(p));
            }
        return out;
    };

    std::map<int, std::vector<Pair>> levels;
    for (int k = klo - 1; k <= khi + 1; ++k) levels[k] = pairs_at(k);
    auto dim_at = [&](int k) {
        int d = 0;
        for (const Pair& p : levels[k]) d += (int)p.basis->size();
        return d;
    };

    // rank of delta_k: Hom^k -> Hom^{k+1}, delta(phi) = d_B o phi - (-1)^k phi o d_A
    auto rank_delta = [&](int k) -> int {
        const auto& from = levels[k];
        const auto& to = levels[k + 1];
        if (from.empty() || to.empty()) return 0;
        int nrows_cols = dim_at(k);
        RowReducer red(nrows_cols);
        // build columns: image coordinates; transpose into rows per image coordinate
        // simpler: collect each column as a dense coordinate vector over the
        // target bases, then feed the transposed matrix rows.
        std::vector<std::vector<Rat>> cols;
        for (const Pair& p : from) {
            for (const BimodMorphism& phi : *p.basis) {
                std::vector<Rat> col(dim_at(k + 1), Rat(0));
                for (const Pair& q : to) {
                    BimodMorphism acc = zero_morphism(a.summands[q.i].obj, b.summands[q.j].obj,
                                                       qdeg);
                    // d_B o phi contribution: needs p.i == q.i and d_B: j -> q.j
                    if (p.i == q.i) {
                        if (const BimodMorphism* dB = b.diff_at(q.j, p.j))
                            acc += compose(*dB, phi);
                    }
                    // -(-1)^k phi o d_A: needs p.j == q.j and d_A: q.i -> p.i
                    if (p.j == q.j) {
                        if (const BimodMorphism* dA = a.diff_at(p.i, q.i)) {
                            BimodMorphism t = compose(phi, *dA);
                            acc += (k % 2) ? t : -t;
                        }
                    }
                    if (acc.is_zero()) continue;
                    auto coords = coords_in_basis(*q.basis, acc);
                    require(coords.has_value(),
                            "hom complex differential image outside computed basis");
                    for (size_t c = 0; c < coords->size(); ++c)
                        col[q.offset + c] += (*coords)[c];
                }
                cols.push_back(std::move(col));
            }
        }
        // rank of the column family
        int m = dim_at(k + 1);
        RowReducer r2((int)cols.size());
        std::vector<SparseRow> rows(m);
        for (size_t c = 0; c < cols.size(); ++c)
            for (int rr = 0; rr < m; ++rr)
                if (cols[c][rr] != 0) rows[rr].emplace_back((int)c, cols[c][rr]);
        for (auto& row : rows) {
            if (row.empty()) continue;
            r2.add_row(std::move(row), Rat(0));
        }
        return r2.rank();
    };

    std::vector<int> dims;
    std::map<int, int> rank_cache;
    for (int k = klo; k <= khi; ++k) {
        if (!rank_cache.count(k)) rank_cache[k] = rank_delta(k);
        if (!rank_cache.count(k - 1)) rank_cache[k - 1] = rank_delta(k - 1);
        dims.push_back(dim_at(k) - rank_cache[k] - rank_cache[k - 1]);
    }
    return dims;
}

}  // namespace soergel
