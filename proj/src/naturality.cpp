#include "soergel/naturality.hpp"

#include "soergel/homsolve.hpp"

namespace soergel {

namespace {

void require(bool cond, const std::string& msg) {
    if (!cond) throw std::logic_error(msg);
}

std::vector<int> shift_word(const std::vector<int>& w, int by) {
    std::vector<int> out = w;
    for (int& c : out) c += by;
    return out;
}

}  // namespace

BimodMorphism psi_place(const BimodMorphism& f0, int m) { return color_shift(f0, m, 0); }
BimodMorphism phi_place(const BimodMorphism& f0, int m) { return color_shift(f0, 0, m); }

GradedMap naturality_defect(int m, int n, const BimodMorphism& f0) {
    require(f0.src.n == n, "naturality_defect: f0 must live in D_n");
    ComplexPtr x = share(cabled_crossing(m, n, true));
    const SlideMap& sy = slide_cached(m, n, {}, f0.src.word);
    const SlideMap& syp = slide_cached(m, n, {}, f0.tgt.word);
    GradedMap phi_f = single_map(phi_place(f0, m));
    GradedMap psi_f = single_map(psi_place(f0, m));
    GradedMap left = compose(tensor_maps(phi_f, identity_map(x)), sy.map);
    GradedMap right = compose(syp.map, tensor_maps(identity_map(x), psi_f));
    GradedMap defect = left - right;
    require(differential_of(defect).is_zero(), "naturality defect is not closed");
    return defect;
}

std::optional<GradedMap> solve_slide_homotopy(int m, int n, const BimodMorphism& f0) {
    return solve_homotopy(naturality_defect(m, n, f0));
}

GradedMap h_vcomp(int m, int n, const BimodMorphism& f0, const BimodMorphism& f0p,
                  const GradedMap& h_f, const GradedMap& h_fp) {
    require(f0.tgt == f0p.src, "h_vcomp: morphisms do not compose");
    ComplexPtr x = share(cabled_crossing(m, n, true));
    GradedMap term1 = compose(h_fp, tensor_maps(identity_map(x), single_map(psi_place(f0, m))));
    GradedMap term2 = compose(tensor_maps(single_map(phi_place(f0p, m)), identity_map(x)), h_f);
    return term1 + term2;
}

GradedMap h_hcomp(int m, int n, const std::vector<int>& w, const BimodMorphism& f0,
                  const std::vector<int>& z, const GradedMap& h_f) {
    ComplexPtr x = share(cabled_crossing(m, n, true));
    const SlideMap& sw = slide_cached(m, n, {}, w);
    const SlideMap& sz = slide_cached(m, n, {}, z);
    int nn = m + n;
    GradedMap stage1 = tensor_maps(sw.map, identity_map(share(single_complex(
                                               bs_object(nn, shift_word(f0.src.word, m))))));
    stage1 = tensor_maps(stage1, identity_map(share(single_complex(
                                     bs_object(nn, shift_word(z, m))))));
    GradedMap stage2 = tensor_maps(identity_map(share(single_complex(bs_object(nn, w)))),
                                   tensor_maps(h_f, identity_map(share(single_complex(
                                                        bs_object(nn, shift_word(z, m)))))));
    GradedMap stage3 = tensor_maps(
        identity_map(share(single_complex(bs_object(nn, w)))),
        tensor_maps(identity_map(share(single_complex(bs_object(nn, f0.tgt.word)))), sz.map));
    return compose(stage3, compose(stage2, stage1));
}

GradedMap h_coxeter_assembly(int m, int n, const BimodMorphism& f0, const GradedMap& h_1) {
    if (m == 1) return h_1;
    // slide stack layers over X_{m,n} = G_0 o ... o G_{m-1} for source and
    // target objects; Leibniz sum with h_1 in one slot.
    std::vector<ComplexPtr> g;
    for (int i = 0; i < m; ++i)
        g.push_back(share(color_shift(cabled_crossing(1, n, true), i, m - 1 - i)));
    auto slot_layers = [&](const std::vector<int>& word) -> std::vector<GradedMap> {
        // per-slot slide layers of slide_{1_m, word-object}; layers[0] is
        // slot m-1, the one applied first
        std::vector<GradedMap> layers;
        for (int i = m - 1; i >= 0; --i) {
            const SlideMap& base = slide_cached(1, n, {}, word);
            GradedMap layer = color_shift(base.map, i, m - 1 - i);
            for (int l = i - 1; l >= 0; --l) layer = tensor_maps(identity_map(g[l]), layer);
            for (int r = i + 1; r < m; ++r) layer = tensor_maps(layer, identity_map(g[r]));
            layers.push_back(std::move(layer));
        }
        return layers;
    };
    std::vector<GradedMap> src_layers = slot_layers(f0.src.word);
    std::vector<GradedMap> tgt_layers = slot_layers(f0.tgt.word);
    // stack index: position p = 0..m-1 applies slot i = m-1-p
    std::optional<GradedMap> total;
    for (int p = 0; p < m; ++p) {
        int i = m - 1 - p;
        GradedMap term = color_shift(h_1, i, m - 1 - i);
        for (int l = i - 1; l >= 0; --l) term = tensor_maps(identity_map(g[l]), term);
        for (int r = i + 1; r < m; ++r) term = tensor_maps(term, identity_map(g[r]));
        // pre-compose with source-side layers below p, post-compose with
        // target-side layers above p
        for (int q = 0; q < p; ++q) term = compose(term, src_layers[q]);
        GradedMap acc = term;
        for (int q = p + 1; q < m; ++q) acc = compose(tgt_layers[q], acc);
        total = total ? *total + acc : acc;
    }
    return *total;
}

GradedMap h_parabolic_embed(int l, int k, int n, const BimodMorphism& fprime,
                            const GradedMap& h_small) {
    require(l >= 0 && k >= 1 && l + k <= n, "h_parabolic_embed: bad split");
    int nn = 1 + n;
    int r = n - l - k;
    // X_{1,n} = T3 o T2 o T1 with T3 = 1_{l+k} [x] X_{1,r}, T2 = 1_l [x] X_{1,k} [x] 1_r,
    // T1 = X_{1,l} [x] 1_{k+r}
    Complex t3 = color_shift(cabled_crossing(1, r, true), l + k, 0);
    Complex t2 = color_shift(cabled_crossing(1, k, true), l, r);
    Complex t1 = color_shift(cabled_crossing(1, l, true), 0, n - l);
    require(tensor_complexes(t3, tensor_complexes(t2, t1)) == cabled_crossing(1, n, true),
            "h_parabolic_embed: block factorization mismatch");

    // psi-placed objects: colors of f' shifted by l+1
    Complex psi_src = single_complex(bs_object(nn, shift_word(fprime.src.word, l + 1)));
    Complex phi_tgt = single_complex(bs_object(nn, shift_word(fprime.tgt.word, l)));

    HomEquiv theta1 = far_comm_equiv(t1, psi_src);
    GradedMap f1 = tensor_maps(identity_map(share(tensor_complexes(t3, t2))), theta1.fwd);
    GradedMap hmid = tensor_maps(identity_map(share(t3)),
                                 tensor_maps(color_shift(h_small, l, r),
                                             identity_map(share(t1))));
    HomEquiv theta2 = far_comm_equiv(t3, phi_tgt);
    GradedMap f3 =
        tensor_maps(theta2.fwd, identity_map(share(tensor_complexes(t2, t1))));
    return compose(f3, compose(hmid, f1));
}

SlideMap cone_slide(int m, int n, const BimodMorphism& f0, const GradedMap& h_f) {
    require(f0.degree == 0, "cone_slide: f must be a quantum-degree-0 morphism");
    int qs = f0.src.qshift, qt = f0.tgt.qshift;
    const SlideMap& sy = slide_cached(m, n, {}, f0.src.word);
    const SlideMap& syp = slide_cached(m, n, {}, f0.tgt.word);
    ComplexPtr x = share(cabled_crossing(m, n, true));

    Complex cpsi = cone(single_map(psi_place(f0, m)));
    Complex cphi = cone(single_map(phi_place(f0, m)));
    ComplexPtr src = share(tensor_complexes(*x, cpsi));
    ComplexPtr tgt = share(tensor_complexes(cphi, *x));

    GradedMap map = zero_map(src, tgt, 0, 0);
    int nx = x->size();
    require(cpsi.size() == 2 && cphi.size() == 2, "cone_slide: expected two-term cones");
    // src index: x-summand i, cone part j -> i * 2 + j; tgt index: j * nx + i.
    // psiY and phiY are single complexes, so the slide blocks are keyed
    // (i', i) directly.
    // Koszul column signs: the shifted cone part carries -d_X, so blocks out
    // of it pick up (-1)^{hdeg} of the X-summand they start from.
    GradedMap sy_q = qshift_map(sy.map, qs);
    GradedMap syp_q = qshift_map(syp.map, qt);
    GradedMap h_q = reshift_map(h_f, qs, qt);
    auto xsign = [&](int i) { return x->summands[i].hdeg % 2 ? -1 : 1; };
    for (const auto& [key, mm] : sy_q.blocks)
        map.set_block(0 * nx + key.first, key.second * 2 + 0,
                      xsign(key.second) > 0 ? mm : -mm);
    for (const auto& [key, mm] : syp_q.blocks)
        map.set_block(1 * nx + key.first, key.second * 2 + 1, mm);
    for (const auto& [key, mm] : h_q.blocks)
        map.set_block(1 * nx + key.first, key.second * 2 + 0,
                      xsign(key.second) > 0 ? -mm : mm);
    require(is_chain_map(map), "cone_slide: assembled map is not a chain map");
    auto cert = complete_equivalence(map);
    require(cert.has_value(), "cone_slide: no homotopy inverse found");
    SlideMap out;
    out.m = m;
    out.n = n;
    out.map = std::move(map);
    out.cert = std::move(*cert);
    return out;
}

// ---------------------------------------------------------------------------
// Truncated tau

GradedMap tau2_rhs(const TauTable& table, int i, int j) {
    const BimodMorphism& fi = table.registry[i];
    const BimodMorphism& fj = table.registry[j];
    ComplexPtr x = share(cabled_crossing(table.m, table.n, true));
    GradedMap term1 = compose(tensor_maps(single_map(phi_place(fi, table.m)), identity_map(x)),
                              table.registry_h[j]);
    GradedMap term3 = compose(table.registry_h[i],
                              tensor_maps(identity_map(x), single_map(psi_place(fj, table.m))));
    BimodMorphism comp = compose(fi, fj);
    GradedMap hcomp = [&]() -> GradedMap {
        if (comp.is_zero())
            return zero_map(table.registry_h[j].src, table.registry_h[i].tgt, -1, comp.degree);
        for (size_t t = 0; t < table.registry.size(); ++t)
            if (table.registry[t] == comp) return table.registry_h[t];
        throw std::logic_error("tau: composite morphism not registered");
    }();
    return term1 - hcomp + term3;
}

GradedMap tau3_rhs(const TauTable& table, int i, int j, int k) {
    ComplexPtr x = share(cabled_crossing(table.m, table.n, true));
    const BimodMorphism& fi = table.registry[i];
    const BimodMorphism& fk = table.registry[k];
    int ij = table.composite_id.at({i, j});
    int jk = table.composite_id.at({j, k});
    GradedMap term1 = compose(tensor_maps(single_map(phi_place(fi, table.m)), identity_map(x)),
                              table.tau2.at({j, k}));
    GradedMap term2 = table.tau2.at({ij, k});
    GradedMap term3 = table.tau2.at({i, jk});
    GradedMap term4 = compose(table.tau2.at({i, j}),
                              tensor_maps(identity_map(x), single_map(psi_place(fk, table.m))));
    return term1 - term2 + term3 - term4;
}

namespace {

// Register a morphism value, reusing an existing entry; new composites get
// their length-1 value from the vertical composition rule.
int register_morphism(TauTable& table, const BimodMorphism& f, int via_i, int via_j) {
    if (f.is_zero()) {
        for (size_t t = 0; t < table.registry.size(); ++t)
            if (table.registry[t] == f) return (int)t;
        GradedMap zero = zero_map(
            share(tensor_complexes(cabled_crossing(table.m, table.n, true),
                                   single_complex(color_shift(f.src, table.m, 0)))),
            share(tensor_complexes(single_complex(color_shift(f.tgt, 0, table.m)),
                                   cabled_crossing(table.m, table.n, true))),
            -1, f.degree);
        table.registry.push_back(f);
        table.registry_h.push_back(std::move(zero));
        return (int)table.registry.size() - 1;
    }
    for (size_t t = 0; t < table.registry.size(); ++t)
        if (table.registry[t] == f) return (int)t;
    GradedMap h = h_vcomp(table.m, table.n, table.registry[via_j], table.registry[via_i],
                          table.registry_h[via_j], table.registry_h[via_i]);
    table.registry.push_back(f);
    table.registry_h.push_back(std::move(h));
    return (int)table.registry.size() - 1;
}

void solve_tau2_entry(TauTable& table, int i, int j) {
    if (table.tau2.count({i, j})) return;
    GradedMap rhs = tau2_rhs(table, i, j);
    if (!differential_of(rhs).is_zero())
        throw std::logic_error("tau: bar image is not closed");
    auto t2 = solve_homotopy(rhs);
    if (!t2) throw std::logic_error("tau: antiderivative nonexistence at bar length 2");
    table.tau2.emplace(std::make_pair(i, j), std::move(*t2));
}

}  // namespace

TauTable build_tau_table(int m, int n, int rmax, int maxlen) {
    TauTable table;
    table.m = m;
    table.n = n;
    table.rmax = rmax;

    // word objects of D_n up to maxlen
    std::vector<std::vector<int>> words{{}};
    std::vector<std::vector<int>> frontier{{}};
    for (int len = 1; len <= maxlen; ++len) {
        std::vector<std::vector<int>> next;
        for (const auto& w : frontier)
            for (int c = 1; c <= n - 1; ++c) {
                auto w2 = w;
                w2.push_back(c);
                next.push_back(w2);
                words.push_back(w2);
            }
        frontier = std::move(next);
    }
    table.objects = words;

    // r = 0: slides
    for (const auto& w : words) table.slides.emplace(w, slide_cached(m, n, {}, w).map);

    // morphism family: polynomial boxes on the unit, whiskered generators
    std::vector<BimodMorphism> fam;
    for (int v = 1; v <= n; ++v) fam.push_back(gen_polybox(n, Poly::variable(n, v)));
    for (int c = 1; c <= n - 1 && maxlen >= 1; ++c) {
        fam.push_back(gen_startdot(n, c));
        fam.push_back(gen_enddot(n, c));
        if (maxlen >= 2) {
            fam.push_back(gen_merge(n, c));
            fam.push_back(gen_split(n, c));
            fam.push_back(tensor_h(gen_startdot(n, c), identity_morphism(bs_object(n, {c}))));
            fam.push_back(tensor_h(identity_morphism(bs_object(n, {c})), gen_startdot(n, c)));
            fam.push_back(tensor_h(gen_enddot(n, c), identity_morphism(bs_object(n, {c}))));
            fam.push_back(tensor_h(identity_morphism(bs_object(n, {c})), gen_enddot(n, c)));
        }
    }
    table.morphisms = fam;

    // r = 1: slide homotopies for each family member
    for (const BimodMorphism& f : table.morphisms) {
        auto h = solve_slide_homotopy(m, n, f);
        if (!h) throw std::logic_error("tau: no slide homotopy for a family morphism");
        table.h1.push_back(*h);
        table.registry.push_back(f);
        table.registry_h.push_back(std::move(*h));
    }

    if (rmax < 2) return table;

    // register pairwise composites, then solve the length-2 antiderivatives
    int nfam = (int)table.morphisms.size();
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < nfam; ++i)
        for (int j = 0; j < nfam; ++j) {
            if (!(table.registry[j].tgt == table.registry[i].src)) continue;
            BimodMorphism comp = compose(table.registry[i], table.registry[j]);
            table.composite_id[{i, j}] = register_morphism(table, comp, i, j);
            pairs.emplace_back(i, j);
        }
    for (auto& [i, j] : pairs) solve_tau2_entry(table, i, j);

    if (rmax < 3) return table;

    // length 3: for each composable family triple, the bar image needs the
    // length-2 entries at the composite slots as well
    for (int i = 0; i < nfam; ++i)
        for (int j = 0; j < nfam; ++j) {
            if (!table.composite_id.count({i, j})) continue;
            for (int k = 0; k < nfam; ++k) {
                if (!table.composite_id.count({j, k})) continue;
                int ij = table.composite_id[{i, j}];
                int jk = table.composite_id[{j, k}];
                if (!table.composite_id.count({ij, k})) {
                    BimodMorphism comp = compose(table.registry[ij], table.registry[k]);
                    table.composite_id[{ij, k}] = register_morphism(table, comp, ij, k);
                }
                if (!table.composite_id.count({i, jk})) {
                    BimodMorphism comp = compose(table.registry[i], table.registry[jk]);
                    table.composite_id[{i, jk}] = register_morphism(table, comp, i, jk);
                }
                solve_tau2_entry(table, ij, k);
                solve_tau2_entry(table, i, jk);
                GradedMap rhs = tau3_rhs(table, i, j, k);
                if (!differential_of(rhs).is_zero())
                    throw std::logic_error("tau: length-3 bar image is not closed");
                auto t3 = solve_homotopy(rhs);
                if (!t3) throw std::logic_error("tau: antiderivative nonexistence at bar length 3");
                table.tau3.emplace(std::make_tuple(i, j, k), std::move(*t3));
            }
        }
    return table;
}

}  // namespace soergel
