#include "soergel/slide.hpp"

#include "soergel/homsolve.hpp"

namespace soergel {

namespace {

void require(bool cond, const std::string& msg) {
    if (!cond) throw std::logic_error(msg);
}

// psi(Y2) = 1_m [x] Y2, phi-placement of Y2 is unshifted; and symmetrically
// for Y1.  Words of the D_{m+n}-objects:
std::vector<int> shift_word(const std::vector<int>& w, int by) {
    std::vector<int> out = w;
    for (int& c : out) c += by;
    return out;
}

// Rescale a homotopy-equivalence certificate: fwd *= c, bwd *= 1/c keeps
// both homotopies valid.
SlideMap rescale(SlideMap s, const Rat& c) {
    s.map = s.map * c;
    s.cert.fwd = s.map;
    s.cert.bwd = s.cert.bwd * (1 / c);
    return s;
}

// Scalar of the start-dot naturality probe: the class of
// fwd o (id_X o_1 psi(dot_j)) in H^0 equals alpha times the class of
// (phi(dot_j) o_1 id_X); both live in a 1-dimensional space.
Rat dot_probe_scalar(const GradedMap& fwd, ComplexPtr x, const BimodMorphism& psi_dot,
                     const BimodMorphism& phi_dot) {
    GradedMap probe = compose(fwd, tensor_maps(identity_map(x), single_map(psi_dot)));
    GradedMap ref = tensor_maps(single_map(phi_dot), identity_map(x));
    require(*probe.src == *ref.src && *probe.tgt == *ref.tgt, "dot probe shape mismatch");
    MapSolver solver;
    int h = solver.add_unknown(probe.src, probe.tgt, -1, probe.qdeg);
    int a = solver.add_scalar_unknown();
    std::vector<MapSolver::Term> eq = solver.d_of_unknown(h);
    eq.push_back({Rat(1), ref, a, std::nullopt});
    solver.add_equation(std::move(eq), probe);
    auto sol = solver.solve();
    require(sol.has_value(), "dot probe: naturality class comparison failed");
    return solver.scalar_value(a);
}

SlideMap solve_atomic(int m, int n, uint64_t seed) {
    // (m,n) in {(1,2),(2,1)}, sliding the single generator B_1
    ComplexPtr x = share(cabled_crossing(m, n, true));
    int nn = m + n;
    BSObject psi_obj = (m == 1) ? bs_object(nn, {2}) : bs_object(nn, {1});
    BSObject phi_obj = (m == 1) ? bs_object(nn, {1}) : bs_object(nn, {2});
    ComplexPtr src = share(tensor_complexes(*x, single_complex(psi_obj)));
    ComplexPtr tgt = share(tensor_complexes(single_complex(phi_obj), *x));
    auto equiv = solve_homotopy_equivalence(src, tgt, seed);
    require(equiv.has_value(), "atomic slide: no homotopy equivalence found");
    SlideMap s;
    s.m = m;
    s.n = n;
    if (m == 1)
        s.y2 = {1};
    else
        s.y1 = {1};
    s.cert = std::move(*equiv);
    s.map = s.cert.fwd;
    // normalize by the start-dot probe
    BimodMorphism dot = gen_startdot(nn, (m == 1) ? 1 : 2).reshifted(1, 0);   // phi placement
    BimodMorphism dotp = gen_startdot(nn, (m == 1) ? 2 : 1).reshifted(1, 0);  // psi placement
    Rat alpha = dot_probe_scalar(s.map, x, dotp, dot);
    require(alpha != 0, "atomic slide: normalization anchor vanishes in solution space");
    return rescale(std::move(s), 1 / alpha);
}

}  // namespace

const SlideMap& atomic_slide_right() {
    static SlideMap s = solve_atomic(1, 2, 2026);
    return s;
}

const SlideMap& atomic_slide_left() {
    static SlideMap s = solve_atomic(2, 1, 2026);
    return s;
}

SlideMap solve_atomic_slide(int m, int n, uint64_t seed) {
    require((m == 1 && n == 2) || (m == 2 && n == 1), "solve_atomic_slide: not an atomic case");
    return solve_atomic(m, n, seed);
}

// ---------------------------------------------------------------------------
// Letter slides through Coxeter braids

namespace {

Complex rouquier_range_desc(int n, int hi, int lo) {  // F(sigma_hi ... sigma_lo)
    BraidWord w{n, {}};
    for (int j = hi; j >= lo; --j) w.letters.push_back(j);
    return rouquier_of_word(w);
}

Complex rouquier_range_asc(int n, int lo, int hi) {  // F(sigma_lo ... sigma_hi)
    BraidWord w{n, {}};
    for (int j = lo; j <= hi; ++j) w.letters.push_back(j);
    return rouquier_of_word(w);
}

}  // namespace

SlideMap slide_letter_right(int k, int j) {
    require(1 <= j && j <= k - 1, "slide_letter_right: color out of range in D_k");
    int nn = 1 + k;
    // X_{1,k} = A o M o C<-k> with A = F(s_k..s_{j+2}), M = F(s_{j+1} s_j),
    // C = F(s_{j-1}..s_1)
    Complex a = rouquier_range_desc(nn, k, j + 2);
    Complex mfac = rouquier_range_desc(nn, j + 1, j);
    Complex c = qshift_complex(rouquier_range_desc(nn, j - 1, 1), -k);
    Complex x = tensor_complexes(a, tensor_complexes(mfac, c));
    require(x == cabled_crossing(1, k, true), "slide_letter_right: factorization mismatch");

    Complex psi = single_complex(bs_object(nn, {j + 1}));
    Complex phi = single_complex(bs_object(nn, {j}));

    HomEquiv theta1 = far_comm_equiv(c, psi);  // C o B_{j+1} -> B_{j+1} o C
    const SlideMap& base = atomic_slide_right();
    // shifted atomic: M o B_{j+1} -> B_j o M (drop the internal <-2>)
    HomEquiv mid = qshift_equiv(color_shift(base.cert, j - 1, k - j - 1), 2);
    HomEquiv theta2 = far_comm_equiv(a, phi);  // A o B_j -> B_j o A

    HomEquiv e1 = tensor_equiv(identity_equiv(share(tensor_complexes(a, mfac))), theta1);
    HomEquiv e2 = tensor_equiv(identity_equiv(share(a)),
                               tensor_equiv(mid, identity_equiv(share(c))));
    HomEquiv e3 = tensor_equiv(theta2, identity_equiv(share(tensor_complexes(mfac, c))));

    SlideMap s;
    s.m = 1;
    s.n = k;
    s.y2 = {j};
    s.cert = compose_equiv(e3, compose_equiv(e2, e1));
    s.map = s.cert.fwd;
    return s;
}

SlideMap slide_letter_left(int k, int j) {
    require(1 <= j && j <= k - 1, "slide_letter_left: color out of range in D_k");
    int nn = k + 1;
    // X_{k,1} = C o M o A<-k> with C = F(s_1..s_{j-1}), M = F(s_j s_{j+1}),
    // A = F(s_{j+2}..s_k)
    Complex c = rouquier_range_asc(nn, 1, j - 1);
    Complex mfac = rouquier_range_asc(nn, j, j + 1);
    Complex a = qshift_complex(rouquier_range_asc(nn, j + 2, k), -k);
    Complex x = tensor_complexes(c, tensor_complexes(mfac, a));
    require(x == cabled_crossing(k, 1, true), "slide_letter_left: factorization mismatch");

    Complex psi = single_complex(bs_object(nn, {j}));
    Complex phi = single_complex(bs_object(nn, {j + 1}));

    HomEquiv theta1 = far_comm_equiv(a, psi);  // A o B_j -> B_j o A
    const SlideMap& base = atomic_slide_left();
    HomEquiv mid = qshift_equiv(color_shift(base.cert, j - 1, k - j - 1), 2);
    HomEquiv theta2 = far_comm_equiv(c, phi);  // C o B_{j+1} -> B_{j+1} o C

    HomEquiv e1 = tensor_equiv(identity_equiv(share(tensor_complexes(c, mfac))), theta1);
    HomEquiv e2 = tensor_equiv(identity_equiv(share(c)),
                               tensor_equiv(mid, identity_equiv(share(a))));
    HomEquiv e3 = tensor_equiv(theta2, identity_equiv(share(tensor_complexes(mfac, a))));

    SlideMap s;
    s.m = k;
    s.n = 1;
    s.y1 = {j};
    s.cert = compose_equiv(e3, compose_equiv(e2, e1));
    s.map = s.cert.fwd;
    return s;
}

// ---------------------------------------------------------------------------
// Cabled assembly

namespace {

// slide_{1_1, Y2} for a word object: one letter at a time, left to right.
HomEquiv word_slide_coxeter(int n, const std::vector<int>& y2) {
    int nn = 1 + n;
    if (y2.empty()) return identity_equiv(share(cabled_crossing(1, n, true)));
    std::optional<HomEquiv> total;
    for (size_t t = 0; t < y2.size(); ++t) {
        HomEquiv letter = slide_letter_right(n, y2[t]).cert;
        std::vector<int> done(y2.begin(), y2.begin() + t);
        std::vector<int> todo = shift_word(std::vector<int>(y2.begin() + t + 1, y2.end()), 1);
        HomEquiv layer = letter;
        if (!done.empty())
            layer = tensor_equiv(identity_equiv(share(single_complex(bs_object(nn, done)))),
                                 layer);
        if (!todo.empty())
            layer = tensor_equiv(layer,
                                 identity_equiv(share(single_complex(bs_object(nn, todo)))));
        total = total ? compose_equiv(layer, *total) : layer;
    }
    return *total;
}

// slide_{1_m, Y2}: the stack of whiskered Coxeter slides over the
// factorization X_{m,n} = G_0 o ... o G_{m-1}, G_i = 1_i [x] X_{1,n} [x] 1_{m-1-i}.
HomEquiv coxeter_stack_right(int m, int n, const std::vector<int>& y2) {
    if (m == 1) return word_slide_coxeter(n, y2);
    std::vector<Complex> g;
    for (int i = 0; i < m; ++i) g.push_back(color_shift(cabled_crossing(1, n, true), i, m - 1 - i));
    {
        Complex prod = g[0];
        for (int i = 1; i < m; ++i) prod = tensor_complexes(prod, g[i]);
        require(prod == cabled_crossing(m, n, true), "coxeter_stack: G factorization mismatch");
    }
    HomEquiv base = word_slide_coxeter(n, y2);
    std::optional<HomEquiv> total;
    for (int i = m - 1; i >= 0; --i) {
        HomEquiv layer = color_shift(base, i, m - 1 - i);
        // whisker: G_0 o ... o G_{i-1} on the left, G_{i+1} o ... o G_{m-1} right
        for (int l = i - 1; l >= 0; --l)
            layer = tensor_equiv(identity_equiv(share(g[l])), layer);
        for (int r = i + 1; r < m; ++r)
            layer = tensor_equiv(layer, identity_equiv(share(g[r])));
        total = total ? compose_equiv(layer, *total) : layer;
    }
    return *total;
}

// slide_{B_j, 1_n} via the solver equivalence with the Coxeter factorization.
HomEquiv coxeter_stack_left(int m, int n, int j) {
    if (n == 1) return slide_letter_left(m, j).cert;
    std::vector<Complex> h;
    for (int i = 0; i < n; ++i)
        h.push_back(color_shift(cabled_crossing(m, 1, true), n - 1 - i, i));
    SlideMap base = slide_letter_left(m, j);
    std::optional<HomEquiv> total;
    for (int i = n - 1; i >= 0; --i) {
        HomEquiv layer = color_shift(base.cert, n - 1 - i, i);
        for (int l = i - 1; l >= 0; --l)
            layer = tensor_equiv(identity_equiv(share(h[l])), layer);
        for (int r = i + 1; r < n; ++r)
            layer = tensor_equiv(layer, identity_equiv(share(h[r])));
        total = total ? compose_equiv(layer, *total) : layer;
    }
    // conjugate by phi: X_{m,n} ~ K
    const HomEquiv& phi = coxeter_factorization_equiv(m, n);
    ComplexPtr psi_obj = share(single_complex(bs_object(m + n, {j})));
    ComplexPtr phi_obj = share(single_complex(bs_object(m + n, {j + n})));
    HomEquiv pre = tensor_equiv(phi, identity_equiv(psi_obj));
    HomEquiv post = tensor_equiv(identity_equiv(phi_obj), inverse_equiv(phi));
    return compose_equiv(post, compose_equiv(*total, pre));
}

}  // namespace

const HomEquiv& coxeter_factorization_equiv(int m, int n) {
    static std::map<std::pair<int, int>, HomEquiv> cache;
    auto key = std::make_pair(m, n);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    Complex x = cabled_crossing(m, n, true);
    std::vector<Complex> h;
    for (int i = 0; i < n; ++i)
        h.push_back(color_shift(cabled_crossing(m, 1, true), n - 1 - i, i));
    Complex k = h[0];
    for (int i = 1; i < n; ++i) k = tensor_complexes(k, h[i]);
    auto e = solve_homotopy_equivalence(share(x), share(k), 97);
    require(e.has_value(), "coxeter_factorization_equiv: solver found no equivalence");
    return cache.emplace(key, std::move(*e)).first->second;
}

SlideMap slide_for_word(int m, int n, const std::vector<int>& y1, const std::vector<int>& y2) {
    for (int c : y1) require(1 <= c && c <= m - 1, "slide_for_word: bad color in Y1");
    for (int c : y2) require(1 <= c && c <= n - 1, "slide_for_word: bad color in Y2");
    int nn = m + n;
    ComplexPtr x = share(cabled_crossing(m, n, true));

    // identity and degenerate slides
    if ((y1.empty() && y2.empty()) || m == 0 || n == 0) {
        SlideMap s;
        s.m = m;
        s.n = n;
        s.y1 = y1;
        s.y2 = y2;
        std::vector<int> w = y1;
        for (int c : shift_word(y2, m)) w.push_back(c);
        ComplexPtr obj = share(tensor_complexes(*x, single_complex(bs_object(nn, w))));
        s.cert = identity_equiv(obj);
        s.map = s.cert.fwd;
        return s;
    }

    // slide_{Y1, 1}: one letter of Y1 at a time, left to right
    std::optional<HomEquiv> part1;
    for (size_t t = 0; t < y1.size(); ++t) {
        HomEquiv letter = coxeter_stack_left(m, n, y1[t]);
        std::vector<int> done = shift_word(std::vector<int>(y1.begin(), y1.begin() + t), n);
        std::vector<int> todo(y1.begin() + t + 1, y1.end());
        HomEquiv layer = letter;
        if (!done.empty())
            layer = tensor_equiv(identity_equiv(share(single_complex(bs_object(nn, done)))),
                                 layer);
        if (!todo.empty())
            layer = tensor_equiv(layer,
                                 identity_equiv(share(single_complex(bs_object(nn, todo)))));
        part1 = part1 ? compose_equiv(layer, *part1) : layer;
    }
    // slide_{1, Y2}: the whole word through the cable, slot by slot
    std::optional<HomEquiv> part2;
    if (!y2.empty()) part2 = coxeter_stack_right(m, n, y2);

    std::optional<HomEquiv> total;
    if (part1 && part2) {
        // (id_{1 x Y1} o slide_{1,Y2}) after (slide_{Y1,1} o id_{1 x Y2})
        HomEquiv stage1 = tensor_equiv(
            *part1, identity_equiv(share(single_complex(bs_object(nn, shift_word(y2, m))))));
        HomEquiv stage2 = tensor_equiv(
            identity_equiv(share(single_complex(bs_object(nn, shift_word(y1, n))))), *part2);
        // reorder (1 x Y1) o (Y2 x 1) -> (Y2 x 1) o (1 x Y1) with the tensorator
        BimodMorphism theta = block_swap(nn, shift_word(y1, n), y2);
        HomEquiv reorder = {
            tensor_maps(single_map(theta), identity_map(x)),
            tensor_maps(single_map(block_swap(nn, y2, shift_word(y1, n))), identity_map(x)),
            GradedMap{}, GradedMap{}};
        reorder.h_src = zero_map(reorder.fwd.src, reorder.fwd.src, -1);
        reorder.h_tgt = zero_map(reorder.fwd.tgt, reorder.fwd.tgt, -1);
        total = compose_equiv(reorder, compose_equiv(stage2, stage1));
    } else if (part1) {
        total = *part1;
    } else {
        total = *part2;
    }

    SlideMap s;
    s.m = m;
    s.n = n;
    s.y1 = y1;
    s.y2 = y2;
    s.cert = std::move(*total);
    s.map = s.cert.fwd;
    return s;
}

SlideMap slide_for_object(int m, int n, const std::vector<int>& word) {
    int nn = m + n;
    for (int c : word)
        require(1 <= c && c <= nn - 1 && c != m, "slide_for_object: color m or out of range");
    auto swap_color = [&](int c) { return c > m ? c - m : c + n; };
    ComplexPtr x = share(cabled_crossing(m, n, true));
    std::optional<HomEquiv> total;
    for (size_t t = 0; t < word.size(); ++t) {
        int c = word[t];
        HomEquiv letter = (c > m) ? coxeter_stack_right(m, n, {c - m})
                                  : coxeter_stack_left(m, n, c);
        std::vector<int> done;
        for (size_t q = 0; q < t; ++q) done.push_back(swap_color(word[q]));
        std::vector<int> todo(word.begin() + t + 1, word.end());
        HomEquiv layer = letter;
        if (!done.empty())
            layer = tensor_equiv(identity_equiv(share(single_complex(bs_object(nn, done)))),
                                 layer);
        if (!todo.empty())
            layer = tensor_equiv(layer,
                                 identity_equiv(share(single_complex(bs_object(nn, todo)))));
        total = total ? compose_equiv(layer, *total) : layer;
    }
    SlideMap s;
    s.m = m;
    s.n = n;
    if (!total) {
        ComplexPtr obj = share(tensor_complexes(*x, unit_complex(nn)));
        s.cert = identity_equiv(obj);
    } else {
        s.cert = std::move(*total);
    }
    s.map = s.cert.fwd;
    return s;
}

SlideMap slide_negative(int m, int n, const std::vector<int>& y1, const std::vector<int>& y2) {
    int nn = m + n;
    ComplexPtr xp = share(cabled_crossing(m, n, false));
    BraidWord w{nn, cabled_crossing_word(n, m, true)};

    SlideMap pos = slide_for_word(n, m, y2, y1);
    // source object A = Y1 [x] Y2 placed for (m,n); target B = Y2 [x] Y1
    std::vector<int> aw = y1;
    for (int c : shift_word(y2, m)) aw.push_back(c);
    std::vector<int> bw = y2;
    for (int c : shift_word(y1, n)) bw.push_back(c);
    ComplexPtr a = share(single_complex(bs_object(nn, aw)));
    ComplexPtr b = share(single_complex(bs_object(nn, bw)));

    // X' o A -> X' o A o X o X' -> X' o X o B o X' -> B o X'
    HomEquiv insert = tensor_equiv(tensor_equiv(identity_equiv(xp), identity_equiv(a)),
                                   unit_to_wwinv_equiv(w));
    HomEquiv mid = tensor_equiv(identity_equiv(xp),
                                tensor_equiv(inverse_equiv(pos.cert), identity_equiv(xp)));
    HomEquiv remove = tensor_equiv(inverse_equiv(unit_to_wwinv_equiv(inverse_word(w))),
                                   tensor_equiv(identity_equiv(b), identity_equiv(xp)));
    SlideMap s;
    s.m = m;
    s.n = n;
    s.y1 = y1;
    s.y2 = y2;
    s.cert = compose_equiv(remove, compose_equiv(mid, insert));
    s.map = s.cert.fwd;
    return s;
}

HomEquiv unit_to_wwinv_equiv(const BraidWord& w) {
    int n = w.n;
    if (w.letters.empty()) return identity_equiv(share(unit_complex(n)));
    int l = w.letters.front();
    BraidWord rest{n, std::vector<int>(w.letters.begin() + 1, w.letters.end())};
    int i = std::abs(l);
    const R2Data& r2 = r2_structure_maps(n, i);
    ComplexPtr unit = share(unit_complex(n));
    HomEquiv elem;
    if (l > 0)
        elem = {r2.coevp, r2.ev, zero_map(unit, unit, -1), r2.h_xxp};
    else
        elem = {r2.coev, r2.evp, zero_map(unit, unit, -1), r2.h_xpx};
    HomEquiv inner = unit_to_wwinv_equiv(rest);
    HomEquiv whiskered = tensor_equiv(
        tensor_equiv(identity_equiv(share(rouquier_elementary(n, l))), inner),
        identity_equiv(share(rouquier_elementary(n, -l))));
    return compose_equiv(whiskered, elem);
}

const SlideMap& slide_cached(int m, int n, const std::vector<int>& y1,
                             const std::vector<int>& y2) {
    static std::map<std::tuple<int, int, std::vector<int>, std::vector<int>>, SlideMap> cache;
    auto key = std::make_tuple(m, n, y1, y2);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    return cache.emplace(key, slide_for_word(m, n, y1, y2)).first->second;
}

}  // namespace soergel
