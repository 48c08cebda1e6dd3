#include "soergel/rouquier.hpp"

#include <sstream>

namespace soergel {

namespace {

void require(bool cond, const std::string& msg) {
    if (!cond) throw std::logic_error(msg);
}

}  // namespace

BraidWord parse_braid_word(const std::string& text, int n) {
    BraidWord w;
    w.n = n;
    std::istringstream in(text);
    int v;
    while (in >> v) {
        require(v != 0 && std::abs(v) <= n - 1,
                "braid letter out of range for ambient " + std::to_string(n));
        w.letters.push_back(v);
    }
    require(in.eof(), "trailing garbage in braid word");
    return w;
}

BraidWord inverse_word(const BraidWord& w) {
    BraidWord out;
    out.n = w.n;
    out.letters.assign(w.letters.rbegin(), w.letters.rend());
    for (int& l : out.letters) l = -l;
    return out;
}

Complex rouquier_elementary(int n, int letter) {
    int i = std::abs(letter);
    require(1 <= i && i <= n - 1, "braid letter out of range");
    Complex x;
    x.n = n;
    if (letter > 0) {
        // B_i -> R<-1>, differential the multiplication map (end dot)
        x.summands.push_back({bs_object(n, {i}), 0});
        x.summands.push_back({unit_object(n, -1), 1});
        x.set_diff(1, 0, gen_enddot(n, i).reshifted(0, -1));
    } else {
        // R<1> -> B_i, differential 1 |-> x_i (x) 1 - 1 (x) x_{i+1}
        x.summands.push_back({unit_object(n, 1), -1});
        x.summands.push_back({bs_object(n, {i}), 0});
        x.set_diff(1, 0, gen_startdot(n, i).reshifted(1, 0));
    }
    return x;
}

Complex rouquier_of_word(const BraidWord& w) {
    Complex x = unit_complex(w.n);
    for (int letter : w.letters) x = tensor_complexes(x, rouquier_elementary(w.n, letter));
    return x;
}

std::vector<int> cabled_crossing_word(int m, int n, bool positive) {
    std::vector<int> out;
    if (positive) {
        for (int i = 1; i <= m; ++i)
            for (int j = i + n - 1; j >= i; --j) out.push_back(j);
    } else {
        for (int i = n; i >= 1; --i)
            for (int j = i; j <= i + m - 1; ++j) out.push_back(-j);
    }
    return out;
}

Complex cabled_crossing(int m, int n, bool positive) {
    BraidWord w;
    w.n = m + n;
    w.letters = cabled_crossing_word(m, n, positive);
    return qshift_complex(rouquier_of_word(w), positive ? -m * n : m * n);
}

Complex dual_complex(const Complex& x) {
    int N = x.size();
    Complex out;
    out.n = x.n;
    for (int i = N - 1; i >= 0; --i) {
        const Summand& s = x.summands[i];
        std::vector<int> rev(s.obj.word.rbegin(), s.obj.word.rend());
        out.summands.push_back({bs_object(x.n, rev, -s.obj.qshift), -s.hdeg});
    }
    for (const auto& [key, m] : x.diff) {
        auto [to, from] = key;
        out.set_diff(N - 1 - from, N - 1 - to, rotate_pi(m));
    }
    out.validate();
    return out;
}

namespace {

R2Data solve_r2(int n, int i) {
    BraidWord pos{n, {i, -i}}, neg{n, {-i, i}};
    ComplexPtr xxp = share(rouquier_of_word(pos));
    ComplexPtr xpx = share(rouquier_of_word(neg));
    ComplexPtr unit = share(unit_complex(n));

    auto find_unit_summand = [&](const Complex& c) {
        for (int k = 0; k < c.size(); ++k)
            if (c.summands[k].obj == unit_object(n) && c.summands[k].hdeg == 0) return k;
        throw std::logic_error("R2: identity-braid summand not found");
    };
    int rxxp = find_unit_summand(*xxp);
    int rxpx = find_unit_summand(*xpx);

    auto solve_ev = [&](ComplexPtr c, int ridx) {
        MapSolver solver;
        int u = solver.add_unknown(c, unit, 0, 0);
        solver.add_equation(solver.d_of_unknown(u), zero_map(c, unit, 1, 0));
        GradedMap inc = zero_map(unit, c, 0, 0);
        inc.set_block(ridx, 0, identity_morphism(unit_object(n)));
        solver.add_equation({{Rat(1), std::nullopt, u, inc}}, identity_map(unit));
        auto sol = solver.solve();
        require(sol.has_value(), "R2: no normalized evaluation map");
        return std::move((*sol)[0]);
    };
    GradedMap ev = solve_ev(xxp, rxxp);
    GradedMap evp = solve_ev(xpx, rxpx);

    auto solve_coev = [&](ComplexPtr c, const GradedMap& pairing) {
        MapSolver solver;
        int u = solver.add_unknown(unit, c, 0, 0);
        solver.add_equation(solver.d_of_unknown(u), zero_map(unit, c, 1, 0));
        solver.add_equation({{Rat(1), pairing, u, std::nullopt}}, identity_map(unit));
        auto sol = solver.solve();
        require(sol.has_value(), "R2: no on-the-nose coevaluation");
        return std::move((*sol)[0]);
    };
    GradedMap coevp = solve_coev(xxp, ev);   // ev o coev' = id
    GradedMap coev = solve_coev(xpx, evp);   // ev' o coev = id

    auto h1 = solve_homotopy(compose(coevp, ev) - identity_map(xxp));
    auto h2 = solve_homotopy(compose(coev, evp) - identity_map(xpx));
    require(h1 && h2, "R2: invertibility homotopies not found");
    return R2Data{std::move(ev), std::move(coev), std::move(evp), std::move(coevp),
                  std::move(*h1), std::move(*h2)};
}

}  // namespace

const R2Data& r2_structure_maps(int n, int i) {
    static std::map<std::pair<int, int>, R2Data> cache;
    auto key = std::make_pair(n, i);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    return cache.emplace(key, solve_r2(n, i)).first->second;
}

HomEquiv r2_cancel_equiv(const BraidWord& w, int pos) {
    require(0 <= pos && pos + 1 < (int)w.letters.size(), "r2_cancel: bad position");
    require(w.letters[pos] == -w.letters[pos + 1], "r2_cancel: letters are not inverse");
    int n = w.n;
    int i = std::abs(w.letters[pos]);
    const R2Data& r2 = r2_structure_maps(n, i);
    bool positive_first = w.letters[pos] > 0;

    ComplexPtr unit = share(unit_complex(n));
    ComplexPtr mid = positive_first ? share(rouquier_of_word({n, {i, -i}}))
                                    : share(rouquier_of_word({n, {-i, i}}));
    HomEquiv mid_equiv;
    if (positive_first)
        mid_equiv = {r2.ev, r2.coevp, r2.h_xxp, zero_map(unit, unit, -1)};
    else
        mid_equiv = {r2.evp, r2.coev, r2.h_xpx, zero_map(unit, unit, -1)};

    BraidWord left{n, std::vector<int>(w.letters.begin(), w.letters.begin() + pos)};
    BraidWord right{n, std::vector<int>(w.letters.begin() + pos + 2, w.letters.end())};
    HomEquiv eq = tensor_equiv(
        tensor_equiv(identity_equiv(share(rouquier_of_word(left))), mid_equiv),
        identity_equiv(share(rouquier_of_word(right))));
    return eq;
}

}  // namespace soergel
