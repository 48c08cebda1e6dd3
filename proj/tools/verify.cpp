// Batch verification front-end: runs the identity suites and prints
// machine-readable reports.  Exit codes: 0 all pass, 1 failures, 2 usage.

#include <iostream>
#include <random>

#include "CLI11.hpp"
#include "soergel/diagram.hpp"
#include "soergel/homsolve.hpp"
#include "soergel/naturality.hpp"

using namespace soergel;

namespace {

BraidWord random_word(std::mt19937_64& rng, int n, int maxlen) {
    std::uniform_int_distribution<int> len(0, maxlen);
    std::uniform_int_distribution<int> letter(1, n - 1);
    std::uniform_int_distribution<int> sign(0, 1);
    BraidWord w{n, {}};
    int l = len(rng);
    for (int t = 0; t < l; ++t) w.letters.push_back(letter(rng) * (sign(rng) ? 1 : -1));
    return w;
}

void suite_frobenius(int nmax, Report& rep) {
    for (int n = 2; n <= nmax; ++n) {
        for (int i = 1; i < n; ++i) {
            std::string id = "n" + std::to_string(n) + ".c" + std::to_string(i);
            rep.run_case("frobenius", id, [&](std::string& details) {
                BSObject b = bs_object(n, {i});
                BimodMorphism m = gen_merge(n, i), d = gen_split(n, i);
                BimodMorphism id_b = identity_morphism(b);
                BimodMorphism lhs = compose(tensor_h(id_b, m), tensor_h(d, id_b));
                BimodMorphism mid = compose(d, m);
                BimodMorphism rhs = compose(tensor_h(m, id_b), tensor_h(id_b, d));
                if (lhs == mid && rhs == mid) return true;
                details = "Frobenius condition failed";
                return false;
            });
        }
    }
}

void suite_strictness(int nmax, uint64_t seed, int count, Report& rep) {
    std::mt19937_64 rng(seed);
    int nn = std::min(nmax, 3);
    for (int t = 0; t < count; ++t) {
        rep.run_case("strictness", "triple." + std::to_string(t), [&](std::string& details) {
            Complex a = rouquier_of_word(random_word(rng, nn, 3));
            Complex b = rouquier_of_word(random_word(rng, nn, 3));
            Complex c = rouquier_of_word(random_word(rng, nn, 3));
            Complex l = tensor_complexes(tensor_complexes(a, b), c);
            Complex r = tensor_complexes(a, tensor_complexes(b, c));
            if (!(l == r)) {
                details = "circ_1 associativity failed";
                return false;
            }
            Complex lb = boxtimes_complexes(boxtimes_complexes(a, b), c);
            Complex rb = boxtimes_complexes(a, boxtimes_complexes(b, c));
            if (!(lb == rb)) {
                details = "boxtimes associativity failed";
                return false;
            }
            l.validate();
            lb.validate();
            return true;
        });
    }
    rep.run_case("strictness", "warning-misorder", [&](std::string& details) {
        // ordering summands by total homological degree breaks associativity
        Complex a = rouquier_of_word({2, {1}});
        Complex b = rouquier_of_word({2, {1, 1}});
        Complex c = rouquier_of_word({2, {1}});
        Complex l = tensor_complexes_misordered(tensor_complexes_misordered(a, b), c);
        Complex r = tensor_complexes_misordered(a, tensor_complexes_misordered(b, c));
        if (l == r) {
            details = "mis-ordered tensor unexpectedly associated";
            return false;
        }
        return true;
    });
}

void suite_braid(const std::string& word, const std::string& against, int n, uint64_t seed,
                 Report& rep) {
    rep.run_case("braid", word + " ~ " + against, [&](std::string& details) {
        ComplexPtr x = share(rouquier_of_word(parse_braid_word(word, n)));
        ComplexPtr y = share(rouquier_of_word(parse_braid_word(against, n)));
        auto e = solve_homotopy_equivalence(x, y, seed);
        if (!e) {
            details = "no homotopy equivalence found";
            return false;
        }
        e->verify();
        details = "certificate verified";
        return true;
    });
}

void suite_slides(Report& rep) {
    rep.run_case("slides", "atomic.right", [&](std::string&) {
        atomic_slide_right().cert.verify();
        return true;
    });
    rep.run_case("slides", "atomic.left", [&](std::string&) {
        atomic_slide_left().cert.verify();
        return true;
    });
    rep.run_case("slides", "atomic.h0-dim", [&](std::string& details) {
        const SlideMap& s = atomic_slide_right();
        auto dims = hom_complex_cohomology_dims(*s.map.src, *s.map.tgt, 0, 0, 0);
        details = "dim H^0 = " + std::to_string(dims[0]);
        return dims[0] == 1;
    });
    rep.run_case("slides", "word.2x2", [&](std::string&) {
        slide_for_word(2, 2, {1}, {1}).cert.verify();
        return true;
    });
    rep.run_case("slides", "cabled.2x2", [&](std::string&) {
        slide_for_word(2, 2, {}, {1}).cert.verify();
        return true;
    });
    rep.run_case("slides", "negative.1x2", [&](std::string&) {
        slide_negative(1, 2, {}, {1}).cert.verify();
        return true;
    });
}

struct NatCase {
    std::string name;
    int m, n;
    BimodMorphism f;
    bool defect_zero;
};

std::vector<NatCase> naturality_cases(const std::string& only) {
    std::vector<NatCase> all;
    all.push_back({"polybox", 1, 1, gen_polybox(1, Poly::variable(1, 1)), false});
    all.push_back({"startdot", 1, 2, gen_startdot(2, 1), false});
    all.push_back({"enddot", 1, 2, gen_enddot(2, 1), false});
    all.push_back({"merge", 1, 2, gen_merge(2, 1), true});
    all.push_back({"split", 1, 2, gen_split(2, 1), true});
    all.push_back({"sixv-up", 1, 3, gen_sixv(3, 1, true), false});
    all.push_back({"sixv-down", 1, 3, gen_sixv(3, 1, false), true});
    all.push_back({"fourv", 1, 4, gen_fourv(4, 1, 3), true});
    if (only.empty()) return all;
    std::vector<NatCase> out;
    for (auto& c : all)
        if (c.name == only) out.push_back(c);
    return out;
}

void suite_naturality(const std::string& generator, Report& rep) {
    auto cases = naturality_cases(generator);
    if (cases.empty()) throw std::invalid_argument("unknown generator " + generator);
    for (auto& c : cases) {
        rep.run_case("naturality", c.name, [&](std::string& details) {
            GradedMap defect = naturality_defect(c.m, c.n, c.f);
            bool zero = defect.is_zero();
            if (zero != c.defect_zero) {
                details = std::string("defect expected ") + (c.defect_zero ? "zero" : "nonzero") +
                          " but is " + (zero ? "zero" : "nonzero");
                return false;
            }
            if (!zero) {
                auto h = solve_homotopy(defect);
                if (!h) {
                    details = "no slide homotopy found";
                    return false;
                }
                details = "defect nonzero, homotopy found";
            } else {
                details = "defect vanishes on the nose";
            }
            return true;
        });
    }
}

void suite_cohomology(int nmax, int qlo, int qhi, Report& rep) {
    for (int n = 2; n <= nmax; ++n) {
        std::vector<std::vector<int>> words{{}};
        for (int c = 1; c < n; ++c) words.push_back({c});
        for (int c1 = 1; c1 < n; ++c1)
            for (int c2 = 1; c2 < n; ++c2) words.push_back({c1, c2});
        for (const auto& y : words) {
            std::string id = "n" + std::to_string(n) + ".Y=";
            for (int c : y) id += std::to_string(c);
            rep.run_case("cohomology", id, [&](std::string& details) {
                Complex x = cabled_crossing(1, n, true);
                std::vector<int> psi = y;
                for (int& c : psi) c += 1;
                Complex a = tensor_complexes(x, single_complex(bs_object(1 + n, psi)));
                Complex b = tensor_complexes(single_complex(bs_object(1 + n, y)), x);
                for (int q = qlo; q <= qhi; ++q) {
                    auto dims = hom_complex_cohomology_dims(a, b, q, -3, 3);
                    for (size_t k = 0; k < dims.size(); ++k) {
                        if ((int)k != 3 && dims[k] != 0) {
                            details = "H^" + std::to_string((int)k - 3) + " = " +
                                      std::to_string(dims[k]) + " at q=" + std::to_string(q);
                            return false;
                        }
                    }
                }
                return true;
            });
        }
    }
}

void suite_cone(uint64_t seed, Report& rep) {
    rep.run_case("cone", "startdot", [&](std::string&) {
        auto h = solve_slide_homotopy(1, 2, gen_startdot(2, 1));
        cone_slide(1, 2, gen_startdot(2, 1).reshifted(1, 0), *h).cert.verify();
        return true;
    });
    rep.run_case("cone", "random-barbell", [&](std::string& details) {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<int> coef(1, 5);
        Rat c(coef(rng));
        BimodMorphism barbell = compose(gen_enddot(2, 1), gen_startdot(2, 1)) * c;
        auto h = solve_slide_homotopy(1, 2, barbell);
        if (!h) {
            details = "no homotopy for scaled barbell";
            return false;
        }
        cone_slide(1, 2, barbell.reshifted(0, -2), *h).cert.verify();
        details = "scale " + c.get_str();
        return true;
    });
}

void suite_tau(int m, int n, int rmax, Report& rep) {
    rep.run_case("tau", "build." + std::to_string(m) + "x" + std::to_string(n),
                 [&](std::string& details) {
                     TauTable t = build_tau_table(m, n, rmax, n >= 2 ? 2 : 0);
                     for (auto& [key, tau2] : t.tau2) {
                         GradedMap rhs = tau2_rhs(t, key.first, key.second);
                         if (!(differential_of(tau2) == rhs)) {
                             details = "chain-map property failed on stored element";
                             return false;
                         }
                     }
                     for (auto& [key, tau3] : t.tau3) {
                         auto [i, j, k] = key;
                         if (!(differential_of(tau3) == tau3_rhs(t, i, j, k))) {
                             details = "chain-map property failed at bar length 3";
                             return false;
                         }
                     }
                     details = std::to_string(t.morphisms.size()) + " morphisms, " +
                               std::to_string(t.tau2.size()) + " length-2 and " +
                               std::to_string(t.tau3.size()) + " length-3 entries";
                     return true;
                 });
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification suites for the Bott-Samelson braiding engine"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "text";
    uint64_t seed = 2026;
    bool no_timing = false;
    int nflag = 3, mflag = 1;
    app.add_option("--format", format, "json|text")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--seed", seed, "seed for randomized suites");
    app.add_flag("--no-timing", no_timing, "zero out runtime_ms for byte-identical reruns");

    auto* rel = app.add_subcommand("relations", "diagrammatic relation suite");
    rel->add_option("--n", nflag, "run all relations available up to ambient n");

    auto* frob = app.add_subcommand("frobenius", "Frobenius axioms");
    frob->add_option("--n", nflag);

    auto* strict = app.add_subcommand("strictness", "tensor strict associativity");
    strict->add_option("--n", nflag);
    int count = 100;
    strict->add_option("--count", count, "number of random triples");

    auto* braid = app.add_subcommand("braid", "braid word equivalence certificate");
    std::string word, against;
    braid->add_option("--word", word)->required();
    braid->add_option("--against", against)->required();
    braid->add_option("--n", nflag);

    auto* slides = app.add_subcommand("slides", "slide chain maps and certificates");

    auto* nat = app.add_subcommand("naturality", "generator naturality table");
    std::string generator;
    nat->add_option("--generator", generator,
                    "polybox|startdot|enddot|merge|split|sixv-up|sixv-down|fourv");

    auto* coh = app.add_subcommand("cohomology", "hom-complex cohomology concentration");
    coh->add_option("--n", nflag);
    int qlo = -2, qhi = 3;
    coh->add_option("--qlo", qlo);
    coh->add_option("--qhi", qhi);

    auto* conecmd = app.add_subcommand("cone", "cone slide certificates");

    auto* tau = app.add_subcommand("tau", "truncated tau table");
    tau->add_option("--m", mflag);
    tau->add_option("--n", nflag);
    int maxbar = 2;
    tau->add_option("--max-bar-length", maxbar);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    Report rep;
    try {
        if (rel->parsed()) run_relation_suite(nflag, rep);
        if (frob->parsed()) suite_frobenius(nflag, rep);
        if (strict->parsed()) suite_strictness(nflag, seed, count, rep);
        if (braid->parsed()) suite_braid(word, against, nflag, seed, rep);
        if (slides->parsed()) suite_slides(rep);
        if (nat->parsed()) suite_naturality(generator, rep);
        if (coh->parsed()) suite_cohomology(nflag, qlo, qhi, rep);
        if (conecmd->parsed()) suite_cone(seed, rep);
        if (tau->parsed()) suite_tau(mflag, nflag, maxbar, rep);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    std::cout << (format == "json" ? rep.to_json(!no_timing) : rep.to_text(!no_timing));
    return rep.all_passed() ? 0 : 1;
}
