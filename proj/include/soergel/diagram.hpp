#pragma once

#include <memory>

#include "soergel/bimod.hpp"
#include "soergel/report.hpp"

namespace soergel {

// Term language for diagrams, evaluated into bimodule morphisms.
struct DiagramTerm;
using TermPtr = std::shared_ptr<const DiagramTerm>;

struct DiagramTerm {
    enum Kind { Gen, Id, VComp, HComp, Box, Shift, Scale, Sum } kind;
    GeneratorKind gen{};        // Gen
    std::vector<int> word;      // Id
    TermPtr a, b;               // children
    int box_m = 0, box_n = 0;   // Box ambient split
    int shift = 0;              // Shift
    Rat scalar = Rat(1);        // Scale
    std::string polylit;        // polybox literal, parsed at evaluation time
    size_t pos = 0;             // source position, for errors
};

// S-expression grammar with atoms gen/id/vcomp/hcomp/box/shift/scale/sum;
// generator names startdot|enddot|merge|split|sixv|fourv|polybox.
TermPtr parse_term(const std::string& text);

// Evaluate in ambient n (region labels are inferred from n, not carried by
// terms).  Throws with expected/found boundary words on type mismatch.
BimodMorphism evaluate_term(const TermPtr& t, int n);

// Evaluates every relation instance of the diagrammatic category that is
// available in ambient <= n and records exact-equality results.
void run_relation_suite(int n, Report& report);

}  // namespace soergel
