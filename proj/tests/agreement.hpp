// algolog: an executable kernel for type-free algorithmic logic
// Copyright 2026 The algolog Authors.
// Licensed under the Apache License, Version 2.0.
#pragma once

// Tiny deduction problems over pattern-rule libraries, each with a
// hand-written proof script. Negative instances carry a plausible but wrong
// script; the goal is not in the closure, so both engines must decline.

#include <algolog/deduction.hpp>
#include <algolog/lawsuite.hpp>
#include <algolog/statements.hpp>

#include <string>
#include <vector>

namespace algolog::testing_support
{
struct AgreementInstance
{
    std::string name;
    Datum library;
    ProofScript script;
    bool derivable = true;
};

inline ProofStep make_step(std::uint64_t k, std::uint64_t m, std::vector<std::size_t> premises, Datum conclusion)
{
    ProofStep s;
    s.rule_index = k;
    s.resource = m;
    s.premises = std::move(premises);
    s.conclusion = std::move(conclusion);
    return s;
}

inline std::vector<AgreementInstance> agreement_instances()
{
    const Datum T = true_statement();
    const Datum F = false_statement();
    const Datum L = stmt(Datum::alg(ProgramId::Loop), Datum::nat(0), Datum::nat(0));
    const Datum I = stmt(Datum::alg(ProgramId::Identity), Datum::nat(1), Datum::nat(1));
    const Datum J = stmt(Datum::alg(ProgramId::Identity), Datum::nat(2), Datum::nat(2));

    std::vector<AgreementInstance> out;
    const auto add = [&](std::string name, Datum library, std::vector<Datum> hyps, Datum goal,
                         std::vector<ProofStep> steps, bool derivable = true) {
        AgreementInstance inst;
        inst.name = std::move(name);
        inst.library = std::move(library);
        inst.script.hypotheses = std::move(hyps);
        inst.script.goal = std::move(goal);
        inst.script.steps = std::move(steps);
        inst.derivable = derivable;
        out.push_back(std::move(inst));
    };

    const Datum conj_lib = make_library({RuleId::Conj});
    add("left conjunct", conj_lib, {conj(T, F)}, T, {make_step(1, 1, {0}, T)});
    add("right conjunct", conj_lib, {conj(T, F)}, F, {make_step(1, 1, {0}, F)});
    add("conjoin hypotheses", conj_lib, {T, F}, conj(F, T), {make_step(1, 17, {1, 0}, conj(F, T))});
    add("swap conjunction", conj_lib, {conj(T, F)}, conj(F, T),
        {make_step(1, 1, {0}, T), make_step(1, 1, {0}, F), make_step(1, 17, {2, 1}, conj(F, T))});
    add("hypothesis itself", conj_lib, {L}, L, {});

    const Datum case_lib = make_library({RuleId::ElimCase});
    add("elimination of case", case_lib, {disj(F, T), strong_neg(F)}, T, {make_step(1, 1, {0, 1}, T)});

    const Datum trans_lib = make_library({RuleId::Trans});
    add("transitivity", trans_lib, {implies(T, trans_lib, I), implies(I, trans_lib, J)}, implies(T, trans_lib, J),
        {make_step(1, 1, {0, 1}, implies(T, trans_lib, J))});

    const Datum dm_lib = make_library({RuleId::StrongDeMorgan});
    add("strong De Morgan", dm_lib, {strong_neg(disj(F, F))}, conj(strong_neg(F), strong_neg(F)),
        {make_step(1, 1, {0}, conj(strong_neg(F), strong_neg(F)))});

    const Datum dn_lib = make_library({RuleId::DoubleNeg});
    add("double negation elimination", dn_lib, {strong_neg(strong_neg(T))}, T, {make_step(1, 1, {0}, T)});
    add("double negation introduction", dn_lib, {T}, strong_neg(strong_neg(T)),
        {make_step(1, 15, {0}, strong_neg(strong_neg(T)))});

    const Datum mc_lib = make_library({RuleId::MetaConj});
    add("meta conjunction", mc_lib, {implies(T, mc_lib, I), implies(T, mc_lib, J)}, implies(T, mc_lib, conj(I, J)),
        {make_step(1, 1, {0, 1}, implies(T, mc_lib, conj(I, J)))});

    const Datum md_lib = make_library({RuleId::MetaDisj});
    add("meta disjunction", md_lib, {implies(conj(I, T), md_lib, J), implies(conj(I, F), md_lib, J)},
        implies(conj(I, disj(T, F)), md_lib, J), {make_step(1, 1, {0, 1}, implies(conj(I, disj(T, F)), md_lib, J))});

    const Datum two_lib = make_library({RuleId::Conj, RuleId::ElimCase});
    add("unpack then eliminate", two_lib, {conj(disj(F, T), strong_neg(F))}, T,
        {make_step(1, 1, {0}, disj(F, T)), make_step(1, 1, {0}, strong_neg(F)), make_step(2, 1, {1, 2}, T)});

    add("fixed modus ponens", make_library(std::vector<Datum>{mp_fixed_rule(conj_lib)}), {implies(T, conj_lib, L), T},
        L, {make_step(1, 1, {0, 1}, L)});
    add("denial", make_library(std::vector<Datum>{deny_rule(L)}), {L}, F, {make_step(1, 1, {0}, F)});
    add("conjunction with its strong negation", make_library({RuleId::ConjContra}), {conj(L, strong_neg(L))}, F,
        {make_step(1, 1, {0}, F)});

    const Datum p1_lib = make_library({RuleId::BetaCurry, RuleId::P1});
    const Datum q1 = curry_statement(p1_lib);
    add("Curry unfolding", p1_lib, {q1}, neg(p1_lib, q1), {make_step(1, 1, {0}, neg(p1_lib, q1))});
    add("Curry contradiction", p1_lib, {q1}, F,
        {make_step(1, 1, {0}, neg(p1_lib, q1)), make_step(2, 1, {0, 1}, F)});
    const Datum p3_lib = make_library({RuleId::BetaCurry, RuleId::P3});
    const Datum q3 = curry_statement(p3_lib);
    add("Curry modus ponens", p3_lib, {q3}, F, {make_step(1, 1, {0}, neg(p3_lib, q3)), make_step(2, 1, {0, 1}, F)});

    const Datum p5_lib = make_library({RuleId::P5});
    add("double deductive negation", p5_lib, {neg(p5_lib, neg(p5_lib, I))}, I, {make_step(1, 1, {0}, I)});
    const Datum p13_lib = make_library({RuleId::P13});
    add("provability elimination", p13_lib, {prove(p13_lib, I)}, I, {make_step(1, 1, {0}, I)});
    const Datum p10_lib = make_library({RuleId::P10});
    add("conditional to disjunction", p10_lib, {implies(T, p10_lib, I)}, disj(neg(p10_lib, T), I),
        {make_step(1, 1, {0}, disj(neg(p10_lib, T), I))});

    // Negative instances.
    add("no falsity from truth", conj_lib, {T}, F, {make_step(1, 30, {0}, F)}, false);
    add("case without refutation", case_lib, {disj(F, T)}, T, {make_step(1, 1, {0}, T)}, false);
    add("broken chain", trans_lib, {implies(T, trans_lib, I)}, implies(T, trans_lib, J),
        {make_step(1, 1, {0}, implies(T, trans_lib, J))}, false);
    const Datum beta_only = make_library({RuleId::BetaCurry});
    add("Curry without a paradoxical rule", beta_only, {curry_statement(beta_only)}, F,
        {make_step(1, 1, {0}, F)}, false);
    add("wrong disjunct", case_lib, {disj(F, T), strong_neg(T)}, T, {make_step(1, 1, {0, 1}, T)}, false);
    return out;
}

}  // namespace algolog::testing_support
