// algolog: an executable kernel for type-free algorithmic logic
// Copyright 2026 The algolog Authors.
// Licensed under the Apache License, Version 2.0.

#include <algolog/deduction.hpp>
#include <algolog/lawsuite.hpp>
#include <algolog/machine.hpp>
#include <algolog/statements.hpp>

#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <set>

namespace algolog
{
namespace
{
const Datum T = true_statement();
const Datum F = false_statement();

const Law& find_law(std::string_view name)
{
    const auto& catalog = law_catalog();
    const auto it = std::find_if(catalog.begin(), catalog.end(), [&](const Law& l) { return l.name == name; });
    if (it == catalog.end())
        throw std::invalid_argument("no law " + std::string{name});
    return *it;
}

Datum base_plus(std::initializer_list<RuleId> extra)
{
    std::vector<Datum> rules;
    for (const RuleId r : base_rules())
        rules.push_back(rule_datum(r));
    for (const RuleId r : extra)
        rules.push_back(rule_datum(r));
    return make_library(rules);
}

TEST(LawSuite, EveryLawCertifiesEveryInstance)
{
    const LawReport report = run_law_suite(Universe::full(), 1'000'000);
    EXPECT_EQ(report.failed, 0u);
    EXPECT_GT(report.certified, 1000u);
    EXPECT_EQ(report.laws.size(), law_catalog().size());
    for (const LawResult& r : report.laws)
    {
        EXPECT_TRUE(r.passed()) << r.name << ": " << (r.failures.empty() ? "nothing certified" : r.failures.front());
        EXPECT_EQ(r.instances, r.certified + r.skipped + r.failures.size()) << r.name;
    }
    EXPECT_TRUE(report.passed());
}

TEST(LawSuite, NamesAreUniqueAndFilterSelects)
{
    std::set<std::string> names;
    for (const Law& l : law_catalog())
        EXPECT_TRUE(names.insert(l.name).second) << l.name;
    const LawReport only = run_law_suite(Universe::full(), 1'000'000, "modus_tollens");
    ASSERT_EQ(only.laws.size(), 1u);
    EXPECT_EQ(only.laws.front().name, "modus_tollens");
}

TEST(LawSuite, ModusTollensScriptHasTheSchematicShape)
{
    Machine m{Universe::full()};
    const LawKit kit{m, base_library()};
    const std::array<Datum, 2> vars{T, T};
    const auto script = find_law("modus_tollens").build(kit, vars);
    ASSERT_TRUE(script);
    EXPECT_EQ(script->hypotheses, (std::vector<Datum>{implies(T, base_library(), T), neg(base_library(), T)}));
    EXPECT_EQ(script->goal, neg(base_library(), T));
    EXPECT_TRUE(certified(certify(m, *script, kit.library(), 1'000'000)));
}

TEST(LawSuite, ExFalsoDerivesTruthFromFalsity)
{
    Machine m{Universe::full()};
    const LawKit kit{m, base_library()};
    const std::array<Datum, 1> vars{T};
    const auto script = find_law("ex_falso").build(kit, vars);
    ASSERT_TRUE(script);
    EXPECT_EQ(script->hypotheses, std::vector<Datum>{F});
    EXPECT_EQ(script->goal, T);
    EXPECT_TRUE(certified(certify(m, *script, kit.library(), 1'000'000)));
}

// A certified script over the base library never leads from true
// hypotheses to a directly false goal, checked by evaluation.
TEST(LawSuiteProperty, TrueHypothesesNeverYieldDirectlyFalseGoals)
{
    Machine m{Universe::full()};
    const LawKit kit{m, base_library()};
    const auto& pool = law_pool();
    std::size_t checked = 0;
    for (const Law& law : law_catalog())
    {
        std::vector<Datum> vars(law.arity);
        for (std::size_t i = 0; i < pool.size(); ++i)
        {
            for (std::size_t j = 0; j < law.arity; ++j)
                vars[j] = pool[(i + 3 * j) % pool.size()];
            const auto script = law.build(kit, vars);
            if (!script)
                continue;
            const bool all_true = std::all_of(script->hypotheses.begin(), script->hypotheses.end(),
                [&](const Datum& h) { return evaluate_truth(m, h, 300).truth == Truth::True; });
            if (!all_true)
                continue;
            ++checked;
            EXPECT_NE(evaluate_truth(m, script->goal, 300).truth, Truth::DirectlyFalse) << law.name;
        }
    }
    EXPECT_GT(checked, 50u);
}

TEST(CurryFixedPoint, BothDirectionsCertify)
{
    const Datum lib = make_library({RuleId::BetaCurry, RuleId::P1});
    const CurryFixedPoint fp = curry_fixed_point(lib);
    EXPECT_EQ(fp.q, curry_statement(lib));
    // Q carries the library it refers to.
    EXPECT_EQ(fp.q[1][1], lib);
    EXPECT_EQ(fp.forward.hypotheses, std::vector<Datum>{fp.q});
    EXPECT_EQ(fp.forward.goal, neg(lib, fp.q));
    EXPECT_EQ(fp.backward.hypotheses, std::vector<Datum>{neg(lib, fp.q)});
    EXPECT_EQ(fp.backward.goal, fp.q);
    Machine m{Universe::reduced()};
    EXPECT_TRUE(certified(certify(m, fp.forward, lib, 100'000)));
    EXPECT_TRUE(certified(certify(m, fp.backward, lib, 100'000)));
    EXPECT_EQ(evaluate_truth(m, implies(fp.q, lib, neg(lib, fp.q)), 100'000).truth, Truth::True);
}

TEST(CurryFixedPoint, RequiresTheUnfoldingRule)
{
    EXPECT_THROW(curry_fixed_point(make_library({RuleId::Conj})), std::invalid_argument);
    EXPECT_THROW(curry_fixed_point(Datum::nat(3)), std::invalid_argument);
}

TEST(Paradox, CurryDemosHoldAndAreDeterministic)
{
    for (const RuleId p : {RuleId::P1, RuleId::P3})
    {
        const ParadoxRecord a = paradox_demo(p, 1'000'000);
        EXPECT_TRUE(a.holds(5)) << rule_name(p);
        EXPECT_EQ(a.q_truth.truth, Truth::True);
        EXPECT_EQ(a.neg_q_truth.truth, Truth::True);
        EXPECT_EQ(a.f_truth.truth, Truth::DirectlyFalse);
        ASSERT_TRUE(std::holds_alternative<ProvedAtStage>(a.derivation));
        const ParadoxRecord b = paradox_demo(p, 1'000'000);
        EXPECT_EQ(a.q, b.q);
        EXPECT_EQ(a.q_truth, b.q_truth);
        EXPECT_EQ(a.neg_q_truth, b.neg_q_truth);
        EXPECT_EQ(std::get<ProvedAtStage>(a.derivation).stage, std::get<ProvedAtStage>(b.derivation).stage);
        EXPECT_EQ(std::get<ProvedAtStage>(a.derivation).runtime, std::get<ProvedAtStage>(b.derivation).runtime);
    }
    EXPECT_THROW(paradox_demo(RuleId::Conj, 10), std::invalid_argument);
}

TEST(Paradox, CertifiedScriptsCertify)
{
    for (const RuleId p : {RuleId::P2, RuleId::P4, RuleId::P5, RuleId::P7, RuleId::P8, RuleId::P9, RuleId::P10,
             RuleId::P11, RuleId::P12, RuleId::P13, RuleId::P14})
    {
        const CertifiedParadox c = certified_paradox(p, 1'000'000);
        EXPECT_TRUE(certified(c.verdict)) << rule_name(p) << ": "
                                          << (certified(c.verdict) ? "" : std::get<StepFailed>(c.verdict).reason);
        EXPECT_FALSE(c.script.steps.empty()) << rule_name(p);
        EXPECT_FALSE(c.conclusion.empty()) << rule_name(p);
        EXPECT_TRUE(library_rules(c.library)) << rule_name(p);
    }
}

TEST(Paradox, TamperedScriptFails)
{
    const CertifiedParadox c = certified_paradox(RuleId::P2, 1'000'000);
    ASSERT_TRUE(certified(c.verdict));
    ProofScript bad = c.script;
    bad.steps.back().conclusion = T;
    Machine m{Universe::full()};
    const CertifyVerdict v = certify(m, bad, c.library, 1'000'000);
    ASSERT_FALSE(certified(v));
    EXPECT_EQ(std::get<StepFailed>(v).index, bad.steps.size() - 1);

    ProofScript dropped = c.script;
    dropped.steps.erase(dropped.steps.begin());
    EXPECT_FALSE(certified(certify(m, dropped, c.library, 1'000'000)));
}

TEST(StrongerLibrary, ProvesWhatTheWeakerCannotWithinBudget)
{
    const StrongerLibraryRecord r = stronger_library_demo(100'000);
    EXPECT_EQ(r.weaker, base_library());
    ASSERT_TRUE(std::holds_alternative<ProvedAtStage>(r.with_stronger));
    EXPECT_LE(std::get<ProvedAtStage>(r.with_stronger).stage, 3u);
    ASSERT_TRUE(std::holds_alternative<FuelExhausted>(r.with_weaker));
    EXPECT_EQ(std::get<FuelExhausted>(r.with_weaker).consumed, 100'000u);
}

TEST(SelfNegation, BaseWithUnfoldingLeavesTheFixedPointUnsettled)
{
    const SelfNegationEvidence e = self_negation_evidence(base_plus({RuleId::BetaCurry}), 20'000);
    EXPECT_EQ(e.q_truth.truth, Truth::Unknown);
    EXPECT_EQ(e.neg_q_truth.truth, Truth::Unknown);
    EXPECT_EQ(e.neg_neg_q_truth.truth, Truth::Unknown);
    EXPECT_EQ(e.f_truth.truth, Truth::DirectlyFalse);
}

TEST(SelfNegation, ParadoxicalLibrarySettlesTheFixedPointTrue)
{
    const SelfNegationEvidence e = self_negation_evidence(make_library({RuleId::BetaCurry, RuleId::P1}), 100'000);
    EXPECT_EQ(e.q_truth.truth, Truth::True);
    EXPECT_EQ(e.neg_q_truth.truth, Truth::True);
    EXPECT_EQ(e.f_truth.truth, Truth::DirectlyFalse);
}

TEST(SelfNegation, HaltWitnessRunsOutOfFuel)
{
    const std::array<std::uint64_t, 3> budgets{100, 1'000, 10'000};
    const auto runs = halt_witness_evidence(base_plus({RuleId::ConjContra, RuleId::P11}), budgets);
    ASSERT_EQ(runs.size(), budgets.size());
    for (std::size_t i = 0; i < runs.size(); ++i)
    {
        EXPECT_EQ(runs[i].fuel, budgets[i]);
        EXPECT_FALSE(runs[i].halted);
    }
}

// The base library does not reach F from its own fixed point, where the
// paradoxical library does in a few stages.
TEST(SelfNegation, BaseLibraryDoesNotDeriveFalsityFromTheFixedPoint)
{
    Machine m{Universe::reduced()};
    const Datum weak = base_plus({RuleId::BetaCurry});
    const std::vector<Datum> weak_hyps{curry_statement(weak)};
    EXPECT_TRUE(std::holds_alternative<FuelExhausted>(deduce_faithful(m, weak_hyps, weak, F, 20'000)));
    const Datum strong = make_library({RuleId::BetaCurry, RuleId::P1});
    const std::vector<Datum> strong_hyps{curry_statement(strong)};
    EXPECT_TRUE(std::holds_alternative<ProvedAtStage>(deduce_faithful(m, strong_hyps, strong, F, 20'000)));
}

}  // namespace
}  // namespace algolog
