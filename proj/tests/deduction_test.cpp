// algolog: an executable kernel for type-free algorithmic logic
// Copyright 2026 The algolog Authors.
// Licensed under the Apache License, Version 2.0.

#include "agreement.hpp"
#include "contracts.hpp"

#include <algolog/deduction.hpp>
#include <algolog/lawsuite.hpp>
#include <algolog/machine.hpp>
#include <algolog/statements.hpp>

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

namespace algolog
{
namespace
{
using testing_support::agreement_instances;
using testing_support::diagonal_walk;
using testing_support::make_step;
using testing_support::StatementGen;

const Datum T = true_statement();
const Datum F = false_statement();

Datum loop_statement()
{
    return stmt(Datum::alg(ProgramId::Loop), Datum::nat(0), Datum::nat(0));
}

Datum id_statement(std::uint64_t u, std::uint64_t v)
{
    return stmt(Datum::alg(ProgramId::Identity), Datum::nat(u), Datum::nat(v));
}

bool has(const std::vector<Datum>& items, const Datum& x)
{
    return std::find(items.begin(), items.end(), x) != items.end();
}

/// H_0 .. H_n of the deduction recurrence, stepped from the host.
std::vector<std::vector<Datum>> host_closure(
    Machine& m, const std::vector<Datum>& gamma, const Datum& library, std::size_t n)
{
    const auto rules = *library_rules(library);
    const auto walk = diagonal_walk(64);
    std::vector<std::vector<Datum>> stages{gamma};
    for (std::size_t i = 0; i < n; ++i)
    {
        const auto [k, mres] = walk[i];
        const Datum& rule = rules[std::min<std::size_t>(k, rules.size()) - 1];
        stages.push_back(apply_rule(m, rule, stages.back(), library, mres, 10'000'000));
    }
    return stages;
}

TEST(Pairing, Examples)
{
    EXPECT_EQ(pair_index(1), std::make_pair(std::uint64_t{1}, std::uint64_t{1}));
    EXPECT_EQ(pair_index(2), std::make_pair(std::uint64_t{1}, std::uint64_t{2}));
    EXPECT_EQ(pair_index(3), std::make_pair(std::uint64_t{2}, std::uint64_t{1}));
    EXPECT_THROW(pair_index(0), std::invalid_argument);
}

TEST(Pairing, BijectiveOnTheFirstHundredDiagonals)
{
    const auto walk = diagonal_walk(100);
    ASSERT_EQ(walk.size(), 5050u);
    std::set<std::pair<std::uint64_t, std::uint64_t>> seen;
    for (std::uint64_t i = 1; i <= 5050; ++i)
    {
        const auto p = pair_index(i);
        EXPECT_EQ(p, walk[i - 1]);
        EXPECT_EQ(pair_rank(p.first, p.second), i);
        seen.insert(p);
    }
    EXPECT_EQ(seen.size(), 5050u);
    for (const auto& [k, m] : seen)
        EXPECT_LE(k + m - 1, 100u);
}

TEST(Pairing, LargeIndicesRoundTrip)
{
    for (std::uint64_t i : {std::uint64_t{1'000'000}, std::uint64_t{123'456'789}, std::uint64_t{1} << 40})
    {
        const auto [k, m] = pair_index(i);
        EXPECT_EQ(pair_rank(k, m), i);
    }
}

TEST(Library, ConstantTail)
{
    Machine m;
    const Datum conj_rule = rule_datum(RuleId::Conj);
    const Datum one = make_library({RuleId::Conj});
    const RunResult r = m.run(one, Datum::nat(7), 10);
    ASSERT_TRUE(halted(r));
    EXPECT_EQ(std::get<Halted>(r).output, conj_rule);

    const Datum r1 = rule_datum(RuleId::Trans);
    const Datum r2 = deny_rule(loop_statement());
    const Datum two = make_library(std::vector<Datum>{r1, r2});
    EXPECT_EQ(std::get<Halted>(m.run(two, Datum::nat(1), 10)).output, r1);
    EXPECT_EQ(std::get<Halted>(m.run(two, Datum::nat(2), 10)).output, r2);
    EXPECT_EQ(std::get<Halted>(m.run(two, Datum::nat(99), 10)).output, r2);
    for (std::uint64_t n = 1; n <= 1000; ++n)
    {
        const RunResult x = m.run(base_library(), Datum::nat(n), 5);
        ASSERT_TRUE(halted(x));
        EXPECT_TRUE(rule_of(std::get<Halted>(x).output));
    }
}

TEST(Library, ValidatesItsRules)
{
    EXPECT_THROW(make_library(std::vector<Datum>{}), std::invalid_argument);
    EXPECT_THROW(make_library(std::vector<Datum>{Datum::nat(1)}), std::invalid_argument);
    EXPECT_THROW(make_library(std::vector<Datum>{Datum::alg(ProgramId::Identity)}), std::invalid_argument);
    EXPECT_THROW(rule_datum(RuleId::Deny), std::invalid_argument);
    EXPECT_TRUE(is_library(base_library()));
    EXPECT_FALSE(is_library(Datum::alg(ProgramId::LibFromList, {Datum::list({})})));
    EXPECT_FALSE(rule_of(Datum::alg(rule_program(RuleId::Deny))));
    EXPECT_EQ(rule_of(deny_rule(F)), RuleId::Deny);
}

TEST(Library, BaseHasTheElevenStableRules)
{
    const auto rules = base_rules();
    ASSERT_EQ(rules.size(), 11u);
    EXPECT_EQ(rules.front(), RuleId::Trans);
    EXPECT_EQ(rules.back(), RuleId::StrongDeMorgan);
    const auto data = *library_rules(base_library());
    ASSERT_EQ(data.size(), 11u);
    for (std::size_t i = 0; i < 11; ++i)
        EXPECT_EQ(rule_of(data[i]), rules[i]);
}

TEST(Deduce, ConjunctionEliminationProvesAConjunct)
{
    Machine m{Universe::reduced()};
    const std::vector<Datum> gamma{conj(T, F)};
    const auto v = deduce_faithful(m, gamma, make_library({RuleId::Conj}), T, 10'000);
    ASSERT_TRUE(std::holds_alternative<ProvedAtStage>(v));
    EXPECT_EQ(std::get<ProvedAtStage>(v).stage, 1u);
}

TEST(Deduce, NoFalsityFromTruthUnderConjunction)
{
    Machine m{Universe::reduced()};
    const std::vector<Datum> gamma{T};
    std::size_t stages = 0;
    const auto v = deduce_faithful(m, gamma, make_library({RuleId::Conj}), F, 10'000, [&](const StageEvent& e) {
        ++stages;
        EXPECT_FALSE(has(*e.items, F)) << "stage " << e.stage;
    });
    ASSERT_TRUE(std::holds_alternative<FuelExhausted>(v));
    EXPECT_EQ(std::get<FuelExhausted>(v).consumed, 10'000u);
    EXPECT_GT(stages, 10u);
}

TEST(Deduce, HypothesisIsProvedAtStageZero)
{
    Machine m;
    const std::vector<Datum> gamma{loop_statement()};
    for (const Datum& rho : {base_library(), make_library({RuleId::P12})})
    {
        const auto v = deduce_faithful(m, gamma, rho, loop_statement(), 100);
        ASSERT_TRUE(std::holds_alternative<ProvedAtStage>(v));
        EXPECT_EQ(std::get<ProvedAtStage>(v).stage, 0u);
    }
}

TEST(Deduce, CurryParadoxDerivesFalsityQuickly)
{
    Machine m;
    const Datum rho = make_library({RuleId::BetaCurry, RuleId::P1});
    const std::vector<Datum> gamma{curry_statement(rho)};
    const auto v = deduce_faithful(m, gamma, rho, F, 100'000);
    ASSERT_TRUE(std::holds_alternative<ProvedAtStage>(v));
    EXPECT_LE(std::get<ProvedAtStage>(v).stage, 3u);
}

TEST(Deduce, RejectsMalformedArguments)
{
    Machine m;
    const std::vector<Datum> bad{Datum::nat(1)};
    EXPECT_THROW(deduce_faithful(m, bad, base_library(), T, 10), std::invalid_argument);
    EXPECT_THROW(deduce_faithful(m, {}, Datum::nat(1), T, 10), std::invalid_argument);
    EXPECT_THROW(deduce_faithful(m, {}, base_library(), Datum::nat(0), 10), std::invalid_argument);
}

TEST(Deduce, AgreesWithTheTurnstileStatement)
{
    Machine m;
    const Datum rho = make_library({RuleId::Conj});
    const std::vector<Datum> gamma{conj(T, F)};
    const auto v = deduce_faithful(m, gamma, rho, F, 10'000);
    ASSERT_TRUE(std::holds_alternative<ProvedAtStage>(v));
    const TruthVerdict t = evaluate_truth(m, turnstile(gamma, rho, F), 10'000);
    EXPECT_EQ(t.truth, Truth::True);
    EXPECT_EQ(t.units, std::get<ProvedAtStage>(v).runtime);
}

TEST(Closure, ConjunctionElimination)
{
    Machine m{Universe::reduced()};
    const std::vector<Datum> gamma{conj(T, F)};
    const ClosureRun run = closure_stages(m, gamma, make_library({RuleId::Conj}), 3, 100'000);
    ASSERT_EQ(run.stages.size(), 4u);
    EXPECT_FALSE(run.fuel_exhausted);
    EXPECT_EQ(run.stages[0], gamma);
    for (const Datum& x : {conj(T, F), T, F})
        EXPECT_TRUE(has(run.stages[1], x));
}

TEST(Closure, EmptyHypothesesStayEmptyWithoutUniversalRule)
{
    Machine m{Universe::reduced()};
    const ClosureRun run = closure_stages(m, {}, make_library({RuleId::Conj, RuleId::Trans, RuleId::ElimCase}), 20, 100'000);
    ASSERT_EQ(run.stages.size(), 21u);
    for (const auto& h : run.stages)
        EXPECT_TRUE(h.empty());
}

TEST(Closure, MatchesHostSteppedRecurrence)
{
    Machine m{Universe::reduced()};
    StatementGen sg{51};
    const std::vector<Datum> libraries{make_library({RuleId::Conj, RuleId::ElimCase}),
        make_library({RuleId::DoubleNeg, RuleId::StrongDeMorgan, RuleId::Conj}),
        make_library({RuleId::DisjIntro, RuleId::ElimCase})};
    for (int c = 0; c < 30; ++c)
    {
        std::vector<Datum> gamma;
        for (std::uint64_t i = 0; i < 1 + sg.below(2); ++i)
            gamma.push_back(sg.statement(1));
        const Datum& rho = libraries[sg.below(libraries.size())];
        const std::size_t n = 12;
        const ClosureRun run = closure_stages(m, gamma, rho, n, 50'000'000);
        ASSERT_FALSE(run.fuel_exhausted);
        const auto oracle = host_closure(m, gamma, rho, n);
        ASSERT_EQ(run.stages, oracle);
        for (std::size_t i = 1; i < run.stages.size(); ++i)
            EXPECT_TRUE(std::equal(run.stages[i - 1].begin(), run.stages[i - 1].end(), run.stages[i].begin()));

        // A goal is proved exactly at the first stage that holds it.
        const Datum goal = sg.statement(1);
        std::optional<std::size_t> first;
        for (std::size_t i = 0; i < oracle.size() && !first; ++i)
            if (has(oracle[i], goal))
                first = i;
        // Checking the goal costs little beyond computing the n stages.
        const auto v = deduce_faithful(m, gamma, rho, goal, 2 * run.consumed + 1'000);
        if (const auto* p = std::get_if<ProvedAtStage>(&v); p && p->stage <= n)
            EXPECT_EQ(first, p->stage);
        else
            EXPECT_FALSE(first);
    }
}

TEST(MTrue, Examples)
{
    Machine m;
    EXPECT_TRUE(m_true_check(m, T, 5));
    EXPECT_FALSE(m_true_check(m, T, 1));
    EXPECT_FALSE(m_true_check(m, F, 100));
    EXPECT_FALSE(m_true_check(m, loop_statement(), 100));
    // Both the size and the runtime must fit.
    const Datum nested = stmt(Datum::alg(ProgramId::True), T, Datum::nat(1));
    const auto runtime = std::get<Halted>(m.run(nested[0], nested[1], 100)).runtime;
    const std::uint64_t bound = std::max<std::uint64_t>(nested.size(), runtime);
    EXPECT_TRUE(m_true_check(m, nested, bound));
    EXPECT_FALSE(m_true_check(m, nested, bound - 1));
}

TEST(Certify, ConjoinedConditionalFromUniversalInjection)
{
    Machine m;
    const Datum rho = base_library();
    const Datum A = T;
    const Datum B = F;
    const Datum ab = implies(A, rho, B);
    const Datum aa = implies(A, rho, A);
    const Datum goal = implies(A, rho, conj(B, A));

    // A => A injected by executing it.
    ProofScript by_execution;
    by_execution.hypotheses = {ab};
    by_execution.goal = goal;
    by_execution.steps = {make_step(2, 200, {}, aa), make_step(5, 1, {0, 1}, goal)};
    EXPECT_TRUE(certified(certify(m, by_execution, rho, 1'000'000)));

    // A => A injected with a nested script for [A] |- A.
    ProofScript inner;
    inner.hypotheses = {A};
    inner.goal = A;
    ProofScript witnessed = by_execution;
    witnessed.steps[0].resource = 1;
    witnessed.steps[0].witnesses = {inner};
    EXPECT_TRUE(certified(certify(m, witnessed, rho, 1'000'000)));
}

TEST(Certify, RejectsWrongRuleShape)
{
    Machine m;
    const Datum rho = base_library();
    ProofScript s;
    s.hypotheses = {T, F};
    s.goal = disj(T, F);
    s.steps = {make_step(4, 100, {0, 1}, disj(T, F))};  // CONJ
    const auto v = certify(m, s, rho, 1'000'000);
    ASSERT_FALSE(certified(v));
    EXPECT_EQ(std::get<StepFailed>(v).index, 0u);
    // The same conclusion by disjunction introduction is fine.
    s.steps = {make_step(6, 100, {0}, disj(T, F))};
    EXPECT_TRUE(certified(certify(m, s, rho, 1'000'000)));
}

TEST(Certify, PinpointsTamperedSteps)
{
    Machine m;
    const Datum rho = base_library();
    ProofScript good;
    good.hypotheses = {conj(T, F)};
    good.goal = conj(F, T);
    good.steps = {make_step(4, 1, {0}, T), make_step(4, 1, {0}, F), make_step(4, 17, {2, 1}, conj(F, T))};
    ASSERT_TRUE(certified(certify(m, good, rho, 1'000'000)));

    const auto fails_at = [&](const ProofScript& s) {
        const auto v = certify(m, s, rho, 1'000'000);
        return certified(v) ? std::optional<std::size_t>{} : std::get<StepFailed>(v).index;
    };
    ProofScript s = good;
    s.steps[2].resource = 16;  // F ^ T has size 17
    EXPECT_EQ(fails_at(s), 2u);
    s = good;
    s.steps[1].premises = {5};
    EXPECT_EQ(fails_at(s), 1u);
    s = good;
    s.steps[0].rule_index = 3;  // META_UNIV
    EXPECT_EQ(fails_at(s), 0u);
    s = good;
    s.goal = conj(T, T);
    EXPECT_TRUE(fails_at(s));
    s = good;
    s.steps[2].premises = {1, 1};
    EXPECT_EQ(fails_at(s), 2u);
    s = good;
    s.steps[0] = make_step(2, 4, {}, T);  // T has size 5
    EXPECT_EQ(fails_at(s), 0u);
    s = good;
    s.steps.clear();
    EXPECT_EQ(fails_at(s), 0u);
    // An unknown library is rejected before any step.
    EXPECT_FALSE(certified(certify(m, good, Datum::nat(3), 1000)));
}

TEST(Certify, WitnessMustProveTheInjectedTurnstile)
{
    Machine m;
    const Datum rho = base_library();
    const Datum claim = implies(T, rho, F);
    ProofScript inner;
    inner.hypotheses = {T};
    inner.goal = F;
    inner.steps = {make_step(4, 1, {0}, F)};
    ProofScript s;
    s.goal = claim;
    s.steps = {make_step(2, 1, {}, claim)};
    s.steps[0].witnesses = {inner};
    EXPECT_FALSE(certified(certify(m, s, rho, 1'000'000)));
    inner.goal = T;
    inner.steps.clear();
    s.steps[0].witnesses = {inner};
    EXPECT_FALSE(certified(certify(m, s, rho, 1'000'000)));  // proves T => T, not T => F
}

TEST(Certify, SingleStepChecksMatchTheEnumeratingRules)
{
    Machine m{Universe::reduced()};
    const Datum rho = make_library({RuleId::Univ, RuleId::DisjIntro});
    for (std::uint64_t mres = 5; mres <= 7; ++mres)
    {
        const auto univ = apply_rule(m, RuleId::Univ, {}, rho, mres, 50'000'000);
        for (const auto& d : enumerate_data(Universe::reduced(), mres))
        {
            if (!is_statement(d))
                continue;
            ProofScript s;
            s.goal = d;
            s.steps = {make_step(1, mres, {}, d)};
            EXPECT_EQ(certified(certify(m, s, rho, 100'000)), has(univ, d)) << "m = " << mres;
        }
    }
    const std::vector<Datum> h{T};
    const auto intro = apply_rule(m, RuleId::DisjIntro, h, rho, 18, 50'000'000);
    std::size_t checked = 0;
    for (const auto& d : enumerate_data(Universe::reduced(), 7))
    {
        if (!is_statement(d))
            continue;
        for (const Datum& x : {disj(T, d), disj(d, T)})
        {
            ProofScript s;
            s.hypotheses = h;
            s.goal = x;
            s.steps = {make_step(2, 18, {0}, x)};
            EXPECT_EQ(certified(certify(m, s, rho, 100'000)), has(intro, x));
            ++checked;
        }
    }
    EXPECT_GT(checked, 10u);
}

TEST(EngineAgreement, CertifiedGoalsAreProvedAndOthersAreNot)
{
    Machine m{Universe::reduced()};
    const auto instances = agreement_instances();
    ASSERT_GE(instances.size(), 20u);
    for (const auto& inst : instances)
    {
        const bool cert = certified(certify(m, inst.script, inst.library, 1'000'000));
        const auto v = deduce_faithful(m, inst.script.hypotheses, inst.library, inst.script.goal, 200'000);
        const bool proved = std::holds_alternative<ProvedAtStage>(v);
        EXPECT_EQ(cert, inst.derivable) << inst.name;
        EXPECT_EQ(proved, inst.derivable) << inst.name;
    }
}

TEST(Soundness, BaseLibraryDerivesNothingDirectlyFalse)
{
    const auto rep = testing_support::closure_soundness(52, 25, 10'000);
    EXPECT_EQ(rep.cases, 25u);
    EXPECT_GT(rep.witnesses, 100u);
    for (const auto& f : rep.failures)
        ADD_FAILURE() << f;
}

}  // namespace
}  // namespace algolog
