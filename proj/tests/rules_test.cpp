// algolog: an executable kernel for type-free algorithmic logic
// Copyright 2026 The algolog Authors.
// Licensed under the Apache License, Version 2.0.

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
using testing_support::StatementGen;

const Datum T = true_statement();
const Datum F = false_statement();
constexpr std::uint64_t ample = 50'000'000;

Datum N(std::uint64_t n)
{
    return Datum::nat(n);
}

using testing_support::id_statement;
using testing_support::loop_statement;
using testing_support::rule_for;

std::vector<Datum> appended(const std::vector<Datum>& out, std::size_t prefix)
{
    return {out.begin() + static_cast<std::ptrdiff_t>(prefix), out.end()};
}

TEST(RuleExamples, ConjunctionOfTwoHypotheses)
{
    Machine m{Universe::reduced()};
    const Datum rho = make_library({RuleId::Conj});
    const std::vector<Datum> h{T, F};
    const auto out = apply_rule(m, RuleId::Conj, h, rho, 20, ample);
    ASSERT_EQ(out.size(), 6u);
    EXPECT_EQ(out[0], T);
    EXPECT_EQ(out[1], F);
    const std::set<Datum, CanonicalLess> want{conj(T, F), conj(F, T), conj(T, T), conj(F, F)};
    const std::set<Datum, CanonicalLess> got(out.begin() + 2, out.end());
    EXPECT_EQ(got, want);
    EXPECT_TRUE(std::is_sorted(out.begin() + 2, out.end(), CanonicalLess{}));

    // T ^ T has size 16, the others 17 and 18.
    const auto tight = apply_rule(m, RuleId::Conj, h, rho, 16, ample);
    EXPECT_EQ(appended(tight, 2), std::vector<Datum>{conj(T, T)});
}

TEST(RuleExamples, ConjunctionElimination)
{
    Machine m{Universe::reduced()};
    const std::vector<Datum> h{conj(T, F)};
    const auto out = apply_rule(m, RuleId::Conj, h, base_library(), 1, ample);
    EXPECT_EQ(out, (std::vector<Datum>{conj(T, F), T, F}));
}

TEST(RuleExamples, EliminationOfCase)
{
    Machine m{Universe::reduced()};
    const std::vector<Datum> h{disj(F, T), strong_neg(F)};
    const auto out = apply_rule(m, RuleId::ElimCase, h, base_library(), 1, ample);
    EXPECT_EQ(out, (std::vector<Datum>{disj(F, T), strong_neg(F), T}));
}

TEST(RuleExamples, TransitivityOnEmptyInput)
{
    Machine m{Universe::reduced()};
    EXPECT_TRUE(apply_rule(m, RuleId::Trans, {}, base_library(), 1, ample).empty());
}

TEST(RuleExamples, TransitivityChainsConditionals)
{
    Machine m;
    const Datum rho = base_library();
    const Datum I = id_statement(2, 2);
    const std::vector<Datum> h{implies(T, rho, I), implies(I, rho, F)};
    const auto out = apply_rule(m, RuleId::Trans, h, rho, 1, ample);
    EXPECT_EQ(appended(out, 2), std::vector<Datum>{implies(T, rho, F)});
    // Conditionals under another library do not chain.
    const auto other = apply_rule(m, RuleId::Trans, h, make_library({RuleId::Conj}), 1, ample);
    EXPECT_EQ(other.size(), 2u);
}

TEST(RuleExamples, CurryRuleUnfoldsTheFixedPoint)
{
    Machine m;
    const Datum rho = make_library({RuleId::BetaCurry, RuleId::P1});
    const Datum q = curry_statement(rho);
    EXPECT_EQ(q, stmt(Datum::alg(ProgramId::Curry), Datum::list({Datum::alg(ProgramId::Curry), rho}), N(1)));
    const std::vector<Datum> h{q};
    const auto out = apply_rule(m, RuleId::BetaCurry, h, rho, 1, ample);
    EXPECT_EQ(out, (std::vector<Datum>{q, neg(rho, q)}));
    const std::vector<Datum> back{neg(rho, q)};
    EXPECT_EQ(apply_rule(m, RuleId::BetaCurry, back, rho, 1, ample), (std::vector<Datum>{neg(rho, q), q}));
    // The embedded library must be the nominal one.
    EXPECT_EQ(apply_rule(m, RuleId::BetaCurry, h, base_library(), 1, ample).size(), 1u);
}

TEST(RuleExamples, DisjunctionEliminationRunsBothConditionals)
{
    Machine m;
    const Datum rho = base_library();
    const Datum G = id_statement(1, 1);
    const std::vector<Datum> h{implies(conj(G, T), rho, T), implies(conj(G, F), rho, T), G, disj(T, F)};
    const auto fired = apply_rule(m, RuleId::DElim, h, rho, 200'000, ample);
    EXPECT_EQ(appended(fired, 4), std::vector<Datum>{T});
    // Runtimes must be strictly below m.
    EXPECT_EQ(apply_rule(m, RuleId::DElim, h, rho, 2, ample).size(), 4u);
}

TEST(RuleExamples, ExtensionRules)
{
    Machine m;
    const Datum rho = base_library();
    const Datum small = make_library({RuleId::Conj});
    const Datum L = loop_statement();
    const std::vector<Datum> mp{implies(T, small, L), T};
    EXPECT_EQ(appended(apply_rule(m, mp_fixed_rule(small), mp, rho, 1, ample), 2), std::vector<Datum>{L});
    // The nominal library does not matter; the captured one does.
    EXPECT_EQ(appended(apply_rule(m, mp_fixed_rule(small), mp, small, 1, ample), 2), std::vector<Datum>{L});
    EXPECT_EQ(apply_rule(m, mp_fixed_rule(rho), mp, small, 1, ample).size(), 2u);

    const std::vector<Datum> denied{L};
    EXPECT_EQ(appended(apply_rule(m, deny_rule(L), denied, rho, 1, ample), 1), std::vector<Datum>{F});
    const std::vector<Datum> contra{conj(L, strong_neg(L))};
    EXPECT_EQ(appended(apply_rule(m, RuleId::ConjContra, contra, rho, 1, ample), 1), std::vector<Datum>{F});

    const Datum witness = Datum::alg(ProgramId::RWitness);
    const Datum r = stmt(witness, Datum::list({witness, rho}), N(1));
    const std::vector<Datum> rh{r};
    EXPECT_EQ(appended(apply_rule(m, RuleId::RIntro, rh, rho, 1, ample), 1),
        std::vector<Datum>{implies(r, rho, prove(rho, F))});
}

TEST(RuleExamples, ParadoxicalPatterns)
{
    Machine m;
    const Datum rho = make_library({RuleId::BetaCurry, RuleId::P1});
    const Datum I = id_statement(1, 1);
    const auto fires = [&](RuleId r, std::vector<Datum> h) {
        const auto out = apply_rule(m, r, h, rho, 1, ample);
        return appended(out, h.size());
    };
    using V = std::vector<Datum>;
    EXPECT_EQ(fires(RuleId::P1, {T, neg(rho, T)}), V{F});
    EXPECT_EQ(fires(RuleId::P3, {I, implies(I, rho, T)}), V{T});
    EXPECT_EQ(fires(RuleId::P4, {implies(T, rho, F), implies(I, rho, F), disj(T, I)}), V{F});
    EXPECT_EQ(fires(RuleId::P5, {neg(rho, neg(rho, I))}), V{I});
    EXPECT_EQ(fires(RuleId::P6, {disj(T, I), neg(rho, T)}), V{I});
    EXPECT_EQ(fires(RuleId::P7, {disj(neg(rho, T), I), T}), V{I});
    EXPECT_EQ(fires(RuleId::P10, {implies(T, rho, I)}), V{disj(neg(rho, T), I)});
    EXPECT_EQ(fires(RuleId::P11, {neg(rho, conj(T, I))}), V{disj(neg(rho, T), neg(rho, I))});
    EXPECT_EQ(fires(RuleId::P12, {T}), V{neg(rho, neg(rho, T))});
    EXPECT_EQ(fires(RuleId::P13, {prove(rho, I)}), V{I});
    EXPECT_EQ(fires(RuleId::P14, {prove(rho, prove(rho, F))}), V{prove(rho, F)});
    EXPECT_TRUE(fires(RuleId::P13, {prove(base_library(), I)}).empty());
}

TEST(RuleExamples, FreeConclusionRulesUseTheResource)
{
    Machine m{Universe::reduced()};
    const Datum rho = make_library({RuleId::P2});
    const std::vector<Datum> h{T, neg(rho, T)};
    const auto none = apply_rule(m, RuleId::P2, h, rho, 4, ample);
    EXPECT_EQ(none.size(), 2u);
    const auto some = apply_rule(m, RuleId::P2, h, rho, 6, ample);
    const auto added = appended(some, 2);
    EXPECT_NE(std::find(added.begin(), added.end(), F), added.end());
    for (const auto& b : added)
    {
        EXPECT_TRUE(is_statement(b));
        EXPECT_LE(b.size(), 6u);
    }
    const std::vector<Datum> only_t{T};
    EXPECT_EQ(apply_rule(m, RuleId::P2, only_t, rho, 6, ample).size(), 1u);
}

TEST(RuleExamples, UnexpectedInputIsReturnedUnchanged)
{
    Machine m;
    for (std::size_t i = 0; i < rule_count; ++i)
    {
        const RuleId r = static_cast<RuleId>(i);
        const Datum alg = rule_for(r, base_library());
        for (const Datum& junk : {N(3), Datum::list({N(1), base_library(), N(2)}),
                 Datum::list({Datum::list({}), base_library(), N(0)})})
        {
            const RunResult out = m.run(alg, junk, 100);
            ASSERT_TRUE(halted(out)) << rule_name(r);
            EXPECT_EQ(std::get<Halted>(out).output, junk) << rule_name(r);
        }
    }
}

TEST(RuleProperty, InitialSublistAndMonotonicityForEveryRule)
{
    const auto rep = testing_support::rule_contracts(41, 200);
    ASSERT_EQ(rep.cases.size(), rule_count);
    for (std::size_t i = 0; i < rule_count; ++i)
        EXPECT_EQ(rep.cases[i], 200u) << rule_name(static_cast<RuleId>(i));
    for (const auto& f : rep.failures)
        ADD_FAILURE() << f;
}

TEST(RuleProperty, BaseRulesPreserveTruth)
{
    Machine m{Universe::reduced()};
    StatementGen sg{42};
    const Datum rho = base_library();
    const Datum G = id_statement(1, 1);
    std::size_t checked = 0;
    for (int c = 0; c < 60; ++c)
    {
        std::vector<Datum> h;
        const std::size_t n = 1 + sg.below(3);
        for (std::size_t i = 0; i < n; ++i)
        {
            Datum a = sg.true_atom();
            switch (sg.below(5))
            {
            case 0:
                a = conj(a, sg.true_atom());
                break;
            case 1:
                a = disj(a, sg.statement(1));
                break;
            case 2:
                a = strong_neg(F);
                break;
            case 3:
                a = implies(a, rho, a);
                break;
            default:
                break;
            }
            h.push_back(a);
        }
        for (std::size_t i = 0; i < base_rule_count; ++i)
        {
            const RuleId r = static_cast<RuleId>(i);
            std::uint64_t mres = 1 + sg.below(30);
            if (r == RuleId::Univ)
                mres = 1 + sg.below(8);
            else if (r == RuleId::DisjIntro)
                mres = 10 + sg.below(9);
            else if (r == RuleId::MetaUniv)
                mres = 40 + sg.below(8);  // the base library alone has size 25
            const auto out = apply_rule(m, r, h, rho, mres, ample);
            for (const auto& x : appended(out, h.size()))
            {
                const TruthVerdict v = evaluate_truth(m, x, 20'000);
                EXPECT_NE(v.truth, Truth::DirectlyFalse) << rule_name(r);
                ++checked;
            }
        }
    }
    // Disjunction elimination over two true conditionals.
    const std::vector<Datum> h{implies(conj(G, T), rho, T), implies(conj(G, F), rho, T), G, disj(T, F)};
    for (const auto& x : appended(apply_rule(m, RuleId::DElim, h, rho, 200'000, ample), h.size()))
        EXPECT_EQ(evaluate_truth(m, x, 20'000).truth, Truth::True);
    EXPECT_GT(checked, 1000u);
}

TEST(RuleProperty, UniversalRuleMatchesBruteForce)
{
    const Universe u = Universe::reduced();
    Machine m{u};
    for (std::uint64_t mres = 1; mres <= 8; ++mres)
    {
        const auto out = apply_rule(m, RuleId::Univ, {}, base_library(), mres, ample);
        const std::set<Datum, CanonicalLess> got(out.begin(), out.end());
        EXPECT_EQ(got.size(), out.size());
        EXPECT_EQ(got, testing_support::m_true_oracle(m, u, mres)) << "m = " << mres;
    }
}

}  // namespace
}  // namespace algolog
