// algolog: an executable kernel for type-free algorithmic logic
// Copyright 2026 The algolog Authors.
// Licensed under the Apache License, Version 2.0.

#include <algolog/machine.hpp>
#include <algolog/script_builder.hpp>
#include <algolog/statements.hpp>

#include <algorithm>
#include <stdexcept>
#include <string>

namespace algolog
{
namespace
{
// Fuel for executing a statement the builder injects by UNIV. The certifier
// reruns it with the recorded runtime as the resource.
constexpr std::uint64_t univ_probe_fuel = 1'000'000;
// Fuel for the prover's "is this obviously true" probe.
constexpr std::uint64_t quick_truth_fuel = 5'000;

std::pair<Datum, Datum> conditional_parts(const Datum& x, const Datum& library, const char* what)
{
    auto c = match_implies_under(x, library);
    if (!c)
        throw std::logic_error(std::string{what} + ": premise is not a conditional under the library");
    return *c;
}

std::pair<Datum, Datum> conj_parts(const Datum& x)
{
    auto c = match_conj(x);
    if (!c)
        throw std::logic_error("conjunction elimination: premise is not a conjunction");
    return *c;
}
}  // namespace

ScriptBuilder::ScriptBuilder(Machine& machine, Datum library, std::vector<Datum> hypotheses)
  : machine_(&machine), library_(std::move(library)), hypotheses_(std::move(hypotheses)),
    known_(hypotheses_)
{}

bool ScriptBuilder::knows(const Datum& x) const noexcept
{
    return std::find(known_.begin(), known_.end(), x) != known_.end();
}

std::size_t ScriptBuilder::index(const Datum& x) const
{
    const auto it = std::find(known_.begin(), known_.end(), x);
    if (it == known_.end())
        throw std::logic_error("script builder: cited statement is not yet known");
    return static_cast<std::size_t>(it - known_.begin());
}

ScriptBuilder ScriptBuilder::sub(std::vector<Datum> hypotheses) const
{
    return ScriptBuilder{*machine_, library_, std::move(hypotheses)};
}

std::uint64_t ScriptBuilder::rule_index(RuleId rule) const
{
    const auto rules = library_rules(library_);
    if (!rules)
        throw std::logic_error("script builder: not a library");
    for (std::size_t i = 0; i < rules->size(); ++i)
        if (rule_of((*rules)[i]) == rule)
            return i + 1;
    throw std::logic_error(
        "script builder: library lacks rule " + std::string{rule_name(rule)});
}

std::uint64_t ScriptBuilder::auto_resource(RuleId rule, const Datum& conclusion, bool witnessed) const
{
    if (rule == RuleId::Univ && !witnessed)
    {
        const RunResult r = machine_->run(conclusion[0], conclusion[1], univ_probe_fuel);
        const auto* h = std::get_if<Halted>(&r);
        if (h == nullptr || !(h->output == conclusion[2]))
            throw std::logic_error("script builder: UNIV conclusion is not true within probe fuel");
        return std::max(conclusion.size(), h->runtime);
    }
    return std::max<std::uint64_t>(1, conclusion.size());
}

const Datum& ScriptBuilder::step(RuleId rule, std::span<const Datum> premises, Datum conclusion,
    std::vector<ProofScript> witnesses, std::uint64_t resource)
{
    ProofStep s;
    s.rule_index = rule_index(rule);
    s.resource = resource != 0 ? resource : auto_resource(rule, conclusion, !witnesses.empty());
    for (const auto& p : premises)
        s.premises.push_back(index(p));
    s.conclusion = std::move(conclusion);
    s.witnesses = std::move(witnesses);
    known_.push_back(s.conclusion);
    steps_.push_back(std::move(s));
    return known_.back();
}

const Datum& ScriptBuilder::univ(const Datum& x)
{
    return step(RuleId::Univ, {}, x);
}

const Datum& ScriptBuilder::univ(const Datum& turnstile, ProofScript witness)
{
    std::vector<ProofScript> w;
    w.push_back(std::move(witness));
    return step(RuleId::Univ, {}, turnstile, std::move(w));
}

const Datum& ScriptBuilder::meta_univ(const Datum& consequent, const Datum& antecedent)
{
    const Datum premises[] = {consequent};
    return step(RuleId::MetaUniv, premises, implies(antecedent, library_, consequent));
}

const Datum& ScriptBuilder::trans(const Datum& ab, const Datum& bc)
{
    const auto [a, b] = conditional_parts(ab, library_, "TRANS");
    const auto [b2, c] = conditional_parts(bc, library_, "TRANS");
    if (!(b == b2))
        throw std::logic_error("TRANS: conditionals do not chain");
    const Datum premises[] = {ab, bc};
    return step(RuleId::Trans, premises, implies(a, library_, c));
}

const Datum& ScriptBuilder::conj_intro(const Datum& a, const Datum& b)
{
    const Datum premises[] = {a, b};
    return step(RuleId::Conj, premises, conj(a, b));
}

const Datum& ScriptBuilder::conj_left(const Datum& ab)
{
    const Datum premises[] = {ab};
    return step(RuleId::Conj, premises, conj_parts(ab).first);
}

const Datum& ScriptBuilder::conj_right(const Datum& ab)
{
    const Datum premises[] = {ab};
    return step(RuleId::Conj, premises, conj_parts(ab).second);
}

const Datum& ScriptBuilder::meta_conj(const Datum& ab, const Datum& ac)
{
    const auto [a, b] = conditional_parts(ab, library_, "META_CONJ");
    const auto [a2, c] = conditional_parts(ac, library_, "META_CONJ");
    if (!(a == a2))
        throw std::logic_error("META_CONJ: antecedents differ");
    const Datum premises[] = {ab, ac};
    return step(RuleId::MetaConj, premises, implies(a, library_, conj(b, c)));
}

const Datum& ScriptBuilder::disj_intro(const Datum& a, const Datum& b)
{
    const Datum premises[] = {knows(a) ? a : b};
    return step(RuleId::DisjIntro, premises, disj(a, b));
}

const Datum& ScriptBuilder::meta_disj(const Datum& gac, const Datum& gbc)
{
    const auto [ga, c] = conditional_parts(gac, library_, "META_DISJ");
    const auto [gb, c2] = conditional_parts(gbc, library_, "META_DISJ");
    const auto [g, a] = conj_parts(ga);
    const auto [g2, b] = conj_parts(gb);
    if (!(g == g2) || !(c == c2))
        throw std::logic_error("META_DISJ: guards or consequents differ");
    const Datum premises[] = {gac, gbc};
    return step(RuleId::MetaDisj, premises, implies(conj(g, disj(a, b)), library_, c));
}

const Datum& ScriptBuilder::elim_case(const Datum& ab, const Datum& not_a)
{
    const auto parts = match_disj(ab);
    if (!parts)
        throw std::logic_error("ELIM_CASE: premise is not a disjunction");
    const Datum premises[] = {ab, not_a};
    return step(RuleId::ElimCase, premises, parts->second);
}

const Datum& ScriptBuilder::double_neg(const Datum& premise, const Datum& conclusion)
{
    const Datum premises[] = {premise};
    return step(RuleId::DoubleNeg, premises, conclusion);
}

const Datum& ScriptBuilder::strong_demorgan(const Datum& premise, const Datum& conclusion)
{
    const Datum premises[] = {premise};
    return step(RuleId::StrongDeMorgan, premises, conclusion);
}

const Datum& ScriptBuilder::beta_curry(const Datum& premise, const Datum& conclusion)
{
    const Datum premises[] = {premise};
    return step(RuleId::BetaCurry, premises, conclusion);
}

const Datum& ScriptBuilder::conditional(Datum a, Datum c, const ProofScript& lemma)
{
    const Datum x = implies(a, library_, c);
    if (lemma.steps.empty() && lemma.goal == a)
        return univ(x);
    if (lemma.hypotheses.size() == 1 && lemma.hypotheses[0] == a && lemma.goal == c)
        return univ(x, lemma);
    ScriptBuilder w = sub({a});
    w.include(lemma);
    return univ(x, w.finish(c));
}

const Datum& ScriptBuilder::conditional(
    Datum a, Datum c, const std::function<void(ScriptBuilder&)>& derive)
{
    return conditional(a, c, derive_script(*machine_, library_, {a}, c, derive));
}

const Datum& ScriptBuilder::include(const ProofScript& lemma)
{
    std::vector<std::size_t> where;
    for (const auto& h : lemma.hypotheses)
        where.push_back(index(h));
    for (const auto& s : lemma.steps)
    {
        ProofStep copy = s;
        for (auto& p : copy.premises)
            p = where.at(p);
        where.push_back(known_.size());
        known_.push_back(copy.conclusion);
        steps_.push_back(std::move(copy));
    }
    if (!knows(lemma.goal))
        throw std::logic_error("include: lemma goal was not derived");
    return known_[index(lemma.goal)];
}

const Datum& ScriptBuilder::conjoin(std::span<const Datum> items)
{
    if (items.empty())
    {
        const Datum& t = true_statement();
        return knows(t) ? known_[index(t)] : univ(t);
    }
    Datum acc = items[0];
    for (std::size_t i = 1; i < items.size(); ++i)
    {
        const Datum next = conj(acc, items[i]);
        if (!knows(next))
            conj_intro(acc, items[i]);
        acc = next;
    }
    return known_[index(acc)];
}

namespace
{
// Derives every item of gamma from their known conjunction.
void unfold(ScriptBuilder& b, std::span<const Datum> gamma)
{
    Datum cur = conj_list(gamma);
    for (std::size_t i = gamma.size(); i-- > 1;)
    {
        b.conj_right(cur);
        cur = b.conj_left(cur);
    }
}
}  // namespace

const Datum& ScriptBuilder::deduction(
    std::span<const Datum> gamma, Datum a, Datum c, const ProofScript& lemma)
{
    if (gamma.empty())
        return conditional(a, c, lemma);
    const Datum g = conjoin(gamma);
    const Datum a_g = meta_univ(g, a);
    const Datum ga = conj(g, a);
    ScriptBuilder w = sub({ga});
    w.conj_left(ga);
    w.conj_right(ga);
    unfold(w, gamma);
    w.include(lemma);
    const Datum ga_c = conditional(ga, c, w.finish(c));
    const Datum a_a = univ(implies(a, library_, a));
    const Datum a_ga = meta_conj(a_g, a_a);
    return trans(a_ga, ga_c);
}

const Datum& ScriptBuilder::cases(std::span<const Datum> gamma, Datum a, Datum b,
    Datum c, const ProofScript& lemma_a, const ProofScript& lemma_b)
{
    const Datum g = conjoin(gamma);
    const auto witness = [&](const Datum& side, const ProofScript& lemma) {
        const Datum gs = conj(g, side);
        ScriptBuilder w = sub({gs});
        w.conj_left(gs);
        w.conj_right(gs);
        if (!gamma.empty())
            unfold(w, gamma);
        w.include(lemma);
        return w.finish(c);
    };
    ProofScript wa = witness(a, lemma_a);
    ProofScript wb = witness(b, lemma_b);
    const Datum ca = conditional(conj(g, a), c, wa);
    const Datum cb = conditional(conj(g, b), c, wb);
    const Datum premises[] = {g, disj(a, b), ca, cb};
    std::vector<ProofScript> ws;
    ws.push_back(std::move(wa));
    ws.push_back(std::move(wb));
    return step(RuleId::DElim, premises, c, std::move(ws));
}

const Datum& ScriptBuilder::disjoin_conditionals(Datum a, Datum b, Datum c)
{
    const Datum& t = true_statement();
    const auto guard = [&](const Datum& side) {
        const Datum ts = conj(t, side);
        const Datum ts_s = conditional(ts, side, [&](ScriptBuilder& w) { w.conj_right(ts); });
        return trans(ts_s, implies(side, library_, c));
    };
    const Datum tac = guard(a);
    const Datum tbc = guard(b);
    const Datum guarded = meta_disj(tac, tbc);
    const Datum ab = disj(a, b);
    const Datum lift = conditional(ab, conj(t, ab), [&](ScriptBuilder& w) {
        w.univ(t);
        w.conj_intro(t, ab);
    });
    return trans(lift, guarded);
}

const Datum& ScriptBuilder::ex_falso(Datum b)
{
    const Datum& f = false_statement();
    if (b == f)
        return known_[index(f)];
    const Datum nf = strong_neg(f);
    if (!knows(nf))
        univ(nf);
    const Datum fb = disj_intro(f, b);
    return elim_case(fb, nf);
}

const Datum& ScriptBuilder::explode(Datum a, Datum b)
{
    const Datum ab = disj_intro(a, b);
    return elim_case(ab, strong_neg(a));
}

ProofScript ScriptBuilder::finish(const Datum& goal) const
{
    ProofScript out{hypotheses_, goal, steps_};
    if (!steps_.empty() && steps_.back().conclusion == goal)
        return out;
    if (std::find(hypotheses_.begin(), hypotheses_.end(), goal) != hypotheses_.end())
    {
        out.steps.clear();
        return out;
    }
    for (const auto& s : steps_)
        if (s.conclusion == goal)
        {
            out.steps.push_back(s);
            return out;
        }
    throw std::logic_error("script builder: the goal was never derived");
}

ProofScript derive_script(Machine& machine, const Datum& library, std::vector<Datum> hypotheses,
    const Datum& goal, const std::function<void(ScriptBuilder&)>& derive)
{
    ScriptBuilder b{machine, library, std::move(hypotheses)};
    derive(b);
    return b.finish(goal);
}

namespace
{
bool quickly_true(Machine& machine, const Datum& x)
{
    const RunResult r = machine.run(x[0], x[1], quick_truth_fuel);
    const auto* h = std::get_if<Halted>(&r);
    return h != nullptr && h->output == x[2];
}

void split_conjunctions(ScriptBuilder& b)
{
    for (std::size_t i = 0; i < b.known().size(); ++i)
    {
        const Datum x = b.known()[i];
        if (auto ab = match_conj(x))
        {
            if (!b.knows(ab->first))
                b.conj_left(x);
            if (!b.knows(ab->second))
                b.conj_right(x);
        }
    }
}

bool attempt(ScriptBuilder& b, const Datum& goal, int depth)
{
    if (b.knows(goal))
        return true;
    split_conjunctions(b);
    if (b.knows(goal))
        return true;
    if (b.knows(false_statement()))
    {
        b.ex_falso(goal);
        return true;
    }
    for (std::size_t i = 0; i < b.known().size(); ++i)
        if (auto a = match_strong_neg(b.known()[i]); a && b.knows(*a))
        {
            b.explode(*a, goal);
            return true;
        }
    const auto t = match_turnstile(goal);
    if (!t && quickly_true(b.machine(), goal))
    {
        b.univ(goal);
        return true;
    }
    if (depth <= 0)
        return false;
    if (auto ab = match_conj(goal))
    {
        ScriptBuilder c = b;
        if (attempt(c, ab->first, depth - 1) && attempt(c, ab->second, depth - 1))
        {
            c.conj_intro(ab->first, ab->second);
            b = std::move(c);
            return true;
        }
    }
    if (auto ab = match_disj(goal))
        for (const Datum* side : {&ab->first, &ab->second})
        {
            ScriptBuilder c = b;
            if (attempt(c, *side, depth - 1))
            {
                c.disj_intro(ab->first, ab->second);
                b = std::move(c);
                return true;
            }
        }
    if (t && t->library == b.library())
    {
        ScriptBuilder s = b.sub(t->hyps);
        if (attempt(s, t->goal, depth - 1))
        {
            b.univ(goal, s.finish(t->goal));
            return true;
        }
    }
    return false;
}
}  // namespace

std::optional<ProofScript> prove_entails(Machine& machine, const Datum& library,
    std::vector<Datum> hypotheses, const Datum& goal, int depth)
{
    ScriptBuilder b{machine, library, std::move(hypotheses)};
    if (!attempt(b, goal, depth))
        return std::nullopt;
    return b.finish(goal);
}

}  // namespace algolog
