// algolog: an executable kernel for type-free algorithmic logic
// Copyright 2026 The algolog Authors.
// Licensed under the Apache License, Version 2.0.

// Goal-directed checking of proof scripts. Pattern rules are checked by
// running the rule program itself on the cited premises. Rules whose direct
// execution would enumerate or run large processes are checked pointwise:
// the claimed conclusion is validated as one member of the rule's output.

#include <algolog/deduction.hpp>
#include <algolog/machine.hpp>
#include <algolog/statements.hpp>

#include <algorithm>

namespace algolog
{
namespace
{
using Reason = std::optional<std::string>;

bool contains(const std::vector<Datum>& items, const Datum& x)
{
    return std::find(items.begin(), items.end(), x) != items.end();
}

std::string nested_failure(const CertifyVerdict& v, std::size_t which)
{
    const auto& f = std::get<StepFailed>(v);
    return "witness " + std::to_string(which) + " step " + std::to_string(f.index) + ": " + f.reason;
}

class Checker
{
public:
    Checker(Machine& machine, std::uint64_t fuel) : machine_(machine), fuel_(fuel) {}

    CertifyVerdict run(const ProofScript& script, const Datum& library)
    {
        if (!is_library(library))
            return StepFailed{0, "the library is not a well-formed list of rules"};
        for (const auto& h : script.hypotheses)
            if (!is_statement(h))
                return StepFailed{0, "a hypothesis is not a statement"};
        if (!is_statement(script.goal))
            return StepFailed{0, "the goal is not a statement"};

        std::vector<Datum> known = script.hypotheses;
        for (std::size_t i = 0; i < script.steps.size(); ++i)
        {
            const ProofStep& step = script.steps[i];
            if (auto why = check_step(step, known, library))
                return StepFailed{i, *why};
            known.push_back(step.conclusion);
        }
        if (script.steps.empty())
        {
            if (!contains(script.hypotheses, script.goal))
                return StepFailed{0, "no steps and the goal is not a hypothesis"};
        }
        else if (!(script.steps.back().conclusion == script.goal))
            return StepFailed{script.steps.size() - 1, "the last conclusion is not the goal"};
        return Certified{};
    }

private:
    bool admitted_or_cited(const Datum& x, const std::vector<Datum>& cited) const
    {
        return machine_.universe().admits(x) || contains(cited, x);
    }

    Reason check_step(const ProofStep& step, const std::vector<Datum>& known, const Datum& library)
    {
        if (step.rule_index == 0 || step.resource == 0)
            return "rule index and resource must be positive";
        if (!is_statement(step.conclusion))
            return "the conclusion is not a statement";
        std::vector<Datum> cited;
        for (const auto p : step.premises)
        {
            if (p >= known.size())
                return "premise " + std::to_string(p) + " does not precede the step";
            cited.push_back(known[p]);
        }

        const RunResult fetched = machine_.run(library, Datum::nat(step.rule_index), fuel_);
        const auto* h = std::get_if<Halted>(&fetched);
        if (h == nullptr)
            return "the library did not return a rule within fuel";
        const auto rule = rule_of(h->output);
        if (!rule)
            return "the library returned a non-rule";

        const Datum& x = step.conclusion;
        const std::uint64_t m = step.resource;
        switch (*rule)
        {
        case RuleId::Univ:
            return check_univ(step);
        case RuleId::MetaUniv:
        {
            const auto c = match_implies_under(x, library);
            if (!c)
                return "META_UNIV conclusion is not a conditional under the library";
            if (!contains(cited, c->second))
                return "META_UNIV consequent is not cited";
            if (!admitted_or_cited(c->first, cited))
                return "META_UNIV antecedent is outside the universe";
            if (x.size() > m)
                return "META_UNIV conclusion exceeds the resource";
            return std::nullopt;
        }
        case RuleId::DisjIntro:
        {
            const auto ab = match_disj(x);
            if (!ab)
                return "DISJ_INTRO conclusion is not a disjunction";
            if (x.size() > m)
                return "DISJ_INTRO conclusion exceeds the resource";
            const bool left = contains(cited, ab->first) && admitted_or_cited(ab->second, cited);
            const bool right = contains(cited, ab->second) && admitted_or_cited(ab->first, cited);
            if (!left && !right)
                return "DISJ_INTRO needs one cited disjunct and an admissible other";
            return std::nullopt;
        }
        case RuleId::P2:
        {
            const bool contradiction = std::any_of(cited.begin(), cited.end(),
                [&](const Datum& a) { return contains(cited, neg(library, a)); });
            if (!contradiction)
                return "P2 needs a cited statement and its negation";
            if (x.size() > m || !admitted_or_cited(x, cited))
                return "P2 conclusion is outside the enumerated range";
            return std::nullopt;
        }
        case RuleId::P8:
        case RuleId::P9:
        {
            const auto ab = match_disj(x);
            if (!ab || x.size() > m)
                return "conclusion does not have the rule's shape within the resource";
            const Datum a = *rule == RuleId::P8 ? ab->first : [&] {
                const auto inner = match_neg_under(ab->first, library);
                return inner ? *inner : Datum{};
            }();
            if (!is_statement(a))
                return "conclusion does not have the rule's shape";
            const Datum expected = *rule == RuleId::P8 ? disj(a, neg(library, a))
                                                       : disj(neg(library, a), neg(library, neg(library, a)));
            if (!(expected == x))
                return "conclusion does not have the rule's shape";
            if (!admitted_or_cited(a, cited))
                return "the excluded-middle statement is outside the universe";
            return std::nullopt;
        }
        case RuleId::DElim:
            if (!step.witnesses.empty())
                return check_d_elim_witnessed(step, cited, library);
            break;
        default:
            break;
        }

        try
        {
            const auto out = apply_rule(machine_, h->output, cited, library, m, fuel_);
            if (!contains(out, x))
                return std::string{rule_name(*rule)} + " does not derive the conclusion";
        }
        catch (const FuelError&)
        {
            return std::string{rule_name(*rule)} + " ran out of fuel";
        }
        return std::nullopt;
    }

    Reason check_univ(const ProofStep& step)
    {
        const Datum& x = step.conclusion;
        if (!machine_.universe().admits(x))
            return "UNIV conclusion is outside the universe";
        if (step.witnesses.empty())
        {
            if (!m_true_check(machine_, x, step.resource))
                return "UNIV conclusion is not m-true at the stated resource";
            return std::nullopt;
        }
        if (step.witnesses.size() != 1)
            return "UNIV takes at most one witness";
        const auto t = match_turnstile(x);
        if (!t)
            return "a UNIV witness only certifies turnstile statements";
        if (!is_library(t->library))
            return "the witnessed turnstile does not name a library";
        const ProofScript& w = step.witnesses[0];
        if (!(w.hypotheses == t->hyps) || !(w.goal == t->goal))
            return "the witness proves a different turnstile";
        if (const auto v = run(w, t->library); !certified(v))
            return nested_failure(v, 0);
        return std::nullopt;
    }

    Reason check_d_elim_witnessed(
        const ProofStep& step, const std::vector<Datum>& cited, const Datum& library)
    {
        if (step.witnesses.size() != 2)
            return "a witnessed D_ELIM takes exactly two witnesses";
        const Datum& c = step.conclusion;
        const ProofScript& wa = step.witnesses[0];
        const ProofScript& wb = step.witnesses[1];
        if (wa.hypotheses.size() != 1 || wb.hypotheses.size() != 1 || !(wa.goal == c) ||
            !(wb.goal == c))
            return "D_ELIM witnesses must each prove the conclusion from one hypothesis";
        const auto ga = match_conj(wa.hypotheses[0]);
        const auto gb = match_conj(wb.hypotheses[0]);
        if (!ga || !gb || !(ga->first == gb->first))
            return "D_ELIM witnesses must assume G^A and G^B";
        const Datum& g = ga->first;
        if (!contains(cited, g) || !contains(cited, disj(ga->second, gb->second)) ||
            !contains(cited, implies(wa.hypotheses[0], library, c)) ||
            !contains(cited, implies(wb.hypotheses[0], library, c)))
            return "D_ELIM premises G, A v B and both conditionals must be cited";
        if (const auto v = run(wa, library); !certified(v))
            return nested_failure(v, 0);
        if (const auto v = run(wb, library); !certified(v))
            return nested_failure(v, 1);
        return std::nullopt;
    }

    Machine& machine_;
    std::uint64_t fuel_;
};
}  // namespace

CertifyVerdict certify(
    Machine& machine, const ProofScript& script, const Datum& library, std::uint64_t fuel)
{
    return Checker{machine, fuel}.run(script, library);
}

}  // namespace algolog
