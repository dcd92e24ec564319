// algolog: an executable kernel for type-free algorithmic logic
// Copyright 2026 The algolog Authors.
// Licensed under the Apache License, Version 2.0.

// Self-referential statements run against libraries that contain a
// paradoxical rule, and against valid ones that do not.

#include <algolog/lawsuite.hpp>
#include <algolog/machine.hpp>

#include <algorithm>
#include <array>
#include <stdexcept>

namespace algolog
{
namespace
{
const Datum& nat1()
{
    static const Datum one = Datum::nat(1);
    return one;
}

Datum extended_base(std::initializer_list<RuleId> extra)
{
    std::vector<Datum> rules;
    for (const RuleId r : base_rules())
        rules.push_back(rule_datum(r));
    for (const RuleId r : extra)
        rules.push_back(rule_datum(r));
    return make_library(rules);
}

/// [RW, [RW, rho], 1].
Datum r_statement(const Datum& library)
{
    const Datum rw = Datum::alg(ProgramId::RWitness);
    return stmt(rw, Datum::list({rw, library}), nat1());
}

/// Q => not Q, witnessed by one BETA_CURRY step.
Datum self_refutation(ScriptBuilder& b, const Datum& q, const Datum& nq)
{
    return b.conditional(q, nq, [&](ScriptBuilder& w) { w.beta_curry(q, nq); });
}

ProofScript contradiction_from_excluded_middle(Machine& machine, const Datum& lib, RuleId p)
{
    const Datum q = curry_statement(lib);
    const Datum nq = neg(lib, q);
    const Datum both = conj(q, nq);
    const ProofScript from_nq = derive_script(machine, lib, {nq}, both, [&](ScriptBuilder& w) {
        w.beta_curry(nq, q);
        w.conj_intro(q, nq);
    });
    if (p == RuleId::P8)
    {
        const ProofScript from_q = derive_script(machine, lib, {q}, both, [&](ScriptBuilder& w) {
            w.beta_curry(q, nq);
            w.conj_intro(q, nq);
        });
        return derive_script(machine, lib, {}, both, [&](ScriptBuilder& s) {
            s.step(RuleId::P8, {}, disj(q, nq));
            s.cases({}, q, nq, both, from_q, from_nq);
        });
    }
    const Datum nnq = neg(lib, nq);
    const ProofScript from_nnq = derive_script(machine, lib, {nnq}, both, [&](ScriptBuilder& w) {
        const Datum q_nq = self_refutation(w, q, nq);
        w.trans(q_nq, nnq);
        w.beta_curry(nq, q);
        w.conj_intro(q, nq);
    });
    return derive_script(machine, lib, {}, both, [&](ScriptBuilder& s) {
        s.step(RuleId::P9, {}, disj(nq, nnq));
        s.cases({}, nq, nnq, both, from_nq, from_nnq);
    });
}
}  // namespace

Datum curry_statement(const Datum& library)
{
    const Datum curry = Datum::alg(ProgramId::Curry);
    return stmt(curry, Datum::list({curry, library}), nat1());
}

CurryFixedPoint curry_fixed_point(const Datum& library)
{
    const auto rules = library_rules(library);
    const Datum beta = rule_datum(RuleId::BetaCurry);
    if (!rules || std::find(rules->begin(), rules->end(), beta) == rules->end())
        throw std::invalid_argument("curry_fixed_point: the library lacks BETA_CURRY");
    Machine machine{Universe::reduced()};
    const Datum q = curry_statement(library);
    const Datum nq = neg(library, q);
    return CurryFixedPoint{q,
        derive_script(machine, library, {q}, nq, [&](ScriptBuilder& b) { b.beta_curry(q, nq); }),
        derive_script(machine, library, {nq}, q, [&](ScriptBuilder& b) { b.beta_curry(nq, q); })};
}

bool ParadoxRecord::holds(std::uint64_t max_stage) const noexcept
{
    const auto* proved = std::get_if<ProvedAtStage>(&derivation);
    return q_truth.truth == Truth::True && neg_q_truth.truth == Truth::True && proved != nullptr &&
           proved->stage <= max_stage && f_truth.truth == Truth::DirectlyFalse;
}

ParadoxRecord paradox_demo(RuleId p, std::uint64_t fuel)
{
    Datum library;
    switch (p)
    {
    case RuleId::P1:
    case RuleId::P3:
        library = make_library({RuleId::BetaCurry, p});
        break;
    case RuleId::P6:
        library = make_library({RuleId::BetaCurry, p, RuleId::DisjIntro});
        break;
    default:
        throw std::invalid_argument("paradox_demo: only P1, P3 and P6 have an executable demo");
    }
    Machine machine{Universe::reduced()};
    const Datum q = curry_statement(library);
    const Datum& f = false_statement();
    ParadoxRecord record;
    record.rule = p;
    record.library = library;
    record.q = q;
    record.q_truth = evaluate_truth(machine, q, fuel);
    record.neg_q_truth = evaluate_truth(machine, neg(library, q), fuel);
    const std::vector<Datum> hyps{q};
    record.derivation = deduce_faithful(machine, hyps, library, f, fuel);
    record.f_truth = evaluate_truth(machine, f, fuel);
    return record;
}

CertifiedParadox certified_paradox(RuleId p, std::uint64_t fuel)
{
    Machine machine{Universe::full()};
    const Datum& f = false_statement();
    const Datum& t = true_statement();
    CertifiedParadox out;
    out.rule = p;
    switch (p)
    {
    case RuleId::P2:
    case RuleId::P4:
    case RuleId::P5:
    case RuleId::P7:
    {
        const Datum lib = extended_base({RuleId::BetaCurry, p});
        const Datum q = curry_statement(lib);
        const Datum nq = neg(lib, q);
        out.library = lib;
        out.conclusion = "F from Q";
        out.script = derive_script(machine, lib, {q}, f, [&](ScriptBuilder& s) {
            s.beta_curry(q, nq);
            if (p == RuleId::P2)
            {
                const std::array<Datum, 2> cited{q, nq};
                s.step(p, cited, f);
            }
            else if (p == RuleId::P4)
            {
                const Datum qq = s.disj_intro(q, q);
                const std::array<Datum, 2> cited{nq, qq};
                s.step(p, cited, f);
            }
            else if (p == RuleId::P5)
            {
                const Datum nf_q = s.meta_univ(q, neg(lib, f));
                const Datum nnf = s.trans(nf_q, nq);
                const std::array<Datum, 1> cited{nnf};
                s.step(p, cited, f);
            }
            else
            {
                const Datum nq_f = s.disj_intro(nq, f);
                const std::array<Datum, 2> cited{nq_f, q};
                s.step(p, cited, f);
            }
        });
        break;
    }
    case RuleId::P8:
    case RuleId::P9:
    {
        const Datum lib = extended_base({RuleId::BetaCurry, p});
        out.library = lib;
        out.conclusion = "Q ^ not Q from no hypotheses";
        out.script = contradiction_from_excluded_middle(machine, lib, p);
        break;
    }
    case RuleId::P10:
    {
        const Datum lib = extended_base({RuleId::BetaCurry, p});
        const Datum q = curry_statement(lib);
        const Datum nq = neg(lib, q);
        const Datum both = conj(q, nq);
        out.library = lib;
        out.conclusion = "Q ^ not Q from no hypotheses";
        const ProofScript from_nq = derive_script(machine, lib, {nq}, both, [&](ScriptBuilder& w) {
            w.beta_curry(nq, q);
            w.conj_intro(q, nq);
        });
        out.script = derive_script(machine, lib, {}, both, [&](ScriptBuilder& s) {
            const Datum q_nq = self_refutation(s, q, nq);
            const std::array<Datum, 1> cited{q_nq};
            s.step(p, cited, disj(neg(lib, q), nq));
            s.cases({}, nq, nq, both, from_nq, from_nq);
        });
        break;
    }
    case RuleId::P11:
    {
        const Datum lib = extended_base({RuleId::ConjContra, p});
        const Datum witness = Datum::alg(ProgramId::BetaHaltWitness, {lib});
        const Datum b = stmt(witness, witness, nat1());
        const Datum clash = conj(b, strong_neg(b));
        out.library = lib;
        out.conclusion = "not B v not -B for the halting-witness statement B";
        out.script = derive_script(machine, lib, {}, disj(neg(lib, b), neg(lib, strong_neg(b))),
            [&](ScriptBuilder& s) {
                const Datum refuted = s.conditional(clash, f, [&](ScriptBuilder& w) {
                    const std::array<Datum, 1> cited{clash};
                    w.step(RuleId::ConjContra, cited, f);
                });
                const std::array<Datum, 1> cited{refuted};
                s.step(p, cited, disj(neg(lib, b), neg(lib, strong_neg(b))));
            });
        break;
    }
    case RuleId::P12:
    {
        const Datum lib = extended_base({RuleId::BetaCurry, p});
        const Datum q = curry_statement(lib);
        const Datum nq = neg(lib, q);
        const Datum nt = neg(lib, t);
        const Datum nnt = neg(lib, nt);
        out.library = lib;
        out.conclusion = "not T ^ not not T from Q";
        out.script = derive_script(machine, lib, {q}, conj(nt, nnt), [&](ScriptBuilder& s) {
            s.beta_curry(q, nq);
            const Datum tq = s.meta_univ(q, t);
            s.trans(tq, nq);
            s.univ(t);
            const std::array<Datum, 1> cited{t};
            s.step(p, cited, nnt);
            s.conj_intro(nt, nnt);
        });
        break;
    }
    case RuleId::P13:
    case RuleId::P14:
    {
        const Datum lib = extended_base({RuleId::RIntro, p});
        const Datum r = r_statement(lib);
        const Datum pf = prove(lib, f);
        const Datum ppf = prove(lib, pf);
        const Datum goal = p == RuleId::P13 ? f : pf;
        out.library = lib;
        out.conclusion = p == RuleId::P13 ? "F from R" : "prove(F) from R";
        out.script = derive_script(machine, lib, {r}, goal, [&](ScriptBuilder& s) {
            const std::array<Datum, 1> from_r{r};
            const Datum r_pf = s.step(RuleId::RIntro, from_r, implies(r, lib, pf));
            const Datum tr = s.meta_univ(r, t);
            s.trans(tr, r_pf);
            const std::array<Datum, 1> from_ppf{ppf};
            s.step(p, from_ppf, pf);
            if (p == RuleId::P13)
            {
                const std::array<Datum, 1> from_pf{pf};
                s.step(p, from_pf, f);
            }
        });
        break;
    }
    default:
        throw std::invalid_argument(
            "certified_paradox: no certified script for " + std::string{rule_name(p)});
    }
    out.verdict = certify(machine, out.script, out.library, fuel);
    return out;
}

StrongerLibraryRecord stronger_library_demo(std::uint64_t fuel)
{
    Machine machine{Universe::full()};
    StrongerLibraryRecord out;
    out.c = stmt(Datum::alg(ProgramId::Loop), Datum::nat(0), Datum::nat(0));
    out.weaker = base_library();
    const std::vector<Datum> rules{
        mp_fixed_rule(out.weaker), deny_rule(out.c), rule_datum(RuleId::Univ)};
    out.stronger = make_library(rules);
    const std::vector<Datum> hyps{out.c};
    out.with_stronger = deduce_faithful(machine, hyps, out.stronger, false_statement(), fuel);
    out.with_weaker = deduce_faithful(machine, hyps, out.weaker, false_statement(), fuel);
    return out;
}

SelfNegationEvidence self_negation_evidence(const Datum& library, std::uint64_t fuel)
{
    Machine machine{Universe::full()};
    SelfNegationEvidence out;
    out.library = library;
    out.q = curry_statement(library);
    const Datum nq = neg(library, out.q);
    out.q_truth = evaluate_truth(machine, out.q, fuel);
    out.neg_q_truth = evaluate_truth(machine, nq, fuel);
    out.neg_neg_q_truth = evaluate_truth(machine, neg(library, nq), fuel);
    out.f_truth = evaluate_truth(machine, false_statement(), fuel);
    return out;
}

std::vector<HaltWitnessRun> halt_witness_evidence(
    const Datum& library, std::span<const std::uint64_t> budgets)
{
    Machine machine{Universe::full()};
    const Datum witness = Datum::alg(ProgramId::BetaHaltWitness, {library});
    std::vector<HaltWitnessRun> runs;
    for (const std::uint64_t fuel : budgets)
        runs.push_back(HaltWitnessRun{fuel, halted(machine.run(witness, witness, fuel))});
    return runs;
}

}  // namespace algolog
