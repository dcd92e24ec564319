// algolog: an executable kernel for type-free algorithmic logic
// Copyright 2026 The algolog Authors.
// Licensed under the Apache License, Version 2.0.
#pragma once

#include <algolog/datum.hpp>
#include <algolog/deduction.hpp>
#include <algolog/registry.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace algolog
{
class Machine;

/// Incremental construction of a proof script over one library. Statements
/// are addressed by value; a statement's index is its first occurrence among
/// the hypotheses and the conclusions so far. The builder does not check
/// steps; certify() does.
class ScriptBuilder
{
public:
    ScriptBuilder(Machine& machine, Datum library, std::vector<Datum> hypotheses);

    Machine& machine() const noexcept { return *machine_; }
    const Datum& library() const noexcept { return library_; }
    const std::vector<Datum>& known() const noexcept { return known_; }
    bool knows(const Datum& x) const noexcept;
    /// Throws std::logic_error for a statement that is not yet known.
    std::size_t index(const Datum& x) const;

    /// A fresh builder over the same machine and library.
    ScriptBuilder sub(std::vector<Datum> hypotheses) const;

    /// Appends one step citing `premises` by value. A zero resource selects
    /// the smallest resource under which the rule yields the conclusion.
    const Datum& step(RuleId rule, std::span<const Datum> premises, Datum conclusion,
        std::vector<ProofScript> witnesses = {}, std::uint64_t resource = 0);

    // One step each.
    const Datum& univ(const Datum& x);  ///< by executing x's process
    const Datum& univ(const Datum& turnstile, ProofScript witness);
    const Datum& meta_univ(const Datum& consequent, const Datum& antecedent);
    const Datum& trans(const Datum& ab, const Datum& bc);
    const Datum& conj_intro(const Datum& a, const Datum& b);
    const Datum& conj_left(const Datum& ab);
    const Datum& conj_right(const Datum& ab);
    const Datum& meta_conj(const Datum& ab, const Datum& ac);
    /// a v b from whichever disjunct is known.
    const Datum& disj_intro(const Datum& a, const Datum& b);
    const Datum& meta_disj(const Datum& gac, const Datum& gbc);
    const Datum& elim_case(const Datum& ab, const Datum& not_a);
    const Datum& double_neg(const Datum& premise, const Datum& conclusion);
    const Datum& strong_demorgan(const Datum& premise, const Datum& conclusion);
    const Datum& beta_curry(const Datum& premise, const Datum& conclusion);

    // Derived moves, several steps each.

    /// a => c from a script proving c from [a].
    const Datum& conditional(Datum a, Datum c, const ProofScript& lemma);
    const Datum& conditional(
        Datum a, Datum c, const std::function<void(ScriptBuilder&)>& derive);
    /// Copies a finished script whose hypotheses are all known here.
    const Datum& include(const ProofScript& lemma);
    /// The conjunction of `items` (all known), left associated; T when empty.
    const Datum& conjoin(std::span<const Datum> items);
    /// a => c from a lemma proving c from gamma and a; gamma must be known.
    const Datum& deduction(std::span<const Datum> gamma, Datum a, Datum c,
        const ProofScript& lemma);
    /// c from a v b, given lemmas proving c from gamma + [a] and gamma + [b].
    const Datum& cases(std::span<const Datum> gamma, Datum a, Datum b, Datum c,
        const ProofScript& lemma_a, const ProofScript& lemma_b);
    /// (a v b) => c from known a => c and b => c.
    const Datum& disjoin_conditionals(Datum a, Datum b, Datum c);
    /// b from a known F.
    const Datum& ex_falso(Datum b);
    /// b from known a and -a.
    const Datum& explode(Datum a, Datum b);

    /// The script so far, ending in `goal`. Throws std::logic_error if the
    /// goal was never derived.
    ProofScript finish(const Datum& goal) const;

private:
    std::uint64_t rule_index(RuleId rule) const;
    std::uint64_t auto_resource(RuleId rule, const Datum& conclusion, bool witnessed) const;

    Machine* machine_;
    Datum library_;
    std::vector<Datum> hypotheses_;
    std::vector<Datum> known_;
    std::vector<ProofStep> steps_;
};

/// Builds a script for hypotheses |- goal with `derive`.
ProofScript derive_script(Machine& machine, const Datum& library, std::vector<Datum> hypotheses,
    const Datum& goal, const std::function<void(ScriptBuilder&)>& derive);

/// A small goal-directed search for a certified script of hypotheses |- goal
/// over a base library: hypotheses, conjunction elimination, execution of
/// quickly halting statements, ex falso, explosion, then decomposition of
/// conjunctive, disjunctive and conditional goals up to `depth` levels.
std::optional<ProofScript> prove_entails(Machine& machine, const Datum& library,
    std::vector<Datum> hypotheses, const Datum& goal, int depth = 3);

}  // namespace algolog
