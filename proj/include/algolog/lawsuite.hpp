// algolog: an executable kernel for type-free algorithmic logic
// Copyright 2026 The algolog Authors.
// Licensed under the Apache License, Version 2.0.
#pragma once

#include <algolog/datum.hpp>
#include <algolog/deduction.hpp>
#include <algolog/registry.hpp>
#include <algolog/script_builder.hpp>
#include <algolog/statements.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace algolog
{
class Machine;

/// Shorthand available to law encodings: the machine, the library the laws
/// are certified over, and the connectives relative to that library.
class LawKit
{
public:
    LawKit(Machine& machine, Datum library) : machine_(machine), library_(std::move(library)) {}

    Machine& machine() const noexcept { return machine_; }
    const Datum& library() const noexcept { return library_; }

    ScriptBuilder builder(std::vector<Datum> hypotheses) const
    {
        return ScriptBuilder{machine_, library_, std::move(hypotheses)};
    }
    ProofScript derive(std::vector<Datum> hypotheses, const Datum& goal,
        const std::function<void(ScriptBuilder&)>& steps) const
    {
        return derive_script(machine_, library_, std::move(hypotheses), goal, steps);
    }
    /// Establishes an antecedent of a conditional law by a certified search.
    std::optional<ProofScript> establish(std::vector<Datum> hypotheses, const Datum& goal) const
    {
        return prove_entails(machine_, library_, std::move(hypotheses), goal);
    }

    Datum imp(const Datum& a, const Datum& b) const { return implies(a, library_, b); }
    Datum no(const Datum& a) const { return neg(library_, a); }
    Datum iff(const Datum& a, const Datum& b) const { return bicond(library_, a, b); }
    Datum pr(const Datum& a) const { return prove(library_, a); }

private:
    Machine& machine_;
    Datum library_;
};

/// A derived law as a script generator. `build` returns nullopt when the
/// instance's antecedent could not be established, which counts as a skip.
struct Law
{
    std::string name;
    std::string statement;  ///< schematic form over A, B, C, G
    std::size_t arity = 0;
    std::function<std::optional<ProofScript>(const LawKit&, std::span<const Datum>)> build;
};

/// Every law in catalog order.
const std::vector<Law>& law_catalog();

/// The instantiation pool: T, F, -F, the LOOP statement, T ^ F and T v LOOP.
const std::vector<Datum>& law_pool();

struct LawResult
{
    std::string name;
    std::string statement;
    std::size_t instances = 0;
    std::size_t certified = 0;
    std::size_t skipped = 0;
    std::vector<std::string> failures;

    bool passed() const noexcept { return failures.empty() && certified > 0; }
};

struct LawReport
{
    std::vector<LawResult> laws;
    std::size_t instances = 0;
    std::size_t certified = 0;
    std::size_t skipped = 0;
    std::size_t failed = 0;

    bool passed() const noexcept;
};

/// Instantiates every law whose name contains `filter` over the pool and
/// certifies each script over the base library. Laws mention the DEDUCE
/// program, so a universe lacking it reports failures.
LawReport run_law_suite(
    const Universe& universe, std::uint64_t fuel, std::string_view filter = {});

// Demonstrations around the self-referential statements.

/// [CURRY, [CURRY, rho], 1].
Datum curry_statement(const Datum& library);

struct CurryFixedPoint
{
    Datum q;
    ProofScript forward;   ///< [Q] |- not Q
    ProofScript backward;  ///< [not Q] |- Q
};

/// Throws std::invalid_argument unless the library contains BETA_CURRY.
CurryFixedPoint curry_fixed_point(const Datum& library);

struct ParadoxRecord
{
    RuleId rule = RuleId::P1;
    Datum library;
    Datum q;
    TruthVerdict q_truth;
    TruthVerdict neg_q_truth;
    DeduceVerdict derivation;  ///< of F from [Q]
    TruthVerdict f_truth;

    /// Q true, not Q true, F derived from [Q] within `max_stage`, F directly false.
    bool holds(std::uint64_t max_stage) const noexcept;
};

/// Library [BETA_CURRY, p] (with DISJ_INTRO for P6) run on a reduced-universe
/// machine. Throws std::invalid_argument for other rules.
ParadoxRecord paradox_demo(RuleId p, std::uint64_t fuel);

struct CertifiedParadox
{
    RuleId rule = RuleId::P2;
    Datum library;
    ProofScript script;
    CertifyVerdict verdict;
    std::string conclusion;  ///< what the goal witnesses, in words
};

/// The derivation of F, or of a contradiction precursor, certified over a
/// base library extended by the paradoxical rule. Throws for rules outside
/// P2, P4, P5 and P7 to P14.
CertifiedParadox certified_paradox(RuleId p, std::uint64_t fuel);

struct StrongerLibraryRecord
{
    Datum c;          ///< [LOOP, 0, 0]
    Datum weaker;     ///< the base library
    Datum stronger;   ///< [MP_FIXED(weaker), DENY(c), UNIV]
    DeduceVerdict with_stronger;
    DeduceVerdict with_weaker;
};

StrongerLibraryRecord stronger_library_demo(std::uint64_t fuel);

struct SelfNegationEvidence
{
    Datum library;
    Datum q;
    TruthVerdict q_truth;
    TruthVerdict neg_q_truth;
    TruthVerdict neg_neg_q_truth;
    TruthVerdict f_truth;
};

/// Bounded evaluation of Q, not Q and not not Q under `library`; for a valid
/// library none of them can be true.
SelfNegationEvidence self_negation_evidence(const Datum& library, std::uint64_t fuel);

struct HaltWitnessRun
{
    std::uint64_t fuel = 0;
    bool halted = false;
};

/// Runs BETA_HALTWITNESS(library) on itself at each budget.
std::vector<HaltWitnessRun> halt_witness_evidence(
    const Datum& library, std::span<const std::uint64_t> budgets);

}  // namespace algolog
