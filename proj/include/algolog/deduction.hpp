// algolog: an executable kernel for type-free algorithmic logic
// Copyright 2026 The algolog Authors.
// Licensed under the Apache License, Version 2.0.
#pragma once

#include <algolog/datum.hpp>
#include <algolog/registry.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace algolog
{
class Machine;

/// Diagonal enumeration of positive pairs: 1 -> (1,1), 2 -> (1,2), 3 -> (2,1), ...
/// Returns (rule index k, resource m).
std::pair<std::uint64_t, std::uint64_t> pair_index(std::uint64_t i);

/// Inverse of pair_index.
std::uint64_t pair_rank(std::uint64_t k, std::uint64_t m);

/// The Alg datum of a capture-free rule.
Datum rule_datum(RuleId r);
Datum mp_fixed_rule(const Datum& fixed_library);
Datum deny_rule(const Datum& denied);

/// The rule a datum denotes, if it is a well-formed rule Alg.
std::optional<RuleId> rule_of(const Datum& d) noexcept;

/// Alg(LIB_FROM_LIST, [rules]). Throws on an empty list or a non-rule item.
Datum make_library(std::span<const Datum> rules);
Datum make_library(std::initializer_list<RuleId> rules);

/// Rule data of a well-formed library, in order.
std::optional<std::vector<Datum>> library_rules(const Datum& library);
bool is_library(const Datum& d) noexcept;

/// The eleven base rules in catalog order.
std::vector<RuleId> base_rules();
Datum base_library();

/// One DEDUCE stage, reported after H_i is computed.
struct StageEvent
{
    std::uint64_t stage = 0;     ///< 0 for the hypotheses themselves
    std::uint64_t rule_index = 0;
    std::uint64_t resource = 0;
    std::optional<Datum> rule;   ///< what the library returned for rule_index
    std::size_t appended = 0;
    const std::vector<Datum>* items = nullptr;  ///< H_i, valid during the callback
};

struct DeduceHooks
{
    std::function<void(const StageEvent&)> on_stage;
    /// Stop (with output 0) after this many stages; 0 means no limit.
    std::uint64_t stage_limit = 0;
};

struct ProvedAtStage
{
    std::uint64_t stage = 0;
    std::uint64_t runtime = 0;
};

struct FuelExhausted
{
    std::uint64_t consumed = 0;
    std::uint64_t stages_completed = 0;
};

using DeduceVerdict = std::variant<ProvedAtStage, FuelExhausted>;

/// The registered DEDUCE program run from the host, reporting the stage at
/// which the goal first appears. Throws std::invalid_argument unless library
/// is a well-formed library and all items are statements.
DeduceVerdict deduce_faithful(Machine& machine, std::span<const Datum> hyps, const Datum& library,
    const Datum& goal, std::uint64_t fuel, std::function<void(const StageEvent&)> observer = {});

struct ClosureRun
{
    std::vector<std::vector<Datum>> stages;  ///< H_0 .. H_k
    bool fuel_exhausted = false;
    std::uint64_t consumed = 0;
};

/// H_0 .. H_stage_limit of the same recurrence, or as many as fuel allows.
ClosureRun closure_stages(Machine& machine, std::span<const Datum> hyps, const Datum& library,
    std::uint64_t stage_limit, std::uint64_t fuel);

/// size(x) <= m and x's process halts with x's output within m units.
bool m_true_check(Machine& machine, const Datum& x, std::uint64_t m);

/// Thrown by host-side rule application when fuel runs out; never a wrong answer.
class FuelError : public ResourceError
{
public:
    using ResourceError::ResourceError;
};

/// Runs rule program `rule` on [H, library, m] through the machine.
std::vector<Datum> apply_rule(Machine& machine, const Datum& rule, std::span<const Datum> hyps,
    const Datum& library, std::uint64_t m, std::uint64_t fuel);
std::vector<Datum> apply_rule(Machine& machine, RuleId rule, std::span<const Datum> hyps,
    const Datum& library, std::uint64_t m, std::uint64_t fuel);

struct ProofScript;

/// One certified consequence. Premises index the hypotheses first, then the
/// conclusions of earlier steps. Witnesses are nested scripts used by UNIV
/// (certifying the turnstile it injects) and D_ELIM (certifying its two
/// conditionals) in place of running them.
struct ProofStep
{
    std::uint64_t rule_index = 1;
    std::uint64_t resource = 1;
    std::vector<std::size_t> premises;
    Datum conclusion;
    std::vector<ProofScript> witnesses;
};

struct ProofScript
{
    std::vector<Datum> hypotheses;
    Datum goal;
    std::vector<ProofStep> steps;
};

struct Certified
{};

struct StepFailed
{
    std::size_t index = 0;
    std::string reason;
};

using CertifyVerdict = std::variant<Certified, StepFailed>;

inline bool certified(const CertifyVerdict& v) noexcept
{
    return std::holds_alternative<Certified>(v);
}

/// Checks every step of the script against the rules `library` supplies.
CertifyVerdict certify(
    Machine& machine, const ProofScript& script, const Datum& library, std::uint64_t fuel);

}  // namespace algolog
