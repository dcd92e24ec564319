// algolog: an executable kernel for type-free algorithmic logic
// Copyright 2026 The algolog Authors.
// Licensed under the Apache License, Version 2.0.
#pragma once

// Internal: program bodies and the helpers they share.

#include <algolog/deduction.hpp>
#include <algolog/machine.hpp>

/// Runs a nested task to completion, one unit per resume of the enclosing body.
#define ALGOLOG_DRIVE(task) \
    while (!(task).step())  \
    co_yield ::algolog::tick

namespace algolog::detail
{
inline constexpr std::uint64_t unbounded = 0;

struct SubRun
{
    bool halted = false;
    Datum output;
    std::uint64_t runtime = 0;
};

/// One own unit to spawn, then the child's units. With a nonzero budget the
/// child is abandoned once it has used that many units without halting.
Task<SubRun> run_subprocess(Context ctx, Datum alg, Datum input, std::uint64_t budget);

/// Halts in one unit with the given output.
Task<Datum> constant_body(Datum output);

/// Never halts.
Task<Datum> loop_body();

Task<Datum> builtin_body(Context ctx, Datum alg, Datum input);
Task<Datum> rule_body(Context ctx, RuleId rule, Datum alg, Datum input);

/// DEDUCE with optional host instrumentation; goal == nullopt runs stages only.
Task<Datum> deduce_body(Context ctx, std::vector<Datum> hyps, Datum library,
    std::optional<Datum> goal, DeduceHooks hooks);

/// [Gamma, rho, B] with Gamma a list of statements and B a statement.
bool parse_deduce_input(const Datum& input, std::vector<Datum>& hyps, Datum& library, Datum& goal);

}  // namespace algolog::detail
