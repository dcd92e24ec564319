// algolog: an executable kernel for type-free algorithmic logic
// Copyright 2026 The algolog Authors.
// Licensed under the Apache License, Version 2.0.

// Bodies of the non-rule built-in programs.

#include "bodies.hpp"

#include <algolog/statements.hpp>

#include <algorithm>
#include <array>

namespace algolog::detail
{
namespace
{
const Datum& nat0()
{
    static const Datum d = Datum::nat(0);
    return d;
}

const Datum& nat1()
{
    static const Datum d = Datum::nat(1);
    return d;
}

bool is_pair_with_alg_head(const Datum& d) noexcept
{
    return d.is_list() && d.items().size() == 2 && d[0].is_alg();
}

Task<Datum> diverge()
{
    for (;;)
        co_yield tick;
}

Task<Datum> halt_body(Context ctx, Datum alg, Datum input)
{
    auto sub = run_subprocess(ctx, alg, input, unbounded);
    ALGOLOG_DRIVE(sub);
    co_return nat1();
}

Task<Datum> true_body(Context ctx, Datum s)
{
    auto sub = run_subprocess(ctx, s[0], s[1], unbounded);
    ALGOLOG_DRIVE(sub);
    co_return sub.result().output == s[2] ? nat1() : nat0();
}

Task<Datum> strong_neg_body(Context ctx, Datum s)
{
    auto sub = run_subprocess(ctx, s[0], s[1], unbounded);
    ALGOLOG_DRIVE(sub);
    co_return sub.result().output == s[2] ? nat0() : nat1();
}

/// Round-robin over two statement processes. A conjunction settles 0 on the
/// first directly false operand, a disjunction settles 1 on the first true one.
Task<Datum> dovetail_body(Context ctx, Datum a, Datum b, bool conjunction)
{
    std::array<Process, 2> procs{
        ctx.machine->spawn(a[0], a[1], ctx.self), ctx.machine->spawn(b[0], b[1], ctx.self)};
    const std::array<Datum, 2> expected{a[2], b[2]};
    std::array<bool, 2> settled{false, false};
    co_yield tick;

    int slot = 0;
    for (;;)
    {
        if (settled[slot])
            slot ^= 1;
        const bool finished = procs[slot].step();
        if (auto* t = ctx.machine->tracer())
            t->on_interleave(ctx.self, slot);
        if (finished)
        {
            const bool is_true = procs[slot].output() == expected[slot];
            if (is_true != conjunction)
                co_return conjunction ? nat0() : nat1();
            settled[slot] = true;
            if (settled[slot ^ 1])
                co_return conjunction ? nat1() : nat0();
        }
        slot ^= 1;
        co_yield tick;
    }
}

/// Runs DEDUCE on [[hyp], library, goal]; halts with 1 when it does, else never.
Task<Datum> witness_or_diverge(Context ctx, Datum hyp, Datum library, Datum goal)
{
    const Datum conditional = implies(hyp, library, goal);
    auto sub = run_subprocess(ctx, conditional[0], conditional[1], unbounded);
    ALGOLOG_DRIVE(sub);
    if (sub.result().output == nat1())
        co_return nat1();
    for (;;)
        co_yield tick;
}

/// Searches m = 1, 2, ... for the first m at which one of the two
/// negations is m-true.
Task<Datum> beta_halt_witness_body(Context ctx, Datum library, Datum alg)
{
    const Datum base = stmt(alg, alg, nat1());
    const std::array<Datum, 2> candidates{neg(library, base), neg(library, strong_neg(base))};
    for (std::uint64_t m = 1;; ++m)
    {
        co_yield tick;
        for (std::size_t i = 0; i < candidates.size(); ++i)
        {
            const Datum& x = candidates[i];
            if (x.size() > m)
                continue;
            auto sub = run_subprocess(ctx, x[0], x[1], m);
            ALGOLOG_DRIVE(sub);
            if (sub.result().halted && sub.result().output == x[2])
                co_return i == 0 ? nat1() : nat0();
        }
    }
}

Task<Datum> library_body(Datum rules, Datum input)
{
    const auto items = rules.items();
    if (!input.is_nat() || input.nat_value() == 0 || items.empty())
        co_return nat0();
    const std::uint64_t n = std::min<std::uint64_t>(input.nat_value(), items.size());
    co_return items[n - 1];
}
}  // namespace

Task<SubRun> run_subprocess(Context ctx, Datum alg, Datum input, std::uint64_t budget)
{
    co_yield tick;
    Process child = ctx.machine->spawn(alg, input, ctx.self);
    for (;;)
    {
        if (budget != unbounded && child.runtime() >= budget)
            co_return SubRun{false, Datum{}, child.runtime()};
        if (child.step())
            co_return SubRun{true, child.output(), child.runtime()};
        co_yield tick;
    }
}

Task<Datum> constant_body(Datum output)
{
    co_return output;
}

Task<Datum> loop_body()
{
    return diverge();
}

Task<Datum> builtin_body(Context ctx, Datum alg, Datum input)
{
    switch (alg.program())
    {
    case ProgramId::Identity:
        return constant_body(input);
    case ProgramId::Halt:
        if (is_pair_with_alg_head(input))
            return halt_body(ctx, input[0], input[1]);
        break;
    case ProgramId::True:
        if (is_statement(input))
            return true_body(ctx, input);
        break;
    case ProgramId::StrongNeg:
        if (is_statement(input))
            return strong_neg_body(ctx, input);
        break;
    case ProgramId::And:
    case ProgramId::Or:
        if (input.is_list() && input.items().size() == 2 && is_statement(input[0]) &&
            is_statement(input[1]))
            return dovetail_body(ctx, input[0], input[1], alg.program() == ProgramId::And);
        break;
    case ProgramId::Curry:
        if (is_pair_with_alg_head(input))
            return witness_or_diverge(ctx, stmt(input[0], input, nat1()), input[1], false_statement());
        break;
    case ProgramId::RWitness:
        if (is_pair_with_alg_head(input))
            return witness_or_diverge(ctx, stmt(input[0], input, nat1()), input[1],
                prove(input[1], false_statement()));
        break;
    case ProgramId::BetaHaltWitness:
        if (input.is_alg())
            return beta_halt_witness_body(ctx, alg[0], input);
        break;
    case ProgramId::LibFromList:
        return library_body(alg[0], input);
    default:
        break;
    }
    return constant_body(nat0());
}

}  // namespace algolog::detail
