// algolog: an executable kernel for type-free algorithmic logic
// Copyright 2026 The algolog Authors.
// Licensed under the Apache License, Version 2.0.

#include "bodies.hpp"

#include <algolog/deduction.hpp>
#include <algolog/machine.hpp>
#include <algolog/statements.hpp>

#include <cmath>
#include <stdexcept>
#include <unordered_set>

namespace algolog
{
namespace
{
bool all_statements(std::span<const Datum> items) noexcept
{
    for (const auto& d : items)
        if (!is_statement(d))
            return false;
    return true;
}

void require_deduce_arguments(
    std::span<const Datum> hyps, const Datum& library, const Datum* goal, const char* what)
{
    if (!is_library(library))
        throw std::invalid_argument(std::string{what} + ": not a well-formed library");
    if (!all_statements(hyps))
        throw std::invalid_argument(std::string{what} + ": hypotheses must be statements");
    if (goal != nullptr && !is_statement(*goal))
        throw std::invalid_argument(std::string{what} + ": goal must be a statement");
}

const Datum& deduce_alg()
{
    static const Datum d = Datum::alg(ProgramId::Deduce);
    return d;
}
}  // namespace

std::pair<std::uint64_t, std::uint64_t> pair_index(std::uint64_t i)
{
    if (i == 0)
        throw std::invalid_argument("pair_index: index must be positive");
    auto d = static_cast<std::uint64_t>(
        std::ceil((std::sqrt(8.0 * static_cast<double>(i) + 1.0) - 1.0) / 2.0));
    while (d > 1 && (d - 1) * d / 2 >= i)
        --d;
    while (d * (d + 1) / 2 < i)
        ++d;
    const std::uint64_t j = i - (d - 1) * d / 2;
    return {j, d + 1 - j};
}

std::uint64_t pair_rank(std::uint64_t k, std::uint64_t m)
{
    if (k == 0 || m == 0)
        throw std::invalid_argument("pair_rank: components must be positive");
    const std::uint64_t d = k + m - 1;
    return (d - 1) * d / 2 + k;
}

Datum rule_datum(RuleId r)
{
    if (r == RuleId::MpFixed || r == RuleId::Deny)
        throw std::invalid_argument("rule_datum: this rule needs a capture");
    return Datum::alg(rule_program(r));
}

Datum mp_fixed_rule(const Datum& fixed_library)
{
    return Datum::alg(rule_program(RuleId::MpFixed), {fixed_library});
}

Datum deny_rule(const Datum& denied)
{
    return Datum::alg(rule_program(RuleId::Deny), {denied});
}

std::optional<RuleId> rule_of(const Datum& d) noexcept
{
    if (!d.is_alg())
        return std::nullopt;
    const auto r = program_rule(d.program());
    if (!r || d.items().size() != capture_arity(d.program()))
        return std::nullopt;
    return r;
}

Datum make_library(std::span<const Datum> rules)
{
    if (rules.empty())
        throw std::invalid_argument("make_library: a library needs at least one rule");
    for (const auto& r : rules)
        if (!rule_of(r))
            throw std::invalid_argument("make_library: item is not a rule");
    return Datum::alg(
        ProgramId::LibFromList, {Datum::list(std::vector<Datum>(rules.begin(), rules.end()))});
}

Datum make_library(std::initializer_list<RuleId> rules)
{
    std::vector<Datum> data;
    for (const auto r : rules)
        data.push_back(rule_datum(r));
    return make_library(data);
}

std::optional<std::vector<Datum>> library_rules(const Datum& library)
{
    if (!library.is_alg() || library.program() != ProgramId::LibFromList ||
        library.items().size() != 1 || !library[0].is_list() || library[0].items().empty())
        return std::nullopt;
    for (const auto& r : library[0].items())
        if (!rule_of(r))
            return std::nullopt;
    return std::vector<Datum>(library[0].items().begin(), library[0].items().end());
}

bool is_library(const Datum& d) noexcept
{
    return library_rules(d).has_value();
}

std::vector<RuleId> base_rules()
{
    std::vector<RuleId> out;
    for (std::size_t i = 0; i < base_rule_count; ++i)
        out.push_back(static_cast<RuleId>(i));
    return out;
}

Datum base_library()
{
    std::vector<Datum> rules;
    for (const auto r : base_rules())
        rules.push_back(rule_datum(r));
    return make_library(rules);
}

namespace detail
{
bool parse_deduce_input(const Datum& input, std::vector<Datum>& hyps, Datum& library, Datum& goal)
{
    if (!input.is_list() || input.items().size() != 3 || !input[0].is_list() ||
        !all_statements(input[0].items()) || !is_statement(input[2]))
        return false;
    hyps.assign(input[0].items().begin(), input[0].items().end());
    library = input[1];
    goal = input[2];
    return true;
}

Task<Datum> deduce_body(Context ctx, std::vector<Datum> hyps, Datum library,
    std::optional<Datum> goal, DeduceHooks hooks)
{
    std::vector<Datum> items = std::move(hyps);
    std::unordered_set<Datum, DatumHash> present(items.begin(), items.end());
    const auto report = [&](std::uint64_t stage, std::uint64_t k, std::uint64_t m,
                            const std::optional<Datum>& rule, std::size_t appended) {
        if (hooks.on_stage)
            hooks.on_stage(StageEvent{stage, k, m, rule, appended, &items});
    };
    const auto reached = [&] { return goal && present.contains(*goal); };

    report(0, 0, 0, std::nullopt, 0);
    if (reached())
        co_return Datum::nat(1);

    for (std::uint64_t i = 1;; ++i)
    {
        if (hooks.stage_limit != 0 && i > hooks.stage_limit)
            co_return Datum::nat(0);
        const auto [k, m] = pair_index(i);

        auto fetch = run_subprocess(ctx, library, Datum::nat(k), unbounded);
        ALGOLOG_DRIVE(fetch);
        std::optional<Datum> rule;
        std::size_t appended = 0;
        if (fetch.result().output.is_alg())
        {
            rule = fetch.result().output;
            auto apply = run_subprocess(
                ctx, *rule, Datum::list({Datum::list(items), library, Datum::nat(m)}), unbounded);
            ALGOLOG_DRIVE(apply);
            const Datum& out = apply.result().output;
            if (out.is_list() && all_statements(out.items()))
            {
                const auto next = out.items();
                bool extends = next.size() >= items.size();
                for (std::size_t j = 0; extends && j < items.size(); ++j)
                    extends = next[j] == items[j];
                if (extends)
                {
                    appended = next.size() - items.size();
                    for (std::size_t j = items.size(); j < next.size(); ++j)
                    {
                        items.push_back(next[j]);
                        present.insert(next[j]);
                    }
                }
                else
                {
                    items.assign(next.begin(), next.end());
                    present = {items.begin(), items.end()};
                }
            }
        }
        report(i, k, m, rule, appended);
        if (reached())
            co_return Datum::nat(1);
    }
}
}  // namespace detail

DeduceVerdict deduce_faithful(Machine& machine, std::span<const Datum> hyps, const Datum& library,
    const Datum& goal, std::uint64_t fuel, std::function<void(const StageEvent&)> observer)
{
    require_deduce_arguments(hyps, library, &goal, "deduce_faithful");
    std::uint64_t last_stage = 0;
    bool any_stage = false;
    DeduceHooks hooks;
    hooks.on_stage = [&](const StageEvent& e) {
        last_stage = e.stage;
        any_stage = true;
        if (observer)
            observer(e);
    };
    const std::vector<Datum> gamma(hyps.begin(), hyps.end());
    Process p = machine.adopt(deduce_alg(), [&](Context ctx) {
        return detail::deduce_body(ctx, gamma, library, goal, hooks);
    });
    const RunResult r = machine.drive(p, fuel);
    if (const auto* h = std::get_if<Halted>(&r); h != nullptr && h->output == Datum::nat(1))
        return ProvedAtStage{last_stage, h->runtime};
    return FuelExhausted{std::get<OutOfFuel>(r).consumed, any_stage ? last_stage : 0};
}

ClosureRun closure_stages(Machine& machine, std::span<const Datum> hyps, const Datum& library,
    std::uint64_t stage_limit, std::uint64_t fuel)
{
    require_deduce_arguments(hyps, library, nullptr, "closure_stages");
    ClosureRun run;
    DeduceHooks hooks;
    hooks.on_stage = [&](const StageEvent& e) { run.stages.push_back(*e.items); };
    hooks.stage_limit = stage_limit == 0 ? 1 : stage_limit;
    if (stage_limit == 0)
    {
        run.stages.emplace_back(hyps.begin(), hyps.end());
        return run;
    }
    const std::vector<Datum> gamma(hyps.begin(), hyps.end());
    Process p = machine.adopt(deduce_alg(), [&](Context ctx) {
        return detail::deduce_body(ctx, gamma, library, std::nullopt, hooks);
    });
    const RunResult r = machine.drive(p, fuel);
    run.fuel_exhausted = !halted(r);
    run.consumed = run.fuel_exhausted ? std::get<OutOfFuel>(r).consumed : std::get<Halted>(r).runtime;
    return run;
}

bool m_true_check(Machine& machine, const Datum& x, std::uint64_t m)
{
    if (!is_statement(x) || x.size() > m || m == 0)
        return false;
    const RunResult r = machine.run(x[0], x[1], m);
    const auto* h = std::get_if<Halted>(&r);
    return h != nullptr && h->output == x[2];
}

std::vector<Datum> apply_rule(Machine& machine, const Datum& rule, std::span<const Datum> hyps,
    const Datum& library, std::uint64_t m, std::uint64_t fuel)
{
    if (!rule_of(rule))
        throw std::invalid_argument("apply_rule: not a rule datum");
    if (m == 0)
        throw std::invalid_argument("apply_rule: resource must be positive");
    if (!all_statements(hyps))
        throw std::invalid_argument("apply_rule: hypotheses must be statements");
    const Datum input = Datum::list(
        {Datum::list(std::vector<Datum>(hyps.begin(), hyps.end())), library, Datum::nat(m)});
    const RunResult r = machine.run(rule, input, fuel);
    const auto* h = std::get_if<Halted>(&r);
    if (h == nullptr)
        throw FuelError("apply_rule: fuel exhausted after " + std::to_string(fuel) + " units");
    return {h->output.items().begin(), h->output.items().end()};
}

std::vector<Datum> apply_rule(Machine& machine, RuleId rule, std::span<const Datum> hyps,
    const Datum& library, std::uint64_t m, std::uint64_t fuel)
{
    return apply_rule(machine, rule_datum(rule), hyps, library, m, fuel);
}

}  // namespace algolog
