// algolog: an executable kernel for type-free algorithmic logic
// Copyright 2026 The algolog Authors.
// Licensed under the Apache License, Version 2.0.

#include "bodies.hpp"

#include <algolog/machine.hpp>

#include <stdexcept>

namespace algolog
{
Process::Process(Machine* m, ProcessId id, Task<Datum> body) noexcept
  : machine_(m), id_(id), body_(std::move(body))
{}

Process::Process(Process&& other) noexcept
  : machine_(std::exchange(other.machine_, nullptr)),
    id_(other.id_),
    body_(std::move(other.body_)),
    runtime_(other.runtime_),
    halted_(other.halted_),
    output_(std::move(other.output_))
{}

Process& Process::operator=(Process&& other) noexcept
{
    if (this != &other)
    {
        release();
        machine_ = std::exchange(other.machine_, nullptr);
        id_ = other.id_;
        body_ = std::move(other.body_);
        runtime_ = other.runtime_;
        halted_ = other.halted_;
        output_ = std::move(other.output_);
    }
    return *this;
}

Process::~Process()
{
    release();
}

void Process::release() noexcept
{
    // Destroy the body first so grandchildren report before this process.
    body_ = Task<Datum>{};
    if (machine_ != nullptr)
        if (auto* t = machine_->tracer())
            t->on_release(id_, runtime_);
    machine_ = nullptr;
}

bool Process::step()
{
    if (halted_)
        return true;
    ++runtime_;
    if (body_.step())
    {
        halted_ = true;
        output_ = std::move(body_.result());
        body_ = Task<Datum>{};
        if (auto* t = machine_->tracer())
            t->on_halt(id_, runtime_, output_);
    }
    return halted_;
}

Machine::Machine(Universe u, MachineLimits limits)
  : catalog_(std::make_unique<DataCatalog>(std::move(u))), limits_(limits)
{}

Process Machine::adopt(
    const Datum& alg, const std::function<Task<Datum>(Context)>& make_body, ProcessId parent)
{
    const ProcessId id = next_id();
    if (tracer_ != nullptr)
        tracer_->on_spawn(id, parent, alg);
    return Process{this, id, make_body(Context{this, id})};
}

Process Machine::spawn(const Datum& alg, const Datum& input, ProcessId parent)
{
    if (!alg.is_alg())
        throw std::invalid_argument("spawn: the algorithm of a process must be an Alg datum");

    const ProcessId id = next_id();
    if (tracer_ != nullptr)
        tracer_->on_spawn(id, parent, alg);
    const Context ctx{this, id};

    const ProgramId prog = alg.program();
    const auto rule = program_rule(prog);
    const bool well_formed = alg.items().size() == capture_arity(prog) &&
                             (prog != ProgramId::LibFromList || alg[0].is_list());

    Task<Datum> body;
    if (prog == ProgramId::Loop)
        body = detail::loop_body();
    else if (!well_formed)
        body = detail::constant_body(rule ? input : Datum::nat(0));
    else if (rule)
        body = detail::rule_body(ctx, *rule, alg, input);
    else if (prog == ProgramId::Deduce)
    {
        std::vector<Datum> hyps;
        Datum library, goal;
        if (detail::parse_deduce_input(input, hyps, library, goal))
            body = detail::deduce_body(ctx, std::move(hyps), library, goal, {});
        else
            body = detail::constant_body(Datum::nat(0));
    }
    else
        body = detail::builtin_body(ctx, alg, input);

    return Process{this, id, std::move(body)};
}

RunResult Machine::drive(Process& p, std::uint64_t fuel)
{
    for (std::uint64_t used = 0; used < fuel; ++used)
        if (p.step())
            return Halted{p.output(), p.runtime()};
    if (p.halted())
        return Halted{p.output(), p.runtime()};
    return OutOfFuel{fuel};
}

RunResult Machine::run(const Datum& alg, const Datum& input, std::uint64_t fuel)
{
    if (fuel == 0)
        throw std::invalid_argument("run: fuel must be positive");
    Process p = spawn(alg, input);
    return drive(p, fuel);
}

}  // namespace algolog
