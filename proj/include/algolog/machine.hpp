// algolog: an executable kernel for type-free algorithmic logic
// Copyright 2026 The algolog Authors.
// Licensed under the Apache License, Version 2.0.
#pragma once

#include <algolog/catalog.hpp>
#include <algolog/datum.hpp>
#include <algolog/task.hpp>

#include <cstdint>
#include <functional>
#include <memory>
#include <variant>

namespace algolog
{
using ProcessId = std::uint64_t;
inline constexpr ProcessId no_parent = 0;

/// Observation hooks; all default to no-ops. Installed tracers see every
/// process the machine creates, including subprocesses of subprocesses.
class Tracer
{
public:
    virtual ~Tracer() = default;
    virtual void on_spawn(ProcessId /*id*/, ProcessId /*parent*/, const Datum& /*alg*/) {}
    virtual void on_halt(ProcessId /*id*/, std::uint64_t /*runtime*/, const Datum& /*output*/) {}
    /// A process is discarded; consumed counts every unit it ran, halted or not.
    virtual void on_release(ProcessId /*id*/, std::uint64_t /*consumed*/) {}
    /// A dovetailing parent gave one step to child slot 0 or 1.
    virtual void on_interleave(ProcessId /*parent*/, int /*slot*/) {}
};

struct Halted
{
    Datum output;
    std::uint64_t runtime = 0;
};

struct OutOfFuel
{
    std::uint64_t consumed = 0;
};

using RunResult = std::variant<Halted, OutOfFuel>;

inline bool halted(const RunResult& r) noexcept
{
    return std::holds_alternative<Halted>(r);
}

class Machine;

/// What a program body knows about where it runs.
struct Context
{
    Machine* machine = nullptr;
    ProcessId self = no_parent;
};

/// A running algorithm on an input. Each step() consumes one runtime unit.
/// Children spawned by a body live in that body's frame and die with it.
class Process
{
public:
    Process() = default;
    Process(Process&& other) noexcept;
    Process& operator=(Process&& other) noexcept;
    Process(const Process&) = delete;
    Process& operator=(const Process&) = delete;
    ~Process();

    /// Runs one unit; returns true once halted. Stepping a halted process is a no-op.
    bool step();
    bool halted() const noexcept { return halted_; }
    const Datum& output() const noexcept { return output_; }
    std::uint64_t runtime() const noexcept { return runtime_; }
    ProcessId id() const noexcept { return id_; }

private:
    friend class Machine;
    Process(Machine* m, ProcessId id, Task<Datum> body) noexcept;
    void release() noexcept;

    Machine* machine_ = nullptr;
    ProcessId id_ = no_parent;
    Task<Datum> body_;
    std::uint64_t runtime_ = 0;
    bool halted_ = false;
    Datum output_;
};

struct MachineLimits
{
    /// Upper bound on candidates a single enumerating rule application may
    /// inspect. Set well above any fuel budget, so fuel normally runs out first.
    std::uint64_t enumeration_cap = 50'000'000;
};

class Machine
{
public:
    explicit Machine(Universe u = Universe::full(), MachineLimits limits = {});
    Machine(const Machine&) = delete;
    Machine& operator=(const Machine&) = delete;

    const Universe& universe() const noexcept { return catalog_->universe(); }
    DataCatalog& catalog() noexcept { return *catalog_; }
    const MachineLimits& limits() const noexcept { return limits_; }

    void set_tracer(Tracer* t) noexcept { tracer_ = t; }
    Tracer* tracer() const noexcept { return tracer_; }

    /// Starts (alg, input) as a process. alg must be an Alg datum.
    Process spawn(const Datum& alg, const Datum& input, ProcessId parent = no_parent);

    /// Wraps a host-built body as a process, e.g. an instrumented DEDUCE.
    Process adopt(const Datum& alg, const std::function<Task<Datum>(Context)>& make_body,
        ProcessId parent = no_parent);

    /// Steps p until it halts or `fuel` further units are used.
    RunResult drive(Process& p, std::uint64_t fuel);

    RunResult run(const Datum& alg, const Datum& input, std::uint64_t fuel);

private:
    ProcessId next_id() noexcept { return ++last_id_; }

    std::unique_ptr<DataCatalog> catalog_;
    MachineLimits limits_;
    Tracer* tracer_ = nullptr;
    ProcessId last_id_ = no_parent;
};

}  // namespace algolog
