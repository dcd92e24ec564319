// algolog: an executable kernel for type-free algorithmic logic
// Copyright 2026 The algolog Authors.
// Licensed under the Apache License, Version 2.0.
#pragma once

#include <coroutine>
#include <exception>
#include <optional>
#include <utility>

namespace algolog
{
/// Marker yielded by a body to end its current unit of work.
struct Tick
{};
inline constexpr Tick tick{};

/// A resumable computation that yields Tick between units of work and
/// finally returns a T. One step() call runs exactly one unit: the code
/// between two suspension points.
template <typename T>
class Task
{
public:
    struct promise_type
    {
        std::optional<T> value;
        std::exception_ptr error;

        Task get_return_object() noexcept
        {
            return Task{std::coroutine_handle<promise_type>::from_promise(*this)};
        }
        std::suspend_always initial_suspend() const noexcept { return {}; }
        std::suspend_always final_suspend() const noexcept { return {}; }
        std::suspend_always yield_value(Tick) const noexcept { return {}; }
        template <typename U>
        void return_value(U&& v)
        {
            value.emplace(std::forward<U>(v));
        }
        void unhandled_exception() noexcept { error = std::current_exception(); }
    };

    using handle_type = std::coroutine_handle<promise_type>;

    Task() = default;
    Task(Task&& other) noexcept : h_(std::exchange(other.h_, {})) {}
    Task& operator=(Task&& other) noexcept
    {
        if (this != &other)
        {
            reset();
            h_ = std::exchange(other.h_, {});
        }
        return *this;
    }
    Task(const Task&) = delete;
    Task& operator=(const Task&) = delete;
    ~Task() { reset(); }

    bool valid() const noexcept { return static_cast<bool>(h_); }
    bool done() const noexcept { return !h_ || h_.done(); }

    /// Runs one unit. Returns true once the body has returned.
    /// Exceptions escaping the body are rethrown here.
    bool step()
    {
        if (done())
            return true;
        h_.resume();
        if (auto& p = h_.promise(); p.error)
            std::rethrow_exception(std::exchange(p.error, {}));
        return h_.done();
    }

    T& result() noexcept { return *h_.promise().value; }

private:
    explicit Task(handle_type h) noexcept : h_(h) {}
    void reset() noexcept
    {
        if (h_)
            h_.destroy();
        h_ = {};
    }

    handle_type h_;
};

}  // namespace algolog
