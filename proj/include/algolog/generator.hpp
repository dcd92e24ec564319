// algolog: an executable kernel for type-free algorithmic logic
// Copyright 2026 The algolog Authors.
// Licensed under the Apache License, Version 2.0.
#pragma once

#include <coroutine>
#include <exception>
#include <iterator>
#include <memory>
#include <utility>

namespace algolog
{
/// Minimal lazy input range backed by a coroutine. Yielded values are observed
/// by reference and stay valid until the next increment.
template <typename T>
class Generator
{
public:
    struct promise_type
    {
        const T* current = nullptr;
        std::exception_ptr error;

        Generator get_return_object() noexcept
        {
            return Generator{std::coroutine_handle<promise_type>::from_promise(*this)};
        }
        std::suspend_always initial_suspend() const noexcept { return {}; }
        std::suspend_always final_suspend() const noexcept { return {}; }
        std::suspend_always yield_value(const T& v) noexcept
        {
            current = std::addressof(v);
            return {};
        }
        void return_void() const noexcept {}
        void unhandled_exception() noexcept { error = std::current_exception(); }
    };

    using handle_type = std::coroutine_handle<promise_type>;

    struct sentinel
    {};

    class iterator
    {
    public:
        using value_type = T;
        using difference_type = std::ptrdiff_t;

        iterator() = default;
        explicit iterator(handle_type h) noexcept : h_(h) {}

        const T& operator*() const noexcept { return *h_.promise().current; }
        const T* operator->() const noexcept { return h_.promise().current; }
        iterator& operator++()
        {
            advance(h_);
            return *this;
        }
        void operator++(int) { ++*this; }
        friend bool operator==(const iterator& it, sentinel) noexcept { return it.h_.done(); }

    private:
        handle_type h_;
    };

    Generator(Generator&& other) noexcept : h_(std::exchange(other.h_, {})) {}
    Generator& operator=(Generator&& other) noexcept
    {
        if (this != &other)
        {
            if (h_)
                h_.destroy();
            h_ = std::exchange(other.h_, {});
        }
        return *this;
    }
    Generator(const Generator&) = delete;
    Generator& operator=(const Generator&) = delete;
    ~Generator()
    {
        if (h_)
            h_.destroy();
    }

    iterator begin()
    {
        advance(h_);
        return iterator{h_};
    }
    sentinel end() const noexcept { return {}; }

private:
    explicit Generator(handle_type h) noexcept : h_(h) {}

    static void advance(handle_type h)
    {
        h.resume();
        if (h.promise().error)
            std::rethrow_exception(std::exchange(h.promise().error, {}));
    }

    handle_type h_;
};

}  // namespace algolog
