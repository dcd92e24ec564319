// algolog: an executable kernel for type-free algorithmic logic
// Copyright 2026 The algolog Authors.
// Licensed under the Apache License, Version 2.0.

#include <algolog/catalog.hpp>

#include <limits>

namespace algolog
{
namespace
{
constexpr std::uint64_t saturated = std::numeric_limits<std::uint64_t>::max() / 4;

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) noexcept
{
    return (a >= saturated || b >= saturated || a + b >= saturated) ? saturated : a + b;
}

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) noexcept
{
    if (a == 0 || b == 0)
        return 0;
    return (a >= saturated / b) ? saturated : a * b;
}
}  // namespace

DataCatalog::DataCatalog(Universe u, std::uint64_t memo_limit)
  : universe_(std::move(u)), memo_limit_(memo_limit)
{}

void DataCatalog::extend_counts(std::uint64_t s)
{
    const std::uint64_t programs = universe_.programs().size();
    while (exact_counts_.size() <= s)
    {
        const std::uint64_t n = exact_counts_.size();
        // Sequences of total n-1 only need exact counts below n.
        while (seq_counts_.size() < n)
        {
            const std::uint64_t t = seq_counts_.size();
            std::uint64_t c = 0;
            for (std::uint64_t k = 1; k <= t; ++k)
                c = sat_add(c, sat_mul(exact_counts_[k], seq_counts_[t - k]));
            seq_counts_.push_back(c);
        }
        std::uint64_t c = sat_add(1, seq_counts_[n - 1]);
        if (n >= 2)
            c = sat_add(c, sat_mul(programs, seq_counts_[n - 2]));
        exact_counts_.push_back(c);
    }
}

std::uint64_t DataCatalog::count_exact(std::uint64_t s)
{
    if (s == 0)
        return 0;
    extend_counts(s);
    return exact_counts_[s];
}

std::uint64_t DataCatalog::count_sequences(std::uint64_t t)
{
    extend_counts(t + 1);
    return seq_counts_[t];
}

DataCatalog::Bucket DataCatalog::bucket(std::uint64_t s)
{
    if (count_exact(s) > memo_limit_)
        return nullptr;
    if (memo_.size() <= s)
        memo_.resize(s + 1);
    if (!memo_[s])
    {
        auto items = std::make_shared<std::vector<Datum>>();
        items->reserve(count_exact(s));
        for (const auto& d : lazy_exact(s))
            items->push_back(d);
        memo_[s] = std::move(items);
    }
    return memo_[s];
}

Generator<Datum> DataCatalog::from_bucket(Bucket b, bool algs_only)
{
    for (const auto& d : *b)
        if (!algs_only || d.is_alg())
            co_yield d;
}

Generator<Datum> DataCatalog::exact(std::uint64_t s)
{
    if (auto b = bucket(s))
        return from_bucket(std::move(b), false);
    return lazy_exact(s);
}

Generator<Datum> DataCatalog::algs(std::uint64_t s)
{
    if (auto b = bucket(s))
        return from_bucket(std::move(b), true);
    return lazy_algs(s);
}

Generator<Datum> DataCatalog::lazy_exact(std::uint64_t s)
{
    if (s == 0)
        co_return;
    const Datum top = Datum::nat(s - 1);
    co_yield top;
    for (const auto& seq : sequences(s - 1))
    {
        const Datum d = Datum::list(seq);
        co_yield d;
    }
    for (const auto& a : lazy_algs(s))
        co_yield a;
}

Generator<Datum> DataCatalog::lazy_algs(std::uint64_t s)
{
    if (s < 2)
        co_return;
    for (const auto p : universe_.programs())
        for (const auto& caps : sequences(s - 2))
        {
            const Datum d = Datum::alg(p, caps);
            co_yield d;
        }
}

Generator<std::vector<Datum>> DataCatalog::sequences(std::uint64_t total)
{
    if (total == 0)
    {
        const std::vector<Datum> empty;
        co_yield empty;
        co_return;
    }
    for (std::uint64_t k = 1; k <= total; ++k)
    {
        if (count_sequences(total - k) == 0)
            continue;
        for (const auto& head : exact(k))
            for (const auto& rest : sequences(total - k))
            {
                std::vector<Datum> seq;
                seq.reserve(rest.size() + 1);
                seq.push_back(head);
                seq.insert(seq.end(), rest.begin(), rest.end());
                co_yield seq;
            }
    }
}

Generator<Datum> DataCatalog::statements(std::uint64_t max_size)
{
    // [a, u, v] has size 1 + |a| + |u| + |v| with |a| >= 2, |u|, |v| >= 1.
    for (std::uint64_t s = 5; s <= max_size; ++s)
        for (std::uint64_t sa = 2; sa + 3 <= s; ++sa)
            for (const auto& a : algs(sa))
                for (std::uint64_t su = 1; sa + su + 2 <= s; ++su)
                    for (const auto& u : exact(su))
                        for (const auto& v : exact(s - 1 - sa - su))
                        {
                            const Datum st = Datum::list(std::vector<Datum>{a, u, v});
                            co_yield st;
                        }
}

}  // namespace algolog
