// algolog: an executable kernel for type-free algorithmic logic
// Copyright 2026 The algolog Authors.
// Licensed under the Apache License, Version 2.0.
#pragma once

#include <algolog/datum.hpp>
#include <algolog/statements.hpp>

#include <cstdint>
#include <random>
#include <set>
#include <vector>

namespace algolog::testing_support
{
/// Seeded random data bounded by size. Every datum drawn has size <= budget.
class DatumGen
{
public:
    explicit DatumGen(std::uint64_t seed, Universe u = Universe::reduced())
        : rng_(seed), universe_(std::move(u))
    {}

    std::mt19937_64& rng() noexcept { return rng_; }

    std::uint64_t below(std::uint64_t n) { return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(rng_); }
    bool coin() { return below(2) == 0; }

    Datum datum(std::uint64_t budget)
    {
        if (budget <= 1)
            return coin() ? Datum::nat(0) : Datum::list({});
        switch (below(3))
        {
        case 0:
            return Datum::nat(below(budget));
        case 1:
            return Datum::list(items(budget - 1));
        default:
            return Datum::alg(program(), items(budget - 2));
        }
    }

    /// A deep copy sharing no nodes with d except naturals.
    Datum rebuild(const Datum& d)
    {
        if (d.is_nat())
            return Datum::nat(d.nat_value());
        std::vector<Datum> kids;
        for (const auto& c : d.items())
            kids.push_back(rebuild(c));
        return d.is_list() ? Datum::list(std::move(kids)) : Datum::alg(d.program(), std::move(kids));
    }

    ProgramId program()
    {
        const auto ps = universe_.programs();
        return ps[below(ps.size())];
    }

private:
    std::vector<Datum> items(std::uint64_t budget)
    {
        std::vector<Datum> out;
        while (budget > 0 && below(3) != 0)
        {
            const std::uint64_t take = 1 + below(budget);
            out.push_back(datum(take));
            budget -= out.back().size();
        }
        return out;
    }

    std::mt19937_64 rng_;
    Universe universe_;
};

/// Small statements whose truth under generous fuel is fixed: T, F, the LOOP
/// statement, IDENTITY statements over naturals and the connectives over them.
class StatementGen
{
public:
    explicit StatementGen(std::uint64_t seed) : rng_(seed) {}

    std::mt19937_64& rng() noexcept { return rng_; }

    std::uint64_t below(std::uint64_t n) { return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(rng_); }

    Datum atom()
    {
        switch (below(4))
        {
        case 0:
            return true_statement();
        case 1:
            return false_statement();
        case 2:
            return stmt(Datum::alg(ProgramId::Loop), Datum::nat(0), Datum::nat(0));
        default:
        {
            const auto n = below(3);
            return stmt(Datum::alg(ProgramId::Identity), Datum::nat(n), Datum::nat(below(3)));
        }
        }
    }

    Datum statement(int depth)
    {
        if (depth <= 0 || below(3) == 0)
            return atom();
        switch (below(3))
        {
        case 0:
            return conj(statement(depth - 1), statement(depth - 1));
        case 1:
            return disj(statement(depth - 1), statement(depth - 1));
        default:
            return strong_neg(statement(depth - 1));
        }
    }

    /// A statement that halts with its specified output.
    Datum true_atom()
    {
        if (below(2) == 0)
            return true_statement();
        const auto n = below(3);
        return stmt(Datum::alg(ProgramId::Identity), Datum::nat(n), Datum::nat(n));
    }

private:
    std::mt19937_64 rng_;
};

/// Every datum over u of size <= max, closed by appending one known datum to
/// a known list or to a known algorithm's captures. Independent of the
/// size-class recurrence used by enumerate_data.
inline std::set<Datum, CanonicalLess> brute_force_data(const Universe& u, std::uint64_t max)
{
    std::set<Datum, CanonicalLess> known;
    for (std::uint64_t n = 0; n + 1 <= max; ++n)
        known.insert(Datum::nat(n));
    known.insert(Datum::list({}));
    if (max >= 2)
        for (const auto p : u.programs())
            known.insert(Datum::alg(p));
    bool grew = true;
    while (grew)
    {
        grew = false;
        const std::vector<Datum> snapshot(known.begin(), known.end());
        for (const auto& host : snapshot)
        {
            if (host.is_nat())
                continue;
            for (const auto& extra : snapshot)
            {
                if (host.size() + extra.size() > max)
                    break;  // snapshot is size-ordered
                std::vector<Datum> kids(host.items().begin(), host.items().end());
                kids.push_back(extra);
                Datum next = host.is_list() ? Datum::list(std::move(kids))
                                            : Datum::alg(host.program(), std::move(kids));
                grew |= known.insert(std::move(next)).second;
            }
        }
    }
    return known;
}

}  // namespace algolog::testing_support
