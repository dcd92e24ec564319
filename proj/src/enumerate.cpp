// algolog: an executable kernel for type-free algorithmic logic
// Copyright 2026 The algolog Authors.
// Licensed under the Apache License, Version 2.0.

// Eager enumeration: builds every datum by size class, then sorts. Kept
// deliberately independent of the lazy generators in catalog.cpp so that each
// can serve as an oracle for the other.

#include <algolog/datum.hpp>

#include <algorithm>
#include <string>

namespace algolog
{
std::vector<Datum> enumerate_data(const Universe& u, std::uint64_t max_size, std::uint64_t cap)
{
    if (max_size < 1)
        throw std::invalid_argument("enumerate_data: max_size must be positive");

    std::uint64_t produced = 0;
    const auto charge = [&](std::uint64_t n) {
        produced += n;
        if (produced > cap)
            throw ResourceError("enumerate_data: more than " + std::to_string(cap) +
                                " data up to size " + std::to_string(max_size));
    };

    // exact[s]: data of size s. seqs[t]: item sequences whose sizes sum to t.
    std::vector<std::vector<Datum>> exact(max_size + 1);
    std::vector<std::vector<std::vector<Datum>>> seqs(max_size);
    seqs[0].emplace_back();

    for (std::uint64_t s = 1; s <= max_size; ++s)
    {
        const std::uint64_t t = s - 1;
        if (t >= 1)
        {
            for (std::uint64_t k = 1; k <= t; ++k)
            {
                charge(exact[k].size() * seqs[t - k].size());
                for (const auto& head : exact[k])
                    for (const auto& rest : seqs[t - k])
                    {
                        std::vector<Datum> seq;
                        seq.reserve(rest.size() + 1);
                        seq.push_back(head);
                        seq.insert(seq.end(), rest.begin(), rest.end());
                        seqs[t].push_back(std::move(seq));
                    }
            }
        }

        auto& out = exact[s];
        out.push_back(Datum::nat(s - 1));
        charge(1 + seqs[t].size());
        for (const auto& seq : seqs[t])
            out.push_back(Datum::list(seq));
        if (s >= 2)
        {
            charge(u.programs().size() * seqs[s - 2].size());
            for (const auto p : u.programs())
                for (const auto& seq : seqs[s - 2])
                    out.push_back(Datum::alg(p, seq));
        }
    }

    std::vector<Datum> all;
    for (auto& bucket : exact)
        all.insert(all.end(), bucket.begin(), bucket.end());
    std::sort(all.begin(), all.end(), CanonicalLess{});
    return all;
}

}  // namespace algolog
