// algolog: an executable kernel for type-free algorithmic logic
// Copyright 2026 The algolog Authors.
// Licensed under the Apache License, Version 2.0.
#pragma once

#include <algolog/datum.hpp>
#include <algolog/generator.hpp>

#include <cstdint>
#include <memory>
#include <vector>

namespace algolog
{
/// Lazy, canonically ordered enumeration of data over a Universe. Small size
/// classes are materialized once and reused; larger ones are produced on demand
/// so a caller bounded by fuel never pays for the whole class.
class DataCatalog
{
public:
    explicit DataCatalog(Universe u, std::uint64_t memo_limit = 50'000);

    const Universe& universe() const noexcept { return universe_; }

    /// Number of data of size exactly s (saturating).
    std::uint64_t count_exact(std::uint64_t s);

    Generator<Datum> exact(std::uint64_t s);
    Generator<Datum> algs(std::uint64_t s);
    Generator<std::vector<Datum>> sequences(std::uint64_t total);

    /// Statements of size <= max_size, in canonical order.
    Generator<Datum> statements(std::uint64_t max_size);

private:
    using Bucket = std::shared_ptr<const std::vector<Datum>>;

    Generator<Datum> lazy_exact(std::uint64_t s);
    Generator<Datum> lazy_algs(std::uint64_t s);
    Generator<Datum> from_bucket(Bucket b, bool algs_only);
    Bucket bucket(std::uint64_t s);
    std::uint64_t count_sequences(std::uint64_t t);
    void extend_counts(std::uint64_t s);

    Universe universe_;
    std::uint64_t memo_limit_;
    std::vector<Bucket> memo_;
    std::vector<std::uint64_t> exact_counts_{0};
    std::vector<std::uint64_t> seq_counts_{1};
};

}  // namespace algolog
