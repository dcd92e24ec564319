// algolog: an executable kernel for type-free algorithmic logic
// Copyright 2026 The algolog Authors.
// Licensed under the Apache License, Version 2.0.
#pragma once

#include <algolog/registry.hpp>

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <memory>
#include <span>
#include <stdexcept>
#include <vector>

namespace algolog
{
/// Thrown when a bounded host-side search would exceed its configured cap.
/// Distinct from running out of fuel: it says the requested bound is infeasible.
class ResourceError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Immutable machine value: a natural, a list, or an algorithm (program + captures).
/// Copies share structure; size and hash are computed once at construction.
class Datum
{
public:
    enum class Kind : std::uint8_t
    {
        Nat,
        List,
        Alg,
    };

    /// Nat 0.
    Datum();

    static Datum nat(std::uint64_t n);
    static Datum list(std::vector<Datum> items);
    static Datum list(std::initializer_list<Datum> items) { return list(std::vector<Datum>(items)); }
    static Datum alg(ProgramId prog, std::vector<Datum> captures = {});

    Kind kind() const noexcept { return node_->kind; }
    bool is_nat() const noexcept { return kind() == Kind::Nat; }
    bool is_list() const noexcept { return kind() == Kind::List; }
    bool is_alg() const noexcept { return kind() == Kind::Alg; }

    std::uint64_t nat_value() const noexcept { return node_->nat; }
    ProgramId program() const noexcept { return node_->prog; }

    /// List items or Alg captures; empty for naturals.
    std::span<const Datum> items() const noexcept { return node_->children; }
    const Datum& operator[](std::size_t i) const noexcept { return node_->children[i]; }

    std::uint64_t size() const noexcept { return node_->size; }
    std::size_t hash() const noexcept { return node_->hash; }

    bool same_node(const Datum& other) const noexcept { return node_ == other.node_; }

    friend bool operator==(const Datum& a, const Datum& b) noexcept;

private:
    struct Node
    {
        Kind kind = Kind::Nat;
        ProgramId prog = ProgramId::Identity;
        std::uint64_t nat = 0;
        std::vector<Datum> children;
        std::uint64_t size = 1;
        std::size_t hash = 0;
    };

    explicit Datum(std::shared_ptr<const Node> n) noexcept : node_(std::move(n)) {}
    static Datum make(Kind kind, ProgramId prog, std::uint64_t nat, std::vector<Datum> children);

    std::shared_ptr<const Node> node_;
};

/// Size, then tag (Nat < List < Alg), then value / registry index, then components.
std::strong_ordering canonical_compare(const Datum& a, const Datum& b) noexcept;

struct CanonicalLess
{
    bool operator()(const Datum& a, const Datum& b) const noexcept
    {
        return canonical_compare(a, b) < 0;
    }
};

struct DatumHash
{
    std::size_t operator()(const Datum& d) const noexcept { return d.hash(); }
};

/// A List of exactly three items whose head is an Alg.
bool is_statement(const Datum& d) noexcept;

/// The program alphabet used to bound enumeration.
class Universe
{
public:
    /// The whole registry.
    static Universe full();

    /// IDENTITY, LOOP and the connective programs AND, OR, S_NEG.
    static Universe reduced();

    explicit Universe(std::vector<ProgramId> programs);

    std::span<const ProgramId> programs() const noexcept { return programs_; }
    bool contains(ProgramId p) const noexcept;

    /// Every Alg occurring anywhere inside d uses a program of this universe.
    bool admits(const Datum& d) const noexcept;

    friend bool operator==(const Universe&, const Universe&) = default;

private:
    std::vector<ProgramId> programs_;  // sorted by registry index, unique
};

inline constexpr std::uint64_t default_enumeration_cap = 2'000'000;

/// Every datum over u with size <= max_size, in canonical order.
/// Throws ResourceError once the count would exceed cap.
std::vector<Datum> enumerate_data(
    const Universe& u, std::uint64_t max_size, std::uint64_t cap = default_enumeration_cap);

}  // namespace algolog

template <>
struct std::hash<algolog::Datum>
{
    std::size_t operator()(const algolog::Datum& d) const noexcept { return d.hash(); }
};
