// algolog: an executable kernel for type-free algorithmic logic
// Copyright 2026 The algolog Authors.
// Licensed under the Apache License, Version 2.0.
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

namespace algolog
{
/// Rules in catalog order. The first eleven form the stable base B0.
enum class RuleId : std::uint8_t
{
    Trans,
    Univ,
    MetaUniv,
    Conj,
    MetaConj,
    DisjIntro,
    DElim,
    MetaDisj,
    ElimCase,
    DoubleNeg,
    StrongDeMorgan,
    BetaCurry,
    MpFixed,
    Deny,
    ConjContra,
    RIntro,
    P1,
    P2,
    P3,
    P4,
    P5,
    P6,
    P7,
    P8,
    P9,
    P10,
    P11,
    P12,
    P13,
    P14,
};

inline constexpr std::size_t rule_count = 30;
inline constexpr std::size_t base_rule_count = 11;

/// Built-in programs. Every rule has a program directly after LibFromList,
/// so the enum value order is also the canonical registry order.
enum class ProgramId : std::uint8_t
{
    Identity,
    Loop,
    Halt,
    True,
    And,
    Or,
    StrongNeg,
    Curry,
    BetaHaltWitness,
    RWitness,
    Deduce,
    LibFromList,
    FirstRule,
};

inline constexpr std::size_t program_count =
    static_cast<std::size_t>(ProgramId::FirstRule) + rule_count;

constexpr ProgramId rule_program(RuleId r) noexcept
{
    return static_cast<ProgramId>(
        static_cast<std::size_t>(ProgramId::FirstRule) + static_cast<std::size_t>(r));
}

constexpr std::optional<RuleId> program_rule(ProgramId p) noexcept
{
    const auto i = static_cast<std::size_t>(p);
    const auto first = static_cast<std::size_t>(ProgramId::FirstRule);
    if (i < first || i >= program_count)
        return std::nullopt;
    return static_cast<RuleId>(i - first);
}

constexpr std::size_t registry_index(ProgramId p) noexcept
{
    return static_cast<std::size_t>(p);
}

/// Number of captured data the program expects inside its Alg datum.
std::size_t capture_arity(ProgramId p) noexcept;

/// Registry name, e.g. "IDENTITY" or "RULE_CONJ".
std::string_view program_name(ProgramId p) noexcept;
std::optional<ProgramId> program_from_name(std::string_view name) noexcept;

/// Short rule name, e.g. "CONJ" or "P7".
std::string_view rule_name(RuleId r) noexcept;
std::optional<RuleId> rule_from_name(std::string_view name) noexcept;

}  // namespace algolog
