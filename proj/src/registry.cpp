// algolog: an executable kernel for type-free algorithmic logic
// Copyright 2026 The algolog Authors.
// Licensed under the Apache License, Version 2.0.

#include <algolog/registry.hpp>

#include <array>

namespace algolog
{
namespace
{
constexpr std::array<std::string_view, static_cast<std::size_t>(ProgramId::FirstRule)>
    builtin_names{
        "IDENTITY",
        "LOOP",
        "HALT",
        "TRUE",
        "AND",
        "OR",
        "S_NEG",
        "CURRY",
        "BETA_HALTWITNESS",
        "R_WITNESS",
        "DEDUCE",
        "LIB_FROM_LIST",
    };

constexpr std::array<std::string_view, rule_count> rule_names{
    "TRANS",
    "UNIV",
    "META_UNIV",
    "CONJ",
    "META_CONJ",
    "DISJ_INTRO",
    "D_ELIM",
    "META_DISJ",
    "ELIM_CASE",
    "DOUBLE_NEG",
    "STRONG_DEMORGAN",
    "BETA_CURRY",
    "MP_FIXED",
    "DENY",
    "CONJ_CONTRA",
    "R_INTRO",
    "P1",
    "P2",
    "P3",
    "P4",
    "P5",
    "P6",
    "P7",
    "P8",
    "P9",
    "P10",
    "P11",
    "P12",
    "P13",
    "P14",
};

constexpr std::array<std::string_view, rule_count> rule_program_names{
    "RULE_TRANS",
    "RULE_UNIV",
    "RULE_META_UNIV",
    "RULE_CONJ",
    "RULE_META_CONJ",
    "RULE_DISJ_INTRO",
    "RULE_D_ELIM",
    "RULE_META_DISJ",
    "RULE_ELIM_CASE",
    "RULE_DOUBLE_NEG",
    "RULE_STRONG_DEMORGAN",
    "RULE_BETA_CURRY",
    "RULE_MP_FIXED",
    "RULE_DENY",
    "RULE_CONJ_CONTRA",
    "RULE_R_INTRO",
    "RULE_P1",
    "RULE_P2",
    "RULE_P3",
    "RULE_P4",
    "RULE_P5",
    "RULE_P6",
    "RULE_P7",
    "RULE_P8",
    "RULE_P9",
    "RULE_P10",
    "RULE_P11",
    "RULE_P12",
    "RULE_P13",
    "RULE_P14",
};
}  // namespace

std::size_t capture_arity(ProgramId p) noexcept
{
    switch (p)
    {
    case ProgramId::BetaHaltWitness:
    case ProgramId::LibFromList:
        return 1;
    default:
        break;
    }
    if (const auto r = program_rule(p); r == RuleId::MpFixed || r == RuleId::Deny)
        return 1;
    return 0;
}

std::string_view program_name(ProgramId p) noexcept
{
    if (const auto r = program_rule(p))
        return rule_program_names[static_cast<std::size_t>(*r)];
    const auto i = static_cast<std::size_t>(p);
    return i < builtin_names.size() ? builtin_names[i] : std::string_view{"?"};
}

std::optional<ProgramId> program_from_name(std::string_view name) noexcept
{
    for (std::size_t i = 0; i < program_count; ++i)
    {
        const auto p = static_cast<ProgramId>(i);
        if (program_name(p) == name)
            return p;
    }
    return std::nullopt;
}

std::string_view rule_name(RuleId r) noexcept
{
    return rule_names[static_cast<std::size_t>(r)];
}

std::optional<RuleId> rule_from_name(std::string_view name) noexcept
{
    for (std::size_t i = 0; i < rule_count; ++i)
        if (rule_names[i] == name)
            return static_cast<RuleId>(i);
    return std::nullopt;
}

}  // namespace algolog
