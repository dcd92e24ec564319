// algolog: an executable kernel for type-free algorithmic logic
// Copyright 2026 The algolog Authors.
// Licensed under the Apache License, Version 2.0.
#pragma once

#include <algolog/datum.hpp>

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace algolog
{
class Machine;

/// [IDENTITY, 0, 0]: true.
const Datum& true_statement();
/// [IDENTITY, 0, 1]: directly false.
const Datum& false_statement();

// Constructors. Each throws std::invalid_argument when an operand that must be
// a statement is not one.
Datum stmt(const Datum& alg, const Datum& input, const Datum& output);
Datum conj(const Datum& a, const Datum& b);
Datum disj(const Datum& a, const Datum& b);
Datum strong_neg(const Datum& a);
/// T for no items, the item itself for one, otherwise left-associated.
Datum conj_list(std::span<const Datum> items);
Datum turnstile(std::span<const Datum> hyps, const Datum& library, const Datum& goal);
Datum implies(const Datum& a, const Datum& library, const Datum& b);
Datum neg(const Datum& library, const Datum& a);
Datum prove(const Datum& library, const Datum& a);
Datum bicond(const Datum& library, const Datum& a, const Datum& b);
/// -A v B
Datum material(const Datum& a, const Datum& b);
/// -A v A
Datum halts(const Datum& a);

// Recognizers. They accept exactly the encodings the constructors produce.
std::optional<std::pair<Datum, Datum>> match_conj(const Datum& x);
std::optional<std::pair<Datum, Datum>> match_disj(const Datum& x);
std::optional<Datum> match_strong_neg(const Datum& x);

struct TurnstileParts
{
    std::vector<Datum> hyps;
    Datum library;
    Datum goal;
};
std::optional<TurnstileParts> match_turnstile(const Datum& x);

struct Conditional
{
    Datum antecedent;
    Datum library;
    Datum consequent;
};
/// A turnstile with exactly one hypothesis.
std::optional<Conditional> match_implies(const Datum& x);

/// A => B under exactly `library`.
std::optional<std::pair<Datum, Datum>> match_implies_under(const Datum& x, const Datum& library);
/// A => F under exactly `library`; yields A.
std::optional<Datum> match_neg_under(const Datum& x, const Datum& library);
/// T => A under exactly `library`; yields A.
std::optional<Datum> match_prove_under(const Datum& x, const Datum& library);

enum class Truth : std::uint8_t
{
    True,
    DirectlyFalse,
    Unknown,
};

std::string_view to_string(Truth t) noexcept;

struct TruthVerdict
{
    Truth truth = Truth::Unknown;
    /// Runtime of the statement's process, or the fuel spent when Unknown.
    std::uint64_t units = 0;

    friend bool operator==(const TruthVerdict&, const TruthVerdict&) = default;
};

/// Runs the statement's process with the given fuel and compares its output.
TruthVerdict evaluate_truth(Machine& machine, const Datum& s, std::uint64_t fuel);

}  // namespace algolog
