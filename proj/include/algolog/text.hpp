// algolog: an executable kernel for type-free algorithmic logic
// Copyright 2026 The algolog Authors.
// Licensed under the Apache License, Version 2.0.
#pragma once

#include <algolog/datum.hpp>
#include <algolog/deduction.hpp>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace algolog
{
/// Concrete syntax:
///   datum  := NAT | '[' datum* ']' | '(' 'alg' NAME datum* ')' | sugar
///   sugar  := 'T' | 'F' | '(stmt' a u v ')' | '(and' A B ')' | '(or' A B ')'
///           | '(sneg' A ')' | '(imp' A RHO B ')' | '(neg' RHO A ')'
///           | '(prove' RHO A ')' | '(turnstile' '[' G* ']' RHO B ')'
///           | '(lib' item+ ')'   where an item is a rule name or a rule datum
/// A ';' starts a comment that runs to the end of the line.
class ParseError : public std::runtime_error
{
public:
    ParseError(const std::string& message, std::size_t line, std::size_t column);
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

enum class PrintMode
{
    Sugared,
    Raw,
};

/// Exactly one datum; trailing input other than whitespace and comments is an error.
Datum parse_datum(std::string_view text);

/// Sugar is chosen only when rebuilding from the sugared parts gives back
/// the same datum, so parse_datum(to_text(d, mode)) == d in both modes.
/// Priority: T/F, lib, neg, prove, imp, turnstile, and/or/sneg, stmt.
std::string to_text(const Datum& d, PrintMode mode = PrintMode::Sugared);

/// (script (hyps X*) (goal X) (step K M (premises i*) X (witness SCRIPT)*)*)
ProofScript parse_script(std::string_view text);
std::string script_to_text(const ProofScript& script, PrintMode mode = PrintMode::Sugared);

}  // namespace algolog
