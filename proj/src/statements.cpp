// algolog: an executable kernel for type-free algorithmic logic
// Copyright 2026 The algolog Authors.
// Licensed under the Apache License, Version 2.0.

#include <algolog/machine.hpp>
#include <algolog/statements.hpp>

#include <stdexcept>
#include <string>

namespace algolog
{
namespace
{
void require_statement(const Datum& d, const char* what)
{
    if (!is_statement(d))
        throw std::invalid_argument(std::string{what} + ": operand is not a statement");
}

const Datum& one()
{
    static const Datum d = Datum::nat(1);
    return d;
}

const Datum& connective(ProgramId p)
{
    static const Datum and_alg = Datum::alg(ProgramId::And);
    static const Datum or_alg = Datum::alg(ProgramId::Or);
    static const Datum sneg_alg = Datum::alg(ProgramId::StrongNeg);
    static const Datum deduce_alg = Datum::alg(ProgramId::Deduce);
    switch (p)
    {
    case ProgramId::And:
        return and_alg;
    case ProgramId::Or:
        return or_alg;
    case ProgramId::StrongNeg:
        return sneg_alg;
    default:
        return deduce_alg;
    }
}

/// [Alg(p), input, 1] with a capture-free p.
bool has_head(const Datum& x, ProgramId p) noexcept
{
    return is_statement(x) && x[0].program() == p && x[0].items().empty() && x[2].is_nat() &&
           x[2].nat_value() == 1;
}

std::optional<std::pair<Datum, Datum>> match_pair(const Datum& x, ProgramId p)
{
    if (!has_head(x, p))
        return std::nullopt;
    const Datum& in = x[1];
    if (!in.is_list() || in.items().size() != 2 || !is_statement(in[0]) || !is_statement(in[1]))
        return std::nullopt;
    return std::pair{in[0], in[1]};
}
}  // namespace

const Datum& true_statement()
{
    static const Datum d = Datum::list({Datum::alg(ProgramId::Identity), Datum::nat(0), Datum::nat(0)});
    return d;
}

const Datum& false_statement()
{
    static const Datum d = Datum::list({Datum::alg(ProgramId::Identity), Datum::nat(0), Datum::nat(1)});
    return d;
}

Datum stmt(const Datum& alg, const Datum& input, const Datum& output)
{
    if (!alg.is_alg())
        throw std::invalid_argument("stmt: the head of a statement must be an Alg datum");
    return Datum::list({alg, input, output});
}

Datum conj(const Datum& a, const Datum& b)
{
    require_statement(a, "conj");
    require_statement(b, "conj");
    return Datum::list({connective(ProgramId::And), Datum::list({a, b}), one()});
}

Datum disj(const Datum& a, const Datum& b)
{
    require_statement(a, "disj");
    require_statement(b, "disj");
    return Datum::list({connective(ProgramId::Or), Datum::list({a, b}), one()});
}

Datum strong_neg(const Datum& a)
{
    require_statement(a, "strong_neg");
    return Datum::list({connective(ProgramId::StrongNeg), a, one()});
}

Datum conj_list(std::span<const Datum> items)
{
    if (items.empty())
        return true_statement();
    Datum acc = items[0];
    require_statement(acc, "conj_list");
    for (std::size_t i = 1; i < items.size(); ++i)
        acc = conj(acc, items[i]);
    return acc;
}

Datum turnstile(std::span<const Datum> hyps, const Datum& library, const Datum& goal)
{
    for (const auto& h : hyps)
        require_statement(h, "turnstile");
    require_statement(goal, "turnstile");
    return Datum::list({connective(ProgramId::Deduce),
        Datum::list({Datum::list(std::vector<Datum>(hyps.begin(), hyps.end())), library, goal}),
        one()});
}

Datum implies(const Datum& a, const Datum& library, const Datum& b)
{
    return turnstile(std::span<const Datum>(&a, 1), library, b);
}

Datum neg(const Datum& library, const Datum& a)
{
    return implies(a, library, false_statement());
}

Datum prove(const Datum& library, const Datum& a)
{
    return implies(true_statement(), library, a);
}

Datum bicond(const Datum& library, const Datum& a, const Datum& b)
{
    return conj(implies(a, library, b), implies(b, library, a));
}

Datum material(const Datum& a, const Datum& b)
{
    return disj(strong_neg(a), b);
}

Datum halts(const Datum& a)
{
    return disj(strong_neg(a), a);
}

std::optional<std::pair<Datum, Datum>> match_conj(const Datum& x)
{
    return match_pair(x, ProgramId::And);
}

std::optional<std::pair<Datum, Datum>> match_disj(const Datum& x)
{
    return match_pair(x, ProgramId::Or);
}

std::optional<Datum> match_strong_neg(const Datum& x)
{
    if (!has_head(x, ProgramId::StrongNeg) || !is_statement(x[1]))
        return std::nullopt;
    return x[1];
}

std::optional<TurnstileParts> match_turnstile(const Datum& x)
{
    if (!has_head(x, ProgramId::Deduce))
        return std::nullopt;
    const Datum& in = x[1];
    if (!in.is_list() || in.items().size() != 3 || !in[0].is_list() || !is_statement(in[2]))
        return std::nullopt;
    for (const auto& h : in[0].items())
        if (!is_statement(h))
            return std::nullopt;
    return TurnstileParts{{in[0].items().begin(), in[0].items().end()}, in[1], in[2]};
}

std::optional<Conditional> match_implies(const Datum& x)
{
    if (!has_head(x, ProgramId::Deduce))
        return std::nullopt;
    const Datum& in = x[1];
    if (!in.is_list() || in.items().size() != 3 || !in[0].is_list() ||
        in[0].items().size() != 1 || !is_statement(in[0][0]) || !is_statement(in[2]))
        return std::nullopt;
    return Conditional{in[0][0], in[1], in[2]};
}

std::optional<std::pair<Datum, Datum>> match_implies_under(const Datum& x, const Datum& library)
{
    auto c = match_implies(x);
    if (!c || !(c->library == library))
        return std::nullopt;
    return std::pair{c->antecedent, c->consequent};
}

std::optional<Datum> match_neg_under(const Datum& x, const Datum& library)
{
    auto c = match_implies_under(x, library);
    if (!c || !(c->second == false_statement()))
        return std::nullopt;
    return c->first;
}

std::optional<Datum> match_prove_under(const Datum& x, const Datum& library)
{
    auto c = match_implies_under(x, library);
    if (!c || !(c->first == true_statement()))
        return std::nullopt;
    return c->second;
}

std::string_view to_string(Truth t) noexcept
{
    switch (t)
    {
    case Truth::True:
        return "True";
    case Truth::DirectlyFalse:
        return "DirectlyFalse";
    case Truth::Unknown:
        break;
    }
    return "Unknown";
}

TruthVerdict evaluate_truth(Machine& machine, const Datum& s, std::uint64_t fuel)
{
    require_statement(s, "evaluate_truth");
    const RunResult r = machine.run(s[0], s[1], fuel);
    if (const auto* h = std::get_if<Halted>(&r))
        return {h->output == s[2] ? Truth::True : Truth::DirectlyFalse, h->runtime};
    return {Truth::Unknown, std::get<OutOfFuel>(r).consumed};
}

}  // namespace algolog
