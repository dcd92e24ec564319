// algolog: an executable kernel for type-free algorithmic logic
// Copyright 2026 The algolog Authors.
// Licensed under the Apache License, Version 2.0.

// Rule programs. Every rule maps [H, rho, m] to H followed by its new
// conclusions, deduplicated and in canonical order. Pattern rules cost
// 1 + |H| + |appended| units; enumerating rules also pay one unit per
// candidate and the full runtime of every process they run.

#include "bodies.hpp"

#include <algolog/statements.hpp>

#include <algorithm>
#include <array>
#include <string>
#include <unordered_map>
#include <unordered_set>

namespace algolog::detail
{
namespace
{
using DatumSet = std::unordered_set<Datum, DatumHash>;

struct RuleInput
{
    std::vector<Datum> hyps;
    std::vector<Datum> distinct;  // hyps without repeats, first occurrence order
    DatumSet present;
    Datum library;
    std::uint64_t m = 1;
};

bool parse_rule_input(const Datum& input, RuleInput& out)
{
    if (!input.is_list() || input.items().size() != 3)
        return false;
    const Datum& h = input[0];
    const Datum& m = input[2];
    if (!h.is_list() || !m.is_nat() || m.nat_value() == 0)
        return false;
    for (const auto& s : h.items())
    {
        if (!is_statement(s))
            return false;
        out.hyps.push_back(s);
        if (out.present.insert(s).second)
            out.distinct.push_back(s);
    }
    out.library = input[1];
    out.m = m.nat_value();
    return true;
}

class Appender
{
public:
    explicit Appender(const RuleInput& in) : seen_(in.present) {}

    void add(const Datum& x)
    {
        if (seen_.insert(x).second)
            added_.push_back(x);
    }
    std::size_t count() const noexcept { return added_.size(); }

    Datum finish(const std::vector<Datum>& hyps)
    {
        std::sort(added_.begin(), added_.end(), CanonicalLess{});
        std::vector<Datum> out = hyps;
        out.insert(out.end(), added_.begin(), added_.end());
        return Datum::list(std::move(out));
    }

private:
    DatumSet seen_;
    std::vector<Datum> added_;
};

const Datum& nat1()
{
    static const Datum d = Datum::nat(1);
    return d;
}

void check_cap(Context ctx, std::uint64_t& candidates, const char* rule)
{
    if (++candidates > ctx.machine->limits().enumeration_cap)
        throw ResourceError(std::string{rule} + ": enumeration cap of " +
                            std::to_string(ctx.machine->limits().enumeration_cap) +
                            " candidates exceeded");
}

// ---- pattern rules --------------------------------------------------------

using Pairs = std::vector<std::pair<Datum, Datum>>;

Pairs implications(const RuleInput& in, const Datum& library)
{
    Pairs out;
    for (const auto& x : in.distinct)
        if (auto c = match_implies_under(x, library))
            out.push_back(std::move(*c));
    return out;
}

void trans(const RuleInput& in, Appender& out)
{
    const Pairs imps = implications(in, in.library);
    std::unordered_map<Datum, std::vector<Datum>, DatumHash> by_antecedent;
    for (const auto& [a, b] : imps)
        by_antecedent[a].push_back(b);
    for (const auto& [a, b] : imps)
        if (auto it = by_antecedent.find(b); it != by_antecedent.end())
            for (const auto& c : it->second)
                out.add(implies(a, in.library, c));
}

void conj_rule(const RuleInput& in, Appender& out)
{
    for (const auto& a : in.distinct)
        for (const auto& b : in.distinct)
            if (a.size() + b.size() + 6 <= in.m)
                out.add(conj(a, b));
    for (const auto& x : in.distinct)
        if (auto p = match_conj(x))
        {
            out.add(p->first);
            out.add(p->second);
        }
}

void meta_conj(const RuleInput& in, Appender& out)
{
    const Pairs imps = implications(in, in.library);
    for (const auto& [a1, b] : imps)
        for (const auto& [a2, c] : imps)
            if (a1 == a2)
                out.add(implies(a1, in.library, conj(b, c)));
}

/// Conditionals of the shape (G ^ A) => C under the nominal library.
struct Guarded
{
    Datum g, a, c, whole;
};

std::vector<Guarded> guarded_conditionals(const RuleInput& in)
{
    std::vector<Guarded> out;
    for (const auto& x : in.distinct)
        if (auto imp = match_implies_under(x, in.library))
            if (auto ga = match_conj(imp->first))
                out.push_back({ga->first, ga->second, imp->second, x});
    return out;
}

void meta_disj(const RuleInput& in, Appender& out)
{
    const auto conds = guarded_conditionals(in);
    for (const auto& x : conds)
        for (const auto& y : conds)
            if (x.g == y.g && x.c == y.c)
                out.add(implies(conj(x.g, disj(x.a, y.a)), in.library, x.c));
}

void elim_case(const RuleInput& in, Appender& out)
{
    for (const auto& x : in.distinct)
        if (auto ab = match_disj(x); ab && in.present.contains(strong_neg(ab->first)))
            out.add(ab->second);
}

void double_neg(const RuleInput& in, Appender& out)
{
    for (const auto& a : in.distinct)
    {
        if (a.size() + 10 <= in.m)
            out.add(strong_neg(strong_neg(a)));
        if (auto inner = match_strong_neg(a))
            if (auto core = match_strong_neg(*inner))
                out.add(*core);
    }
}

void strong_demorgan(const RuleInput& in, Appender& out)
{
    for (const auto& x : in.distinct)
    {
        if (auto inner = match_strong_neg(x))
        {
            if (auto ab = match_disj(*inner))
                out.add(conj(strong_neg(ab->first), strong_neg(ab->second)));
            if (auto ab = match_conj(*inner))
                out.add(disj(strong_neg(ab->first), strong_neg(ab->second)));
        }
        if (auto ab = match_conj(x))
            if (auto a = match_strong_neg(ab->first))
                if (auto b = match_strong_neg(ab->second))
                    out.add(strong_neg(disj(*a, *b)));
        if (auto ab = match_disj(x))
            if (auto a = match_strong_neg(ab->first))
                if (auto b = match_strong_neg(ab->second))
                    out.add(strong_neg(conj(*a, *b)));
    }
}

/// [alpha, [alpha, rho], 1] for an Alg alpha, yielding alpha.
std::optional<Datum> match_self_application(const Datum& x, const Datum& library)
{
    if (!is_statement(x) || !(x[2] == nat1()))
        return std::nullopt;
    const Datum& in = x[1];
    if (!in.is_list() || in.items().size() != 2 || !(in[0] == x[0]) || !(in[1] == library))
        return std::nullopt;
    return x[0];
}

/// [CURRY, [alpha, rho], 1] with alpha an Alg, yielding alpha.
std::optional<Datum> match_curry(const Datum& x, const Datum& library)
{
    if (!is_statement(x) || x[0].program() != ProgramId::Curry || !x[0].items().empty() ||
        !(x[2] == nat1()))
        return std::nullopt;
    const Datum& in = x[1];
    if (!in.is_list() || in.items().size() != 2 || !in[0].is_alg() || !(in[1] == library))
        return std::nullopt;
    return in[0];
}

void beta_curry(const RuleInput& in, Appender& out)
{
    static const Datum curry = Datum::alg(ProgramId::Curry);
    for (const auto& x : in.distinct)
    {
        if (auto alpha = match_curry(x, in.library))
            out.add(neg(in.library, stmt(*alpha, x[1], nat1())));
        if (auto body = match_neg_under(x, in.library))
            if (auto alpha = match_self_application(*body, in.library))
                out.add(stmt(curry, (*body)[1], nat1()));
    }
}

void mp_fixed(const RuleInput& in, const Datum& fixed, Appender& out)
{
    for (const auto& [a, b] : implications(in, fixed))
        if (in.present.contains(a))
            out.add(b);
}

void deny(const RuleInput& in, const Datum& denied, Appender& out)
{
    if (in.present.contains(denied))
        out.add(false_statement());
}

void conj_contra(const RuleInput& in, Appender& out)
{
    for (const auto& x : in.distinct)
        if (auto ab = match_conj(x); ab && ab->second == strong_neg(ab->first))
            out.add(false_statement());
}

void r_intro(const RuleInput& in, Appender& out)
{
    static const Datum witness = Datum::alg(ProgramId::RWitness);
    const Datum r = stmt(witness, Datum::list({witness, in.library}), nat1());
    if (in.present.contains(r))
        out.add(implies(r, in.library, prove(in.library, false_statement())));
}

void paradox_pattern(RuleId rule, const RuleInput& in, Appender& out)
{
    const Datum& rho = in.library;
    const Datum& f = false_statement();
    switch (rule)
    {
    case RuleId::P1:
        for (const auto& a : in.distinct)
            if (in.present.contains(neg(rho, a)))
                out.add(f);
        break;
    case RuleId::P3:
        for (const auto& [a, b] : implications(in, rho))
            if (in.present.contains(a))
                out.add(b);
        break;
    case RuleId::P4:
    {
        const Pairs imps = implications(in, rho);
        for (const auto& [a, c] : imps)
            for (const auto& [b, c2] : imps)
                if (c == c2 && in.present.contains(disj(a, b)))
                    out.add(c);
        break;
    }
    case RuleId::P5:
        for (const auto& x : in.distinct)
            if (auto inner = match_neg_under(x, rho))
                if (auto a = match_neg_under(*inner, rho))
                    out.add(*a);
        break;
    case RuleId::P6:
        for (const auto& x : in.distinct)
            if (auto ab = match_disj(x); ab && in.present.contains(neg(rho, ab->first)))
                out.add(ab->second);
        break;
    case RuleId::P7:
        for (const auto& x : in.distinct)
            if (auto ab = match_disj(x))
                if (auto a = match_neg_under(ab->first, rho); a && in.present.contains(*a))
                    out.add(ab->second);
        break;
    case RuleId::P10:
        for (const auto& [a, b] : implications(in, rho))
            out.add(disj(neg(rho, a), b));
        break;
    case RuleId::P11:
        for (const auto& x : in.distinct)
            if (auto inner = match_neg_under(x, rho))
                if (auto ab = match_conj(*inner))
                    out.add(disj(neg(rho, ab->first), neg(rho, ab->second)));
        break;
    case RuleId::P12:
        for (const auto& a : in.distinct)
            out.add(neg(rho, neg(rho, a)));
        break;
    case RuleId::P13:
        for (const auto& x : in.distinct)
            if (auto a = match_prove_under(x, rho))
                out.add(*a);
        break;
    case RuleId::P14:
        for (const auto& x : in.distinct)
            if (auto inner = match_prove_under(x, rho))
                if (match_prove_under(*inner, rho))
                    out.add(*inner);
        break;
    default:
        break;
    }
}

void pattern_conclusions(RuleId rule, const Datum& alg, const RuleInput& in, Appender& out)
{
    switch (rule)
    {
    case RuleId::Trans:
        return trans(in, out);
    case RuleId::Conj:
        return conj_rule(in, out);
    case RuleId::MetaConj:
        return meta_conj(in, out);
    case RuleId::MetaDisj:
        return meta_disj(in, out);
    case RuleId::ElimCase:
        return elim_case(in, out);
    case RuleId::DoubleNeg:
        return double_neg(in, out);
    case RuleId::StrongDeMorgan:
        return strong_demorgan(in, out);
    case RuleId::BetaCurry:
        return beta_curry(in, out);
    case RuleId::MpFixed:
        return mp_fixed(in, alg[0], out);
    case RuleId::Deny:
        return deny(in, alg[0], out);
    case RuleId::ConjContra:
        return conj_contra(in, out);
    case RuleId::RIntro:
        return r_intro(in, out);
    default:
        return paradox_pattern(rule, in, out);
    }
}

Task<Datum> emit(RuleInput in, Appender out)
{
    const std::uint64_t units = 1 + in.hyps.size() + out.count();
    for (std::uint64_t u = 1; u < units; ++u)
        co_yield tick;
    co_return out.finish(in.hyps);
}

Task<Datum> pattern_body(RuleId rule, Datum alg, RuleInput in)
{
    Appender out(in);
    pattern_conclusions(rule, alg, in, out);
    auto tail = emit(std::move(in), std::move(out));
    ALGOLOG_DRIVE(tail);
    co_return std::move(tail.result());
}

// ---- rules that run processes or enumerate statements ---------------------

Task<Datum> univ_body(Context ctx, RuleInput in)
{
    Appender out(in);
    DataCatalog& catalog = ctx.machine->catalog();
    const std::uint64_t m = in.m;
    std::uint64_t candidates = 0;
    // At most one true statement [a, u, v] exists per process (a, u).
    for (std::uint64_t sa = 2; sa + 3 <= m; ++sa)
        for (const auto& a : catalog.algs(sa))
            for (std::uint64_t su = 1; sa + su + 2 <= m; ++su)
                for (const auto& u : catalog.exact(su))
                {
                    check_cap(ctx, candidates, "UNIV");
                    co_yield tick;
                    auto sub = run_subprocess(ctx, a, u, m);
                    ALGOLOG_DRIVE(sub);
                    const SubRun& r = sub.result();
                    if (r.halted && 1 + sa + su + r.output.size() <= m)
                        out.add(Datum::list({a, u, r.output}));
                }
    auto tail = emit(std::move(in), std::move(out));
    ALGOLOG_DRIVE(tail);
    co_return std::move(tail.result());
}

/// Statements of size <= budget from the universe, then those on H.
Generator<Datum> free_statements(DataCatalog& catalog, const RuleInput& in, std::uint64_t budget)
{
    if (budget >= 5)
        for (const auto& s : catalog.statements(budget))
            co_yield s;
    for (const auto& s : in.distinct)
        if (s.size() <= budget)
            co_yield s;
}

std::uint64_t budget_after(std::uint64_t m, std::uint64_t used) noexcept
{
    return m > used ? m - used : 0;
}

Task<Datum> meta_univ_body(Context ctx, RuleInput in)
{
    Appender out(in);
    std::uint64_t candidates = 0;
    for (const auto& b : in.distinct)
    {
        const std::uint64_t budget = budget_after(in.m, 7 + in.library.size() + b.size());
        for (const auto& a : free_statements(ctx.machine->catalog(), in, budget))
        {
            check_cap(ctx, candidates, "META_UNIV");
            co_yield tick;
            out.add(implies(a, in.library, b));
        }
    }
    auto tail = emit(std::move(in), std::move(out));
    ALGOLOG_DRIVE(tail);
    co_return std::move(tail.result());
}

Task<Datum> disj_intro_body(Context ctx, RuleInput in)
{
    Appender out(in);
    std::uint64_t candidates = 0;
    for (const auto& a : in.distinct)
    {
        const std::uint64_t budget = budget_after(in.m, 6 + a.size());
        for (const auto& b : free_statements(ctx.machine->catalog(), in, budget))
        {
            check_cap(ctx, candidates, "DISJ_INTRO");
            co_yield tick;
            out.add(disj(a, b));
            out.add(disj(b, a));
        }
    }
    auto tail = emit(std::move(in), std::move(out));
    ALGOLOG_DRIVE(tail);
    co_return std::move(tail.result());
}

Task<Datum> p2_body(Context ctx, RuleInput in)
{
    Appender out(in);
    std::uint64_t candidates = 0;
    bool contradiction = false;
    for (const auto& a : in.distinct)
        contradiction = contradiction || in.present.contains(neg(in.library, a));
    if (contradiction)
        for (const auto& b : free_statements(ctx.machine->catalog(), in, in.m))
        {
            check_cap(ctx, candidates, "P2");
            co_yield tick;
            out.add(b);
        }
    auto tail = emit(std::move(in), std::move(out));
    ALGOLOG_DRIVE(tail);
    co_return std::move(tail.result());
}

/// P8 adds A v ~A, P9 adds ~A v ~~A, for every A that fits in m.
Task<Datum> excluded_middle_body(Context ctx, RuleInput in, bool doubled)
{
    Appender out(in);
    std::uint64_t candidates = 0;
    const std::uint64_t rho = in.library.size();
    // size(~A) = |A| + |rho| + 12; the disjunction adds 6.
    const std::uint64_t fixed = doubled ? 3 * rho + 42 : rho + 18;
    const std::uint64_t budget = budget_after(in.m, fixed) / 2;
    for (const auto& a : free_statements(ctx.machine->catalog(), in, budget))
    {
        check_cap(ctx, candidates, doubled ? "P9" : "P8");
        co_yield tick;
        const Datum na = neg(in.library, a);
        const Datum x = doubled ? disj(na, neg(in.library, na)) : disj(a, na);
        if (x.size() <= in.m)
            out.add(x);
    }
    auto tail = emit(std::move(in), std::move(out));
    ALGOLOG_DRIVE(tail);
    co_return std::move(tail.result());
}

Task<Datum> d_elim_body(Context ctx, RuleInput in)
{
    Appender out(in);
    const auto conds = guarded_conditionals(in);
    // Runtime must be strictly below m.
    const std::uint64_t budget = in.m - 1;
    std::unordered_map<Datum, bool, DatumHash> verified;
    for (const auto& x : conds)
        for (const auto& y : conds)
        {
            if (!(x.g == y.g) || !(x.c == y.c) || !in.present.contains(x.g) ||
                !in.present.contains(disj(x.a, y.a)) || budget == 0)
                continue;
            bool both = true;
            const std::array<Datum, 2> conditionals{x.whole, y.whole};
            for (const auto& w : conditionals)
            {
                if (!verified.contains(w))
                {
                    auto sub = run_subprocess(ctx, w[0], w[1], budget);
                    ALGOLOG_DRIVE(sub);
                    verified[w] = sub.result().halted && sub.result().output == nat1();
                }
                both = both && verified[w];
            }
            if (both)
                out.add(x.c);
        }
    auto tail = emit(std::move(in), std::move(out));
    ALGOLOG_DRIVE(tail);
    co_return std::move(tail.result());
}
}  // namespace

Task<Datum> rule_body(Context ctx, RuleId rule, Datum alg, Datum input)
{
    RuleInput in;
    if (!parse_rule_input(input, in))
        return constant_body(std::move(input));
    switch (rule)
    {
    case RuleId::Univ:
        return univ_body(ctx, std::move(in));
    case RuleId::MetaUniv:
        return meta_univ_body(ctx, std::move(in));
    case RuleId::DisjIntro:
        return disj_intro_body(ctx, std::move(in));
    case RuleId::DElim:
        return d_elim_body(ctx, std::move(in));
    case RuleId::P2:
        return p2_body(ctx, std::move(in));
    case RuleId::P8:
        return excluded_middle_body(ctx, std::move(in), false);
    case RuleId::P9:
        return excluded_middle_body(ctx, std::move(in), true);
    default:
        return pattern_body(rule, std::move(alg), std::move(in));
    }
}

}  // namespace algolog::detail
