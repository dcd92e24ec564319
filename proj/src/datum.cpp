// algolog: an executable kernel for type-free algorithmic logic
// Copyright 2026 The algolog Authors.
// Licensed under the Apache License, Version 2.0.

#include <algolog/datum.hpp>

#include <algorithm>
#include <array>

namespace algolog
{
namespace
{
constexpr std::size_t mix(std::size_t h, std::size_t v) noexcept
{
    return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

constexpr std::size_t small_nat_count = 64;
}  // namespace

Datum Datum::make(Kind kind, ProgramId prog, std::uint64_t nat, std::vector<Datum> children)
{
    auto node = std::make_shared<Node>();
    node->kind = kind;
    node->prog = prog;
    node->nat = nat;
    std::size_t h = mix(static_cast<std::size_t>(kind), nat);
    std::uint64_t size = 0;
    switch (kind)
    {
    case Kind::Nat:
        size = nat + 1;
        break;
    case Kind::List:
        size = 1;
        break;
    case Kind::Alg:
        size = 2;
        h = mix(h, registry_index(prog));
        break;
    }
    for (const auto& c : children)
    {
        size += c.size();
        h = mix(h, c.hash());
    }
    node->size = size;
    node->hash = mix(h, size);
    node->children = std::move(children);
    return Datum{std::move(node)};
}

Datum::Datum() : Datum(nat(0)) {}

Datum Datum::nat(std::uint64_t n)
{
    static const auto small = [] {
        std::array<std::shared_ptr<const Node>, small_nat_count> a;
        for (std::size_t i = 0; i < a.size(); ++i)
            a[i] = make(Kind::Nat, ProgramId::Identity, i, {}).node_;
        return a;
    }();
    if (n < small_nat_count)
        return Datum{small[n]};
    return make(Kind::Nat, ProgramId::Identity, n, {});
}

Datum Datum::list(std::vector<Datum> items)
{
    return make(Kind::List, ProgramId::Identity, 0, std::move(items));
}

Datum Datum::alg(ProgramId prog, std::vector<Datum> captures)
{
    return make(Kind::Alg, prog, 0, std::move(captures));
}

bool operator==(const Datum& a, const Datum& b) noexcept
{
    if (a.node_ == b.node_)
        return true;
    const auto& x = *a.node_;
    const auto& y = *b.node_;
    if (x.hash != y.hash || x.size != y.size || x.kind != y.kind || x.nat != y.nat ||
        x.prog != y.prog || x.children.size() != y.children.size())
        return false;
    return std::equal(x.children.begin(), x.children.end(), y.children.begin());
}

std::strong_ordering canonical_compare(const Datum& a, const Datum& b) noexcept
{
    if (a.same_node(b))
        return std::strong_ordering::equal;
    if (const auto c = a.size() <=> b.size(); c != 0)
        return c;
    if (const auto c = a.kind() <=> b.kind(); c != 0)
        return c;
    switch (a.kind())
    {
    case Datum::Kind::Nat:
        return a.nat_value() <=> b.nat_value();
    case Datum::Kind::Alg:
        if (const auto c = registry_index(a.program()) <=> registry_index(b.program()); c != 0)
            return c;
        [[fallthrough]];
    case Datum::Kind::List:
        break;
    }
    const auto xs = a.items();
    const auto ys = b.items();
    const auto n = std::min(xs.size(), ys.size());
    for (std::size_t i = 0; i < n; ++i)
        if (const auto c = canonical_compare(xs[i], ys[i]); c != 0)
            return c;
    return xs.size() <=> ys.size();
}

bool is_statement(const Datum& d) noexcept
{
    return d.is_list() && d.items().size() == 3 && d[0].is_alg();
}

Universe::Universe(std::vector<ProgramId> programs) : programs_(std::move(programs))
{
    std::sort(programs_.begin(), programs_.end());
    programs_.erase(std::unique(programs_.begin(), programs_.end()), programs_.end());
}

Universe Universe::full()
{
    std::vector<ProgramId> all;
    all.reserve(program_count);
    for (std::size_t i = 0; i < program_count; ++i)
        all.push_back(static_cast<ProgramId>(i));
    return Universe{std::move(all)};
}

Universe Universe::reduced()
{
    return Universe{{ProgramId::Identity, ProgramId::Loop, ProgramId::And, ProgramId::Or,
        ProgramId::StrongNeg}};
}

bool Universe::contains(ProgramId p) const noexcept
{
    return std::binary_search(programs_.begin(), programs_.end(), p);
}

bool Universe::admits(const Datum& d) const noexcept
{
    if (d.is_alg() && !contains(d.program()))
        return false;
    return std::all_of(
        d.items().begin(), d.items().end(), [this](const Datum& c) { return admits(c); });
}

}  // namespace algolog
