// algolog: an executable kernel for type-free algorithmic logic
// Copyright 2026 The algolog Authors.
// Licensed under the Apache License, Version 2.0.

// Derived laws as proof-script generators. Each encoding follows the closure
// argument for the law: the nested deductions it relies on become witnessed
// UNIV steps (for conditionals) and witnessed D_ELIM steps (for cases).
// A law stated as "if X then Y |- Z" is instantiated only where X is first
// established by a certified script; other instances are skipped.

#include <algolog/lawsuite.hpp>
#include <algolog/machine.hpp>
#include <algolog/text.hpp>

#include <algorithm>
#include <stdexcept>

namespace algolog
{
namespace
{
using Vars = std::span<const Datum>;
using Steps = std::function<void(ScriptBuilder&)>;
using Script = std::optional<ProofScript>;

const Datum& T()
{
    return true_statement();
}

const Datum& F()
{
    return false_statement();
}

Datum sneg(const Datum& a)
{
    return strong_neg(a);
}

/// |- x <=> y from derivations of y from [x] and of x from [y].
ProofScript equivalence(const LawKit& k, const Datum& x, const Datum& y, const Steps& there,
    const Steps& back)
{
    return k.derive({}, k.iff(x, y), [&](ScriptBuilder& b) {
        const Datum xy = b.conditional(x, y, there);
        const Datum yx = b.conditional(y, x, back);
        b.conj_intro(xy, yx);
    });
}

/// A proof of `goal` from [a] that already knows it.
ProofScript trivial(const Datum& a)
{
    return ProofScript{{a}, a, {}};
}

/// Lemma scripts over explicit hypotheses, so cases() can include them.
ProofScript lemma(const LawKit& k, std::vector<Datum> hyps, const Datum& goal, const Steps& steps)
{
    return k.derive(std::move(hyps), goal, steps);
}

// Recurring sub-derivations.

/// F => x by ex falso inside a witness.
Datum false_implies(ScriptBuilder& b, const Datum& x)
{
    return b.conditional(F(), x, [&](ScriptBuilder& w) { w.ex_falso(x); });
}

/// a => (c ^ a) from known a => c.
Datum keep_antecedent(ScriptBuilder& b, const Datum& ac)
{
    const auto parts = match_implies_under(ac, b.library());
    const Datum& a = parts->first;
    const Datum aa = b.univ(implies(a, b.library(), a));
    return b.meta_conj(ac, aa);
}

/// c from known a and -a v c.
Datum material_mp(ScriptBuilder& b, const Datum& a, const Datum& c)
{
    const std::vector<Datum> gamma{a};
    const Datum na = sneg(a);
    return b.cases(gamma, na, c, c,
        lemma(LawKit{b.machine(), b.library()}, {a, na}, c, [&](ScriptBuilder& w) { w.explode(a, c); }),
        ProofScript{{a, c}, c, {}});
}

std::vector<Law> build_catalog()
{
    std::vector<Law> laws;
    const auto add = [&](std::string name, std::string statement, std::size_t arity,
                         std::function<Script(const LawKit&, Vars)> build) {
        laws.push_back(Law{std::move(name), std::move(statement), arity, std::move(build)});
    };

    // Consequents lift through META_UNIV and TRANS.
    add("conditional_from_consequent", "A, A => C |- B => C", 3, [](const LawKit& k, Vars v) -> Script {
        const Datum &a = v[0], &b = v[1], &c = v[2];
        return k.derive({a, k.imp(a, c)}, k.imp(b, c), [&](ScriptBuilder& s) {
            const Datum ba = s.meta_univ(a, b);
            s.trans(ba, k.imp(a, c));
        });
    });
    add("provability_from_consequent", "A, A => C |- prove(C)", 2, [](const LawKit& k, Vars v) -> Script {
        const Datum &a = v[0], &c = v[1];
        return k.derive({a, k.imp(a, c)}, k.pr(c), [&](ScriptBuilder& s) {
            const Datum ta = s.meta_univ(a, T());
            s.trans(ta, k.imp(a, c));
        });
    });

    // Conjunction.
    add("conj_symmetry", "A ^ B |- B ^ A", 2, [](const LawKit& k, Vars v) -> Script {
        const Datum &a = v[0], &b = v[1];
        return k.derive({conj(a, b)}, conj(b, a), [&](ScriptBuilder& s) {
            s.conj_left(conj(a, b));
            s.conj_right(conj(a, b));
            s.conj_intro(b, a);
        });
    });
    add("conj_assoc_rightward", "(A ^ B) ^ C |- A ^ (B ^ C)", 3, [](const LawKit& k, Vars v) -> Script {
        const Datum &a = v[0], &b = v[1], &c = v[2];
        return k.derive({conj(conj(a, b), c)}, conj(a, conj(b, c)), [&](ScriptBuilder& s) {
            const Datum ab = s.conj_left(conj(conj(a, b), c));
            s.conj_right(conj(conj(a, b), c));
            s.conj_left(ab);
            s.conj_right(ab);
            s.conj_intro(b, c);
            s.conj_intro(a, conj(b, c));
        });
    });
    add("conj_assoc_leftward", "A ^ (B ^ C) |- (A ^ B) ^ C", 3, [](const LawKit& k, Vars v) -> Script {
        const Datum &a = v[0], &b = v[1], &c = v[2];
        return k.derive({conj(a, conj(b, c))}, conj(conj(a, b), c), [&](ScriptBuilder& s) {
            s.conj_left(conj(a, conj(b, c)));
            const Datum bc = s.conj_right(conj(a, conj(b, c)));
            s.conj_left(bc);
            s.conj_right(bc);
            s.conj_intro(a, b);
            s.conj_intro(conj(a, b), c);
        });
    });

    // Conditionals and conjunction.
    add("conditional_keeps_antecedent", "A => B |- A => B ^ A", 2, [](const LawKit& k, Vars v) -> Script {
        const Datum &a = v[0], &b = v[1];
        return k.derive({k.imp(a, b)}, k.imp(a, conj(b, a)),
            [&](ScriptBuilder& s) { keep_antecedent(s, k.imp(a, b)); });
    });
    add("conditional_chain_through_conjunction", "A => B, B ^ A => C |- A => C", 3,
        [](const LawKit& k, Vars v) -> Script {
            const Datum &a = v[0], &b = v[1], &c = v[2];
            return k.derive({k.imp(a, b), k.imp(conj(b, a), c)}, k.imp(a, c), [&](ScriptBuilder& s) {
                const Datum aba = keep_antecedent(s, k.imp(a, b));
                s.trans(aba, k.imp(conj(b, a), c));
            });
        });
    add("conditional_conjoin_left", "A => B |- C ^ A => C ^ B", 3, [](const LawKit& k, Vars v) -> Script {
        const Datum &a = v[0], &b = v[1], &c = v[2];
        const Datum ca = conj(c, a);
        return k.derive({k.imp(a, b)}, k.imp(ca, conj(c, b)), [&](ScriptBuilder& s) {
            const Datum to_a = s.conditional(ca, a, [&](ScriptBuilder& w) { w.conj_right(ca); });
            const Datum to_b = s.trans(to_a, k.imp(a, b));
            const Datum to_c = s.conditional(ca, c, [&](ScriptBuilder& w) { w.conj_left(ca); });
            s.meta_conj(to_c, to_b);
        });
    });
    add("conditional_conjoin_right", "A => B |- A ^ C => B ^ C", 3, [](const LawKit& k, Vars v) -> Script {
        const Datum &a = v[0], &b = v[1], &c = v[2];
        const Datum ac = conj(a, c);
        return k.derive({k.imp(a, b)}, k.imp(ac, conj(b, c)), [&](ScriptBuilder& s) {
            const Datum to_a = s.conditional(ac, a, [&](ScriptBuilder& w) { w.conj_left(ac); });
            const Datum to_b = s.trans(to_a, k.imp(a, b));
            const Datum to_c = s.conditional(ac, c, [&](ScriptBuilder& w) { w.conj_right(ac); });
            s.meta_conj(to_b, to_c);
        });
    });
    add("curried_conditional", "if B ^ A => C then |- B => (A => C)", 3,
        [](const LawKit& k, Vars v) -> Script {
            const Datum &a = v[0], &b = v[1], &c = v[2];
            const Datum ba = conj(b, a);
            const auto holds = k.establish({ba}, c);
            if (!holds)
                return std::nullopt;
            return k.derive({}, k.imp(b, k.imp(a, c)), [&](ScriptBuilder& s) {
                s.conditional(b, k.imp(a, c), [&](ScriptBuilder& w) {
                    const Datum bac = w.conditional(ba, c, *holds);
                    const Datum ab = w.meta_univ(b, a);
                    const Datum aba = keep_antecedent(w, ab);
                    w.trans(aba, bac);
                });
            });
        });
    add("deduction_theorem", "if G, A |- C then G |- A => C", 3, [](const LawKit& k, Vars v) -> Script {
        const Datum &g = v[0], &a = v[1], &c = v[2];
        const auto holds = k.establish({g, a}, c);
        if (!holds)
            return std::nullopt;
        const std::vector<Datum> gamma{g};
        return k.derive(gamma, k.imp(a, c), [&](ScriptBuilder& s) { s.deduction(gamma, a, c, *holds); });
    });
    add("conjunction_as_conditional", "A |- B => A ^ B", 2, [](const LawKit& k, Vars v) -> Script {
        const Datum &a = v[0], &b = v[1];
        const std::vector<Datum> gamma{a};
        const ProofScript pair = lemma(k, {a, b}, conj(a, b), [&](ScriptBuilder& w) { w.conj_intro(a, b); });
        return k.derive(gamma, k.imp(b, conj(a, b)),
            [&](ScriptBuilder& s) { s.deduction(gamma, b, conj(a, b), pair); });
    });
    add("conditional_precomposition", "A => B |- (B => C) => (A => C)", 3,
        [](const LawKit& k, Vars v) -> Script {
            const Datum &a = v[0], &b = v[1], &c = v[2];
            const std::vector<Datum> gamma{k.imp(a, b)};
            const ProofScript chain = lemma(k, {k.imp(a, b), k.imp(b, c)}, k.imp(a, c),
                [&](ScriptBuilder& w) { w.trans(k.imp(a, b), k.imp(b, c)); });
            return k.derive(gamma, k.imp(k.imp(b, c), k.imp(a, c)),
                [&](ScriptBuilder& s) { s.deduction(gamma, k.imp(b, c), k.imp(a, c), chain); });
        });
    add("conditional_postcomposition", "A => B |- (C => A) => (C => B)", 3,
        [](const LawKit& k, Vars v) -> Script {
            const Datum &a = v[0], &b = v[1], &c = v[2];
            const std::vector<Datum> gamma{k.imp(a, b)};
            const ProofScript chain = lemma(k, {k.imp(a, b), k.imp(c, a)}, k.imp(c, b),
                [&](ScriptBuilder& w) { w.trans(k.imp(c, a), k.imp(a, b)); });
            return k.derive(gamma, k.imp(k.imp(c, a), k.imp(c, b)),
                [&](ScriptBuilder& s) { s.deduction(gamma, k.imp(c, a), k.imp(c, b), chain); });
        });
    add("conditional_currying", "B ^ A => C |- B => (A => C)", 3, [](const LawKit& k, Vars v) -> Script {
        const Datum &a = v[0], &b = v[1], &c = v[2];
        const Datum bac = k.imp(conj(b, a), c);
        const std::vector<Datum> gamma{bac};
        const ProofScript inner = lemma(k, {bac, b}, k.imp(a, c), [&](ScriptBuilder& w) {
            const Datum ab = w.meta_univ(b, a);
            const Datum aba = keep_antecedent(w, ab);
            w.trans(aba, bac);
        });
        return k.derive(gamma, k.imp(b, k.imp(a, c)),
            [&](ScriptBuilder& s) { s.deduction(gamma, b, k.imp(a, c), inner); });
    });

    // Biconditional.
    add("bicond_reflexivity", "|- A <=> A", 1, [](const LawKit& k, Vars v) -> Script {
        const Datum& a = v[0];
        return k.derive({}, k.iff(a, a), [&](ScriptBuilder& s) {
            const Datum aa = s.univ(k.imp(a, a));
            s.conj_intro(aa, aa);
        });
    });
    add("bicond_symmetry", "A <=> B |- B <=> A", 2, [](const LawKit& k, Vars v) -> Script {
        const Datum &a = v[0], &b = v[1];
        return k.derive({k.iff(a, b)}, k.iff(b, a), [&](ScriptBuilder& s) {
            const Datum ab = s.conj_left(k.iff(a, b));
            const Datum ba = s.conj_right(k.iff(a, b));
            s.conj_intro(ba, ab);
        });
    });
    add("bicond_transitivity", "A <=> B, B <=> C |- A <=> C", 3, [](const LawKit& k, Vars v) -> Script {
        const Datum &a = v[0], &b = v[1], &c = v[2];
        return k.derive({k.iff(a, b), k.iff(b, c)}, k.iff(a, c), [&](ScriptBuilder& s) {
            const Datum ab = s.conj_left(k.iff(a, b));
            const Datum ba = s.conj_right(k.iff(a, b));
            const Datum bc = s.conj_left(k.iff(b, c));
            const Datum cb = s.conj_right(k.iff(b, c));
            const Datum ac = s.trans(ab, bc);
            const Datum ca = s.trans(cb, ba);
            s.conj_intro(ac, ca);
        });
    });
    add("conj_idempotence", "|- A <=> A ^ A", 1, [](const LawKit& k, Vars v) -> Script {
        const Datum& a = v[0];
        return equivalence(
            k, a, conj(a, a), [&](ScriptBuilder& w) { w.conj_intro(a, a); },
            [&](ScriptBuilder& w) { w.conj_left(conj(a, a)); });
    });
    add("conj_true_unit", "|- A <=> A ^ T", 1, [](const LawKit& k, Vars v) -> Script {
        const Datum& a = v[0];
        return equivalence(
            k, a, conj(a, T()),
            [&](ScriptBuilder& w) {
                w.univ(T());
                w.conj_intro(a, T());
            },
            [&](ScriptBuilder& w) { w.conj_left(conj(a, T())); });
    });
    add("conj_commutativity", "|- A ^ B <=> B ^ A", 2, [](const LawKit& k, Vars v) -> Script {
        const Datum &a = v[0], &b = v[1];
        const auto swap = [](const Datum& x, const Datum& y) {
            return [x, y](ScriptBuilder& w) {
                w.conj_left(conj(x, y));
                w.conj_right(conj(x, y));
                w.conj_intro(y, x);
            };
        };
        return equivalence(k, conj(a, b), conj(b, a), swap(a, b), swap(b, a));
    });
    add("conj_associativity", "|- A ^ (B ^ C) <=> (A ^ B) ^ C", 3, [](const LawKit& k, Vars v) -> Script {
        const Datum &a = v[0], &b = v[1], &c = v[2];
        const Datum right = conj(a, conj(b, c));
        const Datum left = conj(conj(a, b), c);
        return equivalence(
            k, right, left,
            [&](ScriptBuilder& w) {
                w.conj_left(right);
                const Datum bc = w.conj_right(right);
                w.conj_left(bc);
                w.conj_right(bc);
                w.conj_intro(a, b);
                w.conj_intro(conj(a, b), c);
            },
            [&](ScriptBuilder& w) {
                const Datum ab = w.conj_left(left);
                w.conj_right(left);
                w.conj_left(ab);
                w.conj_right(ab);
                w.conj_intro(b, c);
                w.conj_intro(a, conj(b, c));
            });
    });

    // Disjunction.
    add("guarded_case_merge", "if G ^ A => C and G ^ B => C then |- G ^ (A v B) => C", 4,
        [](const LawKit& k, Vars v) -> Script {
            const Datum &g = v[0], &a = v[1], &b = v[2], &c = v[3];
            const auto left = k.establish({conj(g, a)}, c);
            const auto right = left ? k.establish({conj(g, b)}, c) : std::nullopt;
            if (!left || !right)
                return std::nullopt;
            const Datum guarded = conj(g, disj(a, b));
            return k.derive({}, k.imp(guarded, c), [&](ScriptBuilder& s) {
                s.conditional(guarded, c, [&](ScriptBuilder& w) {
                    w.conj_left(guarded);
                    w.conj_right(guarded);
                    const std::vector<Datum> gamma{g};
                    w.cases(gamma, a, b, c, *left, *right);
                });
            });
        });
    add("proof_by_cases", "if G, A |- C and G, B |- C then G, A v B |- C", 4,
        [](const LawKit& k, Vars v) -> Script {
            const Datum &g = v[0], &a = v[1], &b = v[2], &c = v[3];
            const auto left = k.establish({g, a}, c);
            const auto right = left ? k.establish({g, b}, c) : std::nullopt;
            if (!left || !right)
                return std::nullopt;
            const std::vector<Datum> gamma{g};
            return k.derive({g, disj(a, b)}, c,
                [&](ScriptBuilder& s) { s.cases(gamma, a, b, c, *left, *right); });
        });
    add("disj_true_absorption", "|- A v T <=> T", 1, [](const LawKit& k, Vars v) -> Script {
        const Datum& a = v[0];
        return equivalence(
            k, disj(a, T()), T(), [&](ScriptBuilder& w) { w.univ(T()); },
            [&](ScriptBuilder& w) { w.disj_intro(a, T()); });
    });
    add("disj_idempotence", "|- A <=> A v A", 1, [](const LawKit& k, Vars v) -> Script {
        const Datum& a = v[0];
        return equivalence(
            k, a, disj(a, a), [&](ScriptBuilder& w) { w.disj_intro(a, a); },
            [&](ScriptBuilder& w) { w.cases({}, a, a, a, trivial(a), trivial(a)); });
    });
    add("disj_commutativity", "|- A v B <=> B v A", 2, [](const LawKit& k, Vars v) -> Script {
        const Datum &a = v[0], &b = v[1];
        const auto swap = [&k](const Datum& x, const Datum& y) {
            return [&k, x, y](ScriptBuilder& w) {
                const Datum goal = disj(y, x);
                w.cases({}, x, y, goal,
                    lemma(k, {x}, goal, [&](ScriptBuilder& u) { u.disj_intro(y, x); }),
                    lemma(k, {y}, goal, [&](ScriptBuilder& u) { u.disj_intro(y, x); }));
            };
        };
        return equivalence(k, disj(a, b), disj(b, a), swap(a, b), swap(b, a));
    });
    add("conj_disj_absorption", "|- A <=> A ^ (A v B)", 2, [](const LawKit& k, Vars v) -> Script {
        const Datum &a = v[0], &b = v[1];
        const Datum both = conj(a, disj(a, b));
        return equivalence(
            k, a, both,
            [&](ScriptBuilder& w) {
                w.disj_intro(a, b);
                w.conj_intro(a, disj(a, b));
            },
            [&](ScriptBuilder& w) { w.conj_left(both); });
    });
    add("disj_conj_absorption", "|- A <=> A v (A ^ B)", 2, [](const LawKit& k, Vars v) -> Script {
        const Datum &a = v[0], &b = v[1];
        const Datum ab = conj(a, b);
        return equivalence(
            k, a, disj(a, ab), [&](ScriptBuilder& w) { w.disj_intro(a, ab); },
            [&](ScriptBuilder& w) {
                w.cases({}, a, ab, a, trivial(a),
                    lemma(k, {ab}, a, [&](ScriptBuilder& u) { u.conj_left(ab); }));
            });
    });
    add("disj_associativity", "|- A v (B v C) <=> (A v B) v C", 3, [](const LawKit& k, Vars v) -> Script {
        const Datum &a = v[0], &b = v[1], &c = v[2];
        const Datum right = disj(a, disj(b, c));
        const Datum left = disj(disj(a, b), c);
        return equivalence(
            k, right, left,
            [&](ScriptBuilder& w) {
                const ProofScript from_a = lemma(k, {a}, left, [&](ScriptBuilder& u) {
                    u.disj_intro(a, b);
                    u.disj_intro(disj(a, b), c);
                });
                const ProofScript from_bc = lemma(k, {disj(b, c)}, left, [&](ScriptBuilder& u) {
                    u.cases({}, b, c, left,
                        lemma(k, {b}, left,
                            [&](ScriptBuilder& x) {
                                x.disj_intro(a, b);
                                x.disj_intro(disj(a, b), c);
                            }),
                        lemma(k, {c}, left, [&](ScriptBuilder& x) { x.disj_intro(disj(a, b), c); }));
                });
                w.cases({}, a, disj(b, c), left, from_a, from_bc);
            },
            [&](ScriptBuilder& w) {
                const ProofScript from_c = lemma(k, {c}, right, [&](ScriptBuilder& u) {
                    u.disj_intro(b, c);
                    u.disj_intro(a, disj(b, c));
                });
                const ProofScript from_ab = lemma(k, {disj(a, b)}, right, [&](ScriptBuilder& u) {
                    u.cases({}, a, b, right,
                        lemma(k, {a}, right, [&](ScriptBuilder& x) { x.disj_intro(a, disj(b, c)); }),
                        lemma(k, {b}, right,
                            [&](ScriptBuilder& x) {
                                x.disj_intro(b, c);
                                x.disj_intro(a, disj(b, c));
                            }));
                });
                w.cases({}, disj(a, b), c, right, from_ab, from_c);
            });
    });
    add("conj_distributes_over_disj", "|- A ^ (B v C) <=> (A ^ B) v (A ^ C)", 3,
        [](const LawKit& k, Vars v) -> Script {
            const Datum &a = v[0], &b = v[1], &c = v[2];
            const Datum lhs = conj(a, disj(b, c));
            const Datum rhs = disj(conj(a, b), conj(a, c));
            return equivalence(
                k, lhs, rhs,
                [&](ScriptBuilder& w) {
                    w.conj_left(lhs);
                    w.conj_right(lhs);
                    const std::vector<Datum> gamma{a};
                    w.cases(gamma, b, c, rhs,
                        lemma(k, {a, b}, rhs,
                            [&](ScriptBuilder& u) {
                                u.conj_intro(a, b);
                                u.disj_intro(conj(a, b), conj(a, c));
                            }),
                        lemma(k, {a, c}, rhs, [&](ScriptBuilder& u) {
                            u.conj_intro(a, c);
                            u.disj_intro(conj(a, b), conj(a, c));
                        }));
                },
                [&](ScriptBuilder& w) {
                    const auto side = [&](const Datum& x) {
                        return lemma(k, {conj(a, x)}, lhs, [&](ScriptBuilder& u) {
                            u.conj_left(conj(a, x));
                            u.conj_right(conj(a, x));
                            u.disj_intro(b, c);
                            u.conj_intro(a, disj(b, c));
                        });
                    };
                    w.cases({}, conj(a, b), conj(a, c), lhs, side(b), side(c));
                });
        });
    add("disj_distributes_over_conj", "|- A v (B ^ C) <=> (A v B) ^ (A v C)", 3,
        [](const LawKit& k, Vars v) -> Script {
            const Datum &a = v[0], &b = v[1], &c = v[2];
            const Datum lhs = disj(a, conj(b, c));
            const Datum rhs = conj(disj(a, b), disj(a, c));
            return equivalence(
                k, lhs, rhs,
                [&](ScriptBuilder& w) {
                    w.cases({}, a, conj(b, c), rhs,
                        lemma(k, {a}, rhs,
                            [&](ScriptBuilder& u) {
                                u.disj_intro(a, b);
                                u.disj_intro(a, c);
                                u.conj_intro(disj(a, b), disj(a, c));
                            }),
                        lemma(k, {conj(b, c)}, rhs, [&](ScriptBuilder& u) {
                            u.conj_left(conj(b, c));
                            u.conj_right(conj(b, c));
                            u.disj_intro(a, b);
                            u.disj_intro(a, c);
                            u.conj_intro(disj(a, b), disj(a, c));
                        }));
                },
                [&](ScriptBuilder& w) {
                    w.conj_left(rhs);
                    w.conj_right(rhs);
                    const std::vector<Datum> outer{disj(a, c)};
                    const std::vector<Datum> inner{b};
                    const ProofScript from_b = lemma(k, {disj(a, c), b}, lhs, [&](ScriptBuilder& u) {
                        u.cases(inner, a, c, lhs,
                            lemma(k, {b, a}, lhs, [&](ScriptBuilder& x) { x.disj_intro(a, conj(b, c)); }),
                            lemma(k, {b, c}, lhs, [&](ScriptBuilder& x) {
                                x.conj_intro(b, c);
                                x.disj_intro(a, conj(b, c));
                            }));
                    });
                    w.cases(outer, a, b, lhs,
                        lemma(k, {disj(a, c), a}, lhs,
                            [&](ScriptBuilder& u) { u.disj_intro(a, conj(b, c)); }),
                        from_b);
                });
        });
    add("meta_disjunction", "G ^ A => C, G ^ B => C |- G ^ (A v B) => C", 4,
        [](const LawKit& k, Vars v) -> Script {
            const Datum &g = v[0], &a = v[1], &b = v[2], &c = v[3];
            return k.derive({k.imp(conj(g, a), c), k.imp(conj(g, b), c)}, k.imp(conj(g, disj(a, b)), c),
                [&](ScriptBuilder& s) { s.meta_disj(k.imp(conj(g, a), c), k.imp(conj(g, b), c)); });
        });
    add("disjunction_of_conditionals", "A => C, B => C |- A v B => C", 3,
        [](const LawKit& k, Vars v) -> Script {
            const Datum &a = v[0], &b = v[1], &c = v[2];
            return k.derive({k.imp(a, c), k.imp(b, c)}, k.imp(disj(a, b), c),
                [&](ScriptBuilder& s) { s.disjoin_conditionals(a, b, c); });
        });
    add("disj_monotone_right", "A => B |- C v A => C v B", 3, [](const LawKit& k, Vars v) -> Script {
        const Datum &a = v[0], &b = v[1], &c = v[2];
        const Datum target = disj(c, b);
        return k.derive({k.imp(a, b)}, k.imp(disj(c, a), target), [&](ScriptBuilder& s) {
            const Datum bt = s.conditional(b, target, [&](ScriptBuilder& w) { w.disj_intro(c, b); });
            s.trans(k.imp(a, b), bt);
            s.conditional(c, target, [&](ScriptBuilder& w) { w.disj_intro(c, b); });
            s.disjoin_conditionals(c, a, target);
        });
    });
    add("disj_monotone_left", "A => B |- A v C => B v C", 3, [](const LawKit& k, Vars v) -> Script {
        const Datum &a = v[0], &b = v[1], &c = v[2];
        const Datum target = disj(b, c);
        return k.derive({k.imp(a, b)}, k.imp(disj(a, c), target), [&](ScriptBuilder& s) {
            const Datum bt = s.conditional(b, target, [&](ScriptBuilder& w) { w.disj_intro(b, c); });
            s.trans(k.imp(a, b), bt);
            s.conditional(c, target, [&](ScriptBuilder& w) { w.disj_intro(b, c); });
            s.disjoin_conditionals(a, c, target);
        });
    });

    // Negation, A => F.
    add("modus_tollens", "A => B, not B |- not A", 2, [](const LawKit& k, Vars v) -> Script {
        const Datum &a = v[0], &b = v[1];
        return k.derive({k.imp(a, b), k.no(b)}, k.no(a),
            [&](ScriptBuilder& s) { s.trans(k.imp(a, b), k.no(b)); });
    });
    add("contraposition", "A => B |- not B => not A", 2, [](const LawKit& k, Vars v) -> Script {
        const Datum &a = v[0], &b = v[1];
        const std::vector<Datum> gamma{k.imp(a, b)};
        const ProofScript tollens = lemma(k, {k.imp(a, b), k.no(b)}, k.no(a),
            [&](ScriptBuilder& w) { w.trans(k.imp(a, b), k.no(b)); });
        return k.derive(gamma, k.imp(k.no(b), k.no(a)),
            [&](ScriptBuilder& s) { s.deduction(gamma, k.no(b), k.no(a), tollens); });
    });
    add("negation_spreads", "A, not A |- not B", 2, [](const LawKit& k, Vars v) -> Script {
        const Datum &a = v[0], &b = v[1];
        return k.derive({a, k.no(a)}, k.no(b), [&](ScriptBuilder& s) {
            const Datum ba = s.meta_univ(a, b);
            s.trans(ba, k.no(a));
        });
    });
    add("negated_disjunction", "|- not (A v B) <=> not A ^ not B", 2, [](const LawKit& k, Vars v) -> Script {
        const Datum &a = v[0], &b = v[1];
        const Datum ab = disj(a, b);
        return equivalence(
            k, k.no(ab), conj(k.no(a), k.no(b)),
            [&](ScriptBuilder& w) {
                const Datum a_ab = w.conditional(a, ab, [&](ScriptBuilder& u) { u.disj_intro(a, b); });
                const Datum na = w.trans(a_ab, k.no(ab));
                const Datum b_ab = w.conditional(b, ab, [&](ScriptBuilder& u) { u.disj_intro(a, b); });
                const Datum nb = w.trans(b_ab, k.no(ab));
                w.conj_intro(na, nb);
            },
            [&](ScriptBuilder& w) {
                w.conj_left(conj(k.no(a), k.no(b)));
                w.conj_right(conj(k.no(a), k.no(b)));
                w.disjoin_conditionals(a, b, F());
            });
    });
    add("negated_conjunction_from_disjunction", "not A v not B |- not (A ^ B)", 2,
        [](const LawKit& k, Vars v) -> Script {
            const Datum &a = v[0], &b = v[1];
            const Datum ab = conj(a, b);
            const auto side = [&](const Datum& x, bool left) {
                return lemma(k, {k.no(x)}, k.no(ab), [&, left](ScriptBuilder& u) {
                    const Datum to_x = u.conditional(ab, x, [&, left](ScriptBuilder& w) {
                        if (left)
                            w.conj_left(ab);
                        else
                            w.conj_right(ab);
                    });
                    u.trans(to_x, k.no(x));
                });
            };
            return k.derive({disj(k.no(a), k.no(b))}, k.no(ab),
                [&](ScriptBuilder& s) { s.cases({}, k.no(a), k.no(b), k.no(ab), side(a, true), side(b, false)); });
        });
    add("negated_conjunction_with_conjunct", "not (A ^ B), B |- not A", 2,
        [](const LawKit& k, Vars v) -> Script {
            const Datum &a = v[0], &b = v[1];
            return k.derive({k.no(conj(a, b)), b}, k.no(a), [&](ScriptBuilder& s) {
                const std::vector<Datum> gamma{b};
                const Datum a_ba = s.deduction(gamma, a, conj(b, a),
                    lemma(k, {b, a}, conj(b, a), [&](ScriptBuilder& w) { w.conj_intro(b, a); }));
                const Datum swap = s.conditional(conj(b, a), conj(a, b), [&](ScriptBuilder& w) {
                    w.conj_left(conj(b, a));
                    w.conj_right(conj(b, a));
                    w.conj_intro(a, b);
                });
                const Datum a_ab = s.trans(a_ba, swap);
                s.trans(a_ab, k.no(conj(a, b)));
            });
        });
    add("negated_conjunction_split", "not (A ^ B), B v not B |- not A v not B", 2,
        [](const LawKit& k, Vars v) -> Script {
            const Datum &a = v[0], &b = v[1];
            const Datum nab = k.no(conj(a, b));
            const Datum goal = disj(k.no(a), k.no(b));
            const std::vector<Datum> gamma{nab};
            const ProofScript with_b = lemma(k, {nab, b}, goal, [&](ScriptBuilder& s) {
                const std::vector<Datum> inner{b};
                const Datum a_ba = s.deduction(inner, a, conj(b, a),
                    lemma(k, {b, a}, conj(b, a), [&](ScriptBuilder& w) { w.conj_intro(b, a); }));
                const Datum swap = s.conditional(conj(b, a), conj(a, b), [&](ScriptBuilder& w) {
                    w.conj_left(conj(b, a));
                    w.conj_right(conj(b, a));
                    w.conj_intro(a, b);
                });
                const Datum a_ab = s.trans(a_ba, swap);
                s.trans(a_ab, nab);
                s.disj_intro(k.no(a), k.no(b));
            });
            const ProofScript with_nb = lemma(
                k, {nab, k.no(b)}, goal, [&](ScriptBuilder& s) { s.disj_intro(k.no(a), k.no(b)); });
            return k.derive({nab, disj(b, k.no(b))}, goal,
                [&](ScriptBuilder& s) { s.cases(gamma, b, k.no(b), goal, with_b, with_nb); });
        });
    add("negated_disjunct_elimination", "not A v B, not B |- not A", 2, [](const LawKit& k, Vars v) -> Script {
        const Datum &a = v[0], &b = v[1];
        const std::vector<Datum> gamma{k.no(b)};
        const ProofScript from_b = lemma(k, {k.no(b), b}, k.no(a), [&](ScriptBuilder& s) {
            const Datum ab = s.meta_univ(b, a);
            s.trans(ab, k.no(b));
        });
        return k.derive({disj(k.no(a), b), k.no(b)}, k.no(a), [&](ScriptBuilder& s) {
            s.cases(gamma, k.no(a), b, k.no(a), ProofScript{{k.no(b), k.no(a)}, k.no(a), {}}, from_b);
        });
    });

    // Laws that use F => B, available through ELIM_CASE.
    add("refuted_implies_anything", "if not A then |- A => B", 2, [](const LawKit& k, Vars v) -> Script {
        const Datum &a = v[0], &b = v[1];
        const auto refuted = k.establish({a}, F());
        if (!refuted)
            return std::nullopt;
        return k.derive({}, k.imp(a, b), [&](ScriptBuilder& s) {
            s.conditional(a, b, [&](ScriptBuilder& w) {
                w.include(*refuted);
                w.ex_falso(b);
            });
        });
    });
    add("negation_implies_anything", "not A |- A => B", 2, [](const LawKit& k, Vars v) -> Script {
        const Datum &a = v[0], &b = v[1];
        return k.derive({k.no(a)}, k.imp(a, b), [&](ScriptBuilder& s) {
            const Datum fb = false_implies(s, b);
            s.trans(k.no(a), fb);
        });
    });
    add("contradiction_implies_conditionals", "A, not A |- B => C", 3, [](const LawKit& k, Vars v) -> Script {
        const Datum &a = v[0], &b = v[1], &c = v[2];
        return k.derive({a, k.no(a)}, k.imp(b, c), [&](ScriptBuilder& s) {
            const Datum fc = false_implies(s, c);
            const Datum ac = s.trans(k.no(a), fc);
            const Datum ba = s.meta_univ(a, b);
            s.trans(ba, ac);
        });
    });
    add("refuted_disjunct_elimination", "if not A then A v B |- B", 2, [](const LawKit& k, Vars v) -> Script {
        const Datum &a = v[0], &b = v[1];
        const auto refuted = k.establish({a}, F());
        if (!refuted)
            return std::nullopt;
        const ProofScript from_a = lemma(k, {a}, b, [&](ScriptBuilder& w) {
            w.include(*refuted);
            w.ex_falso(b);
        });
        return k.derive({disj(a, b)}, b, [&](ScriptBuilder& s) { s.cases({}, a, b, b, from_a, trivial(b)); });
    });
    add("negation_discards_disjunct", "not A |- A v B => B", 2, [](const LawKit& k, Vars v) -> Script {
        const Datum &a = v[0], &b = v[1];
        return k.derive({k.no(a)}, k.imp(disj(a, b), b), [&](ScriptBuilder& s) {
            const Datum fb = false_implies(s, b);
            s.trans(k.no(a), fb);
            s.univ(k.imp(b, b));
            s.disjoin_conditionals(a, b, b);
        });
    });
    add("negation_disjunction_to_conditional", "not A v B |- A => B", 2, [](const LawKit& k, Vars v) -> Script {
        const Datum &a = v[0], &b = v[1];
        const ProofScript from_na = lemma(k, {k.no(a)}, k.imp(a, b), [&](ScriptBuilder& s) {
            const Datum fb = false_implies(s, b);
            s.trans(k.no(a), fb);
        });
        const ProofScript from_b = lemma(k, {b}, k.imp(a, b), [&](ScriptBuilder& s) { s.meta_univ(b, a); });
        return k.derive({disj(k.no(a), b)}, k.imp(a, b),
            [&](ScriptBuilder& s) { s.cases({}, k.no(a), b, k.imp(a, b), from_na, from_b); });
    });

    // Strong negation.
    add("strong_explosion", "A, -A |- B", 2, [](const LawKit& k, Vars v) -> Script {
        const Datum &a = v[0], &b = v[1];
        return k.derive({a, sneg(a)}, b, [&](ScriptBuilder& s) { s.explode(a, b); });
    });
    add("ex_falso", "F |- B", 1, [](const LawKit& k, Vars v) -> Script {
        const Datum& b = v[0];
        return k.derive({F()}, b, [&](ScriptBuilder& s) { s.ex_falso(b); });
    });
    add("strong_negation_refutes", "-A |- not A", 1, [](const LawKit& k, Vars v) -> Script {
        const Datum& a = v[0];
        const std::vector<Datum> gamma{sneg(a)};
        const ProofScript clash =
            lemma(k, {sneg(a), a}, F(), [&](ScriptBuilder& w) { w.explode(a, F()); });
        return k.derive(gamma, k.no(a), [&](ScriptBuilder& s) { s.deduction(gamma, a, F(), clash); });
    });
    add("false_disj_unit", "|- F v A <=> A", 1, [](const LawKit& k, Vars v) -> Script {
        const Datum& a = v[0];
        return equivalence(
            k, disj(F(), a), a,
            [&](ScriptBuilder& w) {
                w.cases({}, F(), a, a, lemma(k, {F()}, a, [&](ScriptBuilder& u) { u.ex_falso(a); }),
                    trivial(a));
            },
            [&](ScriptBuilder& w) { w.disj_intro(F(), a); });
    });
    add("false_conj_zero", "|- F ^ A <=> F", 1, [](const LawKit& k, Vars v) -> Script {
        const Datum& a = v[0];
        return equivalence(
            k, conj(F(), a), F(), [&](ScriptBuilder& w) { w.conj_left(conj(F(), a)); },
            [&](ScriptBuilder& w) {
                w.ex_falso(a);
                w.conj_intro(F(), a);
            });
    });
    add("double_strong_negation", "|- A <=> --A", 1, [](const LawKit& k, Vars v) -> Script {
        const Datum& a = v[0];
        const Datum nna = sneg(sneg(a));
        return equivalence(
            k, a, nna, [&](ScriptBuilder& w) { w.double_neg(a, nna); },
            [&](ScriptBuilder& w) { w.double_neg(nna, a); });
    });
    add("strong_demorgan_disjunction", "|- -(A v B) <=> -A ^ -B", 2, [](const LawKit& k, Vars v) -> Script {
        const Datum &a = v[0], &b = v[1];
        const Datum x = sneg(disj(a, b));
        const Datum y = conj(sneg(a), sneg(b));
        return equivalence(
            k, x, y, [&](ScriptBuilder& w) { w.strong_demorgan(x, y); },
            [&](ScriptBuilder& w) { w.strong_demorgan(y, x); });
    });
    add("strong_demorgan_conjunction", "|- -(A ^ B) <=> -A v -B", 2, [](const LawKit& k, Vars v) -> Script {
        const Datum &a = v[0], &b = v[1];
        const Datum x = sneg(conj(a, b));
        const Datum y = disj(sneg(a), sneg(b));
        return equivalence(
            k, x, y, [&](ScriptBuilder& w) { w.strong_demorgan(x, y); },
            [&](ScriptBuilder& w) { w.strong_demorgan(y, x); });
    });

    // Material conditional, A -> B = -A v B, and halting, H(A) = -A v A.
    add("material_to_deductive", "A -> B |- A => B", 2, [](const LawKit& k, Vars v) -> Script {
        const Datum &a = v[0], &b = v[1];
        const std::vector<Datum> gamma{sneg(a)};
        const ProofScript from_na = lemma(k, {sneg(a)}, k.imp(a, b), [&](ScriptBuilder& s) {
            s.deduction(gamma, a, b, lemma(k, {sneg(a), a}, b, [&](ScriptBuilder& w) { w.explode(a, b); }));
        });
        const ProofScript from_b = lemma(k, {b}, k.imp(a, b), [&](ScriptBuilder& s) { s.meta_univ(b, a); });
        return k.derive({material(a, b)}, k.imp(a, b),
            [&](ScriptBuilder& s) { s.cases({}, sneg(a), b, k.imp(a, b), from_na, from_b); });
    });
    add("material_weakening", "A |- B -> A", 2, [](const LawKit& k, Vars v) -> Script {
        const Datum &a = v[0], &b = v[1];
        return k.derive({a}, material(b, a), [&](ScriptBuilder& s) { s.disj_intro(sneg(b), a); });
    });
    add("material_to_false", "|- A -> F <=> -A", 1, [](const LawKit& k, Vars v) -> Script {
        const Datum& a = v[0];
        return equivalence(
            k, material(a, F()), sneg(a),
            [&](ScriptBuilder& w) {
                w.cases({}, sneg(a), F(), sneg(a), trivial(sneg(a)),
                    lemma(k, {F()}, sneg(a), [&](ScriptBuilder& u) { u.ex_falso(sneg(a)); }));
            },
            [&](ScriptBuilder& w) { w.disj_intro(sneg(a), F()); });
    });
    add("material_contraposition", "|- A -> B <=> -B -> -A", 2, [](const LawKit& k, Vars v) -> Script {
        const Datum &a = v[0], &b = v[1];
        const Datum x = material(a, b);
        const Datum y = material(sneg(b), sneg(a));
        const Datum nnb = sneg(sneg(b));
        return equivalence(
            k, x, y,
            [&](ScriptBuilder& w) {
                w.cases({}, sneg(a), b, y,
                    lemma(k, {sneg(a)}, y, [&](ScriptBuilder& u) { u.disj_intro(nnb, sneg(a)); }),
                    lemma(k, {b}, y, [&](ScriptBuilder& u) {
                        u.double_neg(b, nnb);
                        u.disj_intro(nnb, sneg(a));
                    }));
            },
            [&](ScriptBuilder& w) {
                w.cases({}, nnb, sneg(a), x,
                    lemma(k, {nnb}, x,
                        [&](ScriptBuilder& u) {
                            u.double_neg(nnb, b);
                            u.disj_intro(sneg(a), b);
                        }),
                    lemma(k, {sneg(a)}, x, [&](ScriptBuilder& u) { u.disj_intro(sneg(a), b); }));
            });
    });
    add("material_transitivity", "A -> B, B -> C |- A -> C", 3, [](const LawKit& k, Vars v) -> Script {
        const Datum &a = v[0], &b = v[1], &c = v[2];
        const Datum goal = material(a, c);
        const Datum bc = material(b, c);
        const std::vector<Datum> gamma{bc};
        const std::vector<Datum> with_b{b};
        const ProofScript from_b = lemma(k, {bc, b}, goal, [&](ScriptBuilder& s) {
            s.cases(with_b, sneg(b), c, goal,
                lemma(k, {b, sneg(b)}, goal, [&](ScriptBuilder& w) { w.explode(b, goal); }),
                lemma(k, {b, c}, goal, [&](ScriptBuilder& w) { w.disj_intro(sneg(a), c); }));
        });
        return k.derive({material(a, b), bc}, goal, [&](ScriptBuilder& s) {
            s.cases(gamma, sneg(a), b, goal,
                lemma(k, {bc, sneg(a)}, goal, [&](ScriptBuilder& w) { w.disj_intro(sneg(a), c); }), from_b);
        });
    });
    add("material_modus_ponens", "A, A -> B |- B", 2, [](const LawKit& k, Vars v) -> Script {
        const Datum &a = v[0], &b = v[1];
        return k.derive({a, material(a, b)}, b, [&](ScriptBuilder& s) { material_mp(s, a, b); });
    });
    add("material_cases", "A v B, A -> C, B -> C |- C", 3, [](const LawKit& k, Vars v) -> Script {
        const Datum &a = v[0], &b = v[1], &c = v[2];
        const std::vector<Datum> gamma{material(a, c), material(b, c)};
        const auto side = [&](const Datum& x) {
            return lemma(k, {material(a, c), material(b, c), x}, c,
                [&](ScriptBuilder& s) { material_mp(s, x, c); });
        };
        return k.derive({disj(a, b), material(a, c), material(b, c)}, c,
            [&](ScriptBuilder& s) { s.cases(gamma, a, b, c, side(a), side(b)); });
    });
    add("material_detachment", "if G |- A -> B then G, A |- B", 3, [](const LawKit& k, Vars v) -> Script {
        const Datum &g = v[0], &a = v[1], &b = v[2];
        const auto holds = k.establish({g}, material(a, b));
        if (!holds)
            return std::nullopt;
        return k.derive({g, a}, b, [&](ScriptBuilder& s) {
            s.include(*holds);
            material_mp(s, a, b);
        });
    });
    add("halting_refutation", "if not A then H(A) |- -A", 1, [](const LawKit& k, Vars v) -> Script {
        const Datum& a = v[0];
        const auto refuted = k.establish({a}, F());
        if (!refuted)
            return std::nullopt;
        return k.derive({halts(a)}, sneg(a), [&](ScriptBuilder& s) {
            s.cases({}, sneg(a), a, sneg(a), trivial(sneg(a)), lemma(k, {a}, sneg(a), [&](ScriptBuilder& w) {
                w.include(*refuted);
                w.ex_falso(sneg(a));
            }));
        });
    });
    add("halting_negation", "not A |- H(A) => -A", 1, [](const LawKit& k, Vars v) -> Script {
        const Datum& a = v[0];
        return k.derive({k.no(a)}, k.imp(halts(a), sneg(a)), [&](ScriptBuilder& s) {
            const Datum fna = false_implies(s, sneg(a));
            s.trans(k.no(a), fna);
            s.univ(k.imp(sneg(a), sneg(a)));
            s.disjoin_conditionals(sneg(a), a, sneg(a));
        });
    });
    add("halting_deduction", "if G, A |- B then G, H(A) |- A -> B", 3, [](const LawKit& k, Vars v) -> Script {
        const Datum &g = v[0], &a = v[1], &b = v[2];
        const auto holds = k.establish({g, a}, b);
        if (!holds)
            return std::nullopt;
        const Datum goal = material(a, b);
        const std::vector<Datum> gamma{g};
        return k.derive({g, halts(a)}, goal, [&](ScriptBuilder& s) {
            s.cases(gamma, sneg(a), a, goal,
                lemma(k, {g, sneg(a)}, goal, [&](ScriptBuilder& w) { w.disj_intro(sneg(a), b); }),
                lemma(k, {g, a}, goal, [&](ScriptBuilder& w) {
                    w.include(*holds);
                    w.disj_intro(sneg(a), b);
                }));
        });
    });
    add("halting_conditional", "if A => B then H(A) |- A -> B", 2, [](const LawKit& k, Vars v) -> Script {
        const Datum &a = v[0], &b = v[1];
        const auto holds = k.establish({a}, b);
        if (!holds)
            return std::nullopt;
        const Datum goal = material(a, b);
        return k.derive({halts(a)}, goal, [&](ScriptBuilder& s) {
            s.cases({}, sneg(a), a, goal,
                lemma(k, {sneg(a)}, goal, [&](ScriptBuilder& w) { w.disj_intro(sneg(a), b); }),
                lemma(k, {a}, goal, [&](ScriptBuilder& w) {
                    w.include(*holds);
                    w.disj_intro(sneg(a), b);
                }));
        });
    });
    add("halting_lifts_conditional", "A => B |- H(A) => (A -> B)", 2, [](const LawKit& k, Vars v) -> Script {
        const Datum &a = v[0], &b = v[1];
        const Datum goal = material(a, b);
        return k.derive({k.imp(a, b)}, k.imp(halts(a), goal), [&](ScriptBuilder& s) {
            const Datum bg = s.conditional(b, goal, [&](ScriptBuilder& w) { w.disj_intro(sneg(a), b); });
            s.trans(k.imp(a, b), bg);
            s.conditional(sneg(a), goal, [&](ScriptBuilder& w) { w.disj_intro(sneg(a), b); });
            s.disjoin_conditionals(sneg(a), a, goal);
        });
    });
    add("halting_self_material", "H(A) |- A -> A", 1, [](const LawKit& k, Vars v) -> Script {
        const Datum& a = v[0];
        const Datum goal = material(a, a);
        return k.derive({halts(a)}, goal, [&](ScriptBuilder& s) {
            s.cases({}, sneg(a), a, goal,
                lemma(k, {sneg(a)}, goal, [&](ScriptBuilder& w) { w.disj_intro(sneg(a), a); }),
                lemma(k, {a}, goal, [&](ScriptBuilder& w) { w.disj_intro(sneg(a), a); }));
        });
    });
    add("halting_material_disjunction", "H(A) |- A -> A v B", 2, [](const LawKit& k, Vars v) -> Script {
        const Datum &a = v[0], &b = v[1];
        const Datum goal = material(a, disj(a, b));
        return k.derive({halts(a)}, goal, [&](ScriptBuilder& s) {
            s.cases({}, sneg(a), a, goal,
                lemma(k, {sneg(a)}, goal, [&](ScriptBuilder& w) { w.disj_intro(sneg(a), disj(a, b)); }),
                lemma(k, {a}, goal, [&](ScriptBuilder& w) {
                    w.disj_intro(a, b);
                    w.disj_intro(sneg(a), disj(a, b));
                }));
        });
    });
    add("halting_material_conjunction", "H(A), B |- A -> A ^ B", 2, [](const LawKit& k, Vars v) -> Script {
        const Datum &a = v[0], &b = v[1];
        const Datum goal = material(a, conj(a, b));
        const std::vector<Datum> gamma{b};
        return k.derive({halts(a), b}, goal, [&](ScriptBuilder& s) {
            s.cases(gamma, sneg(a), a, goal,
                lemma(k, {b, sneg(a)}, goal, [&](ScriptBuilder& w) { w.disj_intro(sneg(a), conj(a, b)); }),
                lemma(k, {b, a}, goal, [&](ScriptBuilder& w) {
                    w.conj_intro(a, b);
                    w.disj_intro(sneg(a), conj(a, b));
                }));
        });
    });
    return laws;
}

std::string describe(Vars v)
{
    static constexpr const char* names[] = {"A", "B", "C", "D"};
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i)
    {
        if (i != 0)
            out += ", ";
        out += std::string{names[i]} + " = " + to_text(v[i]);
    }
    return out;
}

std::string describe_failure(const CertifyVerdict& verdict)
{
    const auto& f = std::get<StepFailed>(verdict);
    return "step " + std::to_string(f.index) + ": " + f.reason;
}
}  // namespace

const std::vector<Law>& law_catalog()
{
    static const std::vector<Law> laws = build_catalog();
    return laws;
}

const std::vector<Datum>& law_pool()
{
    static const std::vector<Datum> pool = [] {
        const Datum loop = stmt(Datum::alg(ProgramId::Loop), Datum::nat(0), Datum::nat(0));
        return std::vector<Datum>{T(), F(), sneg(F()), loop, conj(T(), F()), disj(T(), loop)};
    }();
    return pool;
}

bool LawReport::passed() const noexcept
{
    return failed == 0 && std::all_of(laws.begin(), laws.end(), [](const LawResult& r) { return r.passed(); });
}

LawReport run_law_suite(const Universe& universe, std::uint64_t fuel, std::string_view filter)
{
    Machine machine{universe};
    const LawKit kit{machine, base_library()};
    const auto& pool = law_pool();
    LawReport report;
    for (const auto& law : law_catalog())
    {
        if (!filter.empty() && law.name.find(filter) == std::string::npos)
            continue;
        LawResult result;
        result.name = law.name;
        result.statement = law.statement;
        std::vector<std::size_t> pick(law.arity, 0);
        std::vector<Datum> vars(law.arity);
        for (;;)
        {
            for (std::size_t i = 0; i < law.arity; ++i)
                vars[i] = pool[pick[i]];
            ++result.instances;
            try
            {
                const auto script = law.build(kit, vars);
                if (!script)
                    ++result.skipped;
                else if (const auto verdict = certify(machine, *script, kit.library(), fuel); certified(verdict))
                    ++result.certified;
                else
                    result.failures.push_back(describe(vars) + ": " + describe_failure(verdict));
            }
            catch (const std::exception& e)
            {
                result.failures.push_back(describe(vars) + ": " + e.what());
            }
            std::size_t i = 0;
            while (i < law.arity && ++pick[i] == pool.size())
                pick[i++] = 0;
            if (i == law.arity)
                break;
        }
        report.instances += result.instances;
        report.certified += result.certified;
        report.skipped += result.skipped;
        report.failed += result.failures.size();
        report.laws.push_back(std::move(result));
    }
    return report;
}

}  // namespace algolog
