// algolog: an executable kernel for type-free algorithmic logic
// Copyright 2026 The algolog Authors.
// Licensed under the Apache License, Version 2.0.

#include <algolog/statements.hpp>
#include <algolog/text.hpp>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <optional>
#include <vector>

namespace algolog
{
ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column)
{
}

namespace
{
enum class Tok
{
    Open,
    Close,
    OpenList,
    CloseList,
    Nat,
    Symbol,
    End,
};

struct Token
{
    Tok kind = Tok::End;
    std::string_view text;
    std::size_t line = 1;
    std::size_t column = 1;
};

std::string registry_listing()
{
    std::string out = "programs:";
    for (std::size_t i = 0; i < program_count; ++i)
        out += " " + std::string{program_name(static_cast<ProgramId>(i))};
    return out;
}

std::string rule_listing()
{
    std::string out = "rules:";
    for (std::size_t i = 0; i < rule_count; ++i)
        out += " " + std::string{rule_name(static_cast<RuleId>(i))};
    return out;
}

class Lexer
{
public:
    explicit Lexer(std::string_view text) : text_(text) { advance(); }

    const Token& peek() const noexcept { return current_; }

    Token next()
    {
        Token t = current_;
        advance();
        return t;
    }

private:
    void bump()
    {
        if (text_[pos_] == '\n')
        {
            ++line_;
            column_ = 1;
        }
        else
            ++column_;
        ++pos_;
    }

    void advance()
    {
        for (;;)
        {
            while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
                bump();
            if (pos_ < text_.size() && text_[pos_] == ';')
            {
                while (pos_ < text_.size() && text_[pos_] != '\n')
                    bump();
                continue;
            }
            break;
        }
        current_ = Token{Tok::End, {}, line_, column_};
        if (pos_ == text_.size())
            return;
        const std::size_t start = pos_;
        const char c = text_[pos_];
        const auto single = [&](Tok kind) {
            bump();
            current_.kind = kind;
            current_.text = text_.substr(start, 1);
        };
        switch (c)
        {
        case '(':
            return single(Tok::Open);
        case ')':
            return single(Tok::Close);
        case '[':
            return single(Tok::OpenList);
        case ']':
            return single(Tok::CloseList);
        default:
            break;
        }
        const auto word = [](char ch) {
            return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_';
        };
        if (!word(c))
            throw ParseError(std::string{"unexpected character '"} + c + "'", line_, column_);
        while (pos_ < text_.size() && word(text_[pos_]))
            bump();
        current_.text = text_.substr(start, pos_ - start);
        const bool digits = std::all_of(current_.text.begin(), current_.text.end(),
            [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); });
        current_.kind = digits ? Tok::Nat : Tok::Symbol;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t column_ = 1;
    Token current_;
};

class Parser
{
public:
    explicit Parser(std::string_view text) : lex_(text) {}

    Datum datum()
    {
        const Token t = lex_.next();
        switch (t.kind)
        {
        case Tok::Nat:
        {
            std::uint64_t n = 0;
            const auto [end, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), n);
            if (ec != std::errc{} || end != t.text.data() + t.text.size())
                throw error(t, "natural out of range: " + std::string{t.text});
            return Datum::nat(n);
        }
        case Tok::OpenList:
            return Datum::list(items_until(Tok::CloseList));
        case Tok::Symbol:
            if (t.text == "T")
                return true_statement();
            if (t.text == "F")
                return false_statement();
            throw error(t, "unknown symbol '" + std::string{t.text} + "'; expected T, F, a natural, "
                           "a list or a parenthesized form");
        case Tok::Open:
            return form(t);
        case Tok::End:
            throw error(t, "unexpected end of input");
        default:
            throw error(t, "unexpected '" + std::string{t.text} + "'");
        }
    }

    void expect_end()
    {
        if (lex_.peek().kind != Tok::End)
            throw error(lex_.peek(), "trailing input after the datum");
    }

    ProofScript script()
    {
        expect(Tok::Open, "'(' opening a script");
        keyword("script");
        ProofScript s;
        expect(Tok::Open, "'(hyps'");
        keyword("hyps");
        s.hypotheses = items_until(Tok::Close);
        expect(Tok::Open, "'(goal'");
        keyword("goal");
        s.goal = datum();
        expect(Tok::Close, "')' closing the goal");
        while (lex_.peek().kind == Tok::Open)
        {
            lex_.next();
            keyword("step");
            ProofStep step;
            step.rule_index = natural("rule index");
            step.resource = natural("resource");
            expect(Tok::Open, "'(premises'");
            keyword("premises");
            while (lex_.peek().kind == Tok::Nat)
                step.premises.push_back(natural("premise index"));
            expect(Tok::Close, "')' closing the premises");
            step.conclusion = datum();
            while (lex_.peek().kind == Tok::Open)
            {
                lex_.next();
                keyword("witness");
                step.witnesses.push_back(script());
                expect(Tok::Close, "')' closing the witness");
            }
            expect(Tok::Close, "')' closing the step");
            s.steps.push_back(std::move(step));
        }
        expect(Tok::Close, "')' closing the script");
        return s;
    }

private:
    static ParseError error(const Token& t, const std::string& message)
    {
        return ParseError(message, t.line, t.column);
    }

    Token expect(Tok kind, const char* what)
    {
        if (lex_.peek().kind != kind)
            throw error(lex_.peek(), std::string{"expected "} + what);
        return lex_.next();
    }

    void keyword(std::string_view word)
    {
        const Token t = lex_.next();
        if (t.kind != Tok::Symbol || t.text != word)
            throw error(t, "expected '" + std::string{word} + "'");
    }

    std::uint64_t natural(const char* what)
    {
        const Token t = expect(Tok::Nat, what);
        std::uint64_t n = 0;
        if (std::from_chars(t.text.data(), t.text.data() + t.text.size(), n).ec != std::errc{})
            throw error(t, std::string{what} + " out of range");
        return n;
    }

    std::vector<Datum> items_until(Tok close)
    {
        std::vector<Datum> items;
        while (lex_.peek().kind != close)
            items.push_back(datum());
        lex_.next();
        return items;
    }

    /// A datum that must be a statement; `at` locates the error.
    Datum statement(Token at)
    {
        Datum d = datum();
        if (!is_statement(d))
            throw error(at, "operand is not a statement");
        return d;
    }

    Datum form(const Token& open)
    {
        const Token head = expect(Tok::Symbol, "a form name after '('");
        const std::string_view name = head.text;
        Datum out;
        if (name == "alg")
        {
            const Token prog = expect(Tok::Symbol, "a program name");
            const auto p = program_from_name(prog.text);
            if (!p)
                throw error(prog, "unknown program '" + std::string{prog.text} + "'; " + registry_listing());
            return Datum::alg(*p, items_until(Tok::Close));
        }
        if (name == "lib")
        {
            std::vector<Datum> rules;
            while (lex_.peek().kind != Tok::Close)
            {
                const Token at = lex_.peek();
                if (at.kind == Tok::Symbol)
                {
                    lex_.next();
                    const auto r = rule_from_name(at.text);
                    if (!r)
                        throw error(at, "unknown rule '" + std::string{at.text} + "'; " + rule_listing());
                    if (capture_arity(rule_program(*r)) != 0)
                        throw error(at, "rule " + std::string{at.text} +
                                            " takes a capture; write it as (alg " +
                                            std::string{program_name(rule_program(*r))} + " ...)");
                    rules.push_back(rule_datum(*r));
                    continue;
                }
                Datum d = datum();
                if (!rule_of(d))
                    throw error(at, "library item is not a rule; " + rule_listing());
                rules.push_back(std::move(d));
            }
            lex_.next();
            if (rules.empty())
                throw error(open, "a library needs at least one rule");
            return make_library(rules);
        }
        if (name == "stmt")
        {
            const Token at = lex_.peek();
            Datum a = datum();
            if (!a.is_alg())
                throw error(at, "the head of a statement must be an algorithm");
            Datum u = datum();
            Datum v = datum();
            out = stmt(a, u, v);
        }
        else if (name == "and" || name == "or")
        {
            Datum a = statement(lex_.peek());
            Datum b = statement(lex_.peek());
            out = name == "and" ? conj(a, b) : disj(a, b);
        }
        else if (name == "sneg")
            out = strong_neg(statement(lex_.peek()));
        else if (name == "imp")
        {
            Datum a = statement(lex_.peek());
            Datum rho = datum();
            Datum b = statement(lex_.peek());
            out = implies(a, rho, b);
        }
        else if (name == "neg" || name == "prove")
        {
            Datum rho = datum();
            Datum a = statement(lex_.peek());
            out = name == "neg" ? neg(rho, a) : prove(rho, a);
        }
        else if (name == "turnstile")
        {
            const Token at = expect(Tok::OpenList, "'[' opening the hypotheses");
            std::vector<Datum> hyps = items_until(Tok::CloseList);
            for (const auto& h : hyps)
                if (!is_statement(h))
                    throw error(at, "a hypothesis is not a statement");
            Datum rho = datum();
            Datum b = statement(lex_.peek());
            out = turnstile(hyps, rho, b);
        }
        else
            throw error(head, "unknown form '" + std::string{name} +
                                  "'; expected alg, lib, stmt, and, or, sneg, imp, neg, prove or turnstile");
        expect(Tok::Close, "')' closing the form");
        return out;
    }

    Lexer lex_;
};

class Printer
{
public:
    explicit Printer(PrintMode mode) : sugar_(mode == PrintMode::Sugared) {}

    void datum(const Datum& d, std::string& out) const
    {
        if (sugar_ && sugared(d, out))
            return;
        switch (d.kind())
        {
        case Datum::Kind::Nat:
            out += std::to_string(d.nat_value());
            return;
        case Datum::Kind::List:
            out += '[';
            separated(d.items(), out);
            out += ']';
            return;
        case Datum::Kind::Alg:
            out += "(alg ";
            out += program_name(d.program());
            for (const auto& c : d.items())
            {
                out += ' ';
                datum(c, out);
            }
            out += ')';
            return;
        }
    }

    void script(const ProofScript& s, std::string& out, std::size_t indent) const
    {
        const std::string pad(indent, ' ');
        out += "(script\n" + pad + "  (hyps";
        for (const auto& h : s.hypotheses)
        {
            out += ' ';
            datum(h, out);
        }
        out += ")\n" + pad + "  (goal ";
        datum(s.goal, out);
        out += ')';
        for (const auto& step : s.steps)
        {
            out += '\n' + pad + "  (step " + std::to_string(step.rule_index) + ' ' +
                   std::to_string(step.resource) + " (premises";
            for (const auto p : step.premises)
                out += ' ' + std::to_string(p);
            out += ") ";
            datum(step.conclusion, out);
            for (const auto& w : step.witnesses)
            {
                out += '\n' + pad + "    (witness ";
                script(w, out, indent + 4);
                out += ')';
            }
            out += ')';
        }
        out += ')';
    }

private:
    void separated(std::span<const Datum> items, std::string& out) const
    {
        for (std::size_t i = 0; i < items.size(); ++i)
        {
            if (i != 0)
                out += ' ';
            datum(items[i], out);
        }
    }

    void form(std::string_view name, std::initializer_list<Datum> parts, std::string& out) const
    {
        out += '(';
        out += name;
        for (const auto& p : parts)
        {
            out += ' ';
            datum(p, out);
        }
        out += ')';
    }

    bool sugared(const Datum& d, std::string& out) const
    {
        if (d == true_statement())
            return out += 'T', true;
        if (d == false_statement())
            return out += 'F', true;
        if (const auto rules = library_rules(d); rules && make_library(*rules) == d)
        {
            out += "(lib";
            for (const auto& r : *rules)
            {
                out += ' ';
                const RuleId id = *rule_of(r);
                if (r.items().empty())
                    out += rule_name(id);
                else
                    datum(r, out);
            }
            out += ')';
            return true;
        }
        if (const auto c = match_implies(d))
        {
            if (c->consequent == false_statement() && neg(c->library, c->antecedent) == d)
                return form("neg", {c->library, c->antecedent}, out), true;
            if (c->antecedent == true_statement() && prove(c->library, c->consequent) == d)
                return form("prove", {c->library, c->consequent}, out), true;
            if (implies(c->antecedent, c->library, c->consequent) == d)
                return form("imp", {c->antecedent, c->library, c->consequent}, out), true;
        }
        if (const auto t = match_turnstile(d); t && turnstile(t->hyps, t->library, t->goal) == d)
        {
            out += "(turnstile [";
            separated(t->hyps, out);
            out += "] ";
            datum(t->library, out);
            out += ' ';
            datum(t->goal, out);
            out += ')';
            return true;
        }
        if (const auto ab = match_conj(d); ab && conj(ab->first, ab->second) == d)
            return form("and", {ab->first, ab->second}, out), true;
        if (const auto ab = match_disj(d); ab && disj(ab->first, ab->second) == d)
            return form("or", {ab->first, ab->second}, out), true;
        if (const auto a = match_strong_neg(d); a && strong_neg(*a) == d)
            return form("sneg", {*a}, out), true;
        if (is_statement(d))
            return form("stmt", {d[0], d[1], d[2]}, out), true;
        return false;
    }

    bool sugar_;
};
}  // namespace

Datum parse_datum(std::string_view text)
{
    Parser p{text};
    Datum d = p.datum();
    p.expect_end();
    return d;
}

std::string to_text(const Datum& d, PrintMode mode)
{
    std::string out;
    Printer{mode}.datum(d, out);
    return out;
}

ProofScript parse_script(std::string_view text)
{
    Parser p{text};
    ProofScript s = p.script();
    p.expect_end();
    return s;
}

std::string script_to_text(const ProofScript& script, PrintMode mode)
{
    std::string out;
    Printer{mode}.script(script, out, 0);
    return out;
}

}  // namespace algolog
