// algolog: an executable kernel for type-free algorithmic logic
// Copyright 2026 The algolog Authors.
// Licensed under the Apache License, Version 2.0.

// Command-line surface. Every command fills one Report; the text and JSON
// renderings are produced from it, so both carry the same verdicts.
// Exit codes: 0 success, 1 falsified expectation, 2 resource exhausted,
// 64 malformed input.

#include <algolog/deduction.hpp>
#include <algolog/lawsuite.hpp>
#include <algolog/machine.hpp>
#include <algolog/statements.hpp>
#include <algolog/text.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace
{
using namespace algolog;
using nlohmann::json;

constexpr int exit_ok = 0;
constexpr int exit_falsified = 1;
constexpr int exit_resource = 2;
constexpr int exit_parse = 64;

struct Options
{
    std::string format = "text";
    std::optional<std::uint64_t> fuel;
    bool trace = false;
    bool raw = false;
    std::string universe = "full";
};

struct Report
{
    std::string command;
    json inputs = json::object();
    std::vector<std::string> verdicts;
    json stages = json::array();
    std::vector<std::uint64_t> runtimes;
    std::uint64_t fuel = 0;
    std::vector<std::string> details;
    int code = exit_ok;
};

class UsageError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

Universe parse_universe(const std::string& spec)
{
    if (spec == "full")
        return Universe::full();
    if (spec == "reduced")
        return Universe::reduced();
    std::vector<ProgramId> programs;
    std::stringstream in{spec};
    for (std::string name; std::getline(in, name, ',');)
    {
        const auto p = program_from_name(name);
        if (!p)
        {
            std::string valid;
            for (std::size_t i = 0; i < program_count; ++i)
                valid += " " + std::string{program_name(static_cast<ProgramId>(i))};
            throw UsageError("unknown program '" + name + "' in --universe; valid: full, reduced or" + valid);
        }
        programs.push_back(*p);
    }
    return Universe{programs};
}

std::string show(const Datum& d, const Options& o)
{
    return to_text(d, o.raw ? PrintMode::Raw : PrintMode::Sugared);
}

std::vector<Datum> parse_gamma(const std::string& text)
{
    const Datum g = parse_datum(text);
    if (!g.is_list())
        throw UsageError("the hypotheses must be a list [G1 G2 ...]");
    return {g.items().begin(), g.items().end()};
}

std::string read_file(const std::string& path)
{
    std::ifstream in{path};
    if (!in)
        throw UsageError("cannot read " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string truth_label(const TruthVerdict& v)
{
    return std::string{to_string(v.truth)};
}

void emit(const Report& r, const Options& o)
{
    if (o.format == "json")
    {
        json doc{{"command", r.command}, {"inputs", r.inputs}, {"verdicts", r.verdicts},
            {"stages", r.stages}, {"runtimes", r.runtimes}, {"fuel", r.fuel}, {"details", r.details}};
        std::cout << doc.dump(2) << '\n';
        return;
    }
    for (const auto& v : r.verdicts)
        std::cout << v << '\n';
    for (const auto& d : r.details)
        std::cout << d << '\n';
    for (const auto& s : r.stages)
        std::cout << "  " << (s.is_string() ? s.get<std::string>() : s.dump()) << '\n';
    if (!r.runtimes.empty())
    {
        std::cout << "runtimes:";
        for (const auto t : r.runtimes)
            std::cout << ' ' << t;
        std::cout << '\n';
    }
    if (r.fuel != 0)
        std::cout << "fuel: " << r.fuel << '\n';
}

Report cmd_eval(const Options& o, const std::string& alg_text, const std::string& input_text)
{
    Report r{"eval"};
    r.inputs = {{"alg", alg_text}, {"input", input_text}};
    r.fuel = o.fuel.value_or(100'000);
    const Datum alg = parse_datum(alg_text);
    if (!alg.is_alg())
        throw UsageError("eval: the first argument must be an algorithm (alg NAME ...)");
    Machine machine{parse_universe(o.universe)};
    const RunResult res = machine.run(alg, parse_datum(input_text), r.fuel);
    if (const auto* h = std::get_if<Halted>(&res))
    {
        r.verdicts.push_back("Halted");
        r.details.push_back("output: " + show(h->output, o));
        r.runtimes.push_back(h->runtime);
    }
    else
    {
        r.verdicts.push_back("OutOfFuel");
        r.runtimes.push_back(std::get<OutOfFuel>(res).consumed);
        r.code = exit_resource;
    }
    return r;
}

Report cmd_truth(const Options& o, const std::string& text)
{
    Report r{"truth"};
    r.inputs = {{"statement", text}};
    r.fuel = o.fuel.value_or(100'000);
    const Datum s = parse_datum(text);
    if (!is_statement(s))
        throw UsageError("truth: the argument is not a statement [alg input output]");
    Machine machine{parse_universe(o.universe)};
    const TruthVerdict v = evaluate_truth(machine, s, r.fuel);
    r.verdicts.push_back(truth_label(v));
    r.runtimes.push_back(v.units);
    r.code = v.truth == Truth::True ? exit_ok : v.truth == Truth::DirectlyFalse ? exit_falsified : exit_resource;
    return r;
}

json stage_entry(const StageEvent& e, const Options& o)
{
    const auto rule = e.rule ? rule_of(*e.rule) : std::nullopt;
    json entry{{"stage", e.stage}, {"rule_index", e.rule_index}, {"resource", e.resource},
        {"rule", rule ? std::string{rule_name(*rule)} : e.rule ? show(*e.rule, o) : "none"},
        {"appended", e.appended}};
    if (o.trace && e.items != nullptr)
    {
        json added = json::array();
        for (std::size_t i = e.items->size() - e.appended; i < e.items->size(); ++i)
            added.push_back(show((*e.items)[i], o));
        entry["added"] = added;
    }
    return entry;
}

Report cmd_deduce(const Options& o, const std::string& gamma_text, const std::string& lib_text,
    const std::string& goal_text)
{
    Report r{"deduce"};
    r.inputs = {{"gamma", gamma_text}, {"library", lib_text}, {"goal", goal_text}, {"universe", o.universe}};
    r.fuel = o.fuel.value_or(1'000'000);
    const auto gamma = parse_gamma(gamma_text);
    const Datum lib = parse_datum(lib_text);
    const Datum goal = parse_datum(goal_text);
    if (!is_library(lib))
        throw UsageError("deduce: the second argument is not a library (lib RULE ...)");
    Machine machine{parse_universe(o.universe)};
    std::function<void(const StageEvent&)> observer;
    if (o.trace)
        observer = [&](const StageEvent& e) { r.stages.push_back(stage_entry(e, o)); };
    const DeduceVerdict v = deduce_faithful(machine, gamma, lib, goal, r.fuel, observer);
    if (const auto* p = std::get_if<ProvedAtStage>(&v))
    {
        r.verdicts.push_back("ProvedAtStage " + std::to_string(p->stage));
        r.runtimes.push_back(p->runtime);
    }
    else
    {
        const auto& f = std::get<FuelExhausted>(v);
        r.verdicts.push_back("FuelExhausted after " + std::to_string(f.stages_completed) + " stages");
        r.runtimes.push_back(f.consumed);
        r.code = exit_resource;
    }
    return r;
}

Report cmd_closure(const Options& o, const std::string& gamma_text, const std::string& lib_text,
    std::uint64_t stages)
{
    Report r{"closure"};
    r.inputs = {{"gamma", gamma_text}, {"library", lib_text}, {"stages", stages}, {"universe", o.universe}};
    r.fuel = o.fuel.value_or(1'000'000);
    const auto gamma = parse_gamma(gamma_text);
    const Datum lib = parse_datum(lib_text);
    if (!is_library(lib))
        throw UsageError("closure: the second argument is not a library (lib RULE ...)");
    Machine machine{parse_universe(o.universe)};
    const ClosureRun run = closure_stages(machine, gamma, lib, stages, r.fuel);
    for (std::size_t i = 0; i < run.stages.size(); ++i)
    {
        json items = json::array();
        for (const auto& x : run.stages[i])
            items.push_back(show(x, o));
        if (o.format == "json")
            r.stages.push_back({{"stage", i}, {"items", items}});
        else
        {
            std::string line = "H" + std::to_string(i) + ":";
            for (const auto& x : items)
                line += " " + x.get<std::string>();
            r.stages.push_back(line);
        }
    }
    r.runtimes.push_back(run.consumed);
    r.verdicts.push_back(run.fuel_exhausted ? "FuelExhausted after " + std::to_string(run.stages.size()) + " stages"
                                            : "Completed " + std::to_string(run.stages.size()) + " stages");
    r.code = run.fuel_exhausted ? exit_resource : exit_ok;
    return r;
}

Report cmd_certify(const Options& o, const std::string& path, const std::string& lib_text)
{
    Report r{"certify"};
    r.inputs = {{"script", path}, {"library", lib_text}, {"universe", o.universe}};
    r.fuel = o.fuel.value_or(1'000'000);
    const ProofScript script = parse_script(read_file(path));
    const Datum lib = parse_datum(lib_text);
    Machine machine{parse_universe(o.universe)};
    const CertifyVerdict v = certify(machine, script, lib, r.fuel);
    if (certified(v))
        r.verdicts.push_back("Certified");
    else
    {
        const auto& f = std::get<StepFailed>(v);
        r.verdicts.push_back("StepFailed " + std::to_string(f.index) + ": " + f.reason);
        r.code = f.reason.find("fuel") != std::string::npos ? exit_resource : exit_falsified;
    }
    return r;
}

Report cmd_laws(const Options& o, const std::string& filter)
{
    Report r{"laws"};
    r.inputs = {{"filter", filter}, {"universe", o.universe}};
    r.fuel = o.fuel.value_or(1'000'000);
    const LawReport report = run_law_suite(parse_universe(o.universe), r.fuel, filter);
    for (const auto& law : report.laws)
    {
        std::string line = (law.passed() ? "PASS " : "FAIL ") + law.name + "  [" + law.statement + "]  " +
                           std::to_string(law.certified) + " certified, " + std::to_string(law.skipped) +
                           " skipped";
        r.details.push_back(line);
        for (const auto& f : law.failures)
            r.details.push_back("    " + f);
    }
    r.verdicts.push_back(std::string{report.passed() ? "Passed" : "Failed"} + ": " +
                         std::to_string(report.laws.size()) + " laws, " + std::to_string(report.certified) +
                         " certified, " + std::to_string(report.skipped) + " skipped, " +
                         std::to_string(report.failed) + " failed");
    r.code = report.passed() ? exit_ok : exit_falsified;
    return r;
}

Report cmd_paradox(const Options& o, const std::string& name)
{
    Report r{"paradox"};
    r.inputs = {{"rule", name}};
    const auto rule = rule_from_name(name);
    if (!rule || *rule < RuleId::P1)
        throw UsageError("paradox: expected one of P1 .. P14, got '" + name + "'");
    if (*rule == RuleId::P1 || *rule == RuleId::P3 || *rule == RuleId::P6)
    {
        r.fuel = o.fuel.value_or(2'000'000'000);
        const ParadoxRecord rec = paradox_demo(*rule, r.fuel);
        r.details.push_back("library: " + show(rec.library, o));
        r.details.push_back("Q: " + show(rec.q, o));
        r.verdicts.push_back("Q " + truth_label(rec.q_truth));
        r.verdicts.push_back("not Q " + truth_label(rec.neg_q_truth));
        r.runtimes = {rec.q_truth.units, rec.neg_q_truth.units};
        if (const auto* p = std::get_if<ProvedAtStage>(&rec.derivation))
        {
            r.verdicts.push_back("F from [Q] ProvedAtStage " + std::to_string(p->stage));
            r.runtimes.push_back(p->runtime);
        }
        else
        {
            r.verdicts.push_back("F from [Q] FuelExhausted");
            r.runtimes.push_back(std::get<FuelExhausted>(rec.derivation).consumed);
        }
        r.verdicts.push_back("F " + truth_label(rec.f_truth));
        r.code = rec.holds(std::numeric_limits<std::uint64_t>::max()) ? exit_ok : exit_falsified;
        return r;
    }
    r.fuel = o.fuel.value_or(1'000'000);
    const CertifiedParadox rec = certified_paradox(*rule, r.fuel);
    r.details.push_back("library: " + show(rec.library, o));
    r.details.push_back("derives: " + rec.conclusion);
    r.details.push_back(script_to_text(rec.script, o.raw ? PrintMode::Raw : PrintMode::Sugared));
    if (certified(rec.verdict))
        r.verdicts.push_back("Certified");
    else
    {
        const auto& f = std::get<StepFailed>(rec.verdict);
        r.verdicts.push_back("StepFailed " + std::to_string(f.index) + ": " + f.reason);
        r.code = exit_falsified;
    }
    return r;
}

Report cmd_enum(const Options& o, std::uint64_t max_size)
{
    Report r{"enum"};
    r.inputs = {{"max_size", max_size}, {"universe", o.universe}};
    const auto data = enumerate_data(parse_universe(o.universe), max_size);
    for (const auto& d : data)
        r.details.push_back(show(d, o));
    r.verdicts.push_back(std::to_string(data.size()) + " data");
    return r;
}
}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"algolog: an executable kernel for type-free algorithmic logic"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--fuel", o.fuel, "Runtime budget in machine units");
    app.add_flag("--trace", o.trace, "Report per-stage rule firings");
    app.add_flag("--raw", o.raw, "Print data without sugar");
    app.add_option("--universe", o.universe, "full, reduced, or comma-separated program names");

    // Subcommands inherit this, so global flags may follow the subcommand.
    app.fallthrough();

    std::string a, b, c, filter;
    std::uint64_t stages = 3;
    std::uint64_t max_size = 5;
    std::function<Report()> run;

    auto* eval = app.add_subcommand("eval", "Run an algorithm on an input");
    eval->add_option("alg", a)->required();
    eval->add_option("input", b)->required();
    eval->callback([&] { run = [&] { return cmd_eval(o, a, b); }; });

    auto* truth = app.add_subcommand("truth", "Evaluate a statement");
    truth->add_option("statement", a)->required();
    truth->callback([&] { run = [&] { return cmd_truth(o, a); }; });

    auto* deduce = app.add_subcommand("deduce", "Run the faithful deduction program");
    deduce->add_option("gamma", a)->required();
    deduce->add_option("library", b)->required();
    deduce->add_option("goal", c)->required();
    deduce->callback([&] { run = [&] { return cmd_deduce(o, a, b, c); }; });

    auto* closure = app.add_subcommand("closure", "List the closure stages H0 .. HK");
    closure->add_option("gamma", a)->required();
    closure->add_option("library", b)->required();
    closure->add_option("--stages", stages, "Number of stages K");
    closure->callback([&] { run = [&] { return cmd_closure(o, a, b, stages); }; });

    auto* cert = app.add_subcommand("certify", "Check a proof script against a library");
    cert->add_option("script", a, "Script file")->required();
    cert->add_option("library", b)->required();
    cert->callback([&] { run = [&] { return cmd_certify(o, a, b); }; });

    auto* laws = app.add_subcommand("laws", "Certify the derived-law suite");
    laws->add_option("--filter", filter, "Only laws whose name contains this text");
    laws->callback([&] { run = [&] { return cmd_laws(o, filter); }; });

    auto* paradox = app.add_subcommand("paradox", "Demonstrate a paradoxical rule");
    paradox->add_option("rule", a, "P1 .. P14")->required();
    paradox->callback([&] { run = [&] { return cmd_paradox(o, a); }; });

    auto* enumerate = app.add_subcommand("enum", "List data in canonical order");
    enumerate->add_option("--max-size", max_size, "Largest size listed");
    enumerate->callback([&] { run = [&] { return cmd_enum(o, max_size); }; });

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp& e)
    {
        return app.exit(e);
    }
    catch (const CLI::ParseError& e)
    {
        app.exit(e);
        return exit_parse;
    }

    try
    {
        const Report r = run();
        emit(r, o);
        return r.code;
    }
    catch (const ParseError& e)
    {
        std::cerr << "parse error at " << e.what() << '\n';
        return exit_parse;
    }
    catch (const UsageError& e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return exit_parse;
    }
    catch (const ResourceError& e)
    {
        std::cerr << "resource error: " << e.what() << '\n';
        return exit_resource;
    }
    catch (const std::invalid_argument& e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return exit_parse;
    }
}
