#pragma once

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hva/hva.hpp"

namespace hva::cli {

enum Exit : int { accepted = 0, rejected = 1, inconclusive = 2, usage = 3 };

inline std::string read_document(const std::string& path) {
    std::ostringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot read '" + path + "'");
    buf << in.rdbuf();
    return buf.str();
}

inline int verdict_exit(Outcome o) {
    switch (o) {
    case Outcome::accept:
        return accepted;
    case Outcome::reject:
        return rejected;
    default:
        return inconclusive;
    }
}

inline void print_verdict(std::ostream& out, Outcome o, const RunStats& stats, std::uint64_t budget) {
    out << "verdict: " << to_string(o) << "\n";
    if (o == Outcome::inconclusive)
        out << "budget: " << budget << " configurations expanded without a decision\n";
    out << "configurations_expanded: " << stats.configurations_expanded << "\n";
    out << "max_frontier: " << stats.max_frontier << "\n";
}

inline Json efa_trace_json(const EfaMachine& e, const std::vector<EfaTraceStep>& trace) {
    auto element_json = [](const GroupElement& g) -> Json {
        if (auto* w = std::get_if<GroupWord>(&g))
            return w->letters();
        const auto& p = std::get<GroupPair>(g);
        return Json{{"left", p.left.letters()}, {"right", p.right.letters()}};
    };
    Json out = Json::array();
    StateId from = e.start;
    for (std::size_t i = 0; i < trace.size(); ++i) {
        const auto& t = e.transitions[trace[i].transition];
        out.push_back(Json{{"step", i + 1},
                           {"symbol", t.symbol ? Json(utf8_encode(*t.symbol)) : Json(nullptr)},
                           {"from", e.states[from]},
                           {"to", e.states[t.to]},
                           {"element", element_json(t.element)},
                           {"register_after", element_json(trace[i].after.reg)}});
        from = t.to;
    }
    return out;
}

/// Letters of a digit word for the codec (letter j is the digit j mod k).
inline stern_brocot::Letters digits_to_letters(std::size_t k, const std::string& word) {
    stern_brocot::Letters out;
    for (Symbol c : utf8_decode(word)) {
        auto j = stern_brocot::digit_letter(k, c);
        if (!j)
            throw ParseError("'" + utf8_encode(c) + "' is not a digit below " + std::to_string(k), "");
        out.push_back(*j);
    }
    return out;
}

/// Runs one invocation. Argument 0 is the program name.
inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Homing vector automata toolkit", "hva"};
    app.require_subcommand(1);

    std::string file, input, vector_text, name, op, oracle_name;
    std::vector<std::string> operands;
    std::uint64_t budget = RunOptions{}.budget;
    bool want_trace = false;
    std::size_t k = 2, l = 2, max_len = 8;
    std::int64_t kn = 2;

    auto* run_cmd = app.add_subcommand("run", "run a machine on an input word (exit 0 accept, 1 reject, 2 inconclusive)");
    run_cmd->add_option("machine", file, "machine document, or - for standard input")->required();
    run_cmd->add_option("input", input, "input word")->required();
    run_cmd->add_option("--budget", budget, "maximum configurations expanded (machines with epsilon moves)")
        ->check(CLI::PositiveNumber);
    run_cmd->add_flag("--trace", want_trace, "print the accepting trace as JSON");

    auto* encode_cmd = app.add_subcommand("encode", "Stern-Brocot encoding of a digit word (letter j is digit j mod k)");
    encode_cmd->add_option("--k", k, "alphabet size")->check(CLI::Range(2, 10));
    encode_cmd->add_option("word", input, "word over the digits 0..k-1")->required();

    auto* decode_cmd = app.add_subcommand("decode", "decode a vector such as [2,3] (exit 1 when invalid)");
    decode_cmd->add_option("vector", vector_text, "vector text")->required();

    auto* zoo_cmd = app.add_subcommand("zoo", "catalog of built-in machines");
    zoo_cmd->require_subcommand(1);
    auto* zoo_list = zoo_cmd->add_subcommand("list", "list catalog entries");
    auto* zoo_export = zoo_cmd->add_subcommand("export", "print a catalog machine document");
    zoo_export->add_option("name", name, "entry name")->required();
    zoo_export->add_option("--l", l, "alphabet size for mpal_l")->check(CLI::Range(2, 10));

    auto* compose_cmd = app.add_subcommand("compose", "combine machine documents");
    compose_cmd->add_option("--op", op, "intersect-regular, intersect-blind, union, concat, star or simulate")
        ->required()
        ->check(CLI::IsMember({"intersect-regular", "intersect-blind", "union", "concat", "star", "simulate"}));
    compose_cmd->add_option("operands", operands, "operand documents")->required();

    auto* check_cmd = app.add_subcommand("check", "compare a machine with a zoo oracle on all words up to a length");
    check_cmd->add_option("machine", file, "machine document")->required();
    check_cmd->add_option("--oracle", oracle_name, "zoo oracle name")->required();
    check_cmd->add_option("--max-len", max_len, "maximum word length");
    check_cmd->add_option("--l", l, "alphabet size for the mpal_l oracle")->check(CLI::Range(2, 10));
    check_cmd->add_option("--budget", budget, "per-word budget for machines with epsilon moves")
        ->check(CLI::PositiveNumber);

    auto* efa_cmd = app.add_subcommand("efa", "extended finite automata over F2 and F2 x F2");
    efa_cmd->require_subcommand(1);
    auto* efa_run = efa_cmd->add_subcommand("run", "run an EFA on an input word");
    efa_run->add_option("efa", file, "EFA document")->required();
    efa_run->add_option("input", input, "input word")->required();
    efa_run->add_option("--budget", budget, "maximum configurations expanded")->check(CLI::PositiveNumber);
    efa_run->add_flag("--trace", want_trace, "print the accepting trace as JSON");
    auto* efa_translate = efa_cmd->add_subcommand("translate", "emit the equivalent one-way blind HVA");
    efa_translate->add_option("efa", file, "EFA document")->required();
    efa_translate->add_option("--n", kn, "K_n parameter")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return usage;
    }

    try {
        if (*run_cmd) {
            auto m = parse_machine(read_document(file));
            RunOptions opts;
            opts.budget = budget;
            opts.want_trace = want_trace;
            auto v = run(m, utf8_decode(input), opts);
            print_verdict(out, v.outcome, v.stats, v.budget);
            if (want_trace && v.trace)
                out << trace_to_json(m, *v.trace).dump(2) << "\n";
            return verdict_exit(v.outcome);
        }
        if (*encode_cmd) {
            out << stern_brocot::encode(k, digits_to_letters(k, input)).to_string() << "\n";
            return accepted;
        }
        if (*decode_cmd) {
            auto v = parse_vector_text(vector_text);
            if (v.dim() > 10)
                throw ParseError("decode prints digits, so at most 10 entries are supported", "");
            auto word = stern_brocot::decode(v);
            if (!word) {
                out << "invalid\n";
                return rejected;
            }
            std::string text;
            for (std::size_t j : *word)
                text += stern_brocot::letter_digit(v.dim(), j);
            out << text << "\n";
            return accepted;
        }
        if (*zoo_list) {
            for (const auto& item : zoo::catalog())
                out << item.name << "\t" << item.kind << "\t" << item.notes << "\n";
            return accepted;
        }
        if (*zoo_export) {
            auto entry = zoo::build(name, zoo::Params{l});
            if (auto* m = std::get_if<HvaMachine>(&entry.machine))
                out << serialize_machine(*m);
            else if (auto* e = std::get_if<EfaMachine>(&entry.machine))
                out << serialize_efa(*e);
            else if (auto* c = std::get_if<CounterMachine>(&entry.machine))
                out << serialize_counter(*c);
            else
                throw zoo::UnknownEntry("'" + name + "' is an oracle-only entry with no machine to export");
            return accepted;
        }
        if (*compose_cmd) {
            const bool binary = op == "intersect-regular" || op == "intersect-blind" || op == "union" || op == "concat";
            if (operands.size() != (binary ? 2u : 1u))
                throw PreconditionError("--op " + op + " takes " + (binary ? "two operands" : "one operand"));
            HvaMachine result;
            if (op == "simulate") {
                auto c = parse_counter(read_document(operands[0]));
                result = c.blind ? simulate_blind_counters(c) : simulate_counter_nonblind(c);
            } else if (op == "intersect-regular") {
                result = intersect_regular(parse_machine(read_document(operands[0])), parse_dfa(read_document(operands[1])));
            } else if (op == "star") {
                result = star_nondet(parse_machine(read_document(operands[0])));
            } else {
                auto x = parse_machine(read_document(operands[0]));
                auto y = parse_machine(read_document(operands[1]));
                result = op == "intersect-blind" ? intersect_blind(x, y) : op == "union" ? union_nondet(x, y)
                                                                                       : concat_nondet(x, y);
            }
            out << serialize_machine(result);
            return accepted;
        }
        if (*check_cmd) {
            auto m = parse_machine(read_document(file));
            CheckOptions opts;
            opts.run.budget = budget;
            auto report = check(m, zoo::oracle(oracle_name, zoo::Params{l}), max_len, opts, zoo::viability(oracle_name));
            out << describe(report);
            return report.ok() ? accepted : rejected;
        }
        if (*efa_run) {
            auto e = parse_efa(read_document(file));
            RunOptions opts;
            opts.budget = budget;
            opts.want_trace = want_trace;
            auto v = run_efa(e, utf8_decode(input), opts);
            print_verdict(out, v.outcome, v.stats, v.budget);
            if (want_trace && v.trace)
                out << efa_trace_json(e, *v.trace).dump(2) << "\n";
            return verdict_exit(v.outcome);
        }
        if (*efa_translate) {
            auto e = parse_efa(read_document(file));
            out << serialize_machine(e.group == GroupKind::F2 ? translate_efa_f2(e, kn) : translate_efa_f2xf2(e, kn));
            return accepted;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return usage;
    }
    return usage;
}

} // namespace hva::cli
