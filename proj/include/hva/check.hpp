#pragma once

#include <functional>
#include <string>
#include <vector>

#include "engine.hpp"
#include "zoo.hpp"

namespace hva {

struct Mismatch {
    Word input;
    bool expected = false;
    Outcome got = Outcome::reject;
};

/// Outcome of an oracle comparison.
struct CheckReport {
    BigInt covered = 0;               // words whose verdict is settled, pruned subtrees included
    std::uint64_t executed = 0;       // words actually judged against the machine
    std::uint64_t accepted = 0;       // accept verdicts among them, each audited by replay
    std::uint64_t mismatch_count = 0; // machine and oracle disagree (inconclusive verdicts excluded)
    std::uint64_t inconclusive_count = 0;
    std::uint64_t audit_failures = 0; // accepting traces that did not replay to an accepting configuration
    std::vector<Mismatch> samples;    // the first few mismatches and inconclusive verdicts

    bool ok() const { return mismatch_count == 0 && inconclusive_count == 0 && audit_failures == 0; }
};

struct CheckOptions {
    RunOptions run;
    std::size_t max_samples = 20;
};

namespace detail {

class Checker {
public:
    Checker(const HvaMachine& m, const zoo::Oracle& oracle, const CheckOptions& opts)
        : m_(m), oracle_(oracle), opts_(opts) {}

    void judge(const Word& w, Outcome got, bool audited) {
        ++report.executed;
        report.covered += 1;
        if (got == Outcome::accept) {
            ++report.accepted;
            if (!audited)
                ++report.audit_failures;
        }
        if (got == Outcome::inconclusive) {
            ++report.inconclusive_count;
            sample(w, oracle_(w), got);
            return;
        }
        const bool expected = oracle_(w);
        if (expected != (got == Outcome::accept)) {
            ++report.mismatch_count;
            sample(w, expected, got);
        }
    }

    /// Runs one word through the full engine.
    void run_word(const Word& w) {
        auto v = run(m_, w, opts_.run);
        const bool audited = v.outcome != Outcome::accept || (v.trace && audit_trace(m_, w, *v.trace));
        judge(w, v.outcome, audited);
    }

    /// Judges `w` given the simulator frontier after reading it.
    void judge_frontier(const Simulator& sim, const Word& w, const Simulator::Frontier& f) {
        const Simulator::Live* hit = sim.accepting(f);
        bool audited = true;
        if (hit) {
            auto path = Simulator::path_of(*hit);
            auto configs = replay(m_, w, path);
            audited = configs && (configs->empty() ? is_accepting_configuration(m_, initial_configuration(m_), w.size())
                                                   : is_accepting_configuration(m_, configs->back(), w.size()));
        }
        judge(w, hit ? Outcome::accept : Outcome::reject, audited);
    }

    CheckReport report;

private:
    void sample(const Word& w, bool expected, Outcome got) {
        if (report.samples.size() < opts_.max_samples)
            report.samples.push_back(Mismatch{w, expected, got});
    }

    const HvaMachine& m_;
    const zoo::Oracle& oracle_;
    const CheckOptions& opts_;
};

/// |alphabet|^1 + ... + |alphabet|^depth
inline BigInt words_below(std::size_t alphabet, std::size_t depth) {
    BigInt total = 0, layer = 1;
    for (std::size_t i = 0; i < depth; ++i) {
        layer *= alphabet;
        total += layer;
    }
    return total;
}

} // namespace detail

/// Number of words of length at most `max_len` over `alphabet` symbols.
inline BigInt word_count(std::size_t alphabet, std::size_t max_len) { return detail::words_below(alphabet, max_len) + 1; }

/// Compares `m` with `oracle` on every word over the machine alphabet of length at most `max_len`.
///
/// Epsilon-free machines are simulated along a prefix trie so that prefixes are
/// stepped once. When the simulated frontier dies and `viable` says no extension
/// of the prefix is in the language, the whole subtree is settled without being
/// enumerated. Machines with epsilon moves run word by word under `opts.run`.
inline CheckReport check(const HvaMachine& m, const zoo::Oracle& oracle, std::size_t max_len,
                         const CheckOptions& opts = {}, const zoo::Viability& viable = {}) {
    detail::Checker checker(m, oracle, opts);
    const std::size_t sigma = m.alphabet.size();
    Word w;

    if (m.has_epsilon()) {
        std::function<void()> visit = [&] {
            checker.run_word(w);
            if (w.size() == max_len)
                return;
            for (Symbol s : m.alphabet) {
                w.push_back(s);
                visit();
                w.pop_back();
            }
        };
        visit();
        return checker.report;
    }

    Simulator sim(m);
    std::function<void(const Simulator::Frontier&)> visit = [&](const Simulator::Frontier& f) {
        checker.judge_frontier(sim, w, f);
        if (w.size() == max_len)
            return;
        for (std::size_t s = 0; s < sigma; ++s) {
            w.push_back(m.alphabet[s]);
            auto next = sim.advance(f, s);
            if (next.empty() && viable && !viable(w))
                checker.report.covered += detail::words_below(sigma, max_len - w.size()) + 1;
            else
                visit(next);
            w.pop_back();
        }
    };
    visit(sim.initial());
    return checker.report;
}

/// Generator of explicit inputs: calls its argument once per word.
using InputSource = std::function<void(const std::function<void(std::u32string_view)>&)>;

/// Compares `m` with `oracle` on the words produced by `source`. Consecutive
/// words share the simulation of their common prefix, so depth-first sources are cheap.
inline CheckReport check_inputs(const HvaMachine& m, const zoo::Oracle& oracle, const InputSource& source,
                                const CheckOptions& opts = {}) {
    detail::Checker checker(m, oracle, opts);
    if (m.has_epsilon()) {
        source([&](std::u32string_view w) { checker.run_word(Word(w)); });
        return checker.report;
    }
    Simulator sim(m);
    Word prev;
    std::vector<Simulator::Frontier> stack{sim.initial()}; // stack[i] = frontier after prev[0..i)
    source([&](std::u32string_view w) {
        std::size_t common = 0;
        while (common < prev.size() && common < w.size() && prev[common] == w[common])
            ++common;
        stack.resize(common + 1);
        prev.assign(w.begin(), w.end());
        for (std::size_t i = common; i < w.size(); ++i) {
            auto idx = symbol_index(m.alphabet, w[i]);
            if (!idx)
                throw UnknownSymbolError("symbol '" + utf8_encode(w[i]) + "' at position " + std::to_string(i) +
                                         " is not in the alphabet");
            stack.push_back(stack.back().empty() ? Simulator::Frontier{} : sim.advance(stack.back(), *idx));
        }
        checker.judge_frontier(sim, prev, stack.back());
    });
    return checker.report;
}

inline CheckReport check_inputs(const HvaMachine& m, const zoo::Oracle& oracle, const std::vector<Word>& inputs,
                                const CheckOptions& opts = {}) {
    return check_inputs(
        m, oracle, [&](const std::function<void(std::u32string_view)>& emit) {
            for (const auto& w : inputs)
                emit(w);
        },
        opts);
}

/// Human-readable summary of a report.
inline std::string describe(const CheckReport& r) {
    std::string out = "covered " + r.covered.str() + " words, executed " + std::to_string(r.executed) + ", accepted " +
                      std::to_string(r.accepted) + ", mismatches " + std::to_string(r.mismatch_count) +
                      ", inconclusive " + std::to_string(r.inconclusive_count) + ", audit failures " +
                      std::to_string(r.audit_failures) + "\n";
    for (const auto& s : r.samples)
        out += "  \"" + utf8_encode(s.input) + "\": oracle " + (s.expected ? "accept" : "reject") + ", machine " +
               to_string(s.got) + "\n";
    return out;
}

} // namespace hva
