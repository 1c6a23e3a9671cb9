#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "symbols.hpp"

namespace hva {

struct CounterTransition {
    StateId from = 0;
    Symbol symbol = 0;
    std::optional<std::vector<bool>> zero_pattern; // entry i true = counter i is zero; absent on blind machines
    StateId to = 0;
    std::vector<int> increments;                   // each in {-1, 0, 1}

    bool operator==(const CounterTransition&) const = default;
};

/// Real-time deterministic k-counter automaton, blind or not.
///
/// Blind machines accept on an accept state with every counter at zero. Non-blind
/// machines accept on an accept state, additionally requiring zero counters when
/// `accept_on_zero` is set (the only form an HVA can simulate).
struct CounterMachine {
    std::string name;
    std::vector<Symbol> alphabet;
    std::vector<std::string> states;
    StateId start = 0;
    std::vector<StateId> accept; // sorted, unique
    std::size_t counters = 1;
    bool blind = true;
    bool accept_on_zero = true;
    std::vector<CounterTransition> transitions;

    bool operator==(const CounterMachine&) const = default;

    bool is_accepting(StateId q) const { return std::binary_search(accept.begin(), accept.end(), q); }
};

inline std::vector<std::string> validate_counter(const CounterMachine& m) {
    std::vector<std::string> out;
    const auto n = m.states.size();
    if (n == 0)
        out.push_back("machine has no states");
    if (std::set<std::string>(m.states.begin(), m.states.end()).size() != n)
        out.push_back("duplicate state names");
    if (m.start >= n)
        out.push_back("start state out of range");
    for (StateId q : m.accept)
        if (q >= n)
            out.push_back("accept state out of range");
    if (m.blind && !m.accept_on_zero)
        out.push_back("blind counter machines always accept on zero counters");
    std::set<std::tuple<StateId, Symbol, std::vector<bool>>> keys;
    for (std::size_t i = 0; i < m.transitions.size(); ++i) {
        const auto& t = m.transitions[i];
        const std::string where = "transition " + std::to_string(i);
        if (t.from >= n || t.to >= n)
            out.push_back(where + " has an endpoint outside the state set");
        if (!symbol_index(m.alphabet, t.symbol))
            out.push_back(where + " reads a symbol outside the alphabet");
        if (t.increments.size() != m.counters)
            out.push_back(where + " has " + std::to_string(t.increments.size()) + " increments for " +
                          std::to_string(m.counters) + " counters");
        for (int d : t.increments)
            if (d < -1 || d > 1)
                out.push_back(where + " has an increment outside {-1,0,1}");
        if (m.blind && t.zero_pattern)
            out.push_back(where + " tests counters on a blind machine");
        if (!m.blind && (!t.zero_pattern || t.zero_pattern->size() != m.counters))
            out.push_back(where + " needs a zero pattern of length " + std::to_string(m.counters));
        if (!keys.insert({t.from, t.symbol, t.zero_pattern.value_or(std::vector<bool>{})}).second)
            out.push_back(where + " makes the machine nondeterministic");
    }
    return out;
}

/// Step-by-step record of a counter machine run.
struct CounterRun {
    std::vector<std::vector<std::int64_t>> counters; // after each prefix that was read; [0] is all zero
    std::optional<StateId> final_state;               // nullopt when the run died on a missing transition
};

inline CounterRun counter_trace(const CounterMachine& m, std::u32string_view input) {
    if (auto problems = validate_counter(m); !problems.empty())
        throw PreconditionError("malformed counter machine: " + problems.front());
    index_word(m.alphabet, input); // rejects foreign symbols before stepping
    CounterRun run;
    std::vector<std::int64_t> c(m.counters, 0);
    StateId q = m.start;
    run.counters.push_back(c);
    for (Symbol s : input) {
        std::vector<bool> zeros(m.counters);
        for (std::size_t i = 0; i < m.counters; ++i)
            zeros[i] = c[i] == 0;
        auto it = std::find_if(m.transitions.begin(), m.transitions.end(), [&](const CounterTransition& t) {
            return t.from == q && t.symbol == s && (m.blind || *t.zero_pattern == zeros);
        });
        if (it == m.transitions.end())
            return run;
        for (std::size_t i = 0; i < m.counters; ++i)
            c[i] += it->increments[i];
        q = it->to;
        run.counters.push_back(c);
    }
    run.final_state = q;
    return run;
}

inline bool run_counter(const CounterMachine& m, std::u32string_view input) {
    const auto run = counter_trace(m, input);
    if (!run.final_state || !m.is_accepting(*run.final_state))
        return false;
    const auto& last = run.counters.back();
    return !m.accept_on_zero || std::all_of(last.begin(), last.end(), [](std::int64_t x) { return x == 0; });
}

/// Complete deterministic finite automaton.
struct Dfa {
    std::string name;
    std::vector<Symbol> alphabet;
    std::vector<std::string> states;
    StateId start = 0;
    std::vector<StateId> accept; // sorted, unique
    std::vector<std::vector<StateId>> delta; // delta[state][symbol index]

    bool operator==(const Dfa&) const = default;

    bool is_accepting(StateId q) const { return std::binary_search(accept.begin(), accept.end(), q); }

    bool accepts(std::u32string_view input) const {
        StateId q = start;
        for (std::size_t s : index_word(alphabet, input))
            q = delta[q][s];
        return is_accepting(q);
    }
};

inline std::vector<std::string> validate_dfa(const Dfa& d) {
    std::vector<std::string> out;
    const auto n = d.states.size();
    if (n == 0)
        out.push_back("machine has no states");
    if (d.start >= n)
        out.push_back("start state out of range");
    for (StateId q : d.accept)
        if (q >= n)
            out.push_back("accept state out of range");
    if (d.delta.size() != n)
        out.push_back("transition table must have one row per state");
    for (const auto& row : d.delta) {
        if (row.size() != d.alphabet.size())
            out.push_back("transition table must be total over the alphabet");
        for (StateId q : row)
            if (q >= n)
                out.push_back("transition target out of range");
    }
    return out;
}

} // namespace hva
