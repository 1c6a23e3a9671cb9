#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "linalg.hpp"
#include "symbols.hpp"

namespace hva {

enum class Head { realtime, oneway };
enum class Control { deterministic, nondeterministic };

struct ModeFlags {
    Head head = Head::realtime;
    Control control = Control::deterministic;
    bool blind = false;

    bool operator==(const ModeFlags&) const = default;
};

/// Vector observation required by a transition. `any` fires regardless of the vector.
enum class Guard { eq, neq, any };

inline const char* to_string(Guard g) {
    switch (g) {
    case Guard::eq:
        return "eq";
    case Guard::neq:
        return "neq";
    case Guard::any:
        return "any";
    }
    return "?";
}

/// Whether a transition guarded by `g` may fire when the vector observation is `at_initial`.
inline bool guard_admits(Guard g, bool at_initial) {
    return g == Guard::any || (g == Guard::eq) == at_initial;
}

struct Transition {
    StateId from = 0;
    std::optional<Symbol> symbol; // nullopt = epsilon
    Guard guard = Guard::any;
    StateId to = 0;
    QMatrix matrix;

    bool operator==(const Transition&) const = default;
};

/// A homing vector automaton in any of its eight variants.
struct HvaMachine {
    std::string name;
    ModeFlags mode;
    std::size_t dimension = 1;
    std::vector<Symbol> alphabet;
    std::vector<std::string> states;
    StateId start = 0;
    std::vector<StateId> accept; // sorted, unique
    QVector initial_vector;
    std::vector<Transition> transitions;

    bool operator==(const HvaMachine&) const = default;

    std::optional<StateId> find_state(std::string_view n) const {
        auto it = std::find(states.begin(), states.end(), n);
        if (it == states.end())
            return std::nullopt;
        return static_cast<StateId>(it - states.begin());
    }

    StateId state_id(std::string_view n) const {
        auto id = find_state(n);
        if (!id)
            throw std::out_of_range("no state named '" + std::string(n) + "'");
        return *id;
    }

    bool is_accepting(StateId q) const { return std::binary_search(accept.begin(), accept.end(), q); }

    bool has_epsilon() const {
        return std::any_of(transitions.begin(), transitions.end(), [](const Transition& t) { return !t.symbol; });
    }
};

/// Incremental construction of machines by state name.
class MachineBuilder {
public:
    MachineBuilder(std::string name, ModeFlags mode, QVector initial, std::vector<Symbol> alphabet) {
        m_.name = std::move(name);
        m_.mode = mode;
        m_.dimension = initial.dim();
        m_.initial_vector = std::move(initial);
        m_.alphabet = std::move(alphabet);
    }

    StateId state(const std::string& name) {
        if (auto id = m_.find_state(name))
            return *id;
        m_.states.push_back(name);
        return m_.states.size() - 1;
    }

    MachineBuilder& start(const std::string& name) {
        m_.start = state(name);
        return *this;
    }

    MachineBuilder& accept(const std::string& name) {
        m_.accept.push_back(state(name));
        return *this;
    }

    MachineBuilder& add(const std::string& from, std::optional<Symbol> symbol, Guard guard, const std::string& to,
                        QMatrix matrix) {
        m_.transitions.push_back(Transition{state(from), symbol, guard, state(to), std::move(matrix)});
        return *this;
    }

    MachineBuilder& add(const std::string& from, std::optional<Symbol> symbol, const std::string& to, QMatrix matrix) {
        return add(from, symbol, Guard::any, to, std::move(matrix));
    }

    HvaMachine build() {
        std::sort(m_.accept.begin(), m_.accept.end());
        m_.accept.erase(std::unique(m_.accept.begin(), m_.accept.end()), m_.accept.end());
        return m_;
    }

private:
    HvaMachine m_;
};

enum class ViolationCode {
    NO_STATES,
    DUPLICATE_STATE,
    DUPLICATE_SYMBOL,
    BAD_START,
    BAD_ACCEPT,
    BAD_ENDPOINT,
    BAD_SYMBOL,
    VECTOR_DIM,
    MATRIX_DIM,
    EPSILON_REALTIME,
    DET_ONEWAY,
    DET_EPSILON,
    DET_CONFLICT,
    BLIND_GUARD,
};

inline const char* to_string(ViolationCode c) {
    switch (c) {
    case ViolationCode::NO_STATES:
        return "NO_STATES";
    case ViolationCode::DUPLICATE_STATE:
        return "DUPLICATE_STATE";
    case ViolationCode::DUPLICATE_SYMBOL:
        return "DUPLICATE_SYMBOL";
    case ViolationCode::BAD_START:
        return "BAD_START";
    case ViolationCode::BAD_ACCEPT:
        return "BAD_ACCEPT";
    case ViolationCode::BAD_ENDPOINT:
        return "BAD_ENDPOINT";
    case ViolationCode::BAD_SYMBOL:
        return "BAD_SYMBOL";
    case ViolationCode::VECTOR_DIM:
        return "VECTOR_DIM";
    case ViolationCode::MATRIX_DIM:
        return "MATRIX_DIM";
    case ViolationCode::EPSILON_REALTIME:
        return "EPSILON_REALTIME";
    case ViolationCode::DET_ONEWAY:
        return "DET_ONEWAY";
    case ViolationCode::DET_EPSILON:
        return "DET_EPSILON";
    case ViolationCode::DET_CONFLICT:
        return "DET_CONFLICT";
    case ViolationCode::BLIND_GUARD:
        return "BLIND_GUARD";
    }
    return "?";
}

struct Violation {
    ViolationCode code;
    std::string detail;
};

/// Thrown by parse/construction entry points that require a valid machine.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(std::vector<Violation> violations)
        : std::runtime_error(describe(violations)), violations_(std::move(violations)) {}

    const std::vector<Violation>& violations() const noexcept { return violations_; }

private:
    static std::string describe(const std::vector<Violation>& vs) {
        std::string out = "invalid machine:";
        for (const auto& v : vs)
            out += std::string(" [") + to_string(v.code) + "] " + v.detail + ";";
        return out;
    }

    std::vector<Violation> violations_;
};

/// Every structural violation of `m`; an empty list means the machine is valid.
inline std::vector<Violation> validate(const HvaMachine& m) {
    std::vector<Violation> out;
    auto report = [&](ViolationCode c, std::string detail) { out.push_back({c, std::move(detail)}); };
    const std::size_t n = m.states.size();

    if (n == 0)
        report(ViolationCode::NO_STATES, "machine has no states");
    {
        std::set<std::string> seen;
        for (const auto& s : m.states)
            if (!seen.insert(s).second)
                report(ViolationCode::DUPLICATE_STATE, "state '" + s + "' declared twice");
    }
    {
        std::set<Symbol> seen;
        for (Symbol s : m.alphabet)
            if (!seen.insert(s).second)
                report(ViolationCode::DUPLICATE_SYMBOL, "symbol '" + utf8_encode(s) + "' declared twice");
    }
    if (m.start >= n)
        report(ViolationCode::BAD_START, "start state out of range");
    for (StateId q : m.accept)
        if (q >= n)
            report(ViolationCode::BAD_ACCEPT, "accept state " + std::to_string(q) + " out of range");
    if (m.initial_vector.dim() != m.dimension)
        report(ViolationCode::VECTOR_DIM, "initial vector has dimension " + std::to_string(m.initial_vector.dim()) +
                                              ", machine has " + std::to_string(m.dimension));
    if (m.mode.control == Control::deterministic && m.mode.head == Head::oneway)
        report(ViolationCode::DET_ONEWAY, "deterministic machines are real-time only");

    for (std::size_t i = 0; i < m.transitions.size(); ++i) {
        const auto& t = m.transitions[i];
        const std::string where = "transition " + std::to_string(i);
        if (t.from >= n || t.to >= n)
            report(ViolationCode::BAD_ENDPOINT, where + " has an endpoint outside the state set");
        if (t.symbol && !symbol_index(m.alphabet, *t.symbol))
            report(ViolationCode::BAD_SYMBOL, where + " reads '" + utf8_encode(*t.symbol) + "' outside the alphabet");
        if (!t.symbol && m.mode.head == Head::realtime)
            report(ViolationCode::EPSILON_REALTIME, where + " is an epsilon move on a real-time machine");
        if (!t.symbol && m.mode.control == Control::deterministic)
            report(ViolationCode::DET_EPSILON, where + " is an epsilon move on a deterministic machine");
        if (t.matrix.dim() != m.dimension)
            report(ViolationCode::MATRIX_DIM, where + " matrix has dimension " + std::to_string(t.matrix.dim()));
        if (m.mode.blind && t.guard != Guard::any)
            report(ViolationCode::BLIND_GUARD, where + " checks the vector on a blind machine");
    }

    if (m.mode.control == Control::deterministic) {
        // at most one applicable transition per (state, symbol, observation)
        std::set<std::tuple<StateId, Symbol, bool>> seen;
        for (std::size_t i = 0; i < m.transitions.size(); ++i) {
            const auto& t = m.transitions[i];
            if (!t.symbol)
                continue;
            for (bool at_initial : {true, false}) {
                if (!guard_admits(t.guard, at_initial))
                    continue;
                if (!seen.insert({t.from, *t.symbol, at_initial}).second)
                    report(ViolationCode::DET_CONFLICT,
                           "transition " + std::to_string(i) + " competes on (" +
                               (t.from < n ? m.states[t.from] : std::to_string(t.from)) + ", '" +
                               utf8_encode(*t.symbol) + "', " + (at_initial ? "eq" : "neq") + ")");
            }
        }
    }
    return out;
}

/// Rewrites every `any` guard on a non-blind machine as an eq/neq pair.
inline HvaMachine expand_guards(HvaMachine m) {
    if (m.mode.blind)
        return m;
    std::vector<Transition> out;
    out.reserve(m.transitions.size());
    for (auto& t : m.transitions) {
        if (t.guard != Guard::any) {
            out.push_back(std::move(t));
            continue;
        }
        Transition eq = t;
        eq.guard = Guard::eq;
        t.guard = Guard::neq;
        out.push_back(std::move(eq));
        out.push_back(std::move(t));
    }
    m.transitions = std::move(out);
    return m;
}

/// expand_guards followed by validate; throws ValidationError on any violation.
inline HvaMachine validated(HvaMachine m) {
    m = expand_guards(std::move(m));
    if (auto vs = validate(m); !vs.empty())
        throw ValidationError(std::move(vs));
    return m;
}

} // namespace hva
