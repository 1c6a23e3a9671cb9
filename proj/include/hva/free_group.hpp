#pragma once

#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "engine.hpp"

namespace hva {

/// Freely reduced word over F2. Letters: 'a', 'b' are the generators, 'A', 'B' their inverses.
class GroupWord {
public:
    GroupWord() = default;

    /// Free reduction of an arbitrary letter sequence.
    static GroupWord reduce(std::string_view raw) {
        GroupWord w;
        for (char c : raw) {
            if (c != 'a' && c != 'A' && c != 'b' && c != 'B')
                throw ParseError(std::string("letter '") + c + "' is not one of a, A, b, B", "");
            w.push(c);
        }
        return w;
    }

    static char inverse_letter(char c) {
        switch (c) {
        case 'a':
            return 'A';
        case 'A':
            return 'a';
        case 'b':
            return 'B';
        default:
            return 'b';
        }
    }

    const std::string& letters() const { return letters_; }
    bool is_identity() const { return letters_.empty(); }
    std::size_t length() const { return letters_.size(); }

    GroupWord inverse() const {
        GroupWord w;
        for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
            w.letters_.push_back(inverse_letter(*it));
        return w;
    }

    friend GroupWord operator*(GroupWord lhs, const GroupWord& rhs) {
        for (char c : rhs.letters_)
            lhs.push(c);
        return lhs;
    }

    bool operator==(const GroupWord&) const = default;
    auto operator<=>(const GroupWord&) const = default;

private:
    void push(char c) {
        if (!letters_.empty() && letters_.back() == inverse_letter(c))
            letters_.pop_back();
        else
            letters_.push_back(c);
    }

    std::string letters_;
};

/// Element of F2 x F2, componentwise reduced.
struct GroupPair {
    GroupWord left;
    GroupWord right;

    bool is_identity() const { return left.is_identity() && right.is_identity(); }
    friend GroupPair operator*(const GroupPair& x, const GroupPair& y) { return {x.left * y.left, x.right * y.right}; }
    bool operator==(const GroupPair&) const = default;
};

/// Generators of K_n: [[1,n],[0,1]] and [[1,0],[n,1]].
inline std::pair<QMatrix, QMatrix> kn_generators(std::int64_t n) {
    if (n < 1)
        throw std::invalid_argument("K_n needs n >= 1");
    return {QMatrix{{1, n}, {0, 1}}, QMatrix{{1, 0}, {n, 1}}};
}

/// Free basis of H inside K_n: images of a and b under phi.
inline std::pair<QMatrix, QMatrix> h_generators(std::int64_t n = 2) {
    auto [ma, mb] = kn_generators(n);
    return {ma * mb * ma * ma, ma * ma * mb * ma};
}

/// The embedding of F2 onto H: a -> Ma Mb Ma^2, b -> Ma^2 Mb Ma.
inline QMatrix phi(const GroupWord& w, std::int64_t n = 2) {
    auto [ga, gb] = h_generators(n);
    const QMatrix images[4] = {ga, mat_inverse(ga), gb, mat_inverse(gb)};
    QMatrix out = QMatrix::identity(2);
    for (char c : w.letters()) {
        switch (c) {
        case 'a':
            out = out * images[0];
            break;
        case 'A':
            out = out * images[1];
            break;
        case 'b':
            out = out * images[2];
            break;
        default:
            out = out * images[3];
            break;
        }
    }
    return out;
}

/// 4x4 block form of (phi(left), phi(right)).
inline QMatrix psi(const GroupPair& p, std::int64_t n = 2) { return block_diag(phi(p.left, n), phi(p.right, n)); }

enum class GroupKind { F2, F2xF2 };

using GroupElement = std::variant<GroupWord, GroupPair>;

inline bool is_identity(const GroupElement& g) {
    return std::visit([](const auto& x) { return x.is_identity(); }, g);
}

inline GroupElement multiply(const GroupElement& x, const GroupElement& y) {
    if (x.index() != y.index())
        throw std::invalid_argument("group elements of different kinds");
    if (auto* w = std::get_if<GroupWord>(&x))
        return *w * std::get<GroupWord>(y);
    return std::get<GroupPair>(x) * std::get<GroupPair>(y);
}

struct EfaTransition {
    StateId from = 0;
    std::optional<Symbol> symbol; // nullopt = epsilon
    StateId to = 0;
    GroupElement element;

    bool operator==(const EfaTransition&) const = default;
};

/// Extended finite automaton over F2 or F2 x F2.
struct EfaMachine {
    std::string name;
    GroupKind group = GroupKind::F2;
    std::vector<Symbol> alphabet;
    std::vector<std::string> states;
    StateId start = 0;
    std::vector<StateId> accept; // sorted, unique
    std::vector<EfaTransition> transitions;

    bool operator==(const EfaMachine&) const = default;

    bool is_accepting(StateId q) const { return std::binary_search(accept.begin(), accept.end(), q); }
    bool has_epsilon() const {
        return std::any_of(transitions.begin(), transitions.end(), [](const auto& t) { return !t.symbol; });
    }
    GroupElement identity() const { return group == GroupKind::F2 ? GroupElement(GroupWord{}) : GroupElement(GroupPair{}); }
};

/// Structural problems of an EFA; empty means well-formed.
inline std::vector<std::string> validate_efa(const EfaMachine& e) {
    std::vector<std::string> out;
    const auto n = e.states.size();
    if (n == 0)
        out.push_back("machine has no states");
    if (std::set<std::string>(e.states.begin(), e.states.end()).size() != n)
        out.push_back("duplicate state names");
    if (e.start >= n)
        out.push_back("start state out of range");
    for (StateId q : e.accept)
        if (q >= n)
            out.push_back("accept state out of range");
    const std::size_t want = e.group == GroupKind::F2 ? 0 : 1;
    for (std::size_t i = 0; i < e.transitions.size(); ++i) {
        const auto& t = e.transitions[i];
        if (t.from >= n || t.to >= n)
            out.push_back("transition " + std::to_string(i) + " has an endpoint outside the state set");
        if (t.symbol && !symbol_index(e.alphabet, *t.symbol))
            out.push_back("transition " + std::to_string(i) + " reads a symbol outside the alphabet");
        if (t.element.index() != want)
            out.push_back("transition " + std::to_string(i) + " element does not match the group");
    }
    return out;
}

struct EfaConfiguration {
    StateId state = 0;
    std::size_t pos = 0;
    GroupElement reg;

    bool operator==(const EfaConfiguration&) const = default;
};

} // namespace hva

template <>
struct std::hash<hva::EfaConfiguration> {
    std::size_t operator()(const hva::EfaConfiguration& c) const noexcept {
        std::size_t h = std::visit(
            [](const auto& x) {
                if constexpr (std::is_same_v<std::decay_t<decltype(x)>, hva::GroupWord>)
                    return std::hash<std::string>{}(x.letters());
                else
                    return std::hash<std::string>{}(x.left.letters()) * 31 + std::hash<std::string>{}(x.right.letters());
            },
            c.reg);
        h ^= c.state * 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        h ^= c.pos * 0xc2b2ae3d27d4eb4fULL + (h << 6) + (h >> 2);
        return h;
    }
};

namespace hva {

struct EfaTraceStep {
    std::size_t transition;
    EfaConfiguration after;
};

struct EfaVerdict {
    Outcome outcome = Outcome::reject;
    std::optional<std::vector<EfaTraceStep>> trace;
    RunStats stats;
    std::uint64_t budget = 0;
};

/// Runs an EFA with the same search and verdict contract as `run`: the register is
/// kept as a reduced word, so acceptance is "accept state, input read, register empty".
inline EfaVerdict run_efa(const EfaMachine& e, std::u32string_view input, const RunOptions& opts = {}) {
    if (auto problems = validate_efa(e); !problems.empty())
        throw PreconditionError("malformed EFA: " + problems.front());
    if (opts.budget < 1)
        throw std::invalid_argument("budget must be at least 1");
    const auto idx = index_word(e.alphabet, input);

    auto successors = [&](const EfaConfiguration& c, auto&& emit) {
        for (std::size_t ti = 0; ti < e.transitions.size(); ++ti) {
            const auto& t = e.transitions[ti];
            if (t.from != c.state)
                continue;
            if (t.symbol) {
                if (c.pos >= idx.size() || e.alphabet[idx[c.pos]] != *t.symbol)
                    continue;
                emit(ti, EfaConfiguration{t.to, c.pos + 1, multiply(c.reg, t.element)});
            } else {
                emit(ti, EfaConfiguration{t.to, c.pos, multiply(c.reg, t.element)});
            }
        }
    };
    auto accepting = [&](const EfaConfiguration& c) {
        return c.pos == idx.size() && e.is_accepting(c.state) && is_identity(c.reg);
    };
    auto res = breadth_first_search<EfaConfiguration>(EfaConfiguration{e.start, 0, e.identity()}, successors, accepting,
                                                      opts, e.has_epsilon());
    EfaVerdict v;
    v.outcome = res.outcome;
    v.stats = res.stats;
    v.budget = opts.budget;
    if (res.outcome == Outcome::accept && opts.want_trace) {
        std::vector<EfaTraceStep> trace;
        for (auto& [label, config] : res.path)
            trace.push_back(EfaTraceStep{label, std::move(config)});
        v.trace = std::move(trace);
    }
    return v;
}

namespace detail {

inline HvaMachine translate_efa(const EfaMachine& e, QVector initial, const std::function<QMatrix(const GroupElement&)>& image) {
    if (auto problems = validate_efa(e); !problems.empty())
        throw PreconditionError("malformed EFA: " + problems.front());
    HvaMachine m;
    m.name = e.name;
    m.mode = ModeFlags{Head::oneway, Control::nondeterministic, true};
    m.dimension = initial.dim();
    m.initial_vector = std::move(initial);
    m.alphabet = e.alphabet;
    m.states = e.states;
    m.start = e.start;
    m.accept = e.accept;
    for (const auto& t : e.transitions)
        m.transitions.push_back(Transition{t.from, t.symbol, Guard::any, t.to, image(t.element)});
    return m;
}

} // namespace detail

/// EFA over F2 -> one-way nondeterministic blind HVA of dimension 2, initial vector [1,0].
inline HvaMachine translate_efa_f2(const EfaMachine& e, std::int64_t n = 2) {
    if (e.group != GroupKind::F2)
        throw PreconditionError("translate_efa_f2 needs an EFA over F2");
    return detail::translate_efa(e, QVector{1, 0},
                                 [n](const GroupElement& g) { return phi(std::get<GroupWord>(g), n); });
}

/// EFA over F2 x F2 -> one-way nondeterministic blind HVA of dimension 4, initial vector [1,0,1,0].
inline HvaMachine translate_efa_f2xf2(const EfaMachine& e, std::int64_t n = 2) {
    if (e.group != GroupKind::F2xF2)
        throw PreconditionError("translate_efa_f2xf2 needs an EFA over F2 x F2");
    return detail::translate_efa(e, QVector{1, 0, 1, 0},
                                 [n](const GroupElement& g) { return psi(std::get<GroupPair>(g), n); });
}

} // namespace hva
