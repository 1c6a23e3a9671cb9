#pragma once

#include <algorithm>
#include <memory>
#include <span>
#include <unordered_set>
#include <vector>

#include "machine.hpp"
#include "search.hpp"

namespace hva {

/// Instantaneous description of a run: control state, symbols consumed, current vector.
struct Configuration {
    StateId state = 0;
    std::size_t pos = 0;
    QVector vector;

    bool operator==(const Configuration&) const = default;
};

} // namespace hva

template <>
struct std::hash<hva::Configuration> {
    std::size_t operator()(const hva::Configuration& c) const noexcept {
        std::size_t h = c.vector.hash();
        h ^= c.state * 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        h ^= c.pos * 0xc2b2ae3d27d4eb4fULL + (h << 6) + (h >> 2);
        return h;
    }
};

namespace hva {

/// The one-bit observation: eq iff `v` equals the initial vector `v0`.
inline Guard omega(const QVector& v, const QVector& v0) {
    if (v.dim() != v0.dim())
        throw DimensionError("omega on vectors of dimensions " + std::to_string(v.dim()) + " and " +
                             std::to_string(v0.dim()));
    return v == v0 ? Guard::eq : Guard::neq;
}

/// Transitions of a machine bucketed by (state, symbol slot); the last slot holds epsilon moves.
class TransitionTable {
public:
    explicit TransitionTable(const HvaMachine& m)
        : slots_(m.alphabet.size() + 1), buckets_(m.states.size() * slots_) {
        for (std::size_t i = 0; i < m.transitions.size(); ++i) {
            const auto& t = m.transitions[i];
            std::size_t slot = slots_ - 1;
            if (t.symbol) {
                auto idx = symbol_index(m.alphabet, *t.symbol);
                if (!idx)
                    continue; // rejected by validate
                slot = *idx;
            }
            if (t.from < m.states.size())
                buckets_[t.from * slots_ + slot].push_back(i);
        }
    }

    std::span<const std::size_t> on_symbol(StateId q, std::size_t symbol) const { return buckets_[q * slots_ + symbol]; }
    std::span<const std::size_t> on_epsilon(StateId q) const { return buckets_[q * slots_ + slots_ - 1]; }

private:
    std::size_t slots_;
    std::vector<std::vector<std::size_t>> buckets_;
};

namespace detail {

/// Calls emit(transition index, successor) in transition-list order.
template <class Emit>
void for_each_successor(const HvaMachine& m, const TransitionTable& table, const Configuration& c,
                        std::span<const std::size_t> input, Emit&& emit) {
    const bool at_initial = c.vector == m.initial_vector;
    auto eps = table.on_epsilon(c.state);
    std::span<const std::size_t> sym;
    if (c.pos < input.size())
        sym = table.on_symbol(c.state, input[c.pos]);
    std::size_t i = 0, j = 0;
    while (i < eps.size() || j < sym.size()) {
        bool take_eps = j == sym.size() || (i < eps.size() && eps[i] < sym[j]);
        std::size_t ti = take_eps ? eps[i++] : sym[j++];
        const Transition& t = m.transitions[ti];
        if (!m.mode.blind && !guard_admits(t.guard, at_initial))
            continue;
        emit(ti, Configuration{t.to, take_eps ? c.pos : c.pos + 1, vec_mul_mat(c.vector, t.matrix)});
    }
}

} // namespace detail

/// All successors of `c` on `input` (already mapped to alphabet indices), without duplicates.
inline std::vector<Configuration> step(const HvaMachine& m, const Configuration& c, std::span<const std::size_t> input) {
    TransitionTable table(m);
    std::vector<Configuration> out;
    std::unordered_set<Configuration> seen;
    detail::for_each_successor(m, table, c, input, [&](std::size_t, Configuration next) {
        if (seen.insert(next).second)
            out.push_back(std::move(next));
    });
    return out;
}

inline std::vector<Configuration> step(const HvaMachine& m, const Configuration& c, std::u32string_view input) {
    auto idx = index_word(m.alphabet, input);
    return step(m, c, std::span<const std::size_t>(idx));
}

struct TraceStep {
    std::size_t transition;
    Configuration after;
};

struct Verdict {
    Outcome outcome = Outcome::reject;
    std::optional<std::vector<TraceStep>> trace; // present on accept
    RunStats stats;
    std::uint64_t budget = 0;                    // the budget in force, reported on inconclusive
};

inline Configuration initial_configuration(const HvaMachine& m) { return Configuration{m.start, 0, m.initial_vector}; }

/// Acceptance predicate at the right end: accept state, whole input read, vector back home.
inline bool is_accepting_configuration(const HvaMachine& m, const Configuration& c, std::size_t input_length) {
    return c.pos == input_length && m.is_accepting(c.state) && c.vector == m.initial_vector;
}

/// Runs `m` on `input`. Searches breadth-first over configurations; the budget only
/// applies to machines with epsilon moves, whose configuration graph may be infinite.
inline Verdict run(const HvaMachine& m, std::u32string_view input, const RunOptions& opts = {}) {
    if (opts.budget < 1)
        throw std::invalid_argument("budget must be at least 1");
    const auto idx = index_word(m.alphabet, input);
    const TransitionTable table(m);
    const std::span<const std::size_t> word(idx);

    auto res = breadth_first_search<Configuration>(
        initial_configuration(m),
        [&](const Configuration& c, auto&& emit) { detail::for_each_successor(m, table, c, word, emit); },
        [&](const Configuration& c) { return is_accepting_configuration(m, c, word.size()); }, opts, m.has_epsilon());

    Verdict v;
    v.outcome = res.outcome;
    v.stats = res.stats;
    v.budget = opts.budget;
    if (res.outcome == Outcome::accept && opts.want_trace) {
        std::vector<TraceStep> trace;
        trace.reserve(res.path.size());
        for (auto& [label, config] : res.path)
            trace.push_back(TraceStep{label, std::move(config)});
        v.trace = std::move(trace);
    }
    return v;
}

/// Re-executes a transition sequence from the initial configuration, checking
/// endpoints, symbols and guards. Returns the configurations after each move, or
/// nullopt if the sequence is not a legal computation on `input`.
inline std::optional<std::vector<Configuration>> replay(const HvaMachine& m, std::u32string_view input,
                                                        std::span<const std::size_t> transitions) {
    std::vector<Configuration> out;
    Configuration c = initial_configuration(m);
    for (std::size_t ti : transitions) {
        if (ti >= m.transitions.size())
            return std::nullopt;
        const Transition& t = m.transitions[ti];
        if (t.from != c.state)
            return std::nullopt;
        if (t.symbol) {
            if (c.pos >= input.size() || input[c.pos] != *t.symbol)
                return std::nullopt;
        }
        if (!m.mode.blind && !guard_admits(t.guard, c.vector == m.initial_vector))
            return std::nullopt;
        c = Configuration{t.to, t.symbol ? c.pos + 1 : c.pos, vec_mul_mat(c.vector, t.matrix)};
        out.push_back(c);
    }
    return out;
}

/// True iff `trace` replays to exactly its recorded configurations and ends accepting.
inline bool audit_trace(const HvaMachine& m, std::u32string_view input, const std::vector<TraceStep>& trace) {
    std::vector<std::size_t> ids;
    ids.reserve(trace.size());
    for (const auto& s : trace)
        ids.push_back(s.transition);
    auto replayed = replay(m, input, ids);
    if (!replayed)
        return false;
    for (std::size_t i = 0; i < trace.size(); ++i)
        if ((*replayed)[i] != trace[i].after)
            return false;
    const Configuration last = trace.empty() ? initial_configuration(m) : trace.back().after;
    return is_accepting_configuration(m, last, input.size());
}

/// Largest |entry| over the initial vector and all matrices, if every entry is an integer.
inline std::optional<BigInt> max_abs_integer_entry(const HvaMachine& m) {
    BigInt best = 0;
    auto visit = [&](const Rational& r) {
        if (!r.is_integer())
            return false;
        best = std::max(best, BigInt(boost::multiprecision::abs(r.numerator())));
        return true;
    };
    for (const auto& e : m.initial_vector)
        if (!visit(e))
            return std::nullopt;
    for (const auto& t : m.transitions)
        for (std::size_t i = 0; i < t.matrix.dim(); ++i)
            for (std::size_t j = 0; j < t.matrix.dim(); ++j)
                if (!visit(t.matrix(i, j)))
                    return std::nullopt;
    return best;
}

/// m^(n+1) * k^n: the largest magnitude any entry can reach after n moves when
/// the initial vector and all matrices have entries in [-m, m].
inline BigInt growth_bound(const BigInt& m, std::size_t k, std::size_t n) {
    return boost::multiprecision::pow(m, static_cast<unsigned>(n + 1)) *
           boost::multiprecision::pow(BigInt(k), static_cast<unsigned>(n));
}

/// Incremental simulation of an epsilon-free machine, one symbol at a time.
///
/// The frontier holds every distinct (state, vector) reachable on the prefix read
/// so far, in discovery order, each with the transition path that first reached it.
class Simulator {
public:
    struct PathLink {
        std::size_t transition;
        std::shared_ptr<const PathLink> parent;
    };

    struct Live {
        StateId state;
        QVector vector;
        std::shared_ptr<const PathLink> path;
    };

    using Frontier = std::vector<Live>;

    explicit Simulator(const HvaMachine& m) : m_(m), table_(m) {
        if (m.has_epsilon())
            throw PreconditionError("incremental simulation needs an epsilon-free machine");
    }

    const HvaMachine& machine() const { return m_; }

    Frontier initial() const { return {Live{m_.start, m_.initial_vector, nullptr}}; }

    Frontier advance(const Frontier& frontier, std::size_t symbol) const {
        Frontier next;
        std::unordered_set<Configuration> seen;
        for (const Live& live : frontier) {
            const bool at_initial = live.vector == m_.initial_vector;
            for (std::size_t ti : table_.on_symbol(live.state, symbol)) {
                const Transition& t = m_.transitions[ti];
                if (!m_.mode.blind && !guard_admits(t.guard, at_initial))
                    continue;
                Configuration c{t.to, 0, vec_mul_mat(live.vector, t.matrix)};
                if (!seen.insert(c).second)
                    continue;
                next.push_back(Live{c.state, std::move(c.vector), std::make_shared<const PathLink>(PathLink{ti, live.path})});
            }
        }
        return next;
    }

    /// First accepting member of the frontier (end of input assumed), or nullptr.
    const Live* accepting(const Frontier& frontier) const {
        for (const Live& live : frontier)
            if (m_.is_accepting(live.state) && live.vector == m_.initial_vector)
                return &live;
        return nullptr;
    }

    static std::vector<std::size_t> path_of(const Live& live) {
        std::vector<std::size_t> out;
        for (auto p = live.path; p; p = p->parent)
            out.push_back(p->transition);
        std::reverse(out.begin(), out.end());
        return out;
    }

private:
    const HvaMachine& m_;
    TransitionTable table_;
};

} // namespace hva
