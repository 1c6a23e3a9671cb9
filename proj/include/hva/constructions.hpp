#pragma once

#include <string>

#include "counter.hpp"
#include "machine.hpp"

namespace hva {

namespace detail {

inline void require_valid(const HvaMachine& m, const char* op) {
    if (auto vs = validate(m); !vs.empty())
        throw PreconditionError(std::string(op) + ": operand '" + m.name + "' is invalid: " + to_string(vs.front().code) +
                                " " + vs.front().detail);
}

inline void require_realtime(const HvaMachine& m, const char* op) {
    if (m.has_epsilon())
        throw PreconditionError(std::string(op) + ": operand '" + m.name + "' has epsilon moves; real-time operands only");
}

inline void require_same_blindness(const HvaMachine& x, const HvaMachine& y, const char* op) {
    if (x.mode.blind != y.mode.blind)
        throw PreconditionError(std::string(op) + ": operands must be both blind or both non-blind");
}

inline QMatrix lift_left(const QMatrix& m, std::size_t right_dim) { return block_diag(m, QMatrix::identity(right_dim)); }
inline QMatrix lift_right(std::size_t left_dim, const QMatrix& m) { return block_diag(QMatrix::identity(left_dim), m); }

inline std::string pair_name(const std::string& p, const std::string& q) { return "(" + p + "," + q + ")"; }

} // namespace detail

/// Blind k-counter machine -> deterministic blind HVA of dimension k+1.
///
/// Entry i holds 1 + counter i, the last entry stays 1, and the all-ones initial
/// vector comes back exactly when every counter is zero.
inline HvaMachine simulate_blind_counters(const CounterMachine& m) {
    if (auto problems = validate_counter(m); !problems.empty())
        throw PreconditionError("simulate_blind_counters: " + problems.front());
    if (!m.blind)
        throw PreconditionError("simulate_blind_counters: counter machine is not blind (use simulate_counter_nonblind)");
    const std::size_t k = m.counters;
    MachineBuilder b(m.name, ModeFlags{Head::realtime, Control::deterministic, true}, QVector::ones(k + 1), m.alphabet);
    for (const auto& s : m.states)
        b.state(s);
    b.start(m.states[m.start]);
    for (StateId q : m.accept)
        b.accept(m.states[q]);
    for (const auto& t : m.transitions) {
        QMatrix u = QMatrix::identity(k + 1);
        for (std::size_t i = 0; i < k; ++i)
            u(k, i) = t.increments[i];
        b.add(m.states[t.from], t.symbol, m.states[t.to], std::move(u));
    }
    return validated(b.build());
}

/// Non-blind one-counter machine accepting on zero -> deterministic HVA of dimension 2.
///
/// Counter c is carried as [1+c, 1] over the initial vector [1, 1], so a zero
/// test becomes the eq/neq observation of the vector.
inline HvaMachine simulate_counter_nonblind(const CounterMachine& m) {
    if (auto problems = validate_counter(m); !problems.empty())
        throw PreconditionError("simulate_counter_nonblind: " + problems.front());
    if (m.blind)
        throw PreconditionError("simulate_counter_nonblind: counter machine is blind (use simulate_blind_counters)");
    if (m.counters != 1)
        throw PreconditionError("simulate_counter_nonblind: only one counter is supported; the vector cannot be "
                                "checked entry by entry");
    if (!m.accept_on_zero)
        throw PreconditionError("simulate_counter_nonblind: the counter machine must accept with an empty counter");
    MachineBuilder b(m.name, ModeFlags{Head::realtime, Control::deterministic, false}, QVector{1, 1}, m.alphabet);
    for (const auto& s : m.states)
        b.state(s);
    b.start(m.states[m.start]);
    for (StateId q : m.accept)
        b.accept(m.states[q]);
    for (const auto& t : m.transitions) {
        const Guard g = (*t.zero_pattern)[0] ? Guard::eq : Guard::neq;
        b.add(m.states[t.from], t.symbol, g, m.states[t.to], QMatrix{{1, 0}, {t.increments[0], 1}});
    }
    return validated(b.build());
}

/// Product with a DFA: same vector, states are pairs, accept when both components accept.
inline HvaMachine intersect_regular(const HvaMachine& v, const Dfa& d) {
    detail::require_valid(v, "intersect_regular");
    detail::require_realtime(v, "intersect_regular");
    if (auto problems = validate_dfa(d); !problems.empty())
        throw PreconditionError("intersect_regular: " + problems.front());

    ModeFlags mode = v.mode;
    mode.head = Head::realtime;
    MachineBuilder b(v.name + "&" + d.name, mode, v.initial_vector, merge_alphabets(v.alphabet, d.alphabet));
    for (const auto& p : v.states)
        for (const auto& q : d.states)
            b.state(detail::pair_name(p, q));
    b.start(detail::pair_name(v.states[v.start], d.states[d.start]));
    for (StateId p = 0; p < v.states.size(); ++p)
        for (StateId q = 0; q < d.states.size(); ++q) {
            if (v.is_accepting(p) && d.is_accepting(q))
                b.accept(detail::pair_name(v.states[p], d.states[q]));
            for (const auto& t : v.transitions) {
                if (t.from != p)
                    continue;
                auto s = symbol_index(d.alphabet, *t.symbol);
                if (!s)
                    continue; // the DFA dies on symbols outside its alphabet
                b.add(detail::pair_name(v.states[p], d.states[q]), t.symbol, t.guard,
                      detail::pair_name(v.states[t.to], d.states[d.delta[q][*s]]), t.matrix);
            }
        }
    return validated(b.build());
}

/// Intersection of blind machines: paired states, block-diagonal matrices, initial vector [v1 v2].
inline HvaMachine intersect_blind(const HvaMachine& x, const HvaMachine& y) {
    detail::require_valid(x, "intersect_blind");
    detail::require_valid(y, "intersect_blind");
    if (!x.mode.blind || !y.mode.blind)
        throw PreconditionError("intersect_blind: both operands must be blind");
    detail::require_realtime(x, "intersect_blind");
    detail::require_realtime(y, "intersect_blind");

    const bool det = x.mode.control == Control::deterministic && y.mode.control == Control::deterministic;
    MachineBuilder b(x.name + "&" + y.name,
                     ModeFlags{Head::realtime, det ? Control::deterministic : Control::nondeterministic, true},
                     concat(x.initial_vector, y.initial_vector), merge_alphabets(x.alphabet, y.alphabet));
    for (const auto& p : x.states)
        for (const auto& q : y.states)
            b.state(detail::pair_name(p, q));
    b.start(detail::pair_name(x.states[x.start], y.states[y.start]));
    for (StateId p = 0; p < x.states.size(); ++p)
        for (StateId q = 0; q < y.states.size(); ++q) {
            if (x.is_accepting(p) && y.is_accepting(q))
                b.accept(detail::pair_name(x.states[p], y.states[q]));
            for (const auto& t1 : x.transitions) {
                if (t1.from != p)
                    continue;
                for (const auto& t2 : y.transitions) {
                    if (t2.from != q || t2.symbol != t1.symbol)
                        continue;
                    b.add(detail::pair_name(x.states[p], y.states[q]), t1.symbol,
                          detail::pair_name(x.states[t1.to], y.states[t2.to]), block_diag(t1.matrix, t2.matrix));
                }
            }
        }
    return validated(b.build());
}

/// Union by nondeterministic commitment on the first move. The committed
/// operand runs on its own block while the other block is held by the identity.
inline HvaMachine union_nondet(const HvaMachine& x, const HvaMachine& y) {
    detail::require_valid(x, "union_nondet");
    detail::require_valid(y, "union_nondet");
    detail::require_same_blindness(x, y, "union_nondet");
    detail::require_realtime(x, "union_nondet");
    detail::require_realtime(y, "union_nondet");

    const std::size_t k1 = x.dimension, k2 = y.dimension;
    MachineBuilder b(x.name + "|" + y.name, ModeFlags{Head::realtime, Control::nondeterministic, x.mode.blind},
                     concat(x.initial_vector, y.initial_vector), merge_alphabets(x.alphabet, y.alphabet));
    const std::string fresh = "union";
    b.start(fresh);
    if (x.is_accepting(x.start) || y.is_accepting(y.start))
        b.accept(fresh);

    auto embed = [&](const HvaMachine& m, const std::string& tag, auto lift) {
        for (const auto& s : m.states)
            b.state(tag + s);
        for (StateId q : m.accept)
            b.accept(tag + m.states[q]);
        for (const auto& t : m.transitions)
            b.add(tag + m.states[t.from], t.symbol, t.guard, tag + m.states[t.to], lift(t.matrix));
        for (const auto& t : m.transitions)
            if (t.from == m.start)
                b.add(fresh, t.symbol, t.guard, tag + m.states[t.to], lift(t.matrix));
    };
    embed(x, "L:", [&](const QMatrix& m) { return detail::lift_left(m, k2); });
    embed(y, "R:", [&](const QMatrix& m) { return detail::lift_right(k1, m); });
    return validated(b.build());
}

/// Concatenation: run x on the left block, guess the seam at an x-accept state,
/// then run y on the right block with x's block frozen. The final homing check
/// verifies both blocks; non-blind machines also certify x's block at the seam.
inline HvaMachine concat_nondet(const HvaMachine& x, const HvaMachine& y) {
    detail::require_valid(x, "concat_nondet");
    detail::require_valid(y, "concat_nondet");
    detail::require_same_blindness(x, y, "concat_nondet");
    detail::require_realtime(x, "concat_nondet");
    detail::require_realtime(y, "concat_nondet");

    const std::size_t k1 = x.dimension, k2 = y.dimension;
    const bool blind = x.mode.blind;
    MachineBuilder b(x.name + "." + y.name, ModeFlags{Head::realtime, Control::nondeterministic, blind},
                     concat(x.initial_vector, y.initial_vector), merge_alphabets(x.alphabet, y.alphabet));
    b.start("L:" + x.states[x.start]);
    for (const auto& s : x.states)
        b.state("L:" + s);
    for (const auto& s : y.states)
        b.state("R:" + s);
    for (StateId q : y.accept)
        b.accept("R:" + y.states[q]);
    if (y.is_accepting(y.start))
        for (StateId q : x.accept)
            b.accept("L:" + x.states[q]);

    for (const auto& t : x.transitions)
        b.add("L:" + x.states[t.from], t.symbol, t.guard, "L:" + x.states[t.to], detail::lift_left(t.matrix, k2));
    for (const auto& t : y.transitions)
        b.add("R:" + y.states[t.from], t.symbol, t.guard, "R:" + y.states[t.to], detail::lift_right(k1, t.matrix));
    for (StateId a : x.accept)
        for (const auto& t : y.transitions) {
            if (t.from != y.start)
                continue;
            if (!blind && t.guard == Guard::neq)
                continue; // y's vector is at its initial value on its first move
            b.add("L:" + x.states[a], t.symbol, blind ? Guard::any : Guard::eq, "R:" + y.states[t.to],
                  detail::lift_right(k1, t.matrix));
        }
    return validated(b.build());
}

/// Kleene star of a non-blind machine. A fresh accepting start state covers the
/// empty word; at every later seam the eq observation certifies that the
/// previous factor returned the vector home before x restarts.
inline HvaMachine star_nondet(const HvaMachine& x) {
    detail::require_valid(x, "star_nondet");
    if (x.mode.blind)
        throw PreconditionError("star_nondet: operand must be non-blind; a blind machine cannot certify the vector "
                                "at intermediate seams");
    detail::require_realtime(x, "star_nondet");

    MachineBuilder b(x.name + "*", ModeFlags{Head::realtime, Control::nondeterministic, false}, x.initial_vector,
                     x.alphabet);
    const std::string fresh = "star";
    b.start(fresh).accept(fresh);
    for (const auto& s : x.states)
        b.state("1:" + s);
    for (StateId q : x.accept)
        b.accept("1:" + x.states[q]);
    for (const auto& t : x.transitions)
        b.add("1:" + x.states[t.from], t.symbol, t.guard, "1:" + x.states[t.to], t.matrix);
    for (const auto& t : x.transitions) {
        if (t.from != x.start)
            continue;
        b.add(fresh, t.symbol, t.guard, "1:" + x.states[t.to], t.matrix);
        if (t.guard == Guard::neq)
            continue;
        for (StateId a : x.accept)
            b.add("1:" + x.states[a], t.symbol, Guard::eq, "1:" + x.states[t.to], t.matrix);
    }
    return validated(b.build());
}

} // namespace hva
