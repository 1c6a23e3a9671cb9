#pragma once

#include <functional>
#include <random>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "constructions.hpp"
#include "counter.hpp"
#include "free_group.hpp"
#include "stern_brocot.hpp"

namespace hva::zoo {

using Machine = std::variant<std::monostate, HvaMachine, EfaMachine, CounterMachine>;

/// Membership predicate over whole words.
using Oracle = std::function<bool(std::u32string_view)>;

/// Prefix predicate: false only if no extension of the prefix is in the language.
/// An empty function means "always viable".
using Viability = std::function<bool(std::u32string_view)>;

struct Params {
    std::size_t l = 2; // alphabet size for mpal_l
};

struct ZooEntry {
    std::string name;
    Machine machine; // monostate for oracle-only languages
    Oracle oracle;
    Viability viable;
    std::string notes;
};

struct UnknownEntry : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct CatalogItem {
    std::string name;
    std::string kind; // hva, efa, counter or oracle
    std::string notes;
};

namespace detail {

using Runs = std::vector<std::pair<Symbol, std::size_t>>;

/// Maximal blocks of equal symbols, left to right.
inline Runs runs(std::u32string_view w) {
    Runs out;
    for (Symbol s : w) {
        if (!out.empty() && out.back().first == s)
            ++out.back().second;
        else
            out.push_back({s, 1});
    }
    return out;
}

/// Block counts if `w` has the shape x1* x2* ... (each letter at most once, in order).
inline std::optional<std::vector<std::size_t>> shape(std::u32string_view w, std::u32string_view letters) {
    std::vector<std::size_t> counts(letters.size(), 0);
    std::size_t slot = 0;
    for (Symbol s : w) {
        while (slot < letters.size() && letters[slot] != s)
            ++slot;
        if (slot == letters.size())
            return std::nullopt;
        ++counts[slot];
    }
    return counts;
}

inline bool is_pow2(std::size_t x, std::size_t e) { return e < 63 && x == (std::size_t{1} << e); }

inline QMatrix scalar(Rational r) {
    QMatrix m(1);
    m(0, 0) = std::move(r);
    return m;
}

} // namespace detail

// ---------------------------------------------------------------------------
// Oracles. Each one decides membership straight from the language definition.

inline bool in_thm51(std::u32string_view w) {
    auto c = detail::shape(w, U"aba");
    if (!c)
        return false;
    std::size_t n = (*c)[0], m = (*c)[1], p = (*c)[2];
    return n == m || n == m + p;
}

inline bool in_upow(std::u32string_view w) {
    if (w.find_first_not_of(U'a') != std::u32string_view::npos)
        return false;
    for (std::size_t n = 1; n < 63; ++n) {
        std::size_t len = n + (std::size_t{1} << n);
        if (len == w.size())
            return true;
        if (len > w.size())
            break;
    }
    return false;
}

inline bool in_pow(std::u32string_view w) {
    auto c = detail::shape(w, U"ab");
    return c && detail::is_pow2((*c)[1], (*c)[0]);
}

inline bool in_pow_r(std::u32string_view w) {
    auto c = detail::shape(w, U"ab");
    return c && detail::is_pow2((*c)[0], (*c)[1]);
}

inline bool in_anbn(std::u32string_view w) {
    auto c = detail::shape(w, U"ab");
    return c && (*c)[1] == (*c)[0];
}

inline bool in_anb2n(std::u32string_view w) {
    auto c = detail::shape(w, U"ab");
    return c && (*c)[1] == 2 * (*c)[0];
}

inline bool in_union(std::u32string_view w) { return in_anbn(w) || in_anb2n(w); }

inline bool in_union_c(std::u32string_view w) {
    if (in_anbn(w))
        return true;
    return !w.empty() && w.back() == U'c' && in_anb2n(w.substr(0, w.size() - 1));
}

inline bool in_abc(std::u32string_view w) {
    auto c = detail::shape(w, U"abc");
    return c && (*c)[0] == (*c)[1] && (*c)[1] == (*c)[2];
}

inline bool in_l_bab(std::u32string_view w) {
    auto r = detail::runs(w);
    if (r.size() < 3 || r.size() % 2 == 0 || r[0].first != U'b')
        return false;
    for (std::size_t i = 0; i < r.size(); ++i)
        if (r[i].first != (i % 2 == 0 ? U'b' : U'a') || r[i].second != r[0].second)
            return false;
    return true;
}

inline bool in_ijk(std::u32string_view w) {
    auto c = detail::shape(w, U"abc");
    return c && ((*c)[0] != (*c)[1] || (*c)[1] > (*c)[2]);
}

/// Free reduction with a stack; capital letters are inverses.
inline bool in_wp_f2(std::u32string_view w) {
    std::u32string stack;
    for (Symbol s : w) {
        Symbol inv = s == U'a' ? U'A' : s == U'A' ? U'a' : s == U'b' ? U'B' : U'b';
        if (!stack.empty() && stack.back() == inv)
            stack.pop_back();
        else
            stack.push_back(s);
    }
    return stack.empty();
}

/// a/A drive the left factor and b/B the right one; each factor is then cyclic.
inline bool in_wp_f2xf2(std::u32string_view w) {
    long left = 0, right = 0;
    for (Symbol s : w) {
        left += s == U'a' ? 1 : s == U'A' ? -1 : 0;
        right += s == U'b' ? 1 : s == U'B' ? -1 : 0;
    }
    return left == 0 && right == 0;
}

/// w#w^r over the digit alphabet of size l.
inline Oracle mpal_oracle(std::size_t l) {
    return [l](std::u32string_view w) {
        auto hash = w.find(U'#');
        if (hash == std::u32string_view::npos || w.find(U'#', hash + 1) != std::u32string_view::npos)
            return false;
        for (Symbol s : w)
            if (s != U'#' && !stern_brocot::digit_letter(l, s))
                return false;
        auto left = w.substr(0, hash), right = w.substr(hash + 1);
        return std::equal(left.begin(), left.end(), right.rbegin(), right.rend());
    };
}

/// Numbers of a `t#a1#...#an#` instance (binary, least significant bit first), or
/// nullopt if the string is not such an instance with n >= 1.
inline std::optional<std::vector<BigInt>> subsetsum_numbers(std::u32string_view w) {
    std::vector<BigInt> out;
    BigInt value = 0, weight = 1;
    bool digits = false;
    for (Symbol s : w) {
        if (s == U'#') {
            if (!digits)
                return std::nullopt;
            out.push_back(value);
            value = 0;
            weight = 1;
            digits = false;
        } else if (s == U'0' || s == U'1') {
            if (s == U'1')
                value += weight;
            weight *= 2;
            digits = true;
        } else {
            return std::nullopt;
        }
    }
    if (digits || out.size() < 2)
        return std::nullopt;
    return out;
}

inline bool in_subsetsum_r(std::u32string_view w) {
    auto nums = subsetsum_numbers(w);
    if (!nums)
        return false;
    const std::size_t n = nums->size() - 1;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        BigInt sum = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (mask >> i & 1)
                sum += (*nums)[i + 1];
        if (sum == (*nums)[0])
            return true;
    }
    return false;
}

// ---------------------------------------------------------------------------
// Viability predicates for the exhaustive harness.

inline bool viable_pow(std::u32string_view w) {
    auto c = detail::shape(w, U"ab");
    return c && ((*c)[0] >= 63 || (*c)[1] <= (std::size_t{1} << (*c)[0]));
}

inline bool viable_pow_r(std::u32string_view w) {
    auto c = detail::shape(w, U"ab");
    if (!c)
        return false;
    if ((*c)[1] == 0)
        return true;
    for (std::size_t e = (*c)[1]; e < 63; ++e)
        if (detail::is_pow2((*c)[0], e))
            return true;
    return false;
}

inline bool viable_anbn(std::u32string_view w) {
    auto c = detail::shape(w, U"ab");
    return c && (*c)[1] <= (*c)[0];
}

inline bool viable_anb2n(std::u32string_view w) {
    auto c = detail::shape(w, U"ab");
    return c && (*c)[1] <= 2 * (*c)[0];
}

inline bool viable_abc(std::u32string_view w) {
    auto c = detail::shape(w, U"abc");
    return c && (*c)[1] <= (*c)[0] && ((*c)[2] == 0 || ((*c)[1] == (*c)[0] && (*c)[2] <= (*c)[1]));
}

inline bool viable_mpal(std::u32string_view w) {
    auto hash = w.find(U'#');
    if (hash == std::u32string_view::npos)
        return true;
    if (w.find(U'#', hash + 1) != std::u32string_view::npos)
        return false;
    auto left = w.substr(0, hash), right = w.substr(hash + 1);
    return right.size() <= left.size() && std::equal(right.begin(), right.end(), left.rbegin());
}

/// Any prefix of ([01]+#)*[01]* extends to a member: close the current number and append t.
inline bool viable_subsetsum_r(std::u32string_view w) {
    Symbol prev = U'#';
    for (Symbol s : w) {
        if (s == U'#' && prev == U'#')
            return false;
        prev = s;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Machines

inline HvaMachine thm51() {
    const QMatrix plus{{1, 0}, {1, 1}}, minus{{1, 0}, {-1, 1}}, id = QMatrix::identity(2);
    MachineBuilder b("thm51", ModeFlags{Head::realtime, Control::deterministic, false}, QVector{1, 1}, {U'a', U'b'});
    b.start("a_phase").accept("a_phase").accept("b_phase").accept("matched").accept("decrement");
    b.add("a_phase", U'a', "a_phase", plus);
    b.add("a_phase", U'b', "b_phase", minus);
    b.add("b_phase", U'b', "b_phase", minus);
    b.add("b_phase", U'a', Guard::eq, "matched", id);
    b.add("b_phase", U'a', Guard::neq, "decrement", minus);
    b.add("matched", U'a', "matched", id);
    b.add("decrement", U'a', "decrement", minus);
    return validated(b.build());
}

inline HvaMachine thm51_scalar() {
    const QMatrix twice = detail::scalar(2), half = detail::scalar(Rational(1, 2)), id = detail::scalar(1);
    MachineBuilder b("thm51_scalar", ModeFlags{Head::realtime, Control::deterministic, false}, QVector{1},
                     {U'a', U'b'});
    b.start("a_phase").accept("a_phase").accept("b_phase").accept("matched").accept("decrement");
    b.add("a_phase", U'a', "a_phase", twice);
    b.add("a_phase", U'b', "b_phase", half);
    b.add("b_phase", U'b', "b_phase", half);
    b.add("b_phase", U'a', Guard::eq, "matched", id);
    b.add("b_phase", U'a', Guard::neq, "decrement", half);
    b.add("matched", U'a', "matched", id);
    b.add("decrement", U'a', "decrement", half);
    return validated(b.build());
}

inline QMatrix upow_u1() { return QMatrix{{1, 1, 0}, {1, 1, 0}, {0, 0, 1}}; }
inline QMatrix upow_u2() { return QMatrix{{1, 0, 0}, {0, 0, 0}, {-1, 1, 1}}; }

/// a^(n + 2^n), n >= 1. U1 doubles for n symbols, one symbol marks the guess
/// without touching the vector, then U2 counts the first entry down to 1.
inline HvaMachine upow() {
    MachineBuilder b("upow", ModeFlags{Head::realtime, Control::nondeterministic, true}, QVector{1, 1, 1}, {U'a'});
    b.start("first").accept("count");
    b.add("first", U'a', "double", upow_u1());
    b.add("double", U'a', "double", upow_u1());
    b.add("double", U'a', "count", QMatrix::identity(3));
    b.add("count", U'a', "count", upow_u2());
    return validated(b.build());
}

/// U1 then U2 with no separate guess step; accepts a^(n + 2^n - 1) instead.
inline HvaMachine upow_without_guess_step() {
    MachineBuilder b("upow_without_guess_step", ModeFlags{Head::realtime, Control::nondeterministic, true},
                     QVector{1, 1, 1}, {U'a'});
    b.start("first").accept("count");
    b.add("first", U'a', "double", upow_u1());
    b.add("double", U'a', "double", upow_u1());
    b.add("double", U'a', "count", upow_u2());
    b.add("count", U'a', "count", upow_u2());
    return validated(b.build());
}

inline HvaMachine subsetsum_r() {
    const QMatrix t0{{1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}, {0, 0, 1, 1, 0}, {0, 0, 1, 1, 0}, {0, 0, 0, 0, 1}};
    const QMatrix t1{{1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}, {1, 0, 1, 1, 0}, {0, 0, 1, 1, 0}, {0, 0, 0, 0, 1}};
    const QMatrix sep{{1, 0, 0, 0, 0}, {-1, 0, 0, 0, 0}, {0, 0, 0, 0, 0}, {0, 0, 0, 0, 0}, {0, 0, 1, 1, 1}};
    const QMatrix a0{{1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}, {0, 0, 1, 1, 0}, {0, 0, 1, 1, 0}, {0, 0, 0, 0, 1}};
    const QMatrix a1{{1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}, {0, 1, 1, 1, 0}, {0, 0, 1, 1, 0}, {0, 0, 0, 0, 1}};
    const QMatrix id = QMatrix::identity(5);
    MachineBuilder b("subsetsum_r", ModeFlags{Head::realtime, Control::nondeterministic, true},
                     QVector{0, 0, 1, 1, 1}, {U'0', U'1', U'#'});
    b.start("target").accept("between");
    // t, least significant bit first, into entry 1
    for (const char* q : {"target", "target_digits"}) {
        b.add(q, U'0', "target_digits", t0);
        b.add(q, U'1', "target_digits", t1);
    }
    b.add("target_digits", U'#', "first_number", sep);
    // each a_i is either read into entry 2 and subtracted at '#', or skipped
    for (const char* q : {"first_number", "between"}) {
        b.add(q, U'0', "selected", a0);
        b.add(q, U'1', "selected", a1);
        b.add(q, U'0', "skipped", id);
        b.add(q, U'1', "skipped", id);
    }
    b.add("selected", U'0', "selected", a0);
    b.add("selected", U'1', "selected", a1);
    b.add("skipped", U'0', "skipped", id);
    b.add("skipped", U'1', "skipped", id);
    b.add("selected", U'#', "between", sep);
    b.add("skipped", U'#', "between", sep);
    return validated(b.build());
}

/// Digit alphabet of MPAL_l in letter order a1..al, followed by '#'.
inline std::vector<Symbol> mpal_alphabet(std::size_t l) {
    std::vector<Symbol> out;
    for (std::size_t j = 1; j <= l; ++j)
        out.push_back(static_cast<Symbol>(stern_brocot::letter_digit(l, j)));
    out.push_back(U'#');
    return out;
}

/// w#w^r: encode w with A_j, then undo it with A_j^-1 while reading w^r.
inline HvaMachine mpal_l(std::size_t l) {
    if (l < 2 || l > 10)
        throw std::invalid_argument("mpal_l needs 2 <= l <= 10 (one digit per letter)");
    MachineBuilder b("mpal_l" + std::to_string(l), ModeFlags{Head::realtime, Control::deterministic, true},
                     QVector::ones(l), mpal_alphabet(l));
    b.start("encode").accept("decode");
    for (std::size_t j = 1; j <= l; ++j)
        b.add("encode", static_cast<Symbol>(stern_brocot::letter_digit(l, j)), "encode",
              stern_brocot::alphabet_matrix(l, j));
    b.add("encode", U'#', "decode", QMatrix::identity(l));
    for (std::size_t j = 1; j <= l; ++j)
        b.add("decode", static_cast<Symbol>(stern_brocot::letter_digit(l, j)), "decode",
              mat_inverse(stern_brocot::alphabet_matrix(l, j)));
    return validated(b.build());
}

inline QMatrix pow_reset() { return QMatrix{{1, 0, 0}, {0, 0, 0}, {0, 1, 1}}; }
inline QMatrix pow_decrement() { return QMatrix{{1, 0, 0}, {0, 1, 0}, {-1, 0, 1}}; }

/// a^n b^(2^n): double with U1 on a's, reset entry 2 on the first b, then count down.
inline HvaMachine pow() {
    MachineBuilder b("pow", ModeFlags{Head::realtime, Control::deterministic, true}, QVector{1, 1, 1}, {U'a', U'b'});
    b.start("as").accept("bs");
    b.add("as", U'a', "as", upow_u1());
    b.add("as", U'b', "bs", pow_reset());
    b.add("bs", U'b', "bs", pow_decrement());
    return validated(b.build());
}

/// a^(2^n) b^n: the first a leaves [1,1] alone, later a's add 1 to entry 1, b's halve it.
inline HvaMachine pow_r() {
    const QMatrix inc{{1, 0}, {1, 1}};
    QMatrix half = QMatrix::identity(2);
    half(0, 0) = Rational(1, 2);
    MachineBuilder b("pow_r", ModeFlags{Head::realtime, Control::deterministic, true}, QVector{1, 1}, {U'a', U'b'});
    b.start("start").accept("as").accept("bs");
    b.add("start", U'a', "as", QMatrix::identity(2));
    b.add("as", U'a', "as", inc);
    b.add("as", U'b', "bs", half);
    b.add("bs", U'b', "bs", half);
    return validated(b.build());
}

// Counter machines

namespace detail {

inline CounterMachine counter_machine(std::string name, std::vector<Symbol> alphabet, std::vector<std::string> states,
                                      std::vector<StateId> accept, std::size_t k, bool blind) {
    CounterMachine m;
    m.name = std::move(name);
    m.alphabet = std::move(alphabet);
    m.states = std::move(states);
    m.accept = std::move(accept);
    m.counters = k;
    m.blind = blind;
    return m;
}

} // namespace detail

/// Blind one-counter machine for a^n b^n.
inline CounterMachine anbn_counter() {
    auto m = detail::counter_machine("anbn", {U'a', U'b'}, {"as", "bs"}, {0, 1}, 1, true);
    m.transitions = {{0, U'a', std::nullopt, 0, {1}}, {0, U'b', std::nullopt, 1, {-1}}, {1, U'b', std::nullopt, 1, {-1}}};
    return m;
}

/// Blind one-counter machine for a^n b^2n: every second b decrements.
inline CounterMachine anb2n_counter() {
    auto m = detail::counter_machine("anb2n", {U'a', U'b'}, {"as", "odd_b", "even_b"}, {0, 2}, 1, true);
    m.transitions = {{0, U'a', std::nullopt, 0, {1}},
                     {0, U'b', std::nullopt, 1, {0}},
                     {1, U'b', std::nullopt, 2, {-1}},
                     {2, U'b', std::nullopt, 1, {0}}};
    return m;
}

/// Blind two-counter machine for a^n b^n c^n.
inline CounterMachine abc_counters() {
    auto m = detail::counter_machine("abc_counters", {U'a', U'b', U'c'}, {"as", "bs", "cs"}, {0, 1, 2}, 2, true);
    m.transitions = {{0, U'a', std::nullopt, 0, {1, 0}},
                     {0, U'b', std::nullopt, 1, {-1, 1}},
                     {1, U'b', std::nullopt, 1, {-1, 1}},
                     {1, U'c', std::nullopt, 2, {0, -1}},
                     {2, U'c', std::nullopt, 2, {0, -1}}};
    return m;
}

/// Non-blind one-counter machine for a^n b^n that tests the counter before each b.
inline CounterMachine anbn_1ca() {
    auto m = detail::counter_machine("anbn_1ca", {U'a', U'b'}, {"as", "bs"}, {0, 1}, 1, false);
    m.accept_on_zero = true;
    m.transitions = {{0, U'a', std::vector<bool>{true}, 0, {1}},
                     {0, U'a', std::vector<bool>{false}, 0, {1}},
                     {0, U'b', std::vector<bool>{false}, 1, {-1}},
                     {1, U'b', std::vector<bool>{false}, 1, {-1}}};
    return m;
}

inline HvaMachine anbn() { return simulate_blind_counters(anbn_counter()); }
inline HvaMachine anb2n() { return simulate_blind_counters(anb2n_counter()); }

/// The single word "c", as a blind machine of dimension 1.
inline HvaMachine single_c() {
    MachineBuilder b("c", ModeFlags{Head::realtime, Control::deterministic, true}, QVector{1}, {U'c'});
    b.start("before").accept("after");
    b.add("before", U'c', "after", QMatrix::identity(1));
    return validated(b.build());
}

/// a^n b^n or a^n b^2n: nondeterministic union of the two blind machines.
inline HvaMachine union_machine() {
    auto m = union_nondet(anbn(), anb2n());
    m.name = "union";
    return m;
}

/// a^n b^n or a^n b^2n c.
inline HvaMachine union_c_machine() {
    auto m = union_nondet(anbn(), concat_nondet(anb2n(), single_c()));
    m.name = "union_c";
    return m;
}

// EFAs

inline EfaMachine wp_f2() {
    EfaMachine e;
    e.name = "wp_f2";
    e.group = GroupKind::F2;
    e.alphabet = {U'a', U'A', U'b', U'B'};
    e.states = {"q"};
    e.accept = {0};
    for (char c : {'a', 'A', 'b', 'B'})
        e.transitions.push_back(EfaTransition{0, static_cast<Symbol>(c), 0, GroupWord::reduce(std::string(1, c))});
    return e;
}

inline EfaMachine wp_f2xf2() {
    EfaMachine e;
    e.name = "wp_f2xf2";
    e.group = GroupKind::F2xF2;
    e.alphabet = {U'a', U'A', U'b', U'B'};
    e.states = {"q"};
    e.accept = {0};
    for (char c : {'a', 'A'})
        e.transitions.push_back(EfaTransition{0, static_cast<Symbol>(c), 0, GroupPair{GroupWord::reduce(std::string(1, c)), {}}});
    for (char c : {'b', 'B'})
        e.transitions.push_back(EfaTransition{0, static_cast<Symbol>(c), 0, GroupPair{{}, GroupWord::reduce(std::string(1, c))}});
    return e;
}

// ---------------------------------------------------------------------------
// Catalog

inline const std::vector<CatalogItem>& catalog() {
    static const std::vector<CatalogItem> items = {
        {"thm51", "hva", "rtDHVA(2): a^n b^m a^p with n = m or n = m + p; a counter in entry 1, the guard spots n = m"},
        {"thm51_scalar", "hva", "rtDHVA(1): the thm51 language with scalars 2 and 1/2"},
        {"upow", "hva", "rtNBHVA(3): a^(n + 2^n), n >= 1; doubling, a guessed switch, then counting down"},
        {"subsetsum_r", "hva", "rtNBHVA(5): t#a1#...#an# (binary, LSB first) with a subset of the a_i summing to t"},
        {"mpal_l", "hva", "rtDBHVA(l): w#w^r over l digits; Stern-Brocot encoding, then the inverse matrices"},
        {"pow", "hva", "rtDBHVA(3): a^n b^(2^n); doubling, a reset on the first b, then counting down"},
        {"pow_r", "hva", "rtDBHVA(2): a^(2^n) b^n; counting a's, halving on b's"},
        {"anbn", "hva", "rtDBHVA(2): a^n b^n, simulating a blind one-counter machine"},
        {"anb2n", "hva", "rtDBHVA(2): a^n b^2n, simulating a blind one-counter machine"},
        {"union", "hva", "rtNBHVA(4): a^n b^n or a^n b^2n, nondeterministic union of anbn and anb2n; no deterministic HVA exists"},
        {"union_c", "hva", "rtNBHVA(5): a^n b^n or a^n b^2n c, union with a concatenation; no deterministic HVA exists"},
        {"anbn_1ca", "counter", "non-blind one-counter machine for a^n b^n, accepting with an empty counter"},
        {"abc_counters", "counter", "blind two-counter machine for a^n b^n c^n"},
        {"wp_f2", "efa", "EFA over F2: words over a, A, b, B that reduce to the identity"},
        {"wp_f2xf2", "efa", "EFA over F2 x F2: a/A drive the left factor, b/B the right one"},
        {"l_bab", "oracle", "b^n (a^n b^n)^k with n, k >= 1; no deterministic HVA exists"},
        {"ijk", "oracle", "a^i b^j c^k with i != j or j > k; no deterministic HVA exists"},
    };
    return items;
}

/// Membership oracle for any catalog name.
inline Oracle oracle(std::string_view name, const Params& params = {}) {
    if (name == "thm51" || name == "thm51_scalar")
        return in_thm51;
    if (name == "upow")
        return in_upow;
    if (name == "subsetsum_r")
        return in_subsetsum_r;
    if (name == "mpal_l")
        return mpal_oracle(params.l);
    if (name == "pow")
        return in_pow;
    if (name == "pow_r")
        return in_pow_r;
    if (name == "anbn" || name == "anbn_1ca")
        return in_anbn;
    if (name == "anb2n")
        return in_anb2n;
    if (name == "union")
        return in_union;
    if (name == "union_c")
        return in_union_c;
    if (name == "abc_counters")
        return in_abc;
    if (name == "wp_f2")
        return in_wp_f2;
    if (name == "wp_f2xf2")
        return in_wp_f2xf2;
    if (name == "l_bab")
        return in_l_bab;
    if (name == "ijk")
        return in_ijk;
    throw UnknownEntry("unknown zoo entry '" + std::string(name) + "'");
}

/// Prefix viability for names that have one; an empty function otherwise.
inline Viability viability(std::string_view name) {
    if (name == "pow")
        return viable_pow;
    if (name == "pow_r")
        return viable_pow_r;
    if (name == "mpal_l")
        return viable_mpal;
    if (name == "subsetsum_r")
        return viable_subsetsum_r;
    if (name == "anbn" || name == "anbn_1ca")
        return viable_anbn;
    if (name == "anb2n" || name == "union")
        return viable_anb2n;
    if (name == "abc_counters")
        return viable_abc;
    return {};
}

inline ZooEntry build(std::string_view name, const Params& params = {}) {
    auto it = std::find_if(catalog().begin(), catalog().end(), [&](const CatalogItem& c) { return c.name == name; });
    if (it == catalog().end())
        throw UnknownEntry("unknown zoo entry '" + std::string(name) + "'");
    ZooEntry e{it->name, std::monostate{}, oracle(name, params), viability(name), it->notes};
    if (name == "thm51")
        e.machine = thm51();
    else if (name == "thm51_scalar")
        e.machine = thm51_scalar();
    else if (name == "upow")
        e.machine = upow();
    else if (name == "subsetsum_r")
        e.machine = subsetsum_r();
    else if (name == "mpal_l")
        e.machine = mpal_l(params.l);
    else if (name == "pow")
        e.machine = pow();
    else if (name == "pow_r")
        e.machine = pow_r();
    else if (name == "anbn")
        e.machine = anbn();
    else if (name == "anb2n")
        e.machine = anb2n();
    else if (name == "union")
        e.machine = union_machine();
    else if (name == "union_c")
        e.machine = union_c_machine();
    else if (name == "anbn_1ca")
        e.machine = anbn_1ca();
    else if (name == "abc_counters")
        e.machine = abc_counters();
    else if (name == "wp_f2")
        e.machine = wp_f2();
    else if (name == "wp_f2xf2")
        e.machine = wp_f2xf2();
    return e;
}

// ---------------------------------------------------------------------------
// SUBSETSUM_r inputs

/// Every instance t#a1#...#an# with 1 <= n <= max_numbers and every number a
/// bit string of length 1..max_bits, depth first so neighbours share long prefixes.
inline void subsetsum_instances(std::size_t max_numbers, std::size_t max_bits,
                                const std::function<void(std::u32string_view)>& emit) {
    std::u32string word;
    std::function<void(std::size_t)> number = [&](std::size_t done) {
        // word ends right after a '#'; `done` numbers (t included) are complete
        if (done >= 2)
            emit(word);
        if (done == max_numbers + 1)
            return;
        std::function<void(std::size_t)> bits = [&](std::size_t len) {
            if (len > 0) {
                word.push_back(U'#');
                number(done + 1);
                word.pop_back();
            }
            if (len == max_bits)
                return;
            for (Symbol b : {U'0', U'1'}) {
                word.push_back(b);
                bits(len + 1);
                word.pop_back();
            }
        };
        bits(0);
    };
    number(0);
}

/// Random strings over "01#" of length 1..max_len that are not instances.
inline std::vector<std::u32string> subsetsum_ill_formed(std::size_t count, std::size_t max_len, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> length(1, max_len), letter(0, 2);
    const Symbol letters[3] = {U'0', U'1', U'#'};
    std::vector<std::u32string> out;
    while (out.size() < count) {
        std::u32string w(length(rng), U'0');
        for (auto& s : w)
            s = letters[letter(rng)];
        if (!subsetsum_numbers(w))
            out.push_back(std::move(w));
    }
    return out;
}

} // namespace hva::zoo
