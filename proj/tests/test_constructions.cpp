#include <catch_amalgamated.hpp>

#include "hva/check.hpp"
#include "hva/constructions.hpp"
#include "hva/zoo.hpp"

using namespace hva;

namespace {

/// a*b* over {a, b}.
Dfa astar_bstar() { return Dfa{"astar_bstar", {U'a', U'b'}, {"as", "bs", "dead"}, 0, {0, 1}, {{0, 1}, {2, 1}, {2, 2}}}; }

Dfa everything(std::vector<Symbol> sigma) {
    return Dfa{"all", sigma, {"q"}, 0, {0}, {std::vector<StateId>(sigma.size(), 0)}};
}

/// The single word "ab", non-blind.
HvaMachine ab_nonblind() {
    MachineBuilder b("ab", ModeFlags{Head::realtime, Control::nondeterministic, false}, QVector{1}, {U'a', U'b'});
    b.start("s").accept("f");
    b.add("s", U'a', "m", QMatrix{{2}});
    b.add("m", U'b', "f", QMatrix{{Rational(1, 2)}});
    return validated(b.build());
}

bool in_ab_star(std::u32string_view w) {
    if (w.size() % 2)
        return false;
    for (std::size_t i = 0; i < w.size(); i += 2)
        if (w[i] != U'a' || w[i + 1] != U'b')
            return false;
    return true;
}

bool in_anbn_c(std::u32string_view w) {
    return !w.empty() && w.back() == U'c' && zoo::in_anbn(w.substr(0, w.size() - 1));
}

/// Exhaustive agreement with `oracle` up to `max_len`, reported through Catch.
void agrees(const HvaMachine& m, const zoo::Oracle& oracle, std::size_t max_len) {
    auto report = check(m, oracle, max_len);
    INFO(m.name << ": " << describe(report));
    CHECK(report.ok());
    CHECK(report.covered == word_count(m.alphabet.size(), max_len));
}

} // namespace

TEST_CASE("counter machines run directly", "[counter]") {
    auto abc = zoo::abc_counters();
    CHECK(run_counter(abc, U"abc"));
    CHECK_FALSE(run_counter(abc, U"ab"));
    CHECK(run_counter(abc, U""));
    CHECK(run_counter(abc, U"aabbcc"));
    CHECK_FALSE(run_counter(abc, U"aabcc"));
    CHECK_THROWS_AS(run_counter(abc, U"abd"), UnknownSymbolError);

    auto one = zoo::anbn_1ca();
    CHECK(run_counter(one, U"aabb"));
    CHECK_FALSE(run_counter(one, U"b"));
    CHECK_FALSE(run_counter(one, U"abb"));
}

TEST_CASE("blind counter simulation", "[counter][simulate]") {
    auto m = simulate_blind_counters(zoo::anbn_counter());
    CHECK(m.dimension == 2);
    CHECK(m.initial_vector == QVector{1, 1});
    CHECK(m.mode == ModeFlags{Head::realtime, Control::deterministic, true});
    CHECK(m.transitions[0].matrix == QMatrix{{1, 0}, {1, 1}});
    CHECK(vec_mul_mat(m.initial_vector, m.transitions[0].matrix) == QVector{2, 1});
    CHECK(m.transitions[1].matrix == QMatrix{{1, 0}, {-1, 1}});

    auto idle = simulate_blind_counters(zoo::anb2n_counter());
    CHECK(idle.transitions[1].matrix.is_identity());

    auto abc = zoo::abc_counters();
    auto sim = simulate_blind_counters(abc);
    CHECK(sim.dimension == 3);
    CHECK(validate(sim).empty());
    agrees(sim, [&](std::u32string_view w) { return run_counter(abc, w); }, 12);
    agrees(sim, zoo::in_abc, 12);

    CHECK_THROWS_AS(simulate_blind_counters(zoo::anbn_1ca()), PreconditionError);
}

TEST_CASE("simulated vectors track the counters", "[counter][simulate][property]") {
    auto abc = zoo::abc_counters();
    auto sim = simulate_blind_counters(abc);
    for (const auto& w : {std::u32string(U"aabbcc"), std::u32string(U"aaabbc"), std::u32string(U"abbcc")}) {
        auto counters = counter_trace(abc, w);
        QVector v = sim.initial_vector;
        StateId q = sim.start;
        for (std::size_t i = 0; i < w.size() && i + 1 < counters.counters.size(); ++i) {
            auto next = step(sim, Configuration{q, i, v}, w);
            REQUIRE(next.size() == 1);
            q = next[0].state;
            v = next[0].vector;
            for (std::size_t c = 0; c < abc.counters; ++c)
                CHECK(v[c] == Rational(1 + counters.counters[i + 1][c]));
            CHECK(v[abc.counters] == 1);
        }
    }
}

TEST_CASE("non-blind one-counter simulation", "[counter][simulate]") {
    auto c = zoo::anbn_1ca();
    auto m = simulate_counter_nonblind(c);
    CHECK(m.dimension == 2);
    CHECK(m.initial_vector == QVector{1, 1});
    CHECK_FALSE(m.mode.blind);
    CHECK(run(m, U"aabb").outcome == Outcome::accept);
    CHECK(run(m, U"aab").outcome == Outcome::reject);
    agrees(m, [&](std::u32string_view w) { return run_counter(c, w); }, 12);

    // increment then decrement comes back home
    auto up = m.transitions[0].matrix, down = m.transitions[2].matrix;
    CHECK(vec_mul_mat(vec_mul_mat(m.initial_vector, up), down) == m.initial_vector);

    CHECK_THROWS_AS(simulate_counter_nonblind(zoo::abc_counters()), PreconditionError);
    auto two = c;
    two.counters = 2;
    CHECK_THROWS_AS(simulate_counter_nonblind(two), PreconditionError);
}

TEST_CASE("intersection with a regular language", "[compose]") {
    auto thm = zoo::thm51();
    auto filtered = intersect_regular(thm, astar_bstar());
    CHECK(validate(filtered).empty());
    CHECK(filtered.states.size() == thm.states.size() * 3);
    CHECK(filtered.mode == thm.mode);
    CHECK(run(thm, U"aba").outcome == Outcome::accept);
    CHECK(run(filtered, U"ab").outcome == Outcome::accept);
    CHECK(run(filtered, U"aba").outcome == Outcome::reject);
    agrees(filtered, [](std::u32string_view w) { return zoo::in_thm51(w) && astar_bstar().accepts(w); }, 10);

    auto same = intersect_regular(thm, everything(thm.alphabet));
    CHECK(same.states.size() == thm.states.size());
    agrees(same, zoo::in_thm51, 10);

    auto blind = intersect_regular(zoo::pow(), astar_bstar());
    CHECK(blind.mode == zoo::pow().mode);
}

TEST_CASE("intersection with a regular language over a wider alphabet", "[compose]") {
    Dfa abc{"abc", {U'a', U'b', U'c'}, {"q"}, 0, {0}, {{0, 0, 0}}};
    auto m = intersect_regular(zoo::anbn(), abc);
    CHECK(m.alphabet.size() == 3);
    CHECK(run(m, U"ab").outcome == Outcome::accept);
    CHECK(run(m, U"abc").outcome == Outcome::reject);
}

TEST_CASE("blind intersection", "[compose]") {
    auto x = zoo::anbn(), y = zoo::anb2n();
    auto both = intersect_blind(x, y);
    CHECK(both.dimension == x.dimension + y.dimension);
    CHECK(both.initial_vector == concat(x.initial_vector, y.initial_vector));
    CHECK(both.mode.blind);
    CHECK(validate(both).empty());
    agrees(both, [](std::u32string_view w) { return w.empty(); }, 12);

    agrees(intersect_blind(x, x), zoo::in_anbn, 10);
    CHECK_THROWS_AS(intersect_blind(x, zoo::thm51()), PreconditionError);
}

TEST_CASE("nondeterministic union", "[compose]") {
    auto u = union_nondet(zoo::anbn(), zoo::anb2n());
    CHECK(u.dimension == 4);
    CHECK(u.mode.control == Control::nondeterministic);
    CHECK(validate(u).empty());
    agrees(u, zoo::in_union, 12);
    CHECK(run(u, U"").outcome == Outcome::accept);

    auto ab = ab_nonblind();
    auto nb = union_nondet(ab, zoo::thm51());
    CHECK_FALSE(nb.mode.blind);
    agrees(nb, [](std::u32string_view w) { return w == U"ab" || zoo::in_thm51(w); }, 8);
    CHECK(run(union_nondet(ab, ab), U"").outcome == Outcome::reject);

    CHECK_THROWS_AS(union_nondet(zoo::anbn(), zoo::thm51()), PreconditionError);
}

TEST_CASE("nondeterministic concatenation", "[compose]") {
    auto cat = concat_nondet(zoo::anbn(), zoo::single_c());
    CHECK(cat.dimension == 3);
    CHECK(validate(cat).empty());
    CHECK(run(cat, U"aabbc").outcome == Outcome::accept);
    CHECK(run(cat, U"aabc").outcome == Outcome::reject);
    agrees(cat, in_anbn_c, 10);

    auto twice = concat_nondet(ab_nonblind(), ab_nonblind());
    agrees(twice, [](std::u32string_view w) { return w == U"abab"; }, 8);

    agrees(zoo::union_c_machine(), zoo::in_union_c, 10);
    CHECK_THROWS_AS(concat_nondet(zoo::anbn(), ab_nonblind()), PreconditionError);
}

TEST_CASE("nondeterministic star", "[compose]") {
    auto s = star_nondet(ab_nonblind());
    CHECK(s.dimension == 1);
    CHECK(validate(s).empty());
    CHECK(run(s, U"").outcome == Outcome::accept);
    agrees(s, in_ab_star, 12);

    auto t = star_nondet(zoo::thm51());
    CHECK(t.dimension == 2);
    CHECK(run(t, U"").outcome == Outcome::accept);
    CHECK_THROWS_AS(star_nondet(zoo::anbn()), PreconditionError);
}

TEST_CASE("constructions reject invalid or one-way operands", "[compose]") {
    auto bad = zoo::anbn();
    bad.start = 99;
    CHECK_THROWS_AS(union_nondet(bad, zoo::anb2n()), std::exception);
    auto efa = zoo::wp_f2();
    efa.transitions.push_back(EfaTransition{0, std::nullopt, 0, GroupWord{}});
    auto oneway = translate_efa_f2(efa);
    CHECK_THROWS_AS(intersect_regular(oneway, everything(oneway.alphabet)), PreconditionError);
}
