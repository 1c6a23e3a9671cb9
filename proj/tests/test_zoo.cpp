#include <catch_amalgamated.hpp>

#include <set>

#include "hva/check.hpp"
#include "hva/io.hpp"
#include "hva/stern_brocot.hpp"
#include "hva/zoo.hpp"

using namespace hva;

namespace {

std::vector<std::size_t> accepted_lengths(const HvaMachine& m, std::size_t max_len) {
    std::vector<std::size_t> out;
    for (std::size_t n = 0; n <= max_len; ++n)
        if (run(m, Word(n, U'a')).outcome == Outcome::accept)
            out.push_back(n);
    return out;
}

std::u32string u32(const std::string& s) { return std::u32string(s.begin(), s.end()); }

} // namespace

TEST_CASE("catalog entries build and validate", "[zoo]") {
    for (const auto& item : zoo::catalog()) {
        INFO(item.name);
        auto e = zoo::build(item.name);
        CHECK(e.name == item.name);
        CHECK(e.oracle);
        CHECK_FALSE(e.notes.empty());
        if (auto* m = std::get_if<HvaMachine>(&e.machine)) {
            CHECK(item.kind == "hva");
            CHECK(validate(*m).empty());
        } else if (auto* x = std::get_if<EfaMachine>(&e.machine)) {
            CHECK(item.kind == "efa");
            CHECK(validate_efa(*x).empty());
        } else if (auto* c = std::get_if<CounterMachine>(&e.machine)) {
            CHECK(item.kind == "counter");
            CHECK(validate_counter(*c).empty());
        } else {
            CHECK(item.kind == "oracle");
        }
    }
    CHECK_THROWS_AS(zoo::build("nope"), zoo::UnknownEntry);
    CHECK_THROWS_AS(zoo::oracle("nope"), zoo::UnknownEntry);
    CHECK_THROWS(zoo::build("mpal_l", {1}));
}

TEST_CASE("no deterministic machine for the nondeterministic-only languages", "[zoo]") {
    for (const char* name : {"union", "union_c"}) {
        auto m = std::get<HvaMachine>(zoo::build(name).machine);
        CHECK(m.mode.control == Control::nondeterministic);
    }
    for (const char* name : {"l_bab", "ijk"})
        CHECK(std::holds_alternative<std::monostate>(zoo::build(name).machine));
}

TEST_CASE("oracle examples", "[zoo][oracle]") {
    CHECK(zoo::oracle("subsetsum_r")(U"1#1#"));
    CHECK_FALSE(zoo::oracle("subsetsum_r")(U"1#0#"));
    CHECK(zoo::oracle("subsetsum_r")(U"0#1#"));   // empty subset
    CHECK(zoo::oracle("subsetsum_r")(U"11#1#01#")); // 3 = 1 + 2
    CHECK_FALSE(zoo::oracle("subsetsum_r")(U"1#"));
    CHECK_FALSE(zoo::oracle("subsetsum_r")(U"1##1#"));
    CHECK(zoo::oracle("union")(U"aabb"));
    CHECK_FALSE(zoo::oracle("union")(U"aab"));
    CHECK(zoo::oracle("union")(U"abb"));
    CHECK(zoo::oracle("pow_r")(U"aab"));
    CHECK(zoo::oracle("pow_r")(U"a"));
    CHECK_FALSE(zoo::oracle("pow_r")(U"aaab"));
    CHECK(zoo::oracle("pow")(U"b"));
    CHECK(zoo::oracle("pow")(U"aabbbb"));
    CHECK_FALSE(zoo::oracle("pow")(U""));
    CHECK(zoo::oracle("thm51")(U"aba"));
    CHECK(zoo::oracle("thm51")(U"aaba")); // 2 = 1 + 1
    CHECK_FALSE(zoo::oracle("thm51")(U"aabaa"));
    CHECK_FALSE(zoo::oracle("thm51")(U"aab"));
    CHECK(zoo::oracle("upow")(U"aaa"));
    CHECK(zoo::oracle("upow")(Word(20, U'a')));
    CHECK_FALSE(zoo::oracle("upow")(U"aa"));
    CHECK(zoo::oracle("mpal_l", {2})(U"10#01"));
    CHECK_FALSE(zoo::oracle("mpal_l", {2})(U"10#10"));
    CHECK(zoo::oracle("mpal_l", {3})(U"#"));
    CHECK(zoo::oracle("union_c")(U"abbc"));
    CHECK_FALSE(zoo::oracle("union_c")(U"abc"));
    CHECK(zoo::oracle("l_bab")(U"babab"));
    CHECK(zoo::oracle("l_bab")(U"bbaabb"));
    CHECK_FALSE(zoo::oracle("l_bab")(U"babb"));
    CHECK_FALSE(zoo::oracle("l_bab")(U"b"));
    CHECK(zoo::oracle("ijk")(U"abbc"));
    CHECK_FALSE(zoo::oracle("ijk")(U"abcc"));
    CHECK(zoo::oracle("abc_counters")(U"aabbcc"));
    CHECK(zoo::oracle("wp_f2")(U"abBA"));
    CHECK(zoo::oracle("wp_f2xf2")(U"abAB"));
    CHECK_FALSE(zoo::oracle("wp_f2")(U"abAB"));
}

TEST_CASE("machine examples", "[zoo]") {
    auto up = zoo::upow();
    CHECK(up.dimension == 3);
    std::set<std::string> matrices;
    for (const auto& t : up.transitions)
        matrices.insert(t.matrix.to_string());
    CHECK(matrices.count(zoo::upow_u1().to_string()));
    CHECK(matrices.count(zoo::upow_u2().to_string()));

    auto mp = zoo::mpal_l(2);
    CHECK(run(mp, U"10#01").outcome == Outcome::accept);
    CHECK(run(mp, U"10#10").outcome == Outcome::reject);
    CHECK(run(zoo::pow(), U"b").outcome == Outcome::accept);
    CHECK(run(zoo::pow(), U"ab").outcome == Outcome::reject);
    CHECK(run(zoo::pow(), U"abb").outcome == Outcome::accept);
    CHECK(run(zoo::pow_r(), U"aab").outcome == Outcome::accept);
}

TEST_CASE("the guess step is needed for a^(n + 2^n)", "[zoo]") {
    CHECK(accepted_lengths(zoo::upow(), 40) == std::vector<std::size_t>{3, 6, 11, 20, 37});
    // without the marking step the lengths are n + 2^n - 1
    CHECK(accepted_lengths(zoo::upow_without_guess_step(), 40) == std::vector<std::size_t>{2, 5, 10, 19, 36});
}

TEST_CASE("thm51 and its scalar variant agree", "[zoo]") {
    auto a = check(zoo::thm51(), zoo::in_thm51, 12);
    auto b = check(zoo::thm51_scalar(), zoo::in_thm51, 12);
    CHECK(a.ok());
    CHECK(b.ok());
    CHECK(a.accepted == b.accepted);
}

TEST_CASE("mpal vector after w# is the codec encoding of w", "[zoo][codec]") {
    for (std::size_t l : {2, 3, 4}) {
        auto m = zoo::mpal_l(l);
        for (const std::string w : {"", "1", "0", "10", "0110", "1201", "3"}) {
            bool ok = true;
            stern_brocot::Letters letters;
            for (char c : w) {
                auto j = stern_brocot::digit_letter(l, static_cast<Symbol>(c));
                ok = ok && j;
                if (j)
                    letters.push_back(*j);
            }
            if (!ok)
                continue;
            INFO("l=" << l << " w=" << w);
            const auto input = u32(w + "#");
            Configuration c = initial_configuration(m);
            for (std::size_t i = 0; i < input.size(); ++i) {
                auto next = step(m, c, input);
                REQUIRE(next.size() == 1);
                c = next[0];
            }
            CHECK(c.vector == stern_brocot::encode(l, letters));
        }
    }
}

TEST_CASE("check over length zero looks at the empty word only", "[zoo][check]") {
    auto r = check(zoo::thm51(), zoo::in_thm51, 0);
    CHECK(r.executed == 1);
    CHECK(r.covered == 1);
    CHECK(r.accepted == 1);
    CHECK(r.ok());

    auto wrong = check(zoo::pow(), [](std::u32string_view w) { return w.empty(); }, 0);
    CHECK(wrong.mismatch_count == 1);
    CHECK(wrong.samples.size() == 1);
    CHECK(wrong.samples[0].input.empty());
}

TEST_CASE("a corrupted machine is caught", "[zoo][check]") {
    auto m = zoo::thm51();
    m.transitions[0].matrix(1, 0) = -m.transitions[0].matrix(1, 0);
    auto r = check(m, zoo::in_thm51, 12);
    CHECK(r.mismatch_count >= 1);
    CHECK_FALSE(r.ok());
    CHECK_FALSE(r.samples.empty());
    CHECK(describe(r).find("mismatches") != std::string::npos);
}

TEST_CASE("pruned subtrees are counted, not enumerated", "[zoo][check]") {
    auto pruned = check(zoo::pow(), zoo::in_pow, 16, {}, zoo::viable_pow);
    auto full = check(zoo::pow(), zoo::in_pow, 16);
    CHECK(pruned.ok());
    CHECK(full.ok());
    CHECK(pruned.covered == word_count(2, 16));
    CHECK(full.covered == pruned.covered);
    CHECK(pruned.executed < full.executed);
    CHECK(pruned.accepted == full.accepted);
}

TEST_CASE("subsetsum instances", "[zoo][subsetsum]") {
    std::size_t count = 0;
    std::u32string prev;
    bool ordered_ok = true;
    zoo::subsetsum_instances(3, 4, [&](std::u32string_view w) {
        ++count;
        auto nums = zoo::subsetsum_numbers(w);
        ordered_ok = ordered_ok && nums && nums->size() >= 2 && nums->size() <= 4;
        prev.assign(w);
    });
    CHECK(ordered_ok);
    // 30 bit strings of length 1..4; t plus 1..3 numbers
    CHECK(count == 30 * 30 + 30 * 30 * 30 + 30 * 30 * 30 * 30);
    CHECK(count == 837900);

    auto bad = zoo::subsetsum_ill_formed(200, 12, 1);
    CHECK(bad.size() == 200);
    for (const auto& w : bad)
        CHECK_FALSE(zoo::subsetsum_numbers(w));
    CHECK(zoo::subsetsum_ill_formed(5, 12, 9) == zoo::subsetsum_ill_formed(5, 12, 9));
}

TEST_CASE("subsetsum machine on a slice of instances", "[zoo][subsetsum]") {
    auto m = zoo::subsetsum_r();
    auto r = check_inputs(
        m, zoo::in_subsetsum_r, [](const std::function<void(std::u32string_view)>& emit) { zoo::subsetsum_instances(2, 3, emit); });
    CHECK(r.ok());
    CHECK(r.executed == 14 * 14 + 14 * 14 * 14);
    CHECK(r.accepted > 0);
}

TEST_CASE("export round trip", "[zoo][io]") {
    for (const auto& item : zoo::catalog()) {
        auto e = zoo::build(item.name);
        if (auto* m = std::get_if<HvaMachine>(&e.machine))
            CHECK(parse_machine(serialize_machine(*m)) == *m);
    }
    auto m3 = zoo::mpal_l(3);
    CHECK(parse_machine(serialize_machine(m3)).dimension == 3);
}
