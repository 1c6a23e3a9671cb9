#include <catch_amalgamated.hpp>

#include <random>

#include "hva/free_group.hpp"
#include "hva/zoo.hpp"

using namespace hva;

namespace {

std::string random_raw(std::mt19937_64& rng, std::size_t max_len) {
    static const char letters[] = {'a', 'A', 'b', 'B'};
    std::string s(rng() % (max_len + 1), 'a');
    for (char& c : s)
        c = letters[rng() % 4];
    return s;
}

/// Reduced words of length exactly `len`.
std::vector<GroupWord> reduced_words(std::size_t len) {
    std::vector<std::string> layer{""};
    for (std::size_t i = 0; i < len; ++i) {
        std::vector<std::string> next;
        for (const auto& s : layer)
            for (char c : {'a', 'A', 'b', 'B'})
                if (s.empty() || s.back() != GroupWord::inverse_letter(c))
                    next.push_back(s + c);
        layer = std::move(next);
    }
    std::vector<GroupWord> out;
    for (const auto& s : layer)
        out.push_back(GroupWord::reduce(s));
    return out;
}

std::vector<Word> all_words(const std::vector<Symbol>& sigma, std::size_t max_len) {
    std::vector<Word> out{Word{}};
    std::size_t begin = 0;
    for (std::size_t len = 1; len <= max_len; ++len) {
        std::size_t end = out.size();
        for (std::size_t i = begin; i < end; ++i)
            for (Symbol s : sigma) {
                Word w = out[i];
                w.push_back(s);
                out.push_back(std::move(w));
            }
        begin = end;
    }
    return out;
}

/// EFA with an epsilon move: a^n, then a silent A, then a^m; accepts when n + m = 1
/// and the silent move was taken.
EfaMachine silent_efa() {
    EfaMachine e;
    e.name = "silent";
    e.group = GroupKind::F2;
    e.alphabet = {U'a'};
    e.states = {"p", "q"};
    e.accept = {1};
    e.transitions = {
        EfaTransition{0, U'a', 0, GroupWord::reduce("a")},
        EfaTransition{0, std::nullopt, 1, GroupWord::reduce("A")},
        EfaTransition{1, U'a', 1, GroupWord::reduce("a")},
    };
    return e;
}

} // namespace

TEST_CASE("free reduction", "[group]") {
    CHECK(GroupWord::reduce("aAb").letters() == "b");
    CHECK(GroupWord::reduce("").is_identity());
    CHECK(GroupWord::reduce("abBA").is_identity());
    CHECK(GroupWord::reduce("aabBAb").letters() == "ab");
    CHECK(GroupWord::reduce("ab").inverse().letters() == "BA");
    CHECK(GroupWord::reduce("ab") * GroupWord::reduce("BA") == GroupWord{});
    CHECK_THROWS_AS(GroupWord::reduce("ax"), ParseError);
}

TEST_CASE("reduction is idempotent and minimal", "[group][property]") {
    std::mt19937_64 rng(2);
    for (int i = 0; i < 500; ++i) {
        auto w = GroupWord::reduce(random_raw(rng, 12));
        CHECK(GroupWord::reduce(w.letters()) == w);
        for (std::size_t j = 0; j + 1 < w.length(); ++j)
            CHECK(w.letters()[j + 1] != GroupWord::inverse_letter(w.letters()[j]));
    }
}

TEST_CASE("K_n generators", "[group]") {
    auto [a2, b2] = kn_generators(2);
    CHECK(a2 == QMatrix{{1, 2}, {0, 1}});
    CHECK(b2 == QMatrix{{1, 0}, {2, 1}});
    auto [a1, b1] = kn_generators(1);
    CHECK(a1 == QMatrix{{1, 1}, {0, 1}});
    CHECK(b1 == QMatrix{{1, 0}, {1, 1}});
    for (std::int64_t n = 1; n <= 5; ++n) {
        auto [ma, mb] = kn_generators(n);
        CHECK(determinant(ma) == 1);
        CHECK(determinant(mb) == 1);
    }
    CHECK_THROWS(kn_generators(0));
}

TEST_CASE("phi images", "[group]") {
    CHECK(phi(GroupWord{}).is_identity());
    CHECK(phi(GroupWord::reduce("a")) == QMatrix{{5, 22}, {2, 9}});
    auto [ma, mb] = kn_generators(2);
    CHECK(phi(GroupWord::reduce("b")) == ma * ma * mb * ma);
    CHECK(phi(GroupWord::reduce("aA")).is_identity());
    CHECK(phi(GroupWord::reduce("A")) == mat_inverse(QMatrix{{5, 22}, {2, 9}}));
}

TEST_CASE("phi is a homomorphism", "[group][property]") {
    std::mt19937_64 rng(8);
    for (int i = 0; i < 200; ++i) {
        auto u = GroupWord::reduce(random_raw(rng, 8));
        auto v = GroupWord::reduce(random_raw(rng, 8));
        CHECK(phi(u * v) == phi(u) * phi(v));
        CHECK(phi(u.inverse()) == mat_inverse(phi(u)));
        auto img = phi(u);
        CHECK(determinant(img) == 1);
        for (std::size_t r = 0; r < 2; ++r)
            for (std::size_t c = 0; c < 2; ++c)
                CHECK(img(r, c).is_integer());
    }
}

TEST_CASE("the vector [1,0] has a trivial stabilizer in H", "[group][property]") {
    const QVector v{1, 0};
    std::size_t checked = 0;
    for (std::size_t len = 1; len <= 6; ++len)
        for (const auto& w : reduced_words(len)) {
            REQUIRE(vec_mul_mat(v, phi(w)) != v);
            ++checked;
        }
    CHECK(checked == 4 + 12 + 36 + 108 + 324 + 972);
}

TEST_CASE("psi images", "[group]") {
    CHECK(psi(GroupPair{}) == QMatrix::identity(4));
    CHECK(psi(GroupPair{GroupWord::reduce("a"), {}}) == block_diag(QMatrix{{5, 22}, {2, 9}}, QMatrix::identity(2)));
    std::mt19937_64 rng(4);
    for (int i = 0; i < 50; ++i) {
        GroupPair x{GroupWord::reduce(random_raw(rng, 5)), GroupWord::reduce(random_raw(rng, 5))};
        GroupPair y{GroupWord::reduce(random_raw(rng, 5)), GroupWord::reduce(random_raw(rng, 5))};
        CHECK(psi(x) * psi(y) == psi(x * y));
    }
}

TEST_CASE("EFA runs", "[group][efa]") {
    auto e = zoo::wp_f2();
    CHECK(run_efa(e, U"aA").outcome == Outcome::accept);
    CHECK(run_efa(e, U"ab").outcome == Outcome::reject);
    CHECK(run_efa(e, U"").outcome == Outcome::accept);
    CHECK(run_efa(e, U"abAB").outcome == Outcome::reject);
    auto v = run_efa(e, U"aBbA");
    REQUIRE(v.outcome == Outcome::accept);
    CHECK(v.trace->size() == 4);
    CHECK(is_identity(v.trace->back().after.reg));
    CHECK_THROWS_AS(run_efa(e, U"ax"), UnknownSymbolError);

    auto p = zoo::wp_f2xf2();
    CHECK(run_efa(p, U"abAB").outcome == Outcome::accept);
    CHECK(run_efa(p, U"aab").outcome == Outcome::reject);

    auto s = silent_efa();
    CHECK(run_efa(s, U"a").outcome == Outcome::accept);
    CHECK(run_efa(s, U"").outcome == Outcome::reject);
    CHECK(run_efa(s, U"aa").outcome == Outcome::reject);
}

TEST_CASE("EFA translations", "[group][efa]") {
    auto m = translate_efa_f2(zoo::wp_f2());
    CHECK(validate(m).empty());
    CHECK(m.mode == ModeFlags{Head::oneway, Control::nondeterministic, true});
    CHECK(m.initial_vector == QVector{1, 0});
    CHECK(run(m, U"aA").outcome == Outcome::accept);
    CHECK(run(m, U"ab").outcome == Outcome::reject);

    auto m4 = translate_efa_f2xf2(zoo::wp_f2xf2());
    CHECK(validate(m4).empty());
    CHECK(m4.dimension == 4);
    CHECK(m4.initial_vector == QVector{1, 0, 1, 0});
    CHECK(m4.mode.blind);

    EfaMachine idle = zoo::wp_f2xf2();
    idle.transitions.push_back(EfaTransition{0, std::nullopt, 0, GroupPair{}});
    CHECK(translate_efa_f2xf2(idle).transitions.back().matrix == QMatrix::identity(4));
    EfaMachine idle2 = zoo::wp_f2();
    idle2.transitions.push_back(EfaTransition{0, U'a', 0, GroupWord{}});
    CHECK(translate_efa_f2(idle2).transitions.back().matrix == QMatrix::identity(2));

    CHECK_THROWS_AS(translate_efa_f2(zoo::wp_f2xf2()), PreconditionError);
    CHECK_THROWS_AS(translate_efa_f2xf2(zoo::wp_f2()), PreconditionError);
}

TEST_CASE("translations preserve the language", "[group][efa][property]") {
    struct Case {
        EfaMachine efa;
        std::size_t max_len;
    };
    for (const auto& [efa, max_len] : {Case{zoo::wp_f2(), 6}, Case{zoo::wp_f2xf2(), 6}, Case{silent_efa(), 8}}) {
        INFO(efa.name);
        auto m = efa.group == GroupKind::F2 ? translate_efa_f2(efa) : translate_efa_f2xf2(efa);
        for (const auto& w : all_words(efa.alphabet, max_len)) {
            auto ev = run_efa(efa, w);
            auto hv = run(m, w);
            REQUIRE(ev.outcome != Outcome::inconclusive);
            REQUIRE(ev.outcome == hv.outcome);
            if (efa.name == "wp_f2")
                CHECK((ev.outcome == Outcome::accept) == zoo::in_wp_f2(w));
            if (efa.name == "wp_f2xf2")
                CHECK((ev.outcome == Outcome::accept) == zoo::in_wp_f2xf2(w));
        }
    }
}

TEST_CASE("EFA validation", "[group][efa]") {
    auto e = zoo::wp_f2();
    CHECK(validate_efa(e).empty());
    e.transitions.push_back(EfaTransition{0, U'z', 3, GroupPair{}});
    CHECK(validate_efa(e).size() == 3);
    CHECK_THROWS_AS(run_efa(e, U""), PreconditionError);
}
