#include <catch_amalgamated.hpp>

#include <set>

#include "hva/stern_brocot.hpp"

using namespace hva;
using namespace hva::stern_brocot;

namespace {

/// Binary strings use '1' for letter 1 and '0' for letter 2.
Letters binary(const std::string& s) {
    Letters out;
    for (char c : s)
        out.push_back(c == '1' ? 1 : 2);
    return out;
}

/// Every word of length exactly `len` over letters 1..k.
std::vector<Letters> words(std::size_t k, std::size_t len) {
    std::vector<Letters> out{{}};
    for (std::size_t i = 0; i < len; ++i) {
        std::vector<Letters> next;
        for (const auto& w : out)
            for (std::size_t j = 1; j <= k; ++j) {
                auto x = w;
                x.push_back(j);
                next.push_back(std::move(x));
            }
        out = std::move(next);
    }
    return out;
}

} // namespace

TEST_CASE("alphabet matrices", "[codec]") {
    CHECK(alphabet_matrix(2, 1) == QMatrix{{1, 0}, {1, 1}});
    CHECK(alphabet_matrix(2, 2) == QMatrix{{1, 1}, {0, 1}});
    CHECK(alphabet_matrix(3, 2) == QMatrix{{1, 1, 0}, {0, 1, 0}, {0, 1, 1}});
    CHECK_THROWS_AS(alphabet_matrix(3, 0), std::out_of_range);
    CHECK_THROWS_AS(alphabet_matrix(3, 4), std::out_of_range);
    CHECK_THROWS_AS(alphabet_matrix(1, 1), std::invalid_argument);
}

TEST_CASE("binary table", "[codec]") {
    const std::vector<std::pair<std::string, QVector>> table = {
        {"0", QVector{1, 2}},   {"00", QVector{1, 3}},  {"10", QVector{2, 3}},  {"000", QVector{1, 4}},
        {"010", QVector{3, 5}}, {"1", QVector{2, 1}},   {"01", QVector{3, 2}},  {"11", QVector{3, 1}},
        {"001", QVector{4, 3}}, {"011", QVector{5, 2}},
    };
    for (const auto& [s, v] : table) {
        INFO(s);
        CHECK(encode(2, binary(s)) == v);
        CHECK(decode(v) == binary(s));
    }
}

TEST_CASE("encode examples", "[codec]") {
    CHECK(encode(3, {1}) == QVector{3, 1, 1});
    for (std::size_t k = 2; k <= 6; ++k)
        CHECK(encode(k, {}) == QVector::ones(k));
    CHECK_THROWS_AS(encode(3, {4}), std::out_of_range);
    CHECK_THROWS_AS(encode(1, {}), std::invalid_argument);
}

TEST_CASE("decode examples and invalid vectors", "[codec]") {
    CHECK(decode(QVector{1, 1}) == Letters{});
    CHECK(decode(QVector{3, 1, 1}) == Letters{1});
    CHECK_FALSE(decode(QVector{2, 2}));
    CHECK_FALSE(decode(QVector{0, 1}));
    CHECK_FALSE(decode(QVector{-3, 1}));
    CHECK_FALSE(decode(QVector{4, 1, 1})); // 4-2 = 2, then a tie
    CHECK_FALSE(decode(QVector{2, 2, 1}));
    CHECK_THROWS_AS(decode(QVector{Rational(1, 2), 1}), std::invalid_argument);
    CHECK_THROWS_AS(decode(QVector{1}), std::invalid_argument);
}

TEST_CASE("no short word encodes a tie", "[codec]") {
    for (std::size_t len = 0; len <= 3; ++len)
        for (const auto& w : words(2, len))
            CHECK(encode(2, w) != QVector{2, 2});
}

TEST_CASE("round trip and injectivity", "[codec][property]") {
    for (std::size_t k = 2; k <= 5; ++k) {
        const std::size_t max_len = k == 2 ? 10 : k == 3 ? 7 : 5;
        std::set<std::vector<std::string>> seen;
        std::size_t count = 0;
        for (std::size_t len = 0; len <= max_len; ++len) {
            for (const auto& w : words(k, len)) {
                auto v = encode(k, w);
                REQUIRE(decode(v) == w);
                std::vector<std::string> key;
                for (const auto& e : v)
                    key.push_back(e.to_string());
                seen.insert(std::move(key));
                ++count;
            }
        }
        INFO("k = " << k);
        CHECK(seen.size() == count);
    }
}

TEST_CASE("decode steps are multiplications by inverse matrices", "[codec][property]") {
    for (std::size_t k = 2; k <= 4; ++k)
        for (std::size_t len = 1; len <= 4; ++len)
            for (const auto& w : words(k, len)) {
                auto prefix = w;
                prefix.pop_back();
                auto back = vec_mul_mat(encode(k, w), mat_inverse(alphabet_matrix(k, w.back())));
                CHECK(back == encode(k, prefix));
            }
}

TEST_CASE("entry sums grow with every symbol", "[codec][property]") {
    auto sum = [](const QVector& v) {
        Rational s = 0;
        for (const auto& e : v)
            s += e;
        return s;
    };
    for (const auto& w : words(3, 5)) {
        Letters prefix;
        Rational last = 3;
        for (std::size_t j : w) {
            prefix.push_back(j);
            auto s = sum(encode(3, prefix));
            CHECK(last < s);
            last = s;
        }
    }
}

TEST_CASE("digit mapping", "[codec]") {
    CHECK(letter_digit(2, 1) == '1');
    CHECK(letter_digit(2, 2) == '0');
    CHECK(letter_digit(10, 10) == '0');
    CHECK(letter_digit(3, 2) == '2');
    CHECK(digit_letter(2, U'0') == 2u);
    CHECK(digit_letter(2, U'1') == 1u);
    CHECK_FALSE(digit_letter(2, U'2'));
    CHECK_FALSE(digit_letter(2, U'x'));
    for (std::size_t k = 2; k <= 10; ++k)
        for (std::size_t j = 1; j <= k; ++j)
            CHECK(digit_letter(k, letter_digit(k, j)) == j);
}
