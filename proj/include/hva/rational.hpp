#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <functional>
#include <limits>
#include <memory>
#include <numeric>
#include <ostream>
#include <string>
#include <string_view>

#include "errors.hpp"

namespace hva {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Exact rational number, always normalized (gcd(|num|, den) = 1, den > 0).
///
/// Values whose numerator and denominator fit in [-(2^63-1), 2^63-1] are kept
/// inline; everything else lives in an immutable shared BigRational. The
/// representation is canonical, so structural equality is value equality.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t value) { set_small(value, 1); } // NOLINT: implicit by design of the arithmetic API

    Rational(std::int64_t num, std::int64_t den) {
        if (den == 0)
            throw std::domain_error("rational with zero denominator");
        normalize(static_cast<__int128>(num), static_cast<__int128>(den));
    }

    explicit Rational(const BigInt& value) { assign_big(BigRational(value)); }
    explicit Rational(const BigRational& value) { assign_big(value); }

    static Rational from_big(const BigInt& num, const BigInt& den) {
        if (den == 0)
            throw std::domain_error("rational with zero denominator");
        Rational r;
        r.assign_big(BigRational(num, den));
        return r;
    }

    BigInt numerator() const { return big_ ? boost::multiprecision::numerator(*big_) : BigInt(num_); }
    BigInt denominator() const { return big_ ? boost::multiprecision::denominator(*big_) : BigInt(den_); }
    BigRational to_big() const { return big_ ? *big_ : BigRational(BigInt(num_), BigInt(den_)); }

    bool is_integer() const { return big_ ? boost::multiprecision::denominator(*big_) == 1 : den_ == 1; }
    bool is_zero() const { return !big_ && num_ == 0; }
    bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
    int sign() const {
        if (big_)
            return big_->sign();
        return (num_ > 0) - (num_ < 0);
    }
    Rational abs() const { return sign() < 0 ? -*this : *this; }

    friend Rational operator-(const Rational& a) {
        if (!a.big_) {
            Rational r;
            r.num_ = -a.num_;
            r.den_ = a.den_;
            return r;
        }
        Rational r;
        r.assign_big(-*a.big_);
        return r;
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        if (!a.big_ && !b.big_) {
            if (a.den_ == 1 && b.den_ == 1) {
                std::int64_t s;
                if (!__builtin_add_overflow(a.num_, b.num_, &s) && s != kMin) {
                    Rational r;
                    r.num_ = s;
                    return r;
                }
            }
            __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
            __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
            __int128 n;
            if (!__builtin_add_overflow(lhs, rhs, &n)) {
                Rational r;
                r.normalize(n, static_cast<__int128>(a.den_) * b.den_);
                return r;
            }
        }
        Rational r;
        r.assign_big(a.to_big() + b.to_big());
        return r;
    }

    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

    friend Rational operator*(const Rational& a, const Rational& b) {
        if (!a.big_ && !b.big_) {
            if (a.num_ == 0 || b.num_ == 0)
                return Rational();
            if (a.den_ == 1 && b.den_ == 1) {
                std::int64_t p;
                if (!__builtin_mul_overflow(a.num_, b.num_, &p) && p != kMin) {
                    Rational r;
                    r.num_ = p;
                    return r;
                }
            }
            Rational r;
            r.normalize(static_cast<__int128>(a.num_) * b.num_, static_cast<__int128>(a.den_) * b.den_);
            return r;
        }
        Rational r;
        r.assign_big(a.to_big() * b.to_big());
        return r;
    }

    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero())
            throw std::domain_error("division by zero");
        return a * b.reciprocal();
    }

    Rational reciprocal() const {
        if (is_zero())
            throw std::domain_error("division by zero");
        if (!big_) {
            Rational r;
            r.normalize(static_cast<__int128>(den_), static_cast<__int128>(num_));
            return r;
        }
        Rational r;
        r.assign_big(1 / *big_);
        return r;
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        if (!a.big_ && !b.big_)
            return a.num_ == b.num_ && a.den_ == b.den_;
        if (a.big_ && b.big_)
            return *a.big_ == *b.big_;
        return false; // canonical: a value has exactly one representation
    }

    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        if (!a.big_ && !b.big_) {
            __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
            __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
            return lhs <=> rhs;
        }
        auto x = a.to_big();
        auto y = b.to_big();
        if (x < y)
            return std::strong_ordering::less;
        if (y < x)
            return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    std::size_t hash() const {
        if (!big_) {
            std::size_t h = std::hash<std::int64_t>{}(num_);
            return h ^ (std::hash<std::int64_t>{}(den_) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
        }
        return std::hash<std::string>{}(to_string());
    }

    /// "p" for integers, "p/q" otherwise.
    std::string to_string() const {
        if (!big_)
            return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
        auto n = boost::multiprecision::numerator(*big_);
        auto d = boost::multiprecision::denominator(*big_);
        return d == 1 ? n.str() : n.str() + "/" + d.str();
    }

    /// Accepts "p" or "p/q" with an optional leading '-' and q > 0.
    static Rational parse(std::string_view text) {
        auto fail = [&](const char* why) { throw ParseError(std::string(why) + " in rational '" + std::string(text) + "'", ""); };
        std::size_t i = 0;
        bool negative = false;
        if (i < text.size() && text[i] == '-') {
            negative = true;
            ++i;
        }
        auto digits = [&](std::size_t& pos) {
            std::size_t begin = pos;
            while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9')
                ++pos;
            if (pos == begin)
                fail("expected digits");
            return BigInt(std::string(text.substr(begin, pos - begin)));
        };
        BigInt num = digits(i);
        BigInt den = 1;
        if (i < text.size() && text[i] == '/') {
            ++i;
            den = digits(i);
            if (den == 0)
                fail("zero denominator");
        }
        if (i != text.size())
            fail("trailing characters");
        if (negative)
            num = -num;
        return from_big(num, den);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

private:
    static constexpr std::int64_t kMin = std::numeric_limits<std::int64_t>::min();
    static constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();

    void set_small(std::int64_t num, std::int64_t den) {
        if (num == kMin) {
            assign_big(BigRational(BigInt(num), BigInt(den)));
            return;
        }
        num_ = num;
        den_ = den;
        big_.reset();
    }

    static unsigned __int128 gcd128(unsigned __int128 a, unsigned __int128 b) {
        while (b != 0) {
            if ((a >> 64) == 0 && (b >> 64) == 0)
                return std::gcd(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
            auto t = a % b;
            a = b;
            b = t;
        }
        return a;
    }

    static BigInt to_bigint(__int128 v) {
        bool negative = v < 0;
        unsigned __int128 u = negative ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
        BigInt r = static_cast<std::uint64_t>(u >> 64);
        r <<= 64;
        r += static_cast<std::uint64_t>(u);
        return negative ? BigInt(-r) : r;
    }

    void normalize(__int128 num, __int128 den) {
        if (den < 0) {
            // den > -2^127 always holds for our callers (|den| <= 2^126)
            num = -num;
            den = -den;
        }
        unsigned __int128 un = num < 0 ? -static_cast<unsigned __int128>(num) : static_cast<unsigned __int128>(num);
        unsigned __int128 g = gcd128(un, static_cast<unsigned __int128>(den));
        if (g > 1) {
            num /= static_cast<__int128>(g);
            den /= static_cast<__int128>(g);
        }
        if (num >= -static_cast<__int128>(kMax) && num <= kMax && den <= kMax) {
            num_ = static_cast<std::int64_t>(num);
            den_ = static_cast<std::int64_t>(den);
            big_.reset();
            return;
        }
        num_ = 0;
        den_ = 1;
        big_ = std::make_shared<const BigRational>(to_bigint(num), to_bigint(den));
    }

    void assign_big(const BigRational& v) {
        const auto& n = boost::multiprecision::numerator(v);
        const auto& d = boost::multiprecision::denominator(v);
        if (n >= -BigInt(kMax) && n <= BigInt(kMax) && d <= BigInt(kMax)) {
            num_ = static_cast<std::int64_t>(n);
            den_ = static_cast<std::int64_t>(d);
            big_.reset();
            return;
        }
        num_ = 0;
        den_ = 1;
        big_ = std::make_shared<const BigRational>(v);
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
    std::shared_ptr<const BigRational> big_;
};

} // namespace hva

template <>
struct std::hash<hva::Rational> {
    std::size_t operator()(const hva::Rational& r) const noexcept { return r.hash(); }
};
