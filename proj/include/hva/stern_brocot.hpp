#pragma once

#include <optional>
#include <vector>

#include "linalg.hpp"

namespace hva::stern_brocot {

/// Letters are indices 1..k.
using Letters = std::vector<std::size_t>;

inline void require_alphabet_size(std::size_t k) {
    if (k < 2)
        throw std::invalid_argument("alphabet size must be at least 2 (size 1 is not injective)");
}

/// A_j: the k-dimensional identity whose j'th column (1-based) is all ones.
/// v * A_j replaces entry j by the sum of all entries.
inline QMatrix alphabet_matrix(std::size_t k, std::size_t j) {
    require_alphabet_size(k);
    if (j < 1 || j > k)
        throw std::out_of_range("letter index " + std::to_string(j) + " outside 1.." + std::to_string(k));
    QMatrix a = QMatrix::identity(k);
    for (std::size_t i = 0; i < k; ++i)
        a(i, j - 1) = 1;
    return a;
}

/// ones(k) * A_{w1} * ... * A_{wn}
inline QVector encode(std::size_t k, const Letters& word) {
    require_alphabet_size(k);
    QVector v = QVector::ones(k);
    for (std::size_t j : word) {
        if (j < 1 || j > k)
            throw std::out_of_range("letter index " + std::to_string(j) + " outside 1.." + std::to_string(k));
        // in-place form of v * A_j
        Rational sum = 0;
        for (const auto& e : v)
            sum += e;
        v[j - 1] = sum;
    }
    return v;
}

/// Inverse of encode; k is the vector length. Returns nullopt when no word encodes `v`.
inline std::optional<Letters> decode(const QVector& v) {
    const std::size_t k = v.dim();
    require_alphabet_size(k);
    std::vector<BigInt> e;
    e.reserve(k);
    for (const auto& x : v) {
        if (!x.is_integer())
            throw std::invalid_argument("decode expects integer entries, got " + x.to_string());
        e.push_back(x.numerator());
    }

    Letters reversed;
    while (true) {
        bool all_ones = true;
        for (const auto& x : e) {
            if (x <= 0)
                return std::nullopt;
            all_ones = all_ones && x == 1;
        }
        if (all_ones)
            break;
        std::size_t top = 0;
        bool tie = false;
        for (std::size_t i = 1; i < k; ++i) {
            if (e[i] > e[top]) {
                top = i;
                tie = false;
            } else if (e[i] == e[top]) {
                tie = true;
            }
        }
        if (tie)
            return std::nullopt;
        BigInt others = 0;
        for (std::size_t i = 0; i < k; ++i)
            if (i != top)
                others += e[i];
        e[top] -= others;
        reversed.push_back(top + 1);
    }
    return Letters(reversed.rbegin(), reversed.rend());
}

/// Digit alphabet used at the text boundary: letter j is the digit (j mod k),
/// so for k = 2 letter 1 is '1' and letter 2 is '0'. Requires k <= 10.
inline char letter_digit(std::size_t k, std::size_t j) { return static_cast<char>('0' + j % k); }

inline std::optional<std::size_t> digit_letter(std::size_t k, char32_t c) {
    if (c < U'0' || c > U'9')
        return std::nullopt;
    std::size_t d = c - U'0';
    if (d >= k)
        return std::nullopt;
    return d == 0 ? k : d;
}

} // namespace hva::stern_brocot
