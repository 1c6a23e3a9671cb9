#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"

namespace hva {

/// One input symbol: a single Unicode scalar value.
using Symbol = char32_t;
using Word = std::u32string;
using StateId = std::size_t;

inline Word utf8_decode(std::string_view text) {
    Word out;
    std::size_t i = 0;
    while (i < text.size()) {
        auto byte = static_cast<unsigned char>(text[i]);
        std::size_t len;
        char32_t cp;
        if (byte < 0x80) {
            len = 1;
            cp = byte;
        } else if ((byte & 0xE0) == 0xC0) {
            len = 2;
            cp = byte & 0x1F;
        } else if ((byte & 0xF0) == 0xE0) {
            len = 3;
            cp = byte & 0x0F;
        } else if ((byte & 0xF8) == 0xF0) {
            len = 4;
            cp = byte & 0x07;
        } else {
            throw ParseError("invalid UTF-8 lead byte", "byte " + std::to_string(i));
        }
        if (i + len > text.size())
            throw ParseError("truncated UTF-8 sequence", "byte " + std::to_string(i));
        for (std::size_t k = 1; k < len; ++k) {
            auto cont = static_cast<unsigned char>(text[i + k]);
            if ((cont & 0xC0) != 0x80)
                throw ParseError("invalid UTF-8 continuation byte", "byte " + std::to_string(i + k));
            cp = (cp << 6) | (cont & 0x3F);
        }
        out.push_back(cp);
        i += len;
    }
    return out;
}

inline std::string utf8_encode(std::u32string_view word) {
    std::string out;
    for (char32_t cp : word) {
        if (cp < 0x80) {
            out += static_cast<char>(cp);
        } else if (cp < 0x800) {
            out += static_cast<char>(0xC0 | (cp >> 6));
            out += static_cast<char>(0x80 | (cp & 0x3F));
        } else if (cp < 0x10000) {
            out += static_cast<char>(0xE0 | (cp >> 12));
            out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
            out += static_cast<char>(0x80 | (cp & 0x3F));
        } else {
            out += static_cast<char>(0xF0 | (cp >> 18));
            out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
            out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
            out += static_cast<char>(0x80 | (cp & 0x3F));
        }
    }
    return out;
}

inline std::string utf8_encode(Symbol s) { return utf8_encode(std::u32string_view(&s, 1)); }

/// Position of `s` in `alphabet`, if present.
inline std::optional<std::size_t> symbol_index(const std::vector<Symbol>& alphabet, Symbol s) {
    auto it = std::find(alphabet.begin(), alphabet.end(), s);
    if (it == alphabet.end())
        return std::nullopt;
    return static_cast<std::size_t>(it - alphabet.begin());
}

/// Maps a word onto alphabet indices; throws UnknownSymbolError on the first foreign symbol.
inline std::vector<std::size_t> index_word(const std::vector<Symbol>& alphabet, std::u32string_view word) {
    std::vector<std::size_t> out;
    out.reserve(word.size());
    for (std::size_t i = 0; i < word.size(); ++i) {
        auto idx = symbol_index(alphabet, word[i]);
        if (!idx)
            throw UnknownSymbolError("symbol '" + utf8_encode(word[i]) + "' at position " + std::to_string(i) +
                                     " is not in the alphabet");
        out.push_back(*idx);
    }
    return out;
}

/// Alphabet union preserving first-seen order.
inline std::vector<Symbol> merge_alphabets(const std::vector<Symbol>& a, const std::vector<Symbol>& b) {
    std::vector<Symbol> out = a;
    for (Symbol s : b)
        if (!symbol_index(out, s))
            out.push_back(s);
    return out;
}

} // namespace hva
