#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "polc/errors.hpp"

namespace polc::detail {

struct CodePoint {
    char32_t value;
    std::size_t offset; // byte offset of the first code unit
};

inline std::vector<CodePoint> decode_utf8(std::string_view text) {
    std::vector<CodePoint> out;
    std::size_t i = 0;
    while (i < text.size()) {
        const auto lead = static_cast<unsigned char>(text[i]);
        std::size_t len = 0;
        char32_t cp = 0;
        if (lead < 0x80) {
            len = 1;
            cp = lead;
        } else if ((lead & 0xE0) == 0xC0) {
            len = 2;
            cp = lead & 0x1F;
        } else if ((lead & 0xF0) == 0xE0) {
            len = 3;
            cp = lead & 0x0F;
        } else if ((lead & 0xF8) == 0xF0) {
            len = 4;
            cp = lead & 0x07;
        } else {
            throw InputError("invalid UTF-8 at byte " + std::to_string(i));
        }
        if (i + len > text.size()) throw InputError("truncated UTF-8 at byte " + std::to_string(i));
        for (std::size_t j = 1; j < len; ++j) {
            const auto cont = static_cast<unsigned char>(text[i + j]);
            if ((cont & 0xC0) != 0x80)
                throw InputError("invalid UTF-8 at byte " + std::to_string(i + j));
            cp = (cp << 6) | (cont & 0x3F);
        }
        out.push_back({cp, i});
        i += len;
    }
    return out;
}

inline std::string encode_utf8(char32_t cp) {
    std::string out;
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
    return out;
}

} // namespace polc::detail
