/**
Copyright 2026 The lodforge authors
Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at
    http://www.apache.org/licenses/LICENSE-2.0
Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
 */
#include "lodforge/strings.hpp"

#include <array>
#include <cctype>
#include <cstdint>

#include "lodforge/errors.hpp"

namespace lodforge::strings {

namespace {

bool is_space(char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

bool is_unreserved(char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '-'
           || c == '.' || c == '_' || c == '~';
}

bool is_sub_delim(char c) {
    switch (c) {
        case '!':
        case '$':
        case '&':
        case '\'':
        case '(':
        case ')':
        case '*':
        case '+':
        case ',':
        case ';':
        case '=':
            return true;
        default:
            return false;
    }
}

void append_utf8(std::string& out, uint32_t cp) {
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
}

// Decodes one codepoint; advances i. Returns 0xFFFD on malformed input.
uint32_t decode_utf8(std::string_view s, size_t& i) {
    unsigned char c = static_cast<unsigned char>(s[i]);
    if (c < 0x80) {
        ++i;
        return c;
    }
    int extra = 0;
    uint32_t cp = 0;
    if ((c & 0xE0) == 0xC0) {
        extra = 1;
        cp = c & 0x1F;
    } else if ((c & 0xF0) == 0xE0) {
        extra = 2;
        cp = c & 0x0F;
    } else if ((c & 0xF8) == 0xF0) {
        extra = 3;
        cp = c & 0x07;
    } else {
        ++i;
        return 0xFFFD;
    }
    if (i + extra >= s.size() + 0 && i + extra > s.size() - 1) {
        // not enough continuation bytes
        if (i + static_cast<size_t>(extra) >= s.size()) {
            i = s.size();
            return 0xFFFD;
        }
    }
    for (int k = 1; k <= extra; ++k) {
        unsigned char cc = static_cast<unsigned char>(s[i + k]);
        if ((cc & 0xC0) != 0x80) {
            ++i;
            return 0xFFFD;
        }
        cp = (cp << 6) | (cc & 0x3F);
    }
    i += 1 + extra;
    return cp;
}

// Precomposition table for ASCII base + combining mark, Latin-1/Ext-A range.
uint32_t compose_pair(uint32_t base, uint32_t mark) {
    struct Entry {
        char base;
        uint16_t mark;
        uint16_t composed;
    };
    static constexpr Entry kTable[] = {
        {'A', 0x300, 0x00C0}, {'A', 0x301, 0x00C1}, {'A', 0x302, 0x00C2}, {'A', 0x303, 0x00C3},
        {'A', 0x308, 0x00C4}, {'A', 0x30A, 0x00C5}, {'C', 0x327, 0x00C7}, {'C', 0x301, 0x0106},
        {'E', 0x300, 0x00C8}, {'E', 0x301, 0x00C9}, {'E', 0x302, 0x00CA}, {'E', 0x308, 0x00CB},
        {'I', 0x300, 0x00CC}, {'I', 0x301, 0x00CD}, {'I', 0x302, 0x00CE}, {'I', 0x308, 0x00CF},
        {'N', 0x303, 0x00D1}, {'N', 0x301, 0x0143},
        {'O', 0x300, 0x00D2}, {'O', 0x301, 0x00D3}, {'O', 0x302, 0x00D4}, {'O', 0x303, 0x00D5},
        {'O', 0x308, 0x00D6},
        {'U', 0x300, 0x00D9}, {'U', 0x301, 0x00DA}, {'U', 0x302, 0x00DB}, {'U', 0x308, 0x00DC},
        {'Y', 0x301, 0x00DD},
        {'a', 0x300, 0x00E0}, {'a', 0x301, 0x00E1}, {'a', 0x302, 0x00E2}, {'a', 0x303, 0x00E3},
        {'a', 0x308, 0x00E4}, {'a', 0x30A, 0x00E5}, {'c', 0x327, 0x00E7}, {'c', 0x301, 0x0107},
        {'e', 0x300, 0x00E8}, {'e', 0x301, 0x00E9}, {'e', 0x302, 0x00EA}, {'e', 0x308, 0x00EB},
        {'i', 0x300, 0x00EC}, {'i', 0x301, 0x00ED}, {'i', 0x302, 0x00EE}, {'i', 0x308, 0x00EF},
        {'n', 0x303, 0x00F1}, {'n', 0x301, 0x0144},
        {'o', 0x300, 0x00F2}, {'o', 0x301, 0x00F3}, {'o', 0x302, 0x00F4}, {'o', 0x303, 0x00F5},
        {'o', 0x308, 0x00F6},
        {'u', 0x300, 0x00F9}, {'u', 0x301, 0x00FA}, {'u', 0x302, 0x00FB}, {'u', 0x308, 0x00FC},
        {'y', 0x301, 0x00FD}, {'y', 0x308, 0x00FF},
        {'S', 0x301, 0x015A}, {'s', 0x301, 0x015B}, {'S', 0x30C, 0x0160}, {'s', 0x30C, 0x0161},
        {'Z', 0x30C, 0x017D}, {'z', 0x30C, 0x017E}, {'C', 0x30C, 0x010C}, {'c', 0x30C, 0x010D},
        {'g', 0x306, 0x011F}, {'G', 0x306, 0x011E},
    };
    if (base > 0x7F) return 0;
    for (const auto& e : kTable) {
        if (static_cast<uint32_t>(e.base) == base && e.mark == mark) return e.composed;
    }
    return 0;
}

// Maps a Latin-1 Supplement / Latin Extended-A codepoint to its ASCII base
// letter(s); empty when no mapping applies.
const char* ascii_base(uint32_t cp) {
    if (cp >= 0x00C0 && cp <= 0x00C5) return "A";
    if (cp == 0x00C6) return "AE";
    if (cp == 0x00C7) return "C";
    if (cp >= 0x00C8 && cp <= 0x00CB) return "E";
    if (cp >= 0x00CC && cp <= 0x00CF) return "I";
    if (cp == 0x00D0) return "D";
    if (cp == 0x00D1) return "N";
    if ((cp >= 0x00D2 && cp <= 0x00D6) || cp == 0x00D8) return "O";
    if (cp >= 0x00D9 && cp <= 0x00DC) return "U";
    if (cp == 0x00DD) return "Y";
    if (cp == 0x00DF) return "ss";
    if (cp >= 0x00E0 && cp <= 0x00E5) return "a";
    if (cp == 0x00E6) return "ae";
    if (cp == 0x00E7) return "c";
    if (cp >= 0x00E8 && cp <= 0x00EB) return "e";
    if (cp >= 0x00EC && cp <= 0x00EF) return "i";
    if (cp == 0x00F1) return "n";
    if ((cp >= 0x00F2 && cp <= 0x00F6) || cp == 0x00F8) return "o";
    if (cp >= 0x00F9 && cp <= 0x00FC) return "u";
    if (cp == 0x00FD || cp == 0x00FF) return "y";
    if (cp >= 0x0100 && cp <= 0x0105) return (cp % 2 == 0) ? "A" : "a";
    if (cp >= 0x0106 && cp <= 0x010D) return (cp % 2 == 0) ? "C" : "c";
    if (cp >= 0x010E && cp <= 0x0111) return (cp % 2 == 0) ? "D" : "d";
    if (cp >= 0x0112 && cp <= 0x011B) return (cp % 2 == 0) ? "E" : "e";
    if (cp >= 0x011C && cp <= 0x0123) return (cp % 2 == 0) ? "G" : "g";
    if (cp >= 0x0124 && cp <= 0x0127) return (cp % 2 == 0) ? "H" : "h";
    if (cp >= 0x0128 && cp <= 0x0131) return (cp % 2 == 0) ? "I" : "i";
    if (cp >= 0x0134 && cp <= 0x0135) return (cp % 2 == 0) ? "J" : "j";
    if (cp >= 0x0136 && cp <= 0x0137) return (cp % 2 == 0) ? "K" : "k";
    if (cp >= 0x0139 && cp <= 0x0142) return (cp % 2 == 1) ? "L" : "l";
    if (cp >= 0x0143 && cp <= 0x0148) return (cp % 2 == 1) ? "N" : "n";
    if (cp >= 0x014C && cp <= 0x0151) return (cp % 2 == 0) ? "O" : "o";
    if (cp == 0x0152) return "OE";
    if (cp == 0x0153) return "oe";
    if (cp >= 0x0154 && cp <= 0x0159) return (cp % 2 == 0) ? "R" : "r";
    if (cp >= 0x015A && cp <= 0x0161) return (cp % 2 == 0) ? "S" : "s";
    if (cp >= 0x0162 && cp <= 0x0167) return (cp % 2 == 0) ? "T" : "t";
    if (cp >= 0x0168 && cp <= 0x0173) return (cp % 2 == 0) ? "U" : "u";
    if (cp == 0x0174) return "W";
    if (cp == 0x0175) return "w";
    if (cp >= 0x0176 && cp <= 0x0178) return (cp == 0x0177) ? "y" : "Y";
    if (cp >= 0x0179 && cp <= 0x017E) return (cp % 2 == 1) ? "Z" : "z";
    return nullptr;
}

}  // namespace

std::string trim(std::string_view s) {
    size_t b = 0, e = s.size();
    while (b < e && is_space(s[b])) ++b;
    while (e > b && is_space(s[e - 1])) --e;
    return std::string(s.substr(b, e - b));
}

std::string to_lower_ascii(std::string_view s) {
    std::string out(s);
    for (char& c : out) {
        if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    }
    return out;
}

std::string collapse_whitespace(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    bool in_ws = false;
    for (char c : s) {
        if (is_space(c)) {
            in_ws = true;
            continue;
        }
        if (in_ws && !out.empty()) out.push_back(' ');
        in_ws = false;
        out.push_back(c);
    }
    return out;
}

bool contains_whitespace(std::string_view s) {
    for (char c : s) {
        if (is_space(c)) return true;
    }
    return false;
}

std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> out;
    size_t start = 0;
    for (size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == sep) {
            out.emplace_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    return out;
}

bool is_valid_utf8(std::string_view s) {
    size_t i = 0;
    while (i < s.size()) {
        unsigned char c = static_cast<unsigned char>(s[i]);
        int extra;
        uint32_t min_cp;
        if (c < 0x80) {
            ++i;
            continue;
        } else if ((c & 0xE0) == 0xC0) {
            extra = 1;
            min_cp = 0x80;
        } else if ((c & 0xF0) == 0xE0) {
            extra = 2;
            min_cp = 0x800;
        } else if ((c & 0xF8) == 0xF0) {
            extra = 3;
            min_cp = 0x10000;
        } else {
            return false;
        }
        if (i + extra >= s.size()) return false;
        uint32_t cp = c & (0x3F >> extra);
        for (int k = 1; k <= extra; ++k) {
            unsigned char cc = static_cast<unsigned char>(s[i + k]);
            if ((cc & 0xC0) != 0x80) return false;
            cp = (cp << 6) | (cc & 0x3F);
        }
        if (cp < min_cp || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) return false;
        i += 1 + extra;
    }
    return true;
}

std::string compose_latin(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    size_t i = 0;
    uint32_t pending = 0;
    bool have_pending = false;
    while (i < s.size()) {
        uint32_t cp = decode_utf8(s, i);
        if (have_pending) {
            if (cp >= 0x0300 && cp <= 0x036F) {
                uint32_t composed = compose_pair(pending, cp);
                if (composed != 0) {
                    pending = composed;
                    continue;
                }
            }
            append_utf8(out, pending);
            have_pending = false;
        }
        if (cp < 0x80 && std::isalpha(static_cast<int>(cp))) {
            pending = cp;
            have_pending = true;
        } else {
            append_utf8(out, cp);
        }
    }
    if (have_pending) append_utf8(out, pending);
    return out;
}

std::string fold_label(std::string_view s) {
    std::string composed = compose_latin(s);
    std::string folded;
    folded.reserve(composed.size());
    size_t i = 0;
    while (i < composed.size()) {
        uint32_t cp = decode_utf8(composed, i);
        if (cp >= 0x0300 && cp <= 0x036F) continue;  // stray combining mark
        if (const char* base = ascii_base(cp)) {
            folded += base;
        } else {
            append_utf8(folded, cp);
        }
    }
    std::string collapsed = collapse_whitespace(to_lower_ascii(folded));
    while (!collapsed.empty()) {
        char last = collapsed.back();
        if (last == '.' || last == ',' || last == ';' || last == ':') {
            collapsed.pop_back();
            while (!collapsed.empty() && collapsed.back() == ' ') collapsed.pop_back();
        } else {
            break;
        }
    }
    return collapsed;
}

std::optional<std::string> extract_life_dates(std::string_view s) {
    for (size_t i = 0; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) continue;
        size_t j = i;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        size_t digits = j - i;
        if ((digits == 3 || digits == 4) && j < s.size() && s[j] == '-') {
            size_t k = j + 1;
            while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
            size_t digits2 = k - j - 1;
            if (digits2 <= 4) return std::string(s.substr(i, k - i));
        }
        i = j;
    }
    return std::nullopt;
}

std::string strip_life_dates(std::string_view s) {
    auto dates = extract_life_dates(s);
    if (!dates) return std::string(s);
    size_t pos = std::string_view(s).find(*dates);
    std::string out(s.substr(0, pos));
    out += s.substr(pos + dates->size());
    // remove the separator left dangling before the span (", 1850-1894")
    while (!out.empty() && (out.back() == ' ' || out.back() == ',' || out.back() == '(')) out.pop_back();
    return out;
}

std::string slugify(std::string_view s) {
    std::string composed = compose_latin(s);
    std::string lowered;
    lowered.reserve(composed.size());
    size_t i = 0;
    while (i < composed.size()) {
        uint32_t cp = decode_utf8(composed, i);
        if (cp < 0x80) {
            char c = static_cast<char>(cp);
            if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
            lowered.push_back(c);
        } else if (cp >= 0x00C0 && cp <= 0x00DE && cp != 0x00D7) {
            append_utf8(lowered, cp + 0x20);  // Latin-1 uppercase block
        } else {
            append_utf8(lowered, cp);
        }
    }
    std::string hyphenated;
    bool in_ws = false;
    for (char c : lowered) {
        if (is_space(c)) {
            in_ws = true;
            continue;
        }
        if (in_ws && !hyphenated.empty()) hyphenated.push_back('-');
        in_ws = false;
        hyphenated.push_back(c);
    }
    std::string out;
    for (char c : hyphenated) {
        if (is_unreserved(c)) {
            out.push_back(c);
        } else {
            static const char* hex = "0123456789ABCDEF";
            unsigned char u = static_cast<unsigned char>(c);
            out.push_back('%');
            out.push_back(hex[u >> 4]);
            out.push_back(hex[u & 0xF]);
        }
    }
    return out;
}

std::string percent_encode_path(std::string_view s, bool keep_slash) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        if (is_unreserved(c) || is_sub_delim(c) || c == ':' || c == '@' || (keep_slash && c == '/')) {
            out.push_back(c);
        } else {
            static const char* hex = "0123456789ABCDEF";
            unsigned char u = static_cast<unsigned char>(c);
            out.push_back('%');
            out.push_back(hex[u >> 4]);
            out.push_back(hex[u & 0xF]);
        }
    }
    return out;
}

bool is_absolute_iri(std::string_view s) {
    if (s.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0]))) return false;
    for (size_t i = 1; i < s.size(); ++i) {
        char c = s[i];
        if (c == ':') return i + 1 < s.size() || true;
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '+' || c == '-' || c == '.')) return false;
    }
    return false;
}

std::string regex_escape(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        if (std::string_view("\\^$.|?*+()[]{}").find(c) != std::string_view::npos) {
            out.push_back('\\');
        }
        out.push_back(c);
    }
    return out;
}

bool starts_with(std::string_view s, std::string_view prefix) {
    return s.size() >= prefix.size() && s.substr(0, prefix.size()) == prefix;
}

bool ends_with(std::string_view s, std::string_view suffix) {
    return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

std::string fill_template(std::string_view tmpl, std::string_view value) {
    size_t open = tmpl.find('{');
    size_t close = tmpl.find('}');
    if (open == std::string_view::npos || close == std::string_view::npos || close < open
        || tmpl.find('{', open + 1) != std::string_view::npos) {
        throw ConfigError("URL pattern must contain exactly one {placeholder}: " + std::string(tmpl));
    }
    std::string out(tmpl.substr(0, open));
    out += value;
    out += tmpl.substr(close + 1);
    return out;
}

bool is_xsd_date(std::string_view s) {
    if (s.size() != 10 || s[4] != '-' || s[7] != '-') return false;
    for (size_t i : {0u, 1u, 2u, 3u, 5u, 6u, 8u, 9u}) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    int month = (s[5] - '0') * 10 + (s[6] - '0');
    int day = (s[8] - '0') * 10 + (s[9] - '0');
    return month >= 1 && month <= 12 && day >= 1 && day <= 31;
}

bool is_xsd_gyear(std::string_view s) {
    if (s.size() != 4) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

bool is_integer(std::string_view s) {
    if (s.empty()) return false;
    size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

}  // namespace lodforge::strings
