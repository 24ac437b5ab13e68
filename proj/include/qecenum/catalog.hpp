#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "qecenum/code.hpp"

namespace qecenum {

// Built-in single-qubit-encoding stabilizer codes (plus the padded G6b),
// stored in the same text format accepted by parse_code.  The alphabet is
// 0, 1, w (omega), W (omega bar).
namespace catalog_detail {

struct Entry {
    std::string_view name;
    std::string_view text;
};

inline constexpr std::array<Entry, 15> kEntries = {{
    {"G4a",
     "n 4 k 1 name G4a\n"
     "0WwW\n"
     "1ww1\n"
     "wWWw\n"},
    {"G4b",
     "n 4 k 1 name G4b\n"
     "wwww\n"
     "WW00\n"
     "00WW\n"},
    {"G5",
     "n 5 k 1 name G5\n"
     "wWWw0\n"
     "0wWWw\n"
     "w0wWW\n"
     "Ww0wW\n"},
    {"G6a",
     "n 6 k 1 name G6a\n"
     "000011\n"
     "011110\n"
     "0wwwww\n"
     "101wWw\n"
     "w0wW10\n"},
    // G6b = 1 (+) G5, written out as an explicit block matrix.
    {"G6b",
     "n 6 k 1 name G6b\n"
     "100000\n"
     "0wWWw0\n"
     "00wWWw\n"
     "0w0wWW\n"
     "0Ww0wW\n"},
    {"G7a",
     "n 7 k 1 name G7a\n"
     "0001111\n"
     "0010wW1\n"
     "010wWWw\n"
     "0www1W0\n"
     "1000Ww1\n"
     "w0wwWwW\n"},
    {"G7b",
     "n 7 k 1 name G7b\n"
     "000wwww\n"
     "0ww00ww\n"
     "w0w0w0w\n"
     "000WWWW\n"
     "0WW00WW\n"
     "W0W0W0W\n"},
    {"G8a",
     "n 8 k 1 name G8a\n"
     "00011111\n"
     "000wwww0\n"
     "00101w1W\n"
     "0100wWWw\n"
     "0ww01011\n"
     "100001WW\n"
     "w0w0W10w\n"},
    {"G8b",
     "n 8 k 1 name G8b\n"
     "00011Ww0\n"
     "0010ww01\n"
     "00ww0w0w\n"
     "010001WW\n"
     "0w0ww11W\n"
     "1000W01w\n"
     "w00w0ww0\n"},
    {"G8c",
     "n 8 k 1 name G8c\n"
     "00011111\n"
     "000wwww0\n"
     "00101Ww0\n"
     "0100ww01\n"
     "0ww00w0w\n"
     "100001WW\n"
     "w0w0w11W\n"},
    {"G9a",
     "n 9 k 1 name G9a\n"
     "0000wWW0W\n"
     "000101011\n"
     "001010011\n"
     "00ww00WW0\n"
     "010010110\n"
     "0w0w0WW00\n"
     "100001110\n"
     "w00w1wwww\n"},
    {"G9b",
     "n 9 k 1 name G9b\n"
     "0000w011w\n"
     "000111111\n"
     "000w0wWW0\n"
     "001001w0W\n"
     "0100010wW\n"
     "0ww00W1W1\n"
     "1000111Ww\n"
     "w0w01W01W\n"},
    {"G9c",
     "n 9 k 1 name G9c\n"
     "WW0000000\n"
     "0WW000000\n"
     "000WW0000\n"
     "0000WW000\n"
     "000000WW0\n"
     "0000000WW\n"
     "wwwwww000\n"
     "000wwwwww\n"},
    {"G10",
     "n 10 k 1 name G10\n"
     "w0000WwwW0\n"
     "0w00W1wWWw\n"
     "00w00W1WWw\n"
     "000wW111w1\n"
     "0000wW0W11\n"
     "0W000w1111\n"
     "00W0W0wwWW\n"
     "WWW0W0Ww01\n"
     "W00W00WWww\n"},
    {"G11",
     "n 11 k 1 name G11\n"
     "w0000WWW0ww\n"
     "0w000WW1W01\n"
     "00w00WWwwW0\n"
     "000w0W10ww1\n"
     "0000wWw0WWw\n"
     "00W00w101WW\n"
     "0WW000wW0wW\n"
     "0W00W0Www0W\n"
     "WWW0W00WwWw\n"
     "0W0W00W0Www\n"},
}};

}  // namespace catalog_detail

inline std::vector<std::string> catalog_names() {
    std::vector<std::string> names;
    for (const auto& e : catalog_detail::kEntries) names.emplace_back(e.name);
    return names;
}

inline std::string_view catalog_text(const std::string& name) {
    for (const auto& e : catalog_detail::kEntries)
        if (e.name == name) return e.text;
    std::string available;
    for (const auto& e : catalog_detail::kEntries) {
        if (!available.empty()) available += ", ";
        available += e.name;
    }
    throw std::invalid_argument("unknown catalog code '" + name + "' (available: " + available + ")");
}

inline AdditiveCode catalog(const std::string& name) {
    return parse_code(std::string(catalog_text(name)));
}

// Default comparison set: every catalog code except the padded G6b, whose
// performance is identical to G5.
inline std::vector<std::string> default_ranking_names() {
    std::vector<std::string> names;
    for (const auto& e : catalog_detail::kEntries)
        if (e.name != "G6b") names.emplace_back(e.name);
    return names;
}

}  // namespace qecenum
