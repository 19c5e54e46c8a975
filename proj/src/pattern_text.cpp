#include "layered_cheb/pattern_text.hpp"

#include <cctype>
#include <charconv>
#include <stdexcept>
#include <vector>

namespace layered_cheb {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

[[noreturn]] void malformed(std::string_view text, const std::string& why) {
    throw std::invalid_argument("malformed pattern \"" + std::string(text) + "\": " + why);
}

}  // namespace

Permutation parse_permutation(std::string_view text) {
    const std::string_view body = trim(text);
    if (body.empty()) malformed(text, "no entries");

    std::vector<int> values;
    if (body.find(',') == std::string_view::npos) {
        for (char c : body) {
            if (!std::isdigit(static_cast<unsigned char>(c))) {
                malformed(text, "compact form accepts single digits only");
            }
            values.push_back(c - '0');
        }
    } else {
        std::size_t pos = 0;
        while (pos <= body.size()) {
            const std::size_t comma = body.find(',', pos);
            const std::size_t end = comma == std::string_view::npos ? body.size() : comma;
            const std::string_view token = trim(body.substr(pos, end - pos));
            int value = 0;
            auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
            if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
                malformed(text, "bad entry \"" + std::string(token) + "\"");
            }
            values.push_back(value);
            if (comma == std::string_view::npos) break;
            pos = comma + 1;
        }
    }
    try {
        return Permutation(std::move(values));
    } catch (const std::invalid_argument& e) {
        malformed(text, e.what());
    }
}

PatternSet parse_pattern_set(std::string_view text) {
    std::vector<Permutation> patterns;
    std::size_t pos = 0;
    while (true) {
        const std::size_t semi = text.find(';', pos);
        const std::size_t end = semi == std::string_view::npos ? text.size() : semi;
        patterns.push_back(parse_permutation(text.substr(pos, end - pos)));
        if (semi == std::string_view::npos) break;
        pos = semi + 1;
    }
    return PatternSet(std::move(patterns));
}

}  // namespace layered_cheb
