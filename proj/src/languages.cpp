#include "lingwalk/languages.hpp"

#include <stdexcept>

namespace lingwalk {

bool is_binary_word(std::string_view w) {
    for (char c : w)
        if (c != 'a' && c != 'b') return false;
    return true;
}

Language Language::specific(std::string w) {
    if (w.empty()) throw std::invalid_argument("language: specific word must be nonempty");
    if (!is_binary_word(w))
        throw std::invalid_argument("language: word must use the alphabet {a, b}");
    return {Kind::Word, std::move(w)};
}

Language Language::parse(std::string_view text) {
    if (text == "eq") return eq();
    if (text == "ab") return ab();
    if (text.rfind("word:", 0) == 0) return specific(std::string(text.substr(5)));
    throw std::invalid_argument("language: expected eq, ab or word:<w>, got '" +
                                std::string(text) + "'");
}

std::string Language::to_string() const {
    switch (kind) {
        case Kind::Eq:
            return "eq";
        case Kind::Ab:
            return "ab";
        case Kind::Word:
            return "word:" + word;
    }
    return {};
}

std::optional<std::string> target_word(const Language& language, int n) {
    if (n < 0) throw std::invalid_argument("target_word: negative length");
    switch (language.kind) {
        case Language::Kind::Eq: {
            if (n % 2 != 0) return std::nullopt;
            const int m = n / 2;
            return std::string(static_cast<std::size_t>(m), 'a') +
                   std::string(static_cast<std::size_t>(m), 'b');
        }
        case Language::Kind::Ab: {
            if (n % 2 != 0) return std::nullopt;
            std::string w;
            w.reserve(static_cast<std::size_t>(n));
            for (int i = 0; i < n / 2; ++i) w += "ab";
            return w;
        }
        case Language::Kind::Word:
            if (static_cast<int>(language.word.size()) == n) return language.word;
            return std::nullopt;
    }
    return std::nullopt;
}

bool membership(const Language& language, std::string_view w) {
    if (!is_binary_word(w)) return false;
    auto target = target_word(language, static_cast<int>(w.size()));
    return target.has_value() && *target == w;
}

std::string reference_word(const Language& language, int n) {
    if (n < 1) throw std::invalid_argument("reference_word: length must be >= 1");
    if (auto exact = target_word(language, n)) return *exact;
    if (auto shorter = target_word(language, n - 1)) return *shorter;
    throw std::invalid_argument("reference_word: no in-language word at length " +
                                std::to_string(n) + " or " + std::to_string(n - 1));
}

}  // namespace lingwalk
