#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace lingwalk {

/// Words are strings over the binary alphabet {a, b}.
bool is_binary_word(std::string_view w);

/// Language selector: a^m b^m, (ab)^m, or a single specific word.
struct Language {
    enum class Kind { Eq, Ab, Word };

    Kind kind = Kind::Eq;
    std::string word;  // Kind::Word only; nonempty

    static Language eq() { return {Kind::Eq, {}}; }
    static Language ab() { return {Kind::Ab, {}}; }
    static Language specific(std::string w);

    /// Accepts "eq", "ab" or "word:<w>"; throws std::invalid_argument otherwise.
    static Language parse(std::string_view text);
    std::string to_string() const;

    friend bool operator==(const Language&, const Language&) = default;
};

/// The unique in-language word of length n, when one exists. Both eq and ab
/// contain at most one word per length (including the empty word at n = 0).
std::optional<std::string> target_word(const Language& language, int n);

/// Classical recognizer; the test oracle for all walk results. Both eq and ab
/// include the empty word.
bool membership(const Language& language, std::string_view w);

/// target_word(L, n) if it exists, otherwise target_word(L, n-1). Throws when
/// neither length has an in-language word.
std::string reference_word(const Language& language, int n);

}  // namespace lingwalk
