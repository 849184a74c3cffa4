#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace coordnet::utf8 {

inline constexpr char32_t kReplacement = 0xFFFD;

// Decodes the codepoint starting at byte offset `i`, advancing `i` past it.
// Invalid sequences decode to U+FFFD and advance by one byte.
char32_t decode(std::string_view s, std::size_t& i);

void append(std::string& out, char32_t cp);

// Replaces every invalid byte sequence with U+FFFD. Returns the number of
// replacements made; a valid input comes back unchanged with count 0.
std::size_t sanitize(std::string& s);

std::size_t codepoint_count(std::string_view s);

}  // namespace coordnet::utf8
