#include "coordnet/utf8.hpp"

namespace coordnet::utf8 {

namespace {

inline bool is_cont(unsigned char b) { return (b & 0xC0) == 0x80; }

}  // namespace

char32_t decode(std::string_view s, std::size_t& i) {
  const auto b0 = static_cast<unsigned char>(s[i]);
  if (b0 < 0x80) {
    ++i;
    return b0;
  }
  if ((b0 & 0xE0) == 0xC0) {
    if (i + 1 < s.size() && is_cont(s[i + 1])) {
      char32_t cp = (char32_t(b0 & 0x1F) << 6) | (s[i + 1] & 0x3F);
      if (cp >= 0x80) {  // reject overlong
        i += 2;
        return cp;
      }
    }
  } else if ((b0 & 0xF0) == 0xE0) {
    if (i + 2 < s.size() && is_cont(s[i + 1]) && is_cont(s[i + 2])) {
      char32_t cp = (char32_t(b0 & 0x0F) << 12) | (char32_t(s[i + 1] & 0x3F) << 6) |
                    (s[i + 2] & 0x3F);
      if (cp >= 0x800 && !(cp >= 0xD800 && cp <= 0xDFFF)) {
        i += 3;
        return cp;
      }
    }
  } else if ((b0 & 0xF8) == 0xF0) {
    if (i + 3 < s.size() && is_cont(s[i + 1]) && is_cont(s[i + 2]) && is_cont(s[i + 3])) {
      char32_t cp = (char32_t(b0 & 0x07) << 18) | (char32_t(s[i + 1] & 0x3F) << 12) |
                    (char32_t(s[i + 2] & 0x3F) << 6) | (s[i + 3] & 0x3F);
      if (cp >= 0x10000 && cp <= 0x10FFFF) {
        i += 4;
        return cp;
      }
    }
  }
  ++i;
  return kReplacement;
}

void append(std::string& out, char32_t cp) {
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

std::size_t sanitize(std::string& s) {
  // Fast path: scan for any non-ASCII or invalid byte first.
  std::size_t i = 0;
  std::size_t replaced = 0;
  while (i < s.size()) {
    if (static_cast<unsigned char>(s[i]) < 0x80) {
      ++i;
      continue;
    }
    break;
  }
  if (i == s.size()) return 0;

  std::string out;
  out.reserve(s.size());
  out.append(s, 0, i);
  while (i < s.size()) {
    std::size_t before = i;
    char32_t cp = decode(s, i);
    if (cp == kReplacement && !(i - before == 3 &&
                                static_cast<unsigned char>(s[before]) == 0xEF &&
                                static_cast<unsigned char>(s[before + 1]) == 0xBF &&
                                static_cast<unsigned char>(s[before + 2]) == 0xBD)) {
      ++replaced;
    }
    append(out, cp);
  }
  s = std::move(out);
  return replaced;
}

std::size_t codepoint_count(std::string_view s) {
  std::size_t i = 0, n = 0;
  while (i < s.size()) {
    decode(s, i);
    ++n;
  }
  return n;
}

}  // namespace coordnet::utf8
