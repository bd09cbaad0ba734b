#include "demofuse/text.hpp"

namespace demofuse::text {

namespace {

// Fold table for the U+00C0..U+00FF block (UTF-8 lead byte 0xC3).
// Returns nullptr for code points left untouched.
const char* fold_c3(unsigned char second) {
  switch (second) {
    case 0x80: case 0x81: case 0x82: case 0x83: case 0x84: case 0x85: return "A";
    case 0x86: return "AE";
    case 0x87: return "C";
    case 0x88: case 0x89: case 0x8A: case 0x8B: return "E";
    case 0x8C: case 0x8D: case 0x8E: case 0x8F: return "I";
    case 0x90: return "D";
    case 0x91: return "N";
    case 0x92: case 0x93: case 0x94: case 0x95: case 0x96: return "O";
    case 0x98: return "O";
    case 0x99: case 0x9A: case 0x9B: case 0x9C: return "U";
    case 0x9D: return "Y";
    case 0x9F: return "SS";
    case 0xA0: case 0xA1: case 0xA2: case 0xA3: case 0xA4: case 0xA5: return "A";
    case 0xA6: return "AE";
    case 0xA7: return "C";
    case 0xA8: case 0xA9: case 0xAA: case 0xAB: return "E";
    case 0xAC: case 0xAD: case 0xAE: case 0xAF: return "I";
    case 0xB0: return "D";
    case 0xB1: return "N";
    case 0xB2: case 0xB3: case 0xB4: case 0xB5: case 0xB6: return "O";
    case 0xB8: return "O";
    case 0xB9: case 0xBA: case 0xBB: case 0xBC: return "U";
    case 0xBD: return "Y";
    case 0xBF: return "Y";
    default: return nullptr;
  }
}

bool is_ws(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v'; }

}  // namespace

std::string fold_upper(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    const unsigned char c = static_cast<unsigned char>(s[i]);
    if (c < 0x80) {
      out.push_back(c >= 'a' && c <= 'z' ? static_cast<char>(c - 'a' + 'A') : static_cast<char>(c));
    } else if (c == 0xC3 && i + 1 < s.size()) {
      const unsigned char second = static_cast<unsigned char>(s[i + 1]);
      if (const char* folded = fold_c3(second)) {
        out += folded;
        ++i;
      } else {
        out.push_back(static_cast<char>(c));
      }
    } else {
      out.push_back(static_cast<char>(c));
    }
  }
  return out;
}

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && is_ws(s[b])) ++b;
  while (e > b && is_ws(s[e - 1])) --e;
  return std::string(s.substr(b, e - b));
}

std::string collapse_ws(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  bool pending_space = false;
  for (char c : s) {
    if (is_ws(c)) {
      if (!out.empty()) pending_space = true;
    } else {
      if (pending_space) out.push_back(' ');
      pending_space = false;
      out.push_back(c);
    }
  }
  return out;
}

std::string digits_only(std::string_view s) {
  std::string out;
  for (char c : s)
    if (c >= '0' && c <= '9') out.push_back(c);
  return out;
}

std::string zero_pad(std::string_view digits, std::size_t width) {
  if (digits.size() >= width) return std::string(digits);
  std::string out(width - digits.size(), '0');
  out += digits;
  return out;
}

}  // namespace demofuse::text
