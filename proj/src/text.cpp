// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Copyright 2026 The syntex authors.

#include "text.hpp"

#include <cctype>
#include <cstdio>
#include <cstring>

namespace syntex {

namespace {

// Decodes one UTF-8 codepoint starting at s[i]; advances i past it.
// Invalid bytes are treated as single-byte codepoints so tokenization
// never fails on malformed input.
uint32_t next_codepoint(const std::string& s, size_t& i, size_t& len) {
  unsigned char c = static_cast<unsigned char>(s[i]);
  uint32_t cp = c;
  len = 1;
  if (c >= 0xF0 && i + 3 < s.size()) {
    cp = ((c & 0x07u) << 18) | ((s[i + 1] & 0x3Fu) << 12) |
         ((s[i + 2] & 0x3Fu) << 6) | (s[i + 3] & 0x3Fu);
    len = 4;
  } else if (c >= 0xE0 && i + 2 < s.size()) {
    cp = ((c & 0x0Fu) << 12) | ((s[i + 1] & 0x3Fu) << 6) | (s[i + 2] & 0x3Fu);
    len = 3;
  } else if (c >= 0xC0 && i + 1 < s.size()) {
    cp = ((c & 0x1Fu) << 6) | (s[i + 1] & 0x3Fu);
    len = 2;
  }
  i += len;
  return cp;
}

bool is_unicode_space(uint32_t cp) {
  switch (cp) {
    case 0x09: case 0x0A: case 0x0B: case 0x0C: case 0x0D: case 0x20:
    case 0x85: case 0xA0: case 0x1680: case 0x2028: case 0x2029:
    case 0x202F: case 0x205F: case 0x3000:
      return true;
    default:
      return cp >= 0x2000 && cp <= 0x200A;
  }
}

bool is_punct_codepoint(uint32_t cp) {
  return cp < 0x80 && std::ispunct(static_cast<int>(cp));
}

}  // namespace

TokenSequence tokenize(const std::string& text, bool lowercase) {
  TokenSequence out;
  std::string word;
  size_t i = 0;
  while (i < text.size()) {
    size_t start = i, len = 0;
    uint32_t cp = next_codepoint(text, i, len);
    if (is_unicode_space(cp)) {
      if (!word.empty()) {
        out.push_back(word);
        word.clear();
      }
    } else if (is_punct_codepoint(cp)) {
      if (!word.empty()) {
        out.push_back(word);
        word.clear();
      }
      out.push_back(text.substr(start, len));
    } else {
      if (lowercase && cp < 0x80) {
        word.push_back(static_cast<char>(std::tolower(static_cast<int>(cp))));
      } else {
        word.append(text, start, len);
      }
    }
  }
  if (!word.empty()) out.push_back(word);
  return out;
}

std::string detokenize(const TokenSequence& tokens) {
  std::string out;
  for (size_t i = 0; i < tokens.size(); ++i) {
    if (i) out.push_back(' ');
    out += tokens[i];
  }
  return out;
}

std::string ascii_lower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

std::string ascii_upper(std::string s) {
  for (char& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return s;
}

std::string percent_encode(const std::string& s) {
  static const char* hex = "0123456789ABCDEF";
  std::string out;
  out.reserve(s.size());
  for (unsigned char c : s) {
    if (c == '%' || c <= 0x20 || c == 0x7F) {
      out.push_back('%');
      out.push_back(hex[c >> 4]);
      out.push_back(hex[c & 0xF]);
    } else {
      out.push_back(static_cast<char>(c));
    }
  }
  return out;
}

static int hex_val(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  return -1;
}

std::string percent_decode(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '%' && i + 2 < s.size()) {
      int hi = hex_val(s[i + 1]), lo = hex_val(s[i + 2]);
      if (hi >= 0 && lo >= 0) {
        out.push_back(static_cast<char>(hi * 16 + lo));
        i += 2;
        continue;
      }
    }
    out.push_back(s[i]);
  }
  return out;
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace syntex
