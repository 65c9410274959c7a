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

#ifndef SYNTEX_TEXT_HPP
#define SYNTEX_TEXT_HPP

#include <string>
#include <vector>

namespace syntex {

using TokenSequence = std::vector<std::string>;

// Whitespace-split word tokens with punctuation isolated as single-character
// tokens. Tokens never contain whitespace, so `tokenize(detokenize(t)) == t`
// holds for any sequence the tokenizer itself produced.
TokenSequence tokenize(const std::string& text, bool lowercase = false);

// Joins tokens with single spaces.
std::string detokenize(const TokenSequence& tokens);

std::string ascii_lower(std::string s);
std::string ascii_upper(std::string s);

// Percent-encoding for the model file format: encodes '%', tabs, newlines,
// spaces and control bytes. Round-trips arbitrary token bytes.
std::string percent_encode(const std::string& s);
std::string percent_decode(const std::string& s);

// Locale-independent shortest-ish decimal formatting (17 significant digits).
std::string format_double(double v);

}  // namespace syntex

#endif  // SYNTEX_TEXT_HPP
