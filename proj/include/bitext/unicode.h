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

#ifndef BITEXT_UNICODE_H
#define BITEXT_UNICODE_H

#include <string>
#include <string_view>

namespace bitext {

// Thin wrappers over ICU so the rest of the code never touches UChar32
// directly.  All strings crossing module boundaries are UTF-8.

std::u32string to_utf32(std::string_view utf8);
std::string to_utf8(std::u32string_view codepoints);
std::string to_utf8(char32_t codepoint);

/// True iff the byte sequence is well-formed UTF-8.
bool valid_utf8(std::string_view bytes);

/// Number of codepoints in a UTF-8 string.
std::size_t codepoint_count(std::string_view utf8);

/// Canonical composition (Normalization Form C).
std::string nfc(const std::string& utf8);

bool is_letter(char32_t c);
bool is_digit(char32_t c);
bool is_alnum(char32_t c);
bool is_upper(char32_t c);   // uppercase or titlecase
bool is_lower(char32_t c);
bool is_punct(char32_t c);   // general category P*

/// Simple (non-contextual) lowercase mapping of one codepoint.
char32_t to_lower(char32_t c);

/// White_Space property, which includes NBSP and the dedicated space blocks.
bool is_whitespace(char32_t c);

/// Vertical whitespace: LF, VT, FF, CR, NEL, LS, PS.
bool is_line_break(char32_t c);

/// Strip leading/trailing whitespace (White_Space property) from UTF-8 text.
std::string trim(std::string_view utf8);

}  // namespace bitext

#endif  // BITEXT_UNICODE_H
