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

#include "bitext/split.h"

#include <fstream>
#include <stdexcept>

#include "bitext/unicode.h"

namespace bitext {

namespace {

bool is_terminal(char32_t c) { return c == U'.' || c == U'?' || c == U'!'; }

bool is_opening_quote(char32_t c) {
  switch (c) {
    case U'"':
    case U'\'':
    case U'‘':  // ‘
    case U'“':  // “
    case U'«':  // «
    case U'‹':  // ‹
      return true;
    default:
      return false;
  }
}

bool is_opening_bracket(char32_t c) { return c == U'(' || c == U'[' || c == U'{'; }

bool starts_sentence(char32_t c) {
  return is_upper(c) || is_opening_quote(c) || is_opening_bracket(c);
}

/// The maximal run of non-whitespace codepoints ending at position end
/// (inclusive), e.g. the "Dr." in "see Dr. Smith".
std::string token_ending_at(const std::u32string& u, std::size_t end) {
  std::size_t begin = end;
  while (begin > 0 && !is_whitespace(u[begin - 1])) --begin;
  return to_utf8(std::u32string_view(u).substr(begin, end - begin + 1));
}

bool is_single_initial(const std::u32string& u, std::size_t dot) {
  if (dot == 0 || !is_upper(u[dot - 1])) return false;
  return dot == 1 || is_whitespace(u[dot - 2]);
}

/// Splits one block of text (no internal line breaks).  Boundary scanning
/// starts at scan_from, which lets a leading list marker like "1." survive.
void split_block(const std::string& block, const AbbreviationLexicon& lexicon,
                 std::size_t scan_from, std::vector<std::string>& out) {
  std::u32string u = to_utf32(block);
  std::size_t start = 0;
  for (std::size_t i = scan_from; i < u.size(); ++i) {
    if (!is_terminal(u[i])) continue;
    if (i + 1 >= u.size() || !is_whitespace(u[i + 1])) continue;
    std::size_t next = i + 1;
    while (next < u.size() && is_whitespace(u[next])) ++next;
    if (next >= u.size() || !starts_sentence(u[next])) continue;
    if (u[i] == U'.') {
      if (lexicon.contains(token_ending_at(u, i))) continue;
      if (is_single_initial(u, i)) continue;
    }
    std::string sentence = trim(to_utf8(std::u32string_view(u).substr(start, i + 1 - start)));
    if (!sentence.empty()) out.push_back(std::move(sentence));
    start = next;
  }
  std::string tail = trim(to_utf8(std::u32string_view(u).substr(start)));
  if (!tail.empty()) out.push_back(std::move(tail));
}

/// "(a)" — a single letter in parentheses at the start of a line.
/// Returns the codepoint length of the marker, or 0.
std::size_t paren_letter_marker(const std::u32string& u) {
  if (u.size() >= 3 && u[0] == U'(' && is_letter(u[1]) && u[2] == U')') return 3;
  return 0;
}

/// "3." — a number followed by a full stop at the start of a line.
std::size_t number_dot_marker(const std::u32string& u) {
  std::size_t i = 0;
  while (i < u.size() && is_digit(u[i])) ++i;
  if (i > 0 && i < u.size() && u[i] == U'.') return i + 1;
  return 0;
}

std::size_t break_marker_length(const std::u32string& u) {
  if (std::size_t n = paren_letter_marker(u)) return n;
  return number_dot_marker(u);
}

bool ends_in_terminal(const std::u32string& u) {
  return !u.empty() && is_terminal(u.back());
}

}  // namespace

AbbreviationLexicon AbbreviationLexicon::load(const std::filesystem::path& path,
                                              std::string language) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open abbreviation lexicon: " + path.string());
  AbbreviationLexicon lexicon;
  lexicon.language = std::move(language);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::string entry = trim(line);
    if (entry.empty()) continue;
    if (entry.back() != '.') {
      throw std::runtime_error(path.string() + ":" + std::to_string(lineno) +
                               ": abbreviation '" + entry + "' does not end with '.'");
    }
    lexicon.entries.insert(std::move(entry));
  }
  return lexicon;
}

SentenceList split_editable(const TextDocument& doc, const AbbreviationLexicon& lexicon) {
  SentenceList result;
  result.doc_id = doc.doc_id;
  for (const auto& line : doc.lines) {
    std::string t = trim(line);
    if (t.empty()) continue;
    split_block(t, lexicon, 0, result.sentences);
  }
  return result;
}

SentenceList split_pdf_text(const TextDocument& doc, const AbbreviationLexicon& lexicon,
                            bool rejoin_hyphenated) {
  SentenceList result;
  result.doc_id = doc.doc_id;

  struct Block {
    std::u32string text;
    std::size_t marker_len = 0;
  };
  std::vector<Block> blocks;
  Block current;

  auto flush = [&] {
    if (!current.text.empty()) blocks.push_back(std::move(current));
    current = Block{};
  };

  for (const auto& raw_line : doc.lines) {
    std::u32string line = to_utf32(trim(raw_line));
    if (line.empty()) {  // paragraph gap
      flush();
      continue;
    }
    if (current.text.empty()) {
      current.text = std::move(line);
      current.marker_len = break_marker_length(current.text);
      continue;
    }
    if (ends_in_terminal(current.text) || break_marker_length(line) > 0) {
      flush();
      current.text = std::move(line);
      current.marker_len = break_marker_length(current.text);
      continue;
    }
    if (rejoin_hyphenated && current.text.size() >= 2 && current.text.back() == U'-' &&
        is_letter(current.text[current.text.size() - 2]) && is_lower(line.front())) {
      current.text.pop_back();
      current.text += line;
    } else {
      current.text += U' ';
      current.text += line;
    }
  }
  flush();

  for (const auto& block : blocks) {
    split_block(to_utf8(block.text), lexicon, block.marker_len, result.sentences);
  }
  return result;
}

}  // namespace bitext
