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

#include "bitext/normalize.h"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "bitext/unicode.h"

namespace bitext {

namespace {

constexpr char32_t kBom = U'﻿';

}  // namespace

NormalizationReport& NormalizationReport::operator+=(const NormalizationReport& other) {
  boms_removed += other.boms_removed;
  chars_substituted += other.chars_substituted;
  whitespace_runs_merged += other.whitespace_runs_merged;
  return *this;
}

std::pair<std::string, NormalizationReport> normalize_text(
    const std::string& raw, const SubstitutionMap& substitutions) {
  NormalizationReport report;
  std::u32string text = to_utf32(raw);

  std::u32string pass;
  pass.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    char32_t c = text[i];
    if (!substitutions.empty()) {
      auto it = substitutions.find(c);
      if (it != substitutions.end() && it->second != c) {
        c = it->second;
        ++report.chars_substituted;
      }
    }
    if (c == kBom) {
      ++report.boms_removed;
      continue;
    }
    if (c == U'\r') {
      if (i + 1 < text.size() && text[i + 1] == U'\n') ++i;
      pass.push_back(U'\n');
      continue;
    }
    if (is_line_break(c)) {
      pass.push_back(U'\n');
      continue;
    }
    pass.push_back(c);
  }

  std::u32string composed = to_utf32(nfc(to_utf8(pass)));

  std::u32string out;
  out.reserve(composed.size());
  std::size_t i = 0;
  while (i < composed.size()) {
    char32_t c = composed[i];
    if (c == U'\n') {
      out.push_back(c);
      ++i;
      continue;
    }
    if (is_whitespace(c)) {
      std::size_t j = i;
      while (j < composed.size() && composed[j] != U'\n' && is_whitespace(composed[j])) ++j;
      if (j - i != 1 || c != U' ') ++report.whitespace_runs_merged;
      out.push_back(U' ');
      i = j;
      continue;
    }
    out.push_back(c);
    ++i;
  }

  return {to_utf8(out), report};
}

SubstitutionMap load_substitution_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open substitution file: " + path.string());
  }
  SubstitutionMap map;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string from_hex, to_hex;
    if (!(fields >> from_hex)) continue;  // blank or comment-only line
    if (!(fields >> to_hex)) {
      throw std::runtime_error(path.string() + ":" + std::to_string(lineno) +
                               ": expected two hex codepoints");
    }
    auto parse = [&](std::string s) -> char32_t {
      if (s.rfind("U+", 0) == 0 || s.rfind("u+", 0) == 0) s.erase(0, 2);
      std::size_t used = 0;
      unsigned long v = std::stoul(s, &used, 16);
      if (used != s.size() || v > 0x10FFFF) {
        throw std::runtime_error(path.string() + ":" + std::to_string(lineno) +
                                 ": bad codepoint '" + s + "'");
      }
      return static_cast<char32_t>(v);
    };
    map[parse(from_hex)] = parse(to_hex);
  }
  return map;
}

}  // namespace bitext
