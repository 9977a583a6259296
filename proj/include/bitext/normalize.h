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

#ifndef BITEXT_NORMALIZE_H
#define BITEXT_NORMALIZE_H

#include <cstddef>
#include <filesystem>
#include <map>
#include <string>
#include <utility>

namespace bitext {

/// Codepoint-to-codepoint replacements applied before NFC, so they are
/// expressed in source-document terms (typically fixes for corrupted
/// characters from a broken extraction).
using SubstitutionMap = std::map<char32_t, char32_t>;

struct NormalizationReport {
  std::size_t boms_removed = 0;
  std::size_t chars_substituted = 0;
  std::size_t whitespace_runs_merged = 0;

  NormalizationReport& operator+=(const NormalizationReport& other);
};

// Character-level cleanup applied to every document before any other stage:
//   - configured substitutions, then removal of all U+FEFF marks
//   - vertical whitespace (CR, CRLF, NEL, VT, FF, LS, PS) becomes LF
//   - canonical composition (NFC)
//   - each maximal run of non-linebreak whitespace becomes a single space
// Line breaks survive so that later stages can sample and split by line.
// No tokenization, no case changes.  Idempotent for an empty substitution map.
std::pair<std::string, NormalizationReport> normalize_text(
    const std::string& raw, const SubstitutionMap& substitutions = {});

/// Reads a substitution map from a text file: two hex codepoints per line
/// ("0092 2019" or "U+0092 U+2019"), '#' starts a comment.
SubstitutionMap load_substitution_file(const std::filesystem::path& path);

}  // namespace bitext

#endif  // BITEXT_NORMALIZE_H
