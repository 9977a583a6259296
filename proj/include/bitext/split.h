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

#ifndef BITEXT_SPLIT_H
#define BITEXT_SPLIT_H

#include <filesystem>
#include <set>
#include <string>
#include <vector>

#include "bitext/corpus.h"

namespace bitext {

/// Language-specific abbreviations that end in a full stop ("Dr.", "lch.").
/// A terminal period belonging to one of these never ends a sentence.
struct AbbreviationLexicon {
  std::string language;
  std::set<std::string> entries;

  bool contains(const std::string& token) const { return entries.count(token) > 0; }

  /// One entry per line, UTF-8, '#' comments.  Entries must end with '.'.
  static AbbreviationLexicon load(const std::filesystem::path& path,
                                  std::string language = {});
};

struct SentenceList {
  std::string doc_id;
  std::vector<std::string> sentences;
};

// Sentence boundary reconstruction, driven by capitalization and the
// abbreviation lexicon.  A sentence ends after [.?!] followed by whitespace
// and an uppercase letter, opening quote or opening bracket, unless the token
// carrying the period is a known abbreviation or a single uppercase initial.

/// For editable sources (plain text, Word): every line break is already a
/// hard boundary, so each line is segmented independently.
SentenceList split_editable(const TextDocument& doc, const AbbreviationLexicon& lexicon);

/// For PDF-extracted text: hard-wrapped lines are first re-flowed.  A line is
/// appended to the running block unless the block already ends in terminal
/// punctuation or the line starts with a break pattern — a single letter in
/// parentheses ("(a)") or a number followed by a full stop ("3.") — which
/// forces a boundary before it.  Word fragments hyphenated across lines are
/// rejoined without the hyphen (disable with rejoin_hyphenated = false).
SentenceList split_pdf_text(const TextDocument& doc, const AbbreviationLexicon& lexicon,
                            bool rejoin_hyphenated = true);

}  // namespace bitext

#endif  // BITEXT_SPLIT_H
