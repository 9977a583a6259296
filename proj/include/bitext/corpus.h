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

#ifndef BITEXT_CORPUS_H
#define BITEXT_CORPUS_H

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bitext {

struct DocumentOrigin {
  std::string path;
  std::string extractor;

  bool operator==(const DocumentOrigin&) const = default;
};

/// A normalized document: ordered lines with provenance.  Lines never contain
/// byte order marks or carriage returns; char_count is the codepoint total
/// over all lines (line breaks excluded).
struct TextDocument {
  std::string doc_id;
  std::optional<std::string> language;
  std::vector<std::string> lines;
  std::size_t char_count = 0;
  DocumentOrigin origin;

  /// Builds a document from already-normalized text, splitting on LF.
  /// A trailing newline does not produce a final empty line.
  static TextDocument from_text(std::string doc_id, std::string_view text,
                                DocumentOrigin origin = {});
};

/// One aligned bead: a contiguous source range mapped to a contiguous target
/// range, half-open indices into the two sentence lists.  Supported shapes
/// are 1-1, 1-2, 2-1, 1-0 and 0-1 (2-2 behind a model option); never 0-0.
struct AlignmentLink {
  int src_begin = 0;
  int src_end = 0;
  int tgt_begin = 0;
  int tgt_end = 0;
  double cost = 0.0;

  int src_size() const { return src_end - src_begin; }
  int tgt_size() const { return tgt_end - tgt_begin; }
};

struct SentencePair {
  std::string source;
  std::string target;
  AlignmentLink link{};
  std::string doc_pair_id;
};

struct CorpusStats {
  std::size_t line_count = 0;
  std::size_t vocab_size = 0;
  std::map<std::string, std::size_t> per_source_counts;

  bool operator==(const CorpusStats&) const = default;
};

/// Ordered list of sentence pairs, document order first, then within-document
/// sentence order.
struct ParallelCorpus {
  std::vector<SentencePair> pairs;
  CorpusStats stats;
};

/// Vocabulary tokenization for corpus statistics: split on Unicode
/// whitespace, strip leading and trailing punctuation, keep case.
struct TokenRule {
  std::vector<std::string> tokenize(std::string_view text) const;
};

/// Line count, combined unique-token count over both sides, and per-source
/// pair counts.  Empty corpus yields zero counts.
CorpusStats compute_stats(const ParallelCorpus& corpus, const TokenRule& rule = {});

// On-disk corpus layout, one sentence per line, UTF-8, LF endings:
//   <base>.<src_lang>   source side
//   <base>.<tgt_lang>   target side
//   <base>.tsv          source TAB target (tabs inside text become spaces)
//   <base>.stats.json   stats report
void write_corpus(const ParallelCorpus& corpus, const std::filesystem::path& base,
                  const std::string& src_lang, const std::string& tgt_lang);

/// Reads the paired plain-text form back; provenance fields are left empty
/// and stats are recomputed under the default TokenRule.
ParallelCorpus read_corpus(const std::filesystem::path& base,
                           const std::string& src_lang, const std::string& tgt_lang);

/// Materializes links as text pairs; multi-sentence sides are joined with a
/// single space, empty sides become empty strings.
std::vector<SentencePair> make_sentence_pairs(const std::vector<AlignmentLink>& links,
                                              const std::vector<std::string>& src_sentences,
                                              const std::vector<std::string>& tgt_sentences,
                                              const std::string& doc_pair_id);

}  // namespace bitext

#endif  // BITEXT_CORPUS_H
