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

#ifndef BITEXT_DOCALIGN_H
#define BITEXT_DOCALIGN_H

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "bitext/corpus.h"

namespace bitext {

/// An accepted source/target document mapping.
struct DocumentPair {
  std::string source_id;
  std::string target_id;
  double score = 0.0;       // anchor-token cosine similarity, in [0, 1]
  double size_ratio = 0.0;  // source char_count / target char_count
  int iteration = 0;        // pass on which the pair was accepted (1-based)
};

struct DocAlignResult {
  std::vector<DocumentPair> pairs;
  std::vector<std::string> unmapped;
  int iterations_used = 0;
};

struct DocAlignParams {
  double threshold = 0.1;
  double min_ratio = 0.75;
  double max_ratio = 1.33;
  int max_iterations = 3;
  unsigned jobs = 1;  // workers for the cross-score matrix
};

/// Anchor-token counts of a document: tokens containing a digit, plus
/// lowercased letter tokens of at least four codepoints (candidate names and
/// cognates; those only count when shared verbatim with the other document).
std::map<std::string, std::size_t> anchor_counts(const TextDocument& doc);

/// TF-IDF cosine similarity over anchor tokens.  Symmetric; 0 when either
/// document has no anchors.
double score_pair(const TextDocument& src, const TextDocument& tgt);

/// Pairs up documents across the language groups: per iteration, scores all
/// still-unassigned cross pairs and greedily accepts by descending score
/// (ties by id), rejecting candidates below the threshold or outside the size
/// ratio bounds.  Rejected documents re-enter the next iteration; the loop
/// stops when an iteration accepts nothing or max_iterations is reached.
DocAlignResult align_documents(const std::vector<TextDocument>& sources,
                               const std::vector<TextDocument>& targets,
                               const DocAlignParams& params = {});

/// Audit manifest: one "source TAB target TAB score TAB ratio TAB iteration"
/// line per accepted pair, then one "unmapped TAB id" line per leftover.
void write_docalign_manifest(const DocAlignResult& result, const std::filesystem::path& path);

}  // namespace bitext

#endif  // BITEXT_DOCALIGN_H
