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

#ifndef BITEXT_SENTALIGN_H
#define BITEXT_SENTALIGN_H

#include <filesystem>
#include <map>
#include <vector>

#include "bitext/corpus.h"
#include "bitext/split.h"

namespace bitext {

/// How many sentences a bead takes from each side.
struct BeadShape {
  int src_count = 0;
  int tgt_count = 0;

  bool operator==(const BeadShape&) const = default;
  auto operator<=>(const BeadShape&) const = default;
};

/// Length-based bead scoring: a bead costs
///   -log prior(shape) - log(2 * (1 - Phi(|delta|)))
/// with delta = (tgt_len - c * src_len) / sqrt(src_len * s2) and delta = 0
/// for an empty source side.  Character lengths of translated segments are
/// modelled as normally correlated with mean ratio c and variance s2 per
/// source character.
struct BeadCostModel {
  std::map<BeadShape, double> bead_log_priors;
  double length_mean_ratio = 1.0;  // c
  double length_variance = 6.8;    // s2

  bool supports(const BeadShape& shape) const { return bead_log_priors.count(shape) > 0; }

  /// The canonical length-based priors: 1-1 0.89, 1-0/0-1 0.0099 each,
  /// 2-1/1-2 0.0445 each.  with_2_2 adds a 2-2 bead at prior 0.011.
  static BeadCostModel defaults(bool with_2_2 = false);
};

/// Cost of one bead.  Lengths are character counts; a side that the shape
/// leaves empty contributes length 0 whatever the argument says.  Throws on a
/// shape the model has no prior for.
double bead_cost(double src_len, double tgt_len, const BeadShape& shape,
                 const BeadCostModel& model);

/// Minimum-cost monotone bead tiling of the two sentence lists, by dynamic
/// programming over prefix pairs.  Ties prefer 1-1 beads, then the shape
/// sequence that is lexicographically smallest under that preference order.
/// Throws if either list is empty.
std::vector<AlignmentLink> align_sentences(const SentenceList& src, const SentenceList& tgt,
                                           const BeadCostModel& model);

/// Exhaustive oracle: enumerates every monotone bead tiling (inputs capped at
/// 8 sentences per side) and returns a minimum-cost one under the same
/// tie-break rule as align_sentences.
std::vector<AlignmentLink> brute_force_align(const SentenceList& src, const SentenceList& tgt,
                                             const BeadCostModel& model);

/// Number of distinct monotone bead tilings of an m x n instance under the
/// model's supported shapes (counting companion to brute_force_align).
std::uint64_t count_tilings(int src_count, int tgt_count, const BeadCostModel& model);

double total_cost(const std::vector<AlignmentLink>& links);

/// Audit dump: one "srcStart-srcEnd TAB tgtStart-tgtEnd TAB cost" line per
/// link, end-exclusive indices.
void write_alignment_dump(const std::vector<AlignmentLink>& links,
                          const std::filesystem::path& path);

}  // namespace bitext

#endif  // BITEXT_SENTALIGN_H
