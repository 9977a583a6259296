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

#ifndef BITEXT_LANGID_H
#define BITEXT_LANGID_H

#include <array>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "bitext/corpus.h"

namespace bitext {

/// Character n-gram statistics (n = 1..3) for one language, with additive
/// smoothing.  Per order, one extra event is reserved for unseen grams so the
/// smoothed distribution sums to one.
class LanguageProfile {
 public:
  static constexpr int kMaxOrder = 3;
  static constexpr double kDefaultAlpha = 0.5;

  LanguageProfile() = default;
  LanguageProfile(std::string language, double alpha);

  const std::string& language() const { return language_; }
  double alpha() const { return alpha_; }

  void add_text(std::string_view text);

  /// Smoothed log probability of a gram within its order's distribution.
  double log_prob(int order, const std::string& gram) const;
  double log_prob_unseen(int order) const;

  /// Sum of log_prob over every n-gram occurrence (orders 1..3) of the text.
  double score(const std::u32string& codepoints) const;

  std::uint64_t total(int order) const { return totals_[order - 1]; }
  std::uint64_t vocabulary(int order) const { return counts_[order - 1].size(); }
  const std::unordered_map<std::string, std::uint64_t>& counts(int order) const {
    return counts_[order - 1];
  }

  void save(const std::filesystem::path& path) const;
  static LanguageProfile load(const std::filesystem::path& path);

 private:
  std::string language_;
  double alpha_ = kDefaultAlpha;
  std::array<std::unordered_map<std::string, std::uint64_t>, kMaxOrder> counts_;
  std::array<std::uint64_t, kMaxOrder> totals_{};
};

struct LanguagePrediction {
  std::string language;
  double confidence = 0.0;  // normalized posterior, in [0, 1]
};

/// Trains a profile on raw corpus text (expected to be normalized already).
/// Throws std::invalid_argument on empty text.
LanguageProfile train_profile(const std::string& language, const std::string& corpus_text,
                              double alpha = LanguageProfile::kDefaultAlpha);

/// Naive-Bayes argmax over the profiles with a uniform prior; ties go to the
/// lexicographically smaller language code.  Requires a non-empty string and
/// at least two profiles.
LanguagePrediction detect_string(const std::string& text,
                                 const std::vector<LanguageProfile>& profiles);

/// File-level detection: samples the first head_lines lines plus every
/// stride-th line after that (1-indexed: lines 1..50, 100, 200, ...),
/// concatenates the sampled non-empty lines and detects the result.
LanguagePrediction detect_file(const TextDocument& doc,
                               const std::vector<LanguageProfile>& profiles,
                               int head_lines = 50, int stride = 100);

/// The 0-based line indices detect_file reads for a document of line_count
/// lines — exposed so the sampling contract is testable on its own.
std::vector<std::size_t> sample_line_indices(std::size_t line_count, int head_lines = 50,
                                             int stride = 100);

}  // namespace bitext

#endif  // BITEXT_LANGID_H
