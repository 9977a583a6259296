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

#include "bitext/langid.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "bitext/unicode.h"

namespace bitext {

namespace {

std::string escape_gram(const std::string& gram) {
  std::string out;
  out.reserve(gram.size());
  for (char c : gram) {
    switch (c) {
      case '\\': out += "\\\\"; break;
      case '\t': out += "\\t"; break;
      case '\n': out += "\\n"; break;
      default: out += c;
    }
  }
  return out;
}

std::string unescape_gram(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] != '\\' || i + 1 == s.size()) {
      out += s[i];
      continue;
    }
    ++i;
    switch (s[i]) {
      case 't': out += '\t'; break;
      case 'n': out += '\n'; break;
      default: out += s[i];
    }
  }
  return out;
}

}  // namespace

LanguageProfile::LanguageProfile(std::string language, double alpha)
    : language_(std::move(language)), alpha_(alpha) {
  if (alpha_ <= 0.0) throw std::invalid_argument("smoothing alpha must be positive");
}

void LanguageProfile::add_text(std::string_view text) {
  std::u32string u = to_utf32(text);
  for (int order = 1; order <= kMaxOrder; ++order) {
    if (u.size() < static_cast<std::size_t>(order)) break;
    auto& bag = counts_[order - 1];
    for (std::size_t i = 0; i + order <= u.size(); ++i) {
      ++bag[to_utf8(std::u32string_view(u).substr(i, order))];
      ++totals_[order - 1];
    }
  }
}

double LanguageProfile::log_prob(int order, const std::string& gram) const {
  const auto& bag = counts_[order - 1];
  // One extra slot in the denominator holds the shared unseen-gram mass, so
  // the distribution over (observed grams + unseen) sums to one.
  double denom = static_cast<double>(totals_[order - 1]) +
                 alpha_ * static_cast<double>(bag.size() + 1);
  auto it = bag.find(gram);
  if (it == bag.end()) return std::log(alpha_ / denom);
  return std::log((static_cast<double>(it->second) + alpha_) / denom);
}

double LanguageProfile::log_prob_unseen(int order) const {
  const auto& bag = counts_[order - 1];
  double denom = static_cast<double>(totals_[order - 1]) +
                 alpha_ * static_cast<double>(bag.size() + 1);
  return std::log(alpha_ / denom);
}

double LanguageProfile::score(const std::u32string& codepoints) const {
  double total = 0.0;
  for (int order = 1; order <= kMaxOrder; ++order) {
    if (codepoints.size() < static_cast<std::size_t>(order)) break;
    for (std::size_t i = 0; i + order <= codepoints.size(); ++i) {
      total += log_prob(order, to_utf8(std::u32string_view(codepoints).substr(i, order)));
    }
  }
  return total;
}

void LanguageProfile::save(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write profile: " + path.string());
  out << "# bitextforge language profile v1\n";
  out << "language\t" << language_ << '\n';
  out << "alpha\t" << alpha_ << '\n';
  for (int order = 1; order <= kMaxOrder; ++order) {
    std::vector<std::pair<std::string, std::uint64_t>> sorted(counts_[order - 1].begin(),
                                                              counts_[order - 1].end());
    std::sort(sorted.begin(), sorted.end());
    for (const auto& [gram, count] : sorted) {
      out << "ngram\t" << order << '\t' << count << '\t' << escape_gram(gram) << '\n';
    }
  }
}

LanguageProfile LanguageProfile::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read profile: " + path.string());
  LanguageProfile profile;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    std::string key;
    std::getline(fields, key, '\t');
    auto fail = [&](const std::string& what) {
      throw std::runtime_error(path.string() + ":" + std::to_string(lineno) + ": " + what);
    };
    if (key == "language") {
      if (!std::getline(fields, profile.language_)) fail("missing language code");
    } else if (key == "alpha") {
      std::string value;
      if (!std::getline(fields, value)) fail("missing alpha");
      profile.alpha_ = std::stod(value);
      if (profile.alpha_ <= 0.0) fail("alpha must be positive");
    } else if (key == "ngram") {
      std::string order_s, count_s, gram_s;
      if (!std::getline(fields, order_s, '\t') || !std::getline(fields, count_s, '\t') ||
          !std::getline(fields, gram_s)) {
        fail("malformed ngram record");
      }
      int order = std::stoi(order_s);
      if (order < 1 || order > kMaxOrder) fail("ngram order out of range");
      std::uint64_t count = std::stoull(count_s);
      profile.counts_[order - 1][unescape_gram(gram_s)] += count;
      profile.totals_[order - 1] += count;
    } else {
      fail("unknown record '" + key + "'");
    }
  }
  if (profile.language_.empty()) {
    throw std::runtime_error(path.string() + ": profile has no language code");
  }
  return profile;
}

LanguageProfile train_profile(const std::string& language, const std::string& corpus_text,
                              double alpha) {
  if (trim(corpus_text).empty()) {
    throw std::invalid_argument("cannot train a language profile on empty text");
  }
  LanguageProfile profile(language, alpha);
  profile.add_text(corpus_text);
  return profile;
}

LanguagePrediction detect_string(const std::string& text,
                                 const std::vector<LanguageProfile>& profiles) {
  if (text.empty()) throw std::invalid_argument("detect_string: empty input");
  if (profiles.size() < 2) {
    throw std::invalid_argument("detect_string: need at least two language profiles");
  }

  std::u32string u = to_utf32(text);

  // Uniform prior, so only the likelihoods matter; iterate in code order so
  // equal scores resolve to the lexicographically smaller language.
  std::vector<const LanguageProfile*> ordered;
  ordered.reserve(profiles.size());
  for (const auto& p : profiles) ordered.push_back(&p);
  std::sort(ordered.begin(), ordered.end(), [](const auto* a, const auto* b) {
    return a->language() < b->language();
  });

  std::vector<double> scores;
  scores.reserve(ordered.size());
  for (const auto* p : ordered) scores.push_back(p->score(u));

  std::size_t best = 0;
  for (std::size_t i = 1; i < scores.size(); ++i) {
    if (scores[i] > scores[best]) best = i;
  }

  double max_score = scores[best];
  double denom = 0.0;
  for (double s : scores) denom += std::exp(s - max_score);

  LanguagePrediction prediction;
  prediction.language = ordered[best]->language();
  prediction.confidence = 1.0 / denom;
  return prediction;
}

std::vector<std::size_t> sample_line_indices(std::size_t line_count, int head_lines,
                                             int stride) {
  std::vector<std::size_t> indices;
  std::size_t head = std::min(line_count, static_cast<std::size_t>(head_lines));
  for (std::size_t i = 0; i < head; ++i) indices.push_back(i);
  for (std::size_t line = static_cast<std::size_t>(stride); line <= line_count;
       line += static_cast<std::size_t>(stride)) {
    std::size_t idx = line - 1;  // 1-indexed line numbers
    if (idx >= head) indices.push_back(idx);
  }
  return indices;
}

LanguagePrediction detect_file(const TextDocument& doc,
                               const std::vector<LanguageProfile>& profiles,
                               int head_lines, int stride) {
  std::string sample;
  for (std::size_t idx : sample_line_indices(doc.lines.size(), head_lines, stride)) {
    const std::string& line = doc.lines[idx];
    if (trim(line).empty()) continue;
    if (!sample.empty()) sample += '\n';
    sample += line;
  }
  if (sample.empty()) {
    throw std::invalid_argument("detect_file: no non-empty lines in the sample for doc '" +
                                doc.doc_id + "'");
  }
  return detect_string(sample, profiles);
}

}  // namespace bitext
