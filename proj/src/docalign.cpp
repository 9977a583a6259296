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

#include "bitext/docalign.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <set>
#include <stdexcept>
#include <tuple>

#include "bitext/parallel.h"
#include "bitext/unicode.h"

namespace bitext {

namespace {

bool token_has_digit(const std::string& token) {
  for (char32_t c : to_utf32(token)) {
    if (is_digit(c)) return true;
  }
  return false;
}

}  // namespace

std::map<std::string, std::size_t> anchor_counts(const TextDocument& doc) {
  std::map<std::string, std::size_t> counts;
  for (const auto& line : doc.lines) {
    std::u32string u = to_utf32(line);
    std::size_t i = 0;
    while (i < u.size()) {
      while (i < u.size() && !is_alnum(u[i])) ++i;
      std::size_t j = i;
      while (j < u.size() && is_alnum(u[j])) ++j;
      if (j > i) {
        std::u32string token = u.substr(i, j - i);
        bool numeric = false;
        for (char32_t c : token) {
          if (is_digit(c)) numeric = true;
        }
        if (numeric) {
          ++counts[to_utf8(token)];
        } else if (token.size() >= 4) {
          for (char32_t& c : token) c = to_lower(c);
          ++counts[to_utf8(token)];
        }
      }
      i = j;
    }
  }
  return counts;
}

double score_pair(const TextDocument& src, const TextDocument& tgt) {
  auto src_counts = anchor_counts(src);
  auto tgt_counts = anchor_counts(tgt);

  // Feature space: number tokens from either side, plus letter tokens present
  // in both (shared names/cognates — unshared words are just vocabulary of
  // one language and carry no alignment signal).  IDF over the two documents:
  // ln((1+N)/(1+df)) + 1 with N = 2.
  const double idf_shared = 1.0;
  const double idf_single = std::log(1.5) + 1.0;

  auto squared_norm = [&](const std::map<std::string, std::size_t>& own,
                          const std::map<std::string, std::size_t>& other) {
    double norm = 0.0;
    for (const auto& [token, count] : own) {
      bool shared = other.count(token) > 0;
      if (!shared && !token_has_digit(token)) continue;
      double w = static_cast<double>(count) * (shared ? idf_shared : idf_single);
      norm += w * w;
    }
    return norm;
  };
  double norm_src = squared_norm(src_counts, tgt_counts);
  double norm_tgt = squared_norm(tgt_counts, src_counts);
  if (norm_src == 0.0 || norm_tgt == 0.0) return 0.0;

  double dot = 0.0;
  for (const auto& [token, count] : src_counts) {
    auto it = tgt_counts.find(token);
    if (it == tgt_counts.end()) continue;
    dot += (static_cast<double>(count) * idf_shared) *
           (static_cast<double>(it->second) * idf_shared);
  }
  return dot / (std::sqrt(norm_src) * std::sqrt(norm_tgt));
}

DocAlignResult align_documents(const std::vector<TextDocument>& sources,
                               const std::vector<TextDocument>& targets,
                               const DocAlignParams& params) {
  // Work over ids in sorted order so the outcome is independent of input order.
  std::vector<const TextDocument*> srcs, tgts;
  for (const auto& d : sources) srcs.push_back(&d);
  for (const auto& d : targets) tgts.push_back(&d);
  auto by_id = [](const TextDocument* a, const TextDocument* b) {
    return a->doc_id < b->doc_id;
  };
  std::sort(srcs.begin(), srcs.end(), by_id);
  std::sort(tgts.begin(), tgts.end(), by_id);

  std::set<std::string> seen;
  for (const auto* d : srcs) {
    if (!seen.insert(d->doc_id).second) {
      throw std::invalid_argument("duplicate doc_id: " + d->doc_id);
    }
  }
  for (const auto* d : tgts) {
    if (!seen.insert(d->doc_id).second) {
      throw std::invalid_argument("doc_id on both sides: " + d->doc_id);
    }
  }

  DocAlignResult result;
  std::set<std::string> taken;

  struct Candidate {
    double score;
    const TextDocument* src;
    const TextDocument* tgt;
    double ratio;
  };

  for (int iter = 1; iter <= params.max_iterations; ++iter) {
    std::vector<const TextDocument*> free_src, free_tgt;
    for (const auto* d : srcs) {
      if (!taken.count(d->doc_id)) free_src.push_back(d);
    }
    for (const auto* d : tgts) {
      if (!taken.count(d->doc_id)) free_tgt.push_back(d);
    }
    if (free_src.empty() || free_tgt.empty()) break;

    std::vector<Candidate> candidates(free_src.size() * free_tgt.size());
    parallel_for(candidates.size(), params.jobs, [&](std::size_t k) {
      const TextDocument* s = free_src[k / free_tgt.size()];
      const TextDocument* t = free_tgt[k % free_tgt.size()];
      double ratio = t->char_count == 0
                         ? (s->char_count == 0 ? 1.0 : std::numeric_limits<double>::infinity())
                         : static_cast<double>(s->char_count) /
                               static_cast<double>(t->char_count);
      candidates[k] = Candidate{score_pair(*s, *t), s, t, ratio};
    });

    std::erase_if(candidates, [&](const Candidate& c) {
      return c.score < params.threshold || c.ratio < params.min_ratio ||
             c.ratio > params.max_ratio;
    });
    std::sort(candidates.begin(), candidates.end(), [](const Candidate& a, const Candidate& b) {
      if (a.score != b.score) return a.score > b.score;
      if (a.src->doc_id != b.src->doc_id) return a.src->doc_id < b.src->doc_id;
      return a.tgt->doc_id < b.tgt->doc_id;
    });

    std::size_t accepted_before = result.pairs.size();
    for (const auto& c : candidates) {
      if (taken.count(c.src->doc_id) || taken.count(c.tgt->doc_id)) continue;
      taken.insert(c.src->doc_id);
      taken.insert(c.tgt->doc_id);
      result.pairs.push_back(
          DocumentPair{c.src->doc_id, c.tgt->doc_id, c.score, c.ratio, iter});
    }
    result.iterations_used = iter;
    if (result.pairs.size() == accepted_before) break;
  }

  for (const auto* d : srcs) {
    if (!taken.count(d->doc_id)) result.unmapped.push_back(d->doc_id);
  }
  for (const auto* d : tgts) {
    if (!taken.count(d->doc_id)) result.unmapped.push_back(d->doc_id);
  }
  std::sort(result.pairs.begin(), result.pairs.end(),
            [](const DocumentPair& a, const DocumentPair& b) {
              return std::tie(a.source_id, a.target_id) < std::tie(b.source_id, b.target_id);
            });
  return result;
}

void write_docalign_manifest(const DocAlignResult& result, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << "# source\ttarget\tscore\tratio\titeration\n";
  char buf[64];
  for (const auto& p : result.pairs) {
    std::snprintf(buf, sizeof(buf), "%.6f\t%.6f", p.score, p.size_ratio);
    out << p.source_id << '\t' << p.target_id << '\t' << buf << '\t' << p.iteration << '\n';
  }
  for (const auto& id : result.unmapped) {
    out << "unmapped\t" << id << '\n';
  }
  out << "# iterations_used\t" << result.iterations_used << '\n';
}

}  // namespace bitext
