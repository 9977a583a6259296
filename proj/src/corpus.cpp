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

#include "bitext/corpus.h"

#include <fstream>
#include <set>
#include <stdexcept>

#include <json.hpp>

#include "bitext/unicode.h"

namespace bitext {

TextDocument TextDocument::from_text(std::string doc_id, std::string_view text,
                                     DocumentOrigin origin) {
  TextDocument doc;
  doc.doc_id = std::move(doc_id);
  doc.origin = std::move(origin);
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t nl = text.find('\n', start);
    if (nl == std::string_view::npos) {
      if (start < text.size()) {
        doc.lines.emplace_back(text.substr(start));
      }
      break;
    }
    doc.lines.emplace_back(text.substr(start, nl - start));
    start = nl + 1;
  }
  for (const auto& line : doc.lines) {
    doc.char_count += codepoint_count(line);
  }
  return doc;
}

std::vector<std::string> TokenRule::tokenize(std::string_view text) const {
  std::vector<std::string> tokens;
  std::u32string u = to_utf32(text);
  std::size_t i = 0;
  while (i < u.size()) {
    while (i < u.size() && is_whitespace(u[i])) ++i;
    std::size_t j = i;
    while (j < u.size() && !is_whitespace(u[j])) ++j;
    if (j > i) {
      std::size_t b = i;
      std::size_t e = j;
      while (b < e && is_punct(u[b])) ++b;
      while (e > b && is_punct(u[e - 1])) --e;
      if (e > b) {
        tokens.push_back(to_utf8(std::u32string_view(u).substr(b, e - b)));
      }
    }
    i = j;
  }
  return tokens;
}

CorpusStats compute_stats(const ParallelCorpus& corpus, const TokenRule& rule) {
  CorpusStats stats;
  stats.line_count = corpus.pairs.size();
  std::set<std::string> vocab;
  for (const auto& pair : corpus.pairs) {
    for (auto& tok : rule.tokenize(pair.source)) vocab.insert(std::move(tok));
    for (auto& tok : rule.tokenize(pair.target)) vocab.insert(std::move(tok));
    ++stats.per_source_counts[pair.doc_pair_id];
  }
  stats.vocab_size = vocab.size();
  return stats;
}

namespace {

std::string tabs_to_spaces(std::string s) {
  for (char& c : s) {
    if (c == '\t') c = ' ';
  }
  return s;
}

std::ofstream open_out(const std::filesystem::path& p) {
  std::ofstream out(p, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + p.string());
  return out;
}

}  // namespace

void write_corpus(const ParallelCorpus& corpus, const std::filesystem::path& base,
                  const std::string& src_lang, const std::string& tgt_lang) {
  std::filesystem::path src_path = base;
  src_path += "." + src_lang;
  std::filesystem::path tgt_path = base;
  tgt_path += "." + tgt_lang;
  std::filesystem::path tsv_path = base;
  tsv_path += ".tsv";
  std::filesystem::path stats_path = base;
  stats_path += ".stats.json";

  auto src_out = open_out(src_path);
  auto tgt_out = open_out(tgt_path);
  auto tsv_out = open_out(tsv_path);
  for (const auto& pair : corpus.pairs) {
    src_out << pair.source << '\n';
    tgt_out << pair.target << '\n';
    tsv_out << tabs_to_spaces(pair.source) << '\t' << tabs_to_spaces(pair.target) << '\n';
  }

  nlohmann::json stats;
  stats["line_count"] = corpus.stats.line_count;
  stats["vocab_size"] = corpus.stats.vocab_size;
  stats["per_source_counts"] = corpus.stats.per_source_counts;
  auto stats_out = open_out(stats_path);
  stats_out << stats.dump(2) << '\n';
}

ParallelCorpus read_corpus(const std::filesystem::path& base,
                           const std::string& src_lang, const std::string& tgt_lang) {
  std::filesystem::path src_path = base;
  src_path += "." + src_lang;
  std::filesystem::path tgt_path = base;
  tgt_path += "." + tgt_lang;

  std::ifstream src_in(src_path, std::ios::binary);
  if (!src_in) throw std::runtime_error("cannot read " + src_path.string());
  std::ifstream tgt_in(tgt_path, std::ios::binary);
  if (!tgt_in) throw std::runtime_error("cannot read " + tgt_path.string());

  ParallelCorpus corpus;
  std::string src_line, tgt_line;
  while (true) {
    bool has_src = static_cast<bool>(std::getline(src_in, src_line));
    bool has_tgt = static_cast<bool>(std::getline(tgt_in, tgt_line));
    if (has_src != has_tgt) {
      throw std::runtime_error("line count mismatch between " + src_path.string() +
                               " and " + tgt_path.string());
    }
    if (!has_src) break;
    SentencePair pair;
    pair.source = src_line;
    pair.target = tgt_line;
    corpus.pairs.push_back(std::move(pair));
  }
  corpus.stats = compute_stats(corpus);
  return corpus;
}

std::vector<SentencePair> make_sentence_pairs(const std::vector<AlignmentLink>& links,
                                              const std::vector<std::string>& src_sentences,
                                              const std::vector<std::string>& tgt_sentences,
                                              const std::string& doc_pair_id) {
  auto join = [](const std::vector<std::string>& sentences, int begin, int end) {
    std::string out;
    for (int i = begin; i < end; ++i) {
      if (!out.empty()) out += ' ';
      out += sentences.at(static_cast<std::size_t>(i));
    }
    return out;
  };
  std::vector<SentencePair> pairs;
  pairs.reserve(links.size());
  for (const auto& link : links) {
    SentencePair pair;
    pair.source = join(src_sentences, link.src_begin, link.src_end);
    pair.target = join(tgt_sentences, link.tgt_begin, link.tgt_end);
    pair.link = link;
    pair.doc_pair_id = doc_pair_id;
    pairs.push_back(std::move(pair));
  }
  return pairs;
}

}  // namespace bitext
