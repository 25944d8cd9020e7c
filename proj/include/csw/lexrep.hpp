#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "csw/augmentation.hpp"
#include "csw/corpus.hpp"

namespace csw {

// Arabic surface/lemma -> ranked English glosses. Replacement always takes
// the first gloss; lexicon files may pre-rank entries.
class GlossLexicon {
public:
  // TSV: column 1 Arabic key, columns 2..n glosses (multi-word glosses
  // space-separated inside one column).
  static GlossLexicon load_tsv(const std::string& path);

  void add(std::string key, std::vector<std::string> glosses);
  const std::vector<std::string>* find(const std::string& key) const;
  size_t size() const { return entries_.size(); }

private:
  std::map<std::string, std::vector<std::string>> entries_;
};

// Per-sentence binary labels over target tokens, file lines "id<TAB>0 1 0".
class PredictionLabels {
public:
  static PredictionLabels load(const std::string& path);

  void set(std::string id, std::vector<int> labels);
  const std::vector<int>* find(const std::string& id) const;
  size_t size() const { return by_id_.size(); }

private:
  std::map<std::string, std::vector<int>> by_id_;
};

inline constexpr double kDefaultReplacementRate = 0.19;

// Replaces round(percent * |Arabic src tokens|) randomly selected Arabic
// source tokens by their first lexicon gloss; tokens without an entry stay.
std::optional<Augmentation> lex_dict(const BiSentence& sentence,
                                     const GlossLexicon& lexicon,
                                     double percent, uint64_t seed);

// Replaces round(percent * |src|) randomly picked aligned source tokens by
// their single aligned target token. Requires 1:1 links (UsageError).
std::optional<Augmentation> lex_rand_word(const BiSentence& sentence,
                                          double percent, uint64_t seed);

// Samples disjoint consistent segments until the English token count of the
// mixed source reaches round(percent * |src|); nothing is returned if the
// threshold cannot be met.
std::optional<Augmentation> lex_rand_segment(const BiSentence& sentence,
                                             double percent, uint64_t seed,
                                             int max_len = kDefaultMaxSegmentLen);

// Inserts the smallest consistent segment covering each run of 1-labels on
// the target side; runs without a covering segment are skipped, overlaps are
// resolved left to right.
std::optional<Augmentation> lex_pred(const BiSentence& sentence,
                                     std::span<const int> labels,
                                     int max_len = kDefaultMaxSegmentLen);
std::optional<Augmentation> lex_pred(const BiSentence& sentence,
                                     const PredictionLabels& labels,
                                     int max_len = kDefaultMaxSegmentLen);

}  // namespace csw
