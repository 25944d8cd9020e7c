#include "csw/lexrep.hpp"

#include <algorithm>
#include <cmath>

#include "csw/errors.hpp"
#include "csw/rng.hpp"
#include "csw/textio.hpp"

namespace csw {

GlossLexicon GlossLexicon::load_tsv(const std::string& path) {
  GlossLexicon lexicon;
  std::vector<std::string> lines = read_lines(path);
  for (size_t i = 0; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    std::vector<std::string> cols = split_char(lines[i], '\t');
    if (cols.size() < 2 || cols[0].empty())
      throw FormatError(path + " line " + std::to_string(i + 1) +
                        ": expected key and at least one gloss");
    std::vector<std::string> glosses;
    for (size_t c = 1; c < cols.size(); ++c)
      if (!cols[c].empty()) glosses.push_back(cols[c]);
    if (glosses.empty())
      throw FormatError(path + " line " + std::to_string(i + 1) + ": empty gloss list");
    lexicon.add(cols[0], std::move(glosses));
  }
  return lexicon;
}

void GlossLexicon::add(std::string key, std::vector<std::string> glosses) {
  if (key.empty() || glosses.empty())
    throw UsageError("lexicon entries need a key and at least one gloss");
  entries_[std::move(key)] = std::move(glosses);
}

const std::vector<std::string>* GlossLexicon::find(const std::string& key) const {
  auto it = entries_.find(key);
  return it == entries_.end() ? nullptr : &it->second;
}

PredictionLabels PredictionLabels::load(const std::string& path) {
  PredictionLabels labels;
  std::vector<std::string> lines = read_lines(path);
  for (size_t i = 0; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    std::vector<std::string> cols = split_char(lines[i], '\t');
    if (cols.size() != 2)
      throw FormatError(path + " line " + std::to_string(i + 1) +
                        ": expected 'id<TAB>labels'");
    std::vector<int> row;
    for (const std::string& bit : split_ws(cols[1])) {
      if (bit != "0" && bit != "1")
        throw FormatError(path + " line " + std::to_string(i + 1) +
                          ": label must be 0 or 1, got '" + bit + "'");
      row.push_back(bit == "1" ? 1 : 0);
    }
    labels.set(cols[0], std::move(row));
  }
  return labels;
}

void PredictionLabels::set(std::string id, std::vector<int> labels) {
  by_id_[std::move(id)] = std::move(labels);
}

const std::vector<int>* PredictionLabels::find(const std::string& id) const {
  auto it = by_id_.find(id);
  return it == by_id_.end() ? nullptr : &it->second;
}

namespace {

void check_percent(double percent) {
  if (!(percent > 0.0) || percent > 1.0)
    throw UsageError("percent must be in (0, 1], got " + format_double(percent));
}

size_t quota(double percent, size_t n) {
  return static_cast<size_t>(std::llround(percent * static_cast<double>(n)));
}

int english_in(std::span<const Token> tokens, const Span& span) {
  int count = 0;
  for (int i = span.lo; i < span.hi; ++i)
    if (tokens[i].lang == Lang::English) ++count;
  return count;
}

}  // namespace

std::optional<Augmentation> lex_dict(const BiSentence& sentence,
                                     const GlossLexicon& lexicon,
                                     double percent, uint64_t seed) {
  check_percent(percent);
  std::vector<int> arabic_positions;
  for (const Token& t : sentence.src)
    if (t.lang == Lang::Arabic) arabic_positions.push_back(t.index);
  size_t k = quota(percent, arabic_positions.size());
  if (k == 0 || arabic_positions.empty()) return std::nullopt;

  Rng rng(seed, sentence.id);
  std::vector<size_t> picks = rng.sample(arabic_positions.size(), k);

  std::vector<ReplacedSpan> replacements;
  for (size_t p : picks) {
    int i = arabic_positions[p];
    const std::vector<std::string>* entry = lexicon.find(sentence.src[i].surface);
    if (!entry) continue;  // no gloss, token stays Arabic
    replacements.push_back({Span{i, i + 1}, std::nullopt, entry->front()});
  }
  if (replacements.empty()) return std::nullopt;
  return make_augmentation(sentence.id, sentence.src, sentence.tgt,
                           Technique::LexDict, std::move(replacements));
}

std::optional<Augmentation> lex_rand_word(const BiSentence& sentence,
                                          double percent, uint64_t seed) {
  check_percent(percent);
  std::vector<int> src_seen(sentence.src.size(), -1);
  std::vector<int> tgt_seen(sentence.tgt.size(), -1);
  for (const Link& l : sentence.alignment.links()) {
    if (src_seen[l.src] >= 0)
      throw UsageError("alignment is not 1:1: link " + std::to_string(l.src) + "-" +
                       std::to_string(l.tgt) + " shares source index " +
                       std::to_string(l.src));
    if (tgt_seen[l.tgt] >= 0)
      throw UsageError("alignment is not 1:1: link " + std::to_string(l.src) + "-" +
                       std::to_string(l.tgt) + " shares target index " +
                       std::to_string(l.tgt));
    src_seen[l.src] = l.tgt;
    tgt_seen[l.tgt] = l.src;
  }

  std::vector<int> aligned;
  for (int i = 0; i < static_cast<int>(sentence.src.size()); ++i)
    if (src_seen[i] >= 0) aligned.push_back(i);
  if (aligned.empty()) return std::nullopt;

  size_t k = quota(percent, sentence.src.size());
  if (k == 0) return std::nullopt;

  Rng rng(seed, sentence.id);
  std::vector<size_t> picks = rng.sample(aligned.size(), std::min(k, aligned.size()));

  std::vector<ReplacedSpan> replacements;
  for (size_t p : picks) {
    int i = aligned[p];
    int j = src_seen[i];
    replacements.push_back({Span{i, i + 1}, Span{j, j + 1}, ""});
  }
  return make_augmentation(sentence.id, sentence.src, sentence.tgt,
                           Technique::LexRandWord, std::move(replacements));
}

std::optional<Augmentation> lex_rand_segment(const BiSentence& sentence,
                                             double percent, uint64_t seed,
                                             int max_len) {
  check_percent(percent);
  const size_t threshold = quota(percent, sentence.src.size());
  if (threshold == 0) return std::nullopt;

  std::vector<SegmentPair> candidates = extract_segments(sentence, max_len);
  if (candidates.empty()) return std::nullopt;

  Rng rng(seed, sentence.id);
  std::vector<SegmentPair> chosen;
  int english = english_in(sentence.src, Span{0, static_cast<int>(sentence.src.size())});

  while (english < static_cast<int>(threshold)) {
    std::vector<size_t> available;
    for (size_t c = 0; c < candidates.size(); ++c) {
      bool disjoint = true;
      for (const SegmentPair& taken : chosen) {
        if (candidates[c].src.overlaps(taken.src) ||
            candidates[c].tgt.overlaps(taken.tgt)) {
          disjoint = false;
          break;
        }
      }
      if (disjoint) available.push_back(c);
    }
    if (available.empty()) return std::nullopt;  // threshold unreachable
    const SegmentPair& pick = candidates[available[rng.below(available.size())]];
    chosen.push_back(pick);
    english += english_in(sentence.tgt, pick.tgt) - english_in(sentence.src, pick.src);
  }
  if (chosen.empty()) return std::nullopt;

  std::vector<ReplacedSpan> replacements;
  for (const SegmentPair& seg : chosen)
    replacements.push_back({seg.src, seg.tgt, ""});
  return make_augmentation(sentence.id, sentence.src, sentence.tgt,
                           Technique::LexRandSeg, std::move(replacements));
}

std::optional<Augmentation> lex_pred(const BiSentence& sentence,
                                     std::span<const int> labels, int max_len) {
  if (labels.size() != sentence.tgt.size())
    throw StructureError("sentence " + sentence.id + ": " +
                         std::to_string(labels.size()) + " labels for " +
                         std::to_string(sentence.tgt.size()) + " target tokens");

  std::vector<SegmentPair> candidates = extract_segments(sentence, max_len);

  std::vector<ReplacedSpan> replacements;
  std::vector<SegmentPair> accepted;
  int j = 0;
  const int tgt_len = static_cast<int>(labels.size());
  while (j < tgt_len) {
    if (labels[j] != 1) {
      ++j;
      continue;
    }
    int run_end = j;
    while (run_end < tgt_len && labels[run_end] == 1) ++run_end;
    Span run{j, run_end};
    j = run_end;

    // Smallest covering segment: target width, then source width, then
    // position, so the classifier's token-level choice stays tight.
    const SegmentPair* best = nullptr;
    for (const SegmentPair& seg : candidates) {
      if (seg.tgt.lo > run.lo || seg.tgt.hi < run.hi) continue;
      if (!best ||
          std::tuple(seg.tgt.size(), seg.src.size(), seg.tgt.lo, seg.src.lo) <
              std::tuple(best->tgt.size(), best->src.size(), best->tgt.lo, best->src.lo))
        best = &seg;
    }
    if (!best) continue;  // run has no consistent covering segment

    bool clash = false;
    for (const SegmentPair& taken : accepted) {
      if (best->src.overlaps(taken.src) || best->tgt.overlaps(taken.tgt)) {
        clash = true;  // resolved left to right, first wins
        break;
      }
    }
    if (clash) continue;
    accepted.push_back(*best);
    replacements.push_back({best->src, best->tgt, ""});
  }
  if (replacements.empty()) return std::nullopt;
  return make_augmentation(sentence.id, sentence.src, sentence.tgt,
                           Technique::LexPred, std::move(replacements));
}

std::optional<Augmentation> lex_pred(const BiSentence& sentence,
                                     const PredictionLabels& labels, int max_len) {
  const std::vector<int>* row = labels.find(sentence.id);
  if (!row) return std::nullopt;
  return lex_pred(sentence, *row, max_len);
}

}  // namespace csw
