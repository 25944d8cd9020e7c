#pragma once

// Independent brute-force reference implementations. Everything here is
// derived directly from definitions and stays oblivious to how the library
// computes the same quantities.

#include <algorithm>
#include <string>
#include <vector>

#include "csw/align.hpp"
#include "csw/corpus.hpp"
#include "csw/langid.hpp"
#include "csw/rng.hpp"

namespace cswtest {

// --- consistency / segment extraction ------------------------------------

inline bool oracle_consistent(const std::vector<csw::Link>& links,
                              const csw::SegmentPair& pair) {
  bool any = false;
  for (const csw::Link& l : links) {
    const bool in_s = l.src >= pair.src.lo && l.src < pair.src.hi;
    const bool in_t = l.tgt >= pair.tgt.lo && l.tgt < pair.tgt.hi;
    if (in_s && in_t) any = true;
    if (in_s && !in_t) return false;  // link escapes the target side
    if (!in_s && in_t) return false;  // link enters from outside
  }
  return any;
}

// Every span pair, filtered by the consistency predicate.
inline std::vector<csw::SegmentPair> oracle_segments(const std::vector<csw::Link>& links,
                                                     int src_len, int tgt_len,
                                                     int max_len) {
  std::vector<csw::SegmentPair> out;
  for (int s_lo = 0; s_lo < src_len; ++s_lo)
    for (int s_hi = s_lo + 1; s_hi <= src_len; ++s_hi) {
      if (s_hi - s_lo > max_len) continue;
      for (int t_lo = 0; t_lo < tgt_len; ++t_lo)
        for (int t_hi = t_lo + 1; t_hi <= tgt_len; ++t_hi) {
          csw::SegmentPair pair{{s_lo, s_hi}, {t_lo, t_hi}};
          if (oracle_consistent(links, pair)) out.push_back(pair);
        }
    }
  std::sort(out.begin(), out.end());
  return out;
}

inline bool oracle_order_preserving(const std::vector<csw::Link>& links,
                                    const csw::SegmentPair& pair) {
  for (const csw::Link& a : links) {
    if (a.src < pair.src.lo || a.src >= pair.src.hi) continue;
    for (const csw::Link& b : links) {
      if (b.src >= pair.src.lo && b.src < pair.src.hi) continue;
      if ((a.src < b.src) != (a.tgt < b.tgt)) return false;
    }
  }
  return true;
}

// --- switch metrics -------------------------------------------------------

struct OracleCounts {
  int dependent = 0;
  int dominant = 0;
  int english = 0;
  int switches = 0;
};

// Builds the language-dependent subsequence explicitly, then counts.
inline OracleCounts oracle_counts(std::span<const csw::Token> tokens) {
  std::vector<csw::Lang> languages;
  for (const csw::Token& t : tokens) {
    csw::Lang lang = csw::classify_token(t.surface);
    if (lang != csw::Lang::Other) languages.push_back(lang);
  }
  OracleCounts c;
  c.dependent = static_cast<int>(languages.size());
  int arabic = 0;
  for (csw::Lang lang : languages) {
    if (lang == csw::Lang::Arabic) ++arabic;
    else ++c.english;
  }
  c.dominant = std::max(arabic, c.english);
  for (size_t i = 1; i < languages.size(); ++i)
    if (languages[i] != languages[i - 1]) ++c.switches;
  return c;
}

inline double oracle_cmi(std::span<const csw::Token> tokens) {
  OracleCounts c = oracle_counts(tokens);
  if (c.dependent == 0) return 0.0;
  return (0.5 * (c.dependent - c.dominant) + 0.5 * c.switches) / c.dependent;
}

inline double oracle_spf(std::span<const csw::Token> tokens) {
  OracleCounts c = oracle_counts(tokens);
  if (c.dependent == 0) return 0.0;
  return static_cast<double>(c.switches) / c.dependent;
}

inline double oracle_pct_en(std::span<const csw::Token> tokens) {
  OracleCounts c = oracle_counts(tokens);
  if (c.dependent == 0) return 0.0;
  return static_cast<double>(c.english) / c.dependent;
}

// --- EC enumeration -------------------------------------------------------

// Splices a chosen disjoint segment set into a mixed string; empty result
// means the splice is not mixed-language.
inline std::string oracle_splice(const csw::BiSentence& sentence,
                                 std::vector<csw::SegmentPair> chosen) {
  std::sort(chosen.begin(), chosen.end());
  std::vector<std::string> words;
  int pos = 0;
  for (const csw::SegmentPair& seg : chosen) {
    for (int i = pos; i < seg.src.lo; ++i) words.push_back(sentence.src[i].surface);
    for (int j = seg.tgt.lo; j < seg.tgt.hi; ++j)
      words.push_back(sentence.tgt[j].surface);
    pos = seg.src.hi;
  }
  for (int i = pos; i < static_cast<int>(sentence.src.size()); ++i)
    words.push_back(sentence.src[i].surface);

  bool arabic = false, english = false;
  for (const std::string& w : words) {
    csw::Lang lang = csw::classify_token(w);
    if (lang == csw::Lang::Arabic) arabic = true;
    if (lang == csw::Lang::English) english = true;
  }
  if (!arabic || !english) return {};

  std::string text;
  for (size_t i = 0; i < words.size(); ++i) {
    if (i) text += ' ';
    text += words[i];
  }
  return text;
}

// All disjoint subsets of crossing-free consistent segments, spliced into
// mixed strings, keeping only mixed-language results. Sorted multiset.
inline std::vector<std::string> oracle_ec_strings(const csw::BiSentence& sentence,
                                                  int max_len) {
  const std::vector<csw::Link>& links = sentence.alignment.links();
  std::vector<csw::SegmentPair> segments =
      oracle_segments(links, static_cast<int>(sentence.src.size()),
                      static_cast<int>(sentence.tgt.size()), max_len);
  std::vector<csw::SegmentPair> valid;
  for (const csw::SegmentPair& seg : segments)
    if (oracle_order_preserving(links, seg)) valid.push_back(seg);

  std::vector<std::string> out;
  std::vector<csw::SegmentPair> chosen;
  auto recurse = [&](auto&& self, size_t first) -> void {
    for (size_t i = first; i < valid.size(); ++i) {
      bool disjoint = true;
      for (const csw::SegmentPair& taken : chosen)
        if (valid[i].src.overlaps(taken.src) || valid[i].tgt.overlaps(taken.tgt)) {
          disjoint = false;
          break;
        }
      if (!disjoint) continue;
      chosen.push_back(valid[i]);
      std::string text = oracle_splice(sentence, chosen);
      if (!text.empty()) out.push_back(std::move(text));
      self(self, i + 1);
      chosen.pop_back();
    }
  };
  recurse(recurse, 0);
  std::sort(out.begin(), out.end());
  return out;
}

// --- random fixtures ------------------------------------------------------

inline const char* kArabicPool[] = {"انا", "عايز", "اكل", "قطر", "مدرسة",
                                    "كتاب", "بيت", "يوم", "نور"};
inline const char* kEnglishPool[] = {"want", "try", "food", "the", "school",
                                     "book", "house", "day", "light"};
inline const char* kOtherPool[] = {"3", ".", "!", "٧", "?", "123"};

inline csw::Token random_token(csw::Rng& rng, int index) {
  uint64_t kind = rng.below(3);
  const char* surface;
  if (kind == 0) surface = kArabicPool[rng.below(std::size(kArabicPool))];
  else if (kind == 1) surface = kEnglishPool[rng.below(std::size(kEnglishPool))];
  else surface = kOtherPool[rng.below(std::size(kOtherPool))];
  return csw::make_token(surface, index);
}

inline std::vector<csw::Token> random_tokens(csw::Rng& rng, int max_len) {
  int n = static_cast<int>(rng.below(max_len)) + 1;
  std::vector<csw::Token> tokens;
  tokens.reserve(n);
  for (int i = 0; i < n; ++i) tokens.push_back(random_token(rng, i));
  return tokens;
}

// Arabic-like source, English-like target, random links of bounded fan-out.
inline csw::BiSentence random_sentence(csw::Rng& rng, int max_side) {
  csw::BiSentence s;
  s.id = "R" + std::to_string(rng.below(1000000));
  int src_len = static_cast<int>(rng.below(max_side)) + 1;
  int tgt_len = static_cast<int>(rng.below(max_side)) + 1;
  for (int i = 0; i < src_len; ++i)
    s.src.push_back(csw::make_token(kArabicPool[rng.below(std::size(kArabicPool))], i));
  for (int j = 0; j < tgt_len; ++j)
    s.tgt.push_back(csw::make_token(kEnglishPool[rng.below(std::size(kEnglishPool))], j));
  std::vector<csw::Link> links;
  for (int i = 0; i < src_len; ++i) {
    int fanout = static_cast<int>(rng.below(3));  // 0..2 links per source token
    for (int f = 0; f < fanout; ++f)
      links.push_back({i, static_cast<int>(rng.below(tgt_len))});
  }
  s.alignment = csw::AlignmentSet(std::move(links), "random");
  return s;
}

}  // namespace cswtest
