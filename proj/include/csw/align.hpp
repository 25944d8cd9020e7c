#pragma once

#include <compare>
#include <string>
#include <vector>

namespace csw {

struct BiSentence;

struct Link {
  int src = 0;
  int tgt = 0;
  friend auto operator<=>(const Link&, const Link&) = default;
};

// Word-alignment links plus a free-text symmetrization label
// (e.g. "intersection", "grow-diag-final-word+grow-diag-final-stem").
class AlignmentSet {
public:
  AlignmentSet() = default;
  AlignmentSet(std::vector<Link> links, std::string label);

  // "i-j" pairs, space-separated, 0-based; empty line = no links.
  static AlignmentSet parse_pharaoh(std::string_view line, std::string label = "");
  std::string to_pharaoh() const;

  const std::vector<Link>& links() const { return links_; }  // sorted, unique
  const std::string& label() const { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }
  bool empty() const { return links_.empty(); }
  size_t size() const { return links_.size(); }
  bool contains(Link l) const;
  void add(Link l);

private:
  std::vector<Link> links_;
  std::string label_;
};

AlignmentSet set_union(const AlignmentSet& a, const AlignmentSet& b);

// Half-open token span [lo, hi).
struct Span {
  int lo = 0;
  int hi = 0;
  int size() const { return hi - lo; }
  bool contains(int i) const { return lo <= i && i < hi; }
  bool overlaps(const Span& o) const { return lo < o.hi && o.lo < hi; }
  friend auto operator<=>(const Span&, const Span&) = default;
};

// Aligned contiguous span pair. Valid ones are consistent with the sentence
// alignment: at least one link inside, none crossing either boundary.
struct SegmentPair {
  Span src;
  Span tgt;
  friend auto operator<=>(const SegmentPair&, const SegmentPair&) = default;
};

inline constexpr int kDefaultMaxSegmentLen = 7;

bool is_consistent(const AlignmentSet& alignment, const SegmentPair& pair);

// Every consistent segment pair with |src span| <= max_len, sorted by
// (src.lo, src.hi, tgt.lo, tgt.hi). Unaligned sentence yields none.
std::vector<SegmentPair> extract_segments(const AlignmentSet& alignment,
                                          int src_len, int tgt_len,
                                          int max_len = kDefaultMaxSegmentLen);
std::vector<SegmentPair> extract_segments(const BiSentence& sentence,
                                          int max_len = kDefaultMaxSegmentLen);

// True when substituting pair.tgt into pair.src crosses no link: every link
// inside the source span keeps its order against every link outside it.
bool order_preserving(const AlignmentSet& alignment, const SegmentPair& pair);
bool order_preserving(const BiSentence& sentence, const SegmentPair& pair);

}  // namespace csw
