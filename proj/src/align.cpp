#include "csw/align.hpp"

#include <algorithm>

#include "csw/corpus.hpp"
#include "csw/errors.hpp"
#include "csw/textio.hpp"

namespace csw {

AlignmentSet::AlignmentSet(std::vector<Link> links, std::string label)
    : links_(std::move(links)), label_(std::move(label)) {
  std::sort(links_.begin(), links_.end());
  links_.erase(std::unique(links_.begin(), links_.end()), links_.end());
  for (const Link& l : links_)
    if (l.src < 0 || l.tgt < 0)
      throw UsageError("negative alignment index in link " +
                       std::to_string(l.src) + "-" + std::to_string(l.tgt));
}

AlignmentSet AlignmentSet::parse_pharaoh(std::string_view line, std::string label) {
  std::vector<Link> links;
  for (const std::string& item : split_ws(line)) {
    size_t dash = item.find('-');
    if (dash == std::string::npos || dash == 0 || dash + 1 == item.size())
      throw FormatError("malformed alignment link '" + item + "'");
    long s, t;
    try {
      s = parse_int(std::string_view(item).substr(0, dash));
      t = parse_int(std::string_view(item).substr(dash + 1));
    } catch (const FormatError&) {
      throw FormatError("malformed alignment link '" + item + "'");
    }
    if (s < 0 || t < 0) throw FormatError("malformed alignment link '" + item + "'");
    links.push_back({static_cast<int>(s), static_cast<int>(t)});
  }
  return AlignmentSet(std::move(links), std::move(label));
}

std::string AlignmentSet::to_pharaoh() const {
  std::string out;
  for (size_t i = 0; i < links_.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(links_[i].src) + "-" + std::to_string(links_[i].tgt);
  }
  return out;
}

bool AlignmentSet::contains(Link l) const {
  return std::binary_search(links_.begin(), links_.end(), l);
}

void AlignmentSet::add(Link l) {
  auto it = std::lower_bound(links_.begin(), links_.end(), l);
  if (it == links_.end() || *it != l) links_.insert(it, l);
}

AlignmentSet set_union(const AlignmentSet& a, const AlignmentSet& b) {
  std::vector<Link> links = a.links();
  links.insert(links.end(), b.links().begin(), b.links().end());
  std::string label;
  if (!a.label().empty() && !b.label().empty())
    label = a.label() + "+" + b.label();
  else
    label = a.label().empty() ? b.label() : a.label();
  return AlignmentSet(std::move(links), std::move(label));
}

bool is_consistent(const AlignmentSet& alignment, const SegmentPair& pair) {
  bool any = false;
  for (const Link& l : alignment.links()) {
    bool in_src = pair.src.contains(l.src);
    bool in_tgt = pair.tgt.contains(l.tgt);
    if (in_src != in_tgt) return false;
    if (in_src && in_tgt) any = true;
  }
  return any;
}

std::vector<SegmentPair> extract_segments(const AlignmentSet& alignment,
                                          int src_len, int tgt_len, int max_len) {
  std::vector<SegmentPair> out;
  if (alignment.empty() || src_len <= 0 || tgt_len <= 0) return out;

  std::vector<bool> tgt_aligned(tgt_len, false);
  for (const Link& l : alignment.links()) {
    if (l.tgt < tgt_len) tgt_aligned[l.tgt] = true;
  }

  for (int s_lo = 0; s_lo < src_len; ++s_lo) {
    for (int s_hi = s_lo + 1; s_hi <= src_len && s_hi - s_lo <= max_len; ++s_hi) {
      Span src{s_lo, s_hi};
      int t_min = tgt_len, t_max = -1;
      for (const Link& l : alignment.links()) {
        if (!src.contains(l.src)) continue;
        t_min = std::min(t_min, l.tgt);
        t_max = std::max(t_max, l.tgt);
      }
      if (t_max < 0) continue;  // no link touches this source span
      // Links into the minimal target window must come from inside the span.
      bool consistent = true;
      for (const Link& l : alignment.links()) {
        if (l.tgt >= t_min && l.tgt <= t_max && !src.contains(l.src)) {
          consistent = false;
          break;
        }
      }
      if (!consistent) continue;
      // Grow over unaligned boundary tokens; every extension stays consistent.
      int lo_min = t_min;
      while (lo_min > 0 && !tgt_aligned[lo_min - 1]) --lo_min;
      int hi_max = t_max + 1;
      while (hi_max < tgt_len && !tgt_aligned[hi_max]) ++hi_max;
      for (int t_lo = lo_min; t_lo <= t_min; ++t_lo)
        for (int t_hi = t_max + 1; t_hi <= hi_max; ++t_hi)
          out.push_back({src, Span{t_lo, t_hi}});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SegmentPair> extract_segments(const BiSentence& sentence, int max_len) {
  return extract_segments(sentence.alignment, static_cast<int>(sentence.src.size()),
                          static_cast<int>(sentence.tgt.size()), max_len);
}

bool order_preserving(const AlignmentSet& alignment, const SegmentPair& pair) {
  for (const Link& in : alignment.links()) {
    if (!pair.src.contains(in.src)) continue;
    for (const Link& ext : alignment.links()) {
      if (pair.src.contains(ext.src)) continue;
      if ((in.src < ext.src) != (in.tgt < ext.tgt)) return false;
    }
  }
  return true;
}

bool order_preserving(const BiSentence& sentence, const SegmentPair& pair) {
  return order_preserving(sentence.alignment, pair);
}

}  // namespace csw
