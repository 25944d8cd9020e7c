#include "csw/validate.hpp"

#include <algorithm>

#include "csw/metrics.hpp"

namespace csw {

namespace {

std::string span_text(const ReplacedSpan& r) {
  std::string out = std::to_string(r.src.lo) + "-" + std::to_string(r.src.hi);
  if (r.tgt) out += ":" + std::to_string(r.tgt->lo) + "-" + std::to_string(r.tgt->hi);
  return out;
}

}  // namespace

std::vector<std::string> validate_augmentation(const Augmentation& aug,
                                               const BiSentence& sentence,
                                               const ClosedClassSet& closed) {
  std::vector<std::string> violations;
  auto fail = [&](std::string msg) { violations.push_back(std::move(msg)); };

  MixCounts counts = mix_counts(aug.mixed_src);
  if (counts.arabic == 0 || counts.english == 0)
    fail("mixed source is not code-switched");
  if (cmi(counts) != aug.cmi || spf(counts) != aug.spf || pct_en(counts) != aug.pct_en)
    fail("stored metrics do not match recomputation");

  const bool from_decoder = aug.technique == Technique::BackTranslation;
  if (!from_decoder) {
    if (aug.tgt.size() != sentence.tgt.size()) {
      fail("target side was modified");
    } else {
      for (size_t j = 0; j < aug.tgt.size(); ++j)
        if (aug.tgt[j].surface != sentence.tgt[j].surface) {
          fail("target side was modified");
          break;
        }
    }
    if (!is_complete(aug, sentence))
      fail("mixed source does not splice back to the source sentence");
  }

  for (const ReplacedSpan& r : aug.replaced_spans) {
    if (!r.tgt) continue;  // gloss replacements have no alignment predicate
    SegmentPair seg{r.src, *r.tgt};
    if (!is_consistent(sentence.alignment, seg))
      fail("replacement " + span_text(r) + " is not a consistent segment");

    switch (aug.technique) {
      case Technique::EcRandom:
      case Technique::EcSpf:
        if (!order_preserving(sentence, seg))
          fail("replacement " + span_text(r) + " crosses alignment order");
        break;
      case Technique::MlRandom:
      case Technique::MlSpf: {
        if (!sentence.tree) {
          fail("sentence has no tree to check constituents against");
          break;
        }
        bool constituent = false;
        for (const ParseTree::NodeSpan& ns : sentence.tree->node_spans())
          if (ns.span == *r.tgt) {
            constituent = true;
            break;
          }
        if (!constituent)
          fail("replacement " + span_text(r) + " is not a constituent yield");
        const std::vector<std::string> tags = sentence.tree->leaf_tags();
        bool all_closed = true;
        for (int j = r.tgt->lo; j < r.tgt->hi; ++j)
          if (!closed.is_closed(tags[j], sentence.tgt[j].surface)) {
            all_closed = false;
            break;
          }
        if (all_closed)
          fail("replacement " + span_text(r) + " is entirely closed-class");
        break;
      }
      case Technique::LexRandWord:
        if (r.src.size() != 1 || r.tgt->size() != 1)
          fail("word replacement " + span_text(r) + " is not 1:1");
        else if (!sentence.alignment.contains({r.src.lo, r.tgt->lo}))
          fail("word replacement " + span_text(r) + " has no alignment link");
        break;
      default:
        break;
    }
  }
  return violations;
}

}  // namespace csw
