#include "csw/augmentation.hpp"

#include <algorithm>
#include <ostream>

#include "csw/errors.hpp"
#include "csw/metrics.hpp"
#include "csw/textio.hpp"

namespace csw {

const char* to_string(Technique t) {
  switch (t) {
    case Technique::LexDict: return "lex-dict";
    case Technique::LexRandWord: return "lex-rand-word";
    case Technique::LexRandSeg: return "lex-rand-seg";
    case Technique::LexPred: return "lex-pred";
    case Technique::EcRandom: return "ec-random";
    case Technique::EcSpf: return "ec-spf";
    case Technique::MlRandom: return "ml-random";
    case Technique::MlSpf: return "ml-spf";
    case Technique::BackTranslation: return "bt";
  }
  return "unknown";
}

Technique technique_from_string(std::string_view s) {
  static const std::pair<std::string_view, Technique> table[] = {
      {"lex-dict", Technique::LexDict},
      {"lex-rand-word", Technique::LexRandWord},
      {"lex-rand-seg", Technique::LexRandSeg},
      {"lex-pred", Technique::LexPred},
      {"ec-random", Technique::EcRandom},
      {"ec-spf", Technique::EcSpf},
      {"ml-random", Technique::MlRandom},
      {"ml-spf", Technique::MlSpf},
      {"bt", Technique::BackTranslation},
  };
  for (const auto& [name, value] : table)
    if (name == s) return value;
  throw FormatError("unknown technique '" + std::string(s) + "'");
}

std::optional<Augmentation> make_augmentation(std::string sentence_id,
                                              std::span<const Token> src,
                                              std::span<const Token> tgt,
                                              Technique technique,
                                              std::vector<ReplacedSpan> replacements) {
  std::sort(replacements.begin(), replacements.end(),
            [](const ReplacedSpan& a, const ReplacedSpan& b) {
              return a.src.lo < b.src.lo;
            });
  const int src_len = static_cast<int>(src.size());
  const int tgt_len = static_cast<int>(tgt.size());
  int cursor = 0;
  for (const ReplacedSpan& r : replacements) {
    if (r.src.lo < cursor || r.src.lo >= r.src.hi || r.src.hi > src_len)
      throw UsageError("replacement span " + std::to_string(r.src.lo) + "-" +
                       std::to_string(r.src.hi) + " overlaps or out of range");
    if (r.tgt) {
      if (r.tgt->lo < 0 || r.tgt->lo >= r.tgt->hi || r.tgt->hi > tgt_len)
        throw UsageError("replacement target span " + std::to_string(r.tgt->lo) +
                         "-" + std::to_string(r.tgt->hi) + " out of range");
    } else if (r.gloss.empty()) {
      throw UsageError("replacement carries neither target span nor gloss");
    }
    cursor = r.src.hi;
  }

  Augmentation aug;
  aug.sentence_id = std::move(sentence_id);
  aug.technique = technique;
  aug.tgt.assign(tgt.begin(), tgt.end());
  aug.replaced_spans = replacements;

  int pos = 0;
  auto push = [&aug](const std::string& surface) {
    aug.mixed_src.push_back(make_token(surface, static_cast<int>(aug.mixed_src.size())));
  };
  for (const ReplacedSpan& r : replacements) {
    for (int i = pos; i < r.src.lo; ++i) push(src[i].surface);
    if (r.tgt) {
      for (int j = r.tgt->lo; j < r.tgt->hi; ++j) push(tgt[j].surface);
    } else {
      for (const std::string& piece : split_ws(r.gloss)) push(piece);
    }
    pos = r.src.hi;
  }
  for (int i = pos; i < src_len; ++i) push(src[i].surface);

  MixCounts counts = mix_counts(aug.mixed_src);
  if (counts.arabic == 0 || counts.english == 0) return std::nullopt;
  aug.cmi = cmi(counts);
  aug.spf = spf(counts);
  aug.pct_en = pct_en(counts);
  return aug;
}

std::string format_replaced_spans(std::span<const ReplacedSpan> spans) {
  std::string out;
  for (size_t i = 0; i < spans.size(); ++i) {
    if (i) out += ';';
    const ReplacedSpan& r = spans[i];
    out += std::to_string(r.src.lo) + "-" + std::to_string(r.src.hi) + ":";
    if (r.tgt)
      out += std::to_string(r.tgt->lo) + "-" + std::to_string(r.tgt->hi);
    else
      out += "g:" + r.gloss;
  }
  return out;
}

namespace {

Span parse_span(std::string_view s) {
  size_t dash = s.find('-');
  if (dash == std::string_view::npos)
    throw FormatError("malformed span '" + std::string(s) + "'");
  return Span{static_cast<int>(parse_int(s.substr(0, dash))),
              static_cast<int>(parse_int(s.substr(dash + 1)))};
}

}  // namespace

std::vector<ReplacedSpan> parse_replaced_spans(std::string_view field) {
  std::vector<ReplacedSpan> out;
  if (field.empty()) return out;
  for (const std::string& item : split_char(field, ';')) {
    size_t colon = item.find(':');
    if (colon == std::string::npos)
      throw FormatError("malformed replacement '" + item + "'");
    ReplacedSpan r;
    r.src = parse_span(std::string_view(item).substr(0, colon));
    std::string_view rest = std::string_view(item).substr(colon + 1);
    if (rest.rfind("g:", 0) == 0) {
      r.gloss = std::string(rest.substr(2));
    } else {
      r.tgt = parse_span(rest);
    }
    out.push_back(std::move(r));
  }
  return out;
}

void write_augmentations_tsv(std::span<const Augmentation> augs, std::ostream& out) {
  for (const Augmentation& a : augs) {
    out << a.sentence_id << '\t' << to_string(a.technique) << '\t'
        << detokenize(a.mixed_src) << '\t' << detokenize(a.tgt) << '\t'
        << format_double(a.cmi) << '\t' << format_double(a.spf) << '\t'
        << format_double(a.pct_en) << '\t' << format_replaced_spans(a.replaced_spans)
        << '\n';
  }
}

std::vector<Augmentation> read_augmentations_tsv(const std::string& path) {
  std::vector<Augmentation> out;
  std::vector<std::string> lines = read_lines(path);
  for (size_t i = 0; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    std::vector<std::string> cols = split_char(lines[i], '\t');
    if (cols.size() < 7)
      throw FormatError(path + " line " + std::to_string(i + 1) +
                        ": expected at least 7 tab-separated columns");
    Augmentation a;
    a.sentence_id = cols[0];
    a.technique = technique_from_string(cols[1]);
    a.mixed_src = tokenize_line(cols[2]);
    a.tgt = tokenize_line(cols[3]);
    a.cmi = parse_double(cols[4]);
    a.spf = parse_double(cols[5]);
    a.pct_en = parse_double(cols[6]);
    if (cols.size() > 7) a.replaced_spans = parse_replaced_spans(cols[7]);
    out.push_back(std::move(a));
  }
  return out;
}

}  // namespace csw
