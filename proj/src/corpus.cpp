#include "csw/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <ostream>
#include <set>

#include "csw/errors.hpp"
#include "csw/rng.hpp"
#include "csw/textio.hpp"

namespace csw {

void check_sentence(const BiSentence& sentence) {
  const int src_len = static_cast<int>(sentence.src.size());
  const int tgt_len = static_cast<int>(sentence.tgt.size());
  for (const Link& l : sentence.alignment.links()) {
    if (l.src >= src_len || l.tgt >= tgt_len)
      throw StructureError("sentence " + sentence.id + ": link " +
                           std::to_string(l.src) + "-" + std::to_string(l.tgt) +
                           " out of range (|src|=" + std::to_string(src_len) +
                           ", |tgt|=" + std::to_string(tgt_len) + ")");
  }
  if (sentence.tree) {
    std::vector<std::string> words = sentence.tree->yield();
    if (static_cast<int>(words.size()) != tgt_len)
      throw StructureError("sentence " + sentence.id + ": tree has " +
                           std::to_string(words.size()) + " leaves but target has " +
                           std::to_string(tgt_len) + " tokens");
    for (int j = 0; j < tgt_len; ++j) {
      if (words[j] != sentence.tgt[j].surface)
        throw StructureError("sentence " + sentence.id + ": tree leaf " +
                             std::to_string(j) + " is '" + words[j] +
                             "' but target token is '" + sentence.tgt[j].surface + "'");
    }
  }
}

namespace {

void check_unique_ids(const Corpus& corpus) {
  std::set<std::string> seen;
  for (const BiSentence& s : corpus.sentences)
    if (!seen.insert(s.id).second)
      throw StructureError("duplicate sentence id '" + s.id + "'");
}

}  // namespace

Corpus load_parallel(const std::string& src_path, const std::string& tgt_path,
                     const std::string& align_path, const std::string& trees_path) {
  std::vector<std::string> src_lines = read_lines(src_path);
  std::vector<std::string> tgt_lines = read_lines(tgt_path);
  if (src_lines.size() != tgt_lines.size())
    throw StructureError("line count mismatch: " + src_path + " has " +
                         std::to_string(src_lines.size()) + " lines, " + tgt_path +
                         " has " + std::to_string(tgt_lines.size()));

  std::vector<std::string> align_lines;
  if (!align_path.empty()) {
    align_lines = read_lines(align_path);
    if (align_lines.size() != src_lines.size())
      throw StructureError("line count mismatch: " + align_path + " has " +
                           std::to_string(align_lines.size()) + " lines, expected " +
                           std::to_string(src_lines.size()));
  }
  std::vector<std::string> tree_lines;
  if (!trees_path.empty()) {
    tree_lines = read_lines(trees_path);
    if (tree_lines.size() != src_lines.size())
      throw StructureError("line count mismatch: " + trees_path + " has " +
                           std::to_string(tree_lines.size()) + " lines, expected " +
                           std::to_string(src_lines.size()));
  }

  Corpus corpus;
  corpus.provenance = src_path + " + " + tgt_path;
  corpus.sentences.reserve(src_lines.size());
  for (size_t i = 0; i < src_lines.size(); ++i) {
    BiSentence sentence;
    sentence.id = "L" + std::to_string(i + 1);
    sentence.src = tokenize_line(src_lines[i]);
    sentence.tgt = tokenize_line(tgt_lines[i]);
    if (!align_lines.empty()) {
      try {
        sentence.alignment = AlignmentSet::parse_pharaoh(align_lines[i]);
      } catch (const FormatError& e) {
        throw StructureError("sentence " + sentence.id + ": " + e.what());
      }
    }
    if (!tree_lines.empty() && !tree_lines[i].empty()) {
      try {
        sentence.tree = ParseTree::parse(tree_lines[i]);
      } catch (const FormatError& e) {
        throw StructureError("sentence " + sentence.id + ": " + e.what());
      }
    }
    check_sentence(sentence);
    corpus.sentences.push_back(std::move(sentence));
  }
  return corpus;
}

Corpus load_corpus_tsv(const std::string& path) {
  Corpus corpus;
  corpus.provenance = path;
  std::vector<std::string> lines = read_lines(path);
  corpus.sentences.reserve(lines.size());
  for (size_t i = 0; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    std::vector<std::string> cols = split_char(lines[i], '\t');
    if (cols.size() < 3)
      throw FormatError(path + " line " + std::to_string(i + 1) +
                        ": expected at least 3 tab-separated columns");
    BiSentence sentence;
    sentence.id = cols[0];
    sentence.src = tokenize_line(cols[1]);
    sentence.tgt = tokenize_line(cols[2]);
    if (cols.size() > 3 && !cols[3].empty()) {
      try {
        sentence.alignment = AlignmentSet::parse_pharaoh(cols[3]);
      } catch (const FormatError& e) {
        throw StructureError("sentence " + sentence.id + ": " + e.what());
      }
    }
    if (cols.size() > 4 && !cols[4].empty()) {
      try {
        sentence.tree = ParseTree::parse(cols[4]);
      } catch (const FormatError& e) {
        throw StructureError("sentence " + sentence.id + ": " + e.what());
      }
    }
    check_sentence(sentence);
    corpus.sentences.push_back(std::move(sentence));
  }
  check_unique_ids(corpus);
  return corpus;
}

void save_corpus_tsv(const Corpus& corpus, std::ostream& out) {
  for (const BiSentence& s : corpus.sentences) {
    out << s.id << '\t' << detokenize(s.src) << '\t' << detokenize(s.tgt) << '\t'
        << s.alignment.to_pharaoh() << '\t' << (s.tree ? s.tree->to_string() : "")
        << '\n';
  }
}

void save_corpus_tsv(const Corpus& corpus, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path + " for writing");
  save_corpus_tsv(corpus, out);
  if (!out) throw IoError("write failure on " + path);
}

namespace {

// Count-preserving code point rewrites.
std::string rewrite_codepoints(std::string_view surface, const NormalizeOptions& o) {
  std::vector<uint32_t> cps = decode_utf8(surface);
  for (uint32_t& cp : cps) {
    if (o.lowercase && cp >= 'A' && cp <= 'Z') cp = cp - 'A' + 'a';
    if (o.alef && (cp == 0x0623 || cp == 0x0625 || cp == 0x0622)) cp = 0x0627;
    if (o.ya && cp == 0x0649) cp = 0x064A;
  }
  return encode_utf8(cps);
}

const char* kEmoticons[] = {
    ":)",  ":(",  ":-)", ":-(", ":d",  ":D",  ":p",  ":P",  ":-d", ":-D",
    ":-p", ":-P", ";)",  ";-)", ":o",  ":O",  ":/",  ":-/", ":'(", "=)",
    "=(",  "xd",  "xD",  "XD",  "<3",  ":*",  ":-*", "^^",  "^_^", "-_-",
};

}  // namespace

bool is_url_token(std::string_view surface) {
  auto starts = [&](std::string_view prefix) {
    return surface.size() >= prefix.size() &&
           ascii_lower(surface.substr(0, prefix.size())) == prefix;
  };
  return starts("http://") || starts("https://") || starts("www.");
}

bool is_emoticon_token(std::string_view surface) {
  for (const char* e : kEmoticons)
    if (surface == e) return true;
  return false;
}

std::vector<std::string> split_number_runs(std::string_view surface) {
  std::vector<uint32_t> cps = decode_utf8(surface);
  std::vector<std::string> parts;
  std::vector<uint32_t> current;
  bool current_digit = false;
  for (uint32_t cp : cps) {
    bool digit = is_digit_cp(cp);
    if (!current.empty() && digit != current_digit) {
      parts.push_back(encode_utf8(current));
      current.clear();
    }
    current.push_back(cp);
    current_digit = digit;
  }
  if (!current.empty()) parts.push_back(encode_utf8(current));
  return parts;
}

std::string normalize_surface(std::string_view surface, const NormalizeOptions& options) {
  return rewrite_codepoints(surface, options);
}

namespace {

// Per-token expansion: empty = dropped, one = kept, many = split.
std::vector<std::vector<std::string>> expand_side(const std::vector<Token>& tokens,
                                                  const NormalizeOptions& o) {
  std::vector<std::vector<std::string>> out;
  out.reserve(tokens.size());
  for (const Token& t : tokens) {
    if ((o.strip_urls && is_url_token(t.surface)) ||
        (o.strip_emoticons && is_emoticon_token(t.surface))) {
      out.emplace_back();
      continue;
    }
    std::string rewritten = rewrite_codepoints(t.surface, o);
    if (o.split_numbers) {
      out.push_back(split_number_runs(rewritten));
    } else {
      out.push_back({std::move(rewritten)});
    }
  }
  return out;
}

std::vector<Token> rebuild_side(const std::vector<std::vector<std::string>>& pieces,
                                std::vector<std::vector<int>>& index_map) {
  std::vector<Token> tokens;
  index_map.assign(pieces.size(), {});
  for (size_t i = 0; i < pieces.size(); ++i) {
    for (const std::string& piece : pieces[i]) {
      index_map[i].push_back(static_cast<int>(tokens.size()));
      tokens.push_back(make_token(piece, static_cast<int>(tokens.size())));
    }
  }
  return tokens;
}

}  // namespace

Corpus normalize(const Corpus& corpus, const NormalizeOptions& options) {
  Corpus out;
  out.provenance = corpus.provenance;
  out.sentences.reserve(corpus.sentences.size());
  for (const BiSentence& s : corpus.sentences) {
    BiSentence n;
    n.id = s.id;
    auto src_pieces = expand_side(s.src, options);
    auto tgt_pieces = expand_side(s.tgt, options);
    std::vector<std::vector<int>> src_map, tgt_map;
    n.src = rebuild_side(src_pieces, src_map);
    n.tgt = rebuild_side(tgt_pieces, tgt_map);

    std::vector<Link> links;
    for (const Link& l : s.alignment.links())
      for (int i : src_map[l.src])
        for (int j : tgt_map[l.tgt]) links.push_back({i, j});
    n.alignment = AlignmentSet(std::move(links), s.alignment.label());

    if (s.tree && n.tgt.size() == s.tgt.size()) {
      ParseTree tree = *s.tree;
      size_t leaf = 0;
      tree.map_leaf_words([&](const std::string&) { return n.tgt[leaf++].surface; });
      n.tree = std::move(tree);
    }
    check_sentence(n);
    out.sentences.push_back(std::move(n));
  }
  return out;
}

Corpus append_target_target(const Corpus& corpus) {
  Corpus out = corpus;
  out.sentences.reserve(corpus.size() * 2);
  for (const BiSentence& s : corpus.sentences) {
    BiSentence tt;
    tt.id = s.id + "-tt";
    tt.src = s.tgt;
    tt.tgt = s.tgt;
    std::vector<Link> links;
    links.reserve(s.tgt.size());
    for (int j = 0; j < static_cast<int>(s.tgt.size()); ++j) links.push_back({j, j});
    tt.alignment = AlignmentSet(std::move(links), "identity");
    tt.tree = s.tree;
    out.sentences.push_back(std::move(tt));
  }
  return out;
}

std::vector<std::string> intersect_augmented(
    const std::vector<std::vector<std::string>>& id_sets) {
  if (id_sets.size() < 2)
    throw UsageError("intersection needs at least 2 collections, got " +
                     std::to_string(id_sets.size()));
  std::set<std::string> acc(id_sets[0].begin(), id_sets[0].end());
  for (size_t i = 1; i < id_sets.size(); ++i) {
    std::set<std::string> next(id_sets[i].begin(), id_sets[i].end());
    std::set<std::string> kept;
    for (const std::string& id : acc)
      if (next.count(id)) kept.insert(id);
    acc = std::move(kept);
  }
  return {acc.begin(), acc.end()};
}

Corpus sample_subset(const Corpus& corpus, double fraction, uint64_t seed) {
  if (!(fraction > 0.0) || fraction > 1.0)
    throw UsageError("fraction must be in (0, 1], got " + format_double(fraction));
  const size_t n = corpus.size();
  size_t k = static_cast<size_t>(std::llround(fraction * static_cast<double>(n)));
  if (k > n) k = n;
  Rng rng(seed);
  std::vector<size_t> picked = rng.sample(n, k);
  std::sort(picked.begin(), picked.end());
  Corpus out;
  out.provenance = corpus.provenance;
  out.sentences.reserve(k);
  for (size_t idx : picked) out.sentences.push_back(corpus.sentences[idx]);
  return out;
}

}  // namespace csw
