#include "csw/tagger.hpp"

#include <map>
#include <ostream>

#include "csw/textio.hpp"

namespace csw {

std::vector<int> tag_targets(const BiSentence& sentence) {
  std::map<std::string, int> pool;  // unmatched English source tokens
  for (const Token& t : sentence.src)
    if (t.lang == Lang::English) ++pool[ascii_lower(t.surface)];

  std::vector<int> labels(sentence.tgt.size(), 0);
  for (size_t j = 0; j < sentence.tgt.size(); ++j) {
    auto it = pool.find(ascii_lower(sentence.tgt[j].surface));
    if (it == pool.end() || it->second == 0) continue;
    --it->second;  // each source token matches at most one target token
    labels[j] = 1;
  }
  return labels;
}

void write_labels_line(std::ostream& out, const std::string& id,
                       const std::vector<int>& labels) {
  out << id << '\t';
  for (size_t i = 0; i < labels.size(); ++i) {
    if (i) out << ' ';
    out << labels[i];
  }
  out << '\n';
}

}  // namespace csw
