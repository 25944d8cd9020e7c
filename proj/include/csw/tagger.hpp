#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "csw/corpus.hpp"

namespace csw {

// Binary labels over the target side of a sentence whose source already
// mixes languages: label 1 marks target tokens that appear as English words
// on the source side. Matching is lowercased-exact with greedy one-to-one
// consumption of source English tokens.
std::vector<int> tag_targets(const BiSentence& sentence);

// Writes one "id<TAB>0 1 0" line; format matches PredictionLabels::load.
void write_labels_line(std::ostream& out, const std::string& id,
                       const std::vector<int>& labels);

}  // namespace csw
