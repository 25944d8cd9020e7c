#pragma once

#include <string>
#include <vector>

#include "csw/augmentation.hpp"
#include "csw/corpus.hpp"
#include "csw/theories.hpp"

namespace csw {

// Re-checks a finished augmentation against its source sentence and the
// predicate of its technique: structural splice integrity, verbatim target
// insertion, the mixed-language invariant, metric recomputation, segment
// consistency, order preservation for EC, constituent yield and closed-class
// rejection for MLF. Returns human-readable violations; empty means valid.
std::vector<std::string> validate_augmentation(const Augmentation& aug,
                                               const BiSentence& sentence,
                                               const ClosedClassSet& closed =
                                                   ClosedClassSet::default_set());

}  // namespace csw
