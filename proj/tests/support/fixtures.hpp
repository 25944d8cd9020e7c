#pragma once

#include <string>

#include "csw/corpus.hpp"

namespace cswtest {

inline csw::BiSentence make_sentence(const std::string& id, const std::string& src,
                                     const std::string& tgt,
                                     const std::string& pharaoh = "",
                                     const std::string& tree = "") {
  csw::BiSentence s;
  s.id = id;
  s.src = csw::tokenize_line(src);
  s.tgt = csw::tokenize_line(tgt);
  s.alignment = csw::AlignmentSet::parse_pharaoh(pharaoh);
  if (!tree.empty()) s.tree = csw::ParseTree::parse(tree);
  csw::check_sentence(s);
  return s;
}

// The worked example every technique is demonstrated on: an Arabic source,
// its English translation, union-style alignment, and the target parse.
// The adjective-noun inversion between the two languages makes the lone
// adjective a crossing segment.
inline const char* kGoldenSrc = "انا عايز اجرب اكل ايطالي .";
inline const char* kGoldenTgt = "i want to try Italian food .";
inline const char* kGoldenAlign = "0-0 1-1 1-2 2-3 3-5 4-4 5-6";
inline const char* kGoldenIntersectionAlign = "0-0 1-1 2-3 3-5 4-4 5-6";
inline const char* kGoldenTree =
    "(S (NP (PRP i)) (VP (VBP want) (S (VP (TO to) (VP (VB try) "
    "(NP (JJ Italian) (NN food)))))) (. .))";

// Expected technique outputs on the golden sentence.
inline const char* kGoldenEcSwitch = "انا عايز try اكل ايطالي .";
inline const char* kGoldenMlSwitch = "انا عايز اجرب Italian food .";
inline const char* kGoldenDictRow = "انا wanting اجرب اكل ايطالي .";
inline const char* kGoldenRandSegRow = "انا want to اجرب اكل ايطالي .";
inline const char* kGoldenRandWordRow = "انا want اجرب اكل ايطالي .";
inline const char* kGoldenPredRow = "انا عايز اجرب اكل Italian .";

inline csw::BiSentence golden(bool with_tree = true) {
  return make_sentence("L1", kGoldenSrc, kGoldenTgt, kGoldenAlign,
                       with_tree ? kGoldenTree : "");
}

inline csw::BiSentence golden_intersection() {
  return make_sentence("L1", kGoldenSrc, kGoldenTgt, kGoldenIntersectionAlign);
}

}  // namespace cswtest
