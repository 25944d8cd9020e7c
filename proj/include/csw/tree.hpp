#pragma once

#include <string>
#include <vector>

#include "csw/align.hpp"

namespace csw {

// One node of a bracketed constituency tree. Leaves are preterminals:
// label holds the POS tag, word the surface form.
struct TreeNode {
  std::string label;
  std::string word;
  std::vector<TreeNode> children;
  bool is_leaf() const { return children.empty(); }
};

class ParseTree {
public:
  // PTB-style bracketing, e.g. "(NP (JJ italian) (NN food))".
  static ParseTree parse(std::string_view line);  // throws FormatError
  std::string to_string() const;

  const TreeNode& root() const { return root_; }

  int leaf_count() const;
  std::vector<std::string> yield() const;      // leaf words, left to right
  std::vector<std::string> leaf_tags() const;  // POS per leaf

  struct NodeSpan {
    Span span;  // yield span over leaf positions
    const TreeNode* node = nullptr;
  };
  // All nodes in preorder with their yield spans.
  std::vector<NodeSpan> node_spans() const;

  // Rewrites leaf surfaces in place (used by corpus normalization).
  template <typename Fn>
  void map_leaf_words(Fn&& fn) {
    map_words(root_, fn);
  }

private:
  template <typename Fn>
  static void map_words(TreeNode& node, Fn& fn) {
    if (node.is_leaf()) {
      node.word = fn(node.word);
      return;
    }
    for (auto& child : node.children) map_words(child, fn);
  }

  TreeNode root_;
};

}  // namespace csw
