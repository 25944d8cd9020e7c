#include "csw/tree.hpp"

#include "csw/errors.hpp"

namespace csw {

namespace {

struct TreeLexer {
  std::string_view text;
  size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return text[pos];
  }
  std::string atom() {
    skip_ws();
    size_t start = pos;
    while (pos < text.size() && text[pos] != ' ' && text[pos] != '\t' &&
           text[pos] != '(' && text[pos] != ')')
      ++pos;
    return std::string(text.substr(start, pos - start));
  }
};

TreeNode parse_node(TreeLexer& lex) {
  if (lex.eof() || lex.peek() != '(')
    throw FormatError("expected '(' at position " + std::to_string(lex.pos));
  ++lex.pos;  // consume '('
  TreeNode node;
  if (!lex.eof() && lex.peek() != '(' && lex.peek() != ')')
    node.label = lex.atom();

  while (true) {
    if (lex.eof()) throw FormatError("unbalanced tree: missing ')'");
    char c = lex.peek();
    if (c == ')') {
      ++lex.pos;
      break;
    }
    if (c == '(') {
      node.children.push_back(parse_node(lex));
    } else {
      if (!node.word.empty())
        throw FormatError("leaf '" + node.label + "' has multiple surface forms");
      if (!node.children.empty())
        throw FormatError("mixed leaf and subtree under '" + node.label + "'");
      node.word = lex.atom();
    }
  }
  if (node.children.empty() && node.word.empty())
    throw FormatError("empty constituent '" + node.label + "'");
  if (!node.children.empty() && !node.word.empty())
    throw FormatError("mixed leaf and subtree under '" + node.label + "'");
  if (node.is_leaf() && node.label.empty())
    throw FormatError("leaf '" + node.word + "' is missing a POS label");
  return node;
}

void render(const TreeNode& node, std::string& out) {
  out += '(';
  out += node.label;
  if (node.is_leaf()) {
    out += ' ';
    out += node.word;
  } else {
    for (const TreeNode& child : node.children) {
      out += ' ';
      render(child, out);
    }
  }
  out += ')';
}

void collect_leaves(const TreeNode& node, std::vector<const TreeNode*>& leaves) {
  if (node.is_leaf()) {
    leaves.push_back(&node);
    return;
  }
  for (const TreeNode& child : node.children) collect_leaves(child, leaves);
}

// Returns the node's yield span and appends preorder entries.
Span walk_spans(const TreeNode& node, int& next_leaf,
                std::vector<ParseTree::NodeSpan>& out) {
  size_t slot = out.size();
  out.push_back({Span{0, 0}, &node});
  if (node.is_leaf()) {
    Span span{next_leaf, next_leaf + 1};
    ++next_leaf;
    out[slot].span = span;
    return span;
  }
  Span span{next_leaf, next_leaf};
  for (const TreeNode& child : node.children) {
    Span child_span = walk_spans(child, next_leaf, out);
    span.hi = child_span.hi;
  }
  out[slot].span = span;
  return span;
}

}  // namespace

ParseTree ParseTree::parse(std::string_view line) {
  TreeLexer lex{line};
  if (lex.eof()) throw FormatError("empty tree");
  ParseTree tree;
  tree.root_ = parse_node(lex);
  if (!lex.eof())
    throw FormatError("trailing content after tree at position " +
                      std::to_string(lex.pos));
  return tree;
}

std::string ParseTree::to_string() const {
  std::string out;
  render(root_, out);
  return out;
}

int ParseTree::leaf_count() const {
  std::vector<const TreeNode*> leaves;
  collect_leaves(root_, leaves);
  return static_cast<int>(leaves.size());
}

std::vector<std::string> ParseTree::yield() const {
  std::vector<const TreeNode*> leaves;
  collect_leaves(root_, leaves);
  std::vector<std::string> words;
  words.reserve(leaves.size());
  for (const TreeNode* leaf : leaves) words.push_back(leaf->word);
  return words;
}

std::vector<std::string> ParseTree::leaf_tags() const {
  std::vector<const TreeNode*> leaves;
  collect_leaves(root_, leaves);
  std::vector<std::string> tags;
  tags.reserve(leaves.size());
  for (const TreeNode* leaf : leaves) tags.push_back(leaf->label);
  return tags;
}

std::vector<ParseTree::NodeSpan> ParseTree::node_spans() const {
  std::vector<NodeSpan> out;
  int next_leaf = 0;
  walk_spans(root_, next_leaf, out);
  return out;
}

}  // namespace csw
