#include "wzt/text.hpp"

#include <stdexcept>

#include "wzt/instances.hpp"

namespace wzt {

namespace {

[[noreturn]] void fail_at(size_t pos, const std::string& what) {
  throw std::invalid_argument("parse error at position " + std::to_string(pos) + ": " + what);
}

struct Cursor {
  std::string_view text;
  size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\n'))
      ++pos;
  }
  bool at_end() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  bool consume(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  bool consume_word(std::string_view w) {
    skip_ws();
    if (text.substr(pos, w.size()) == w) {
      pos += w.size();
      return true;
    }
    return false;
  }
};

// The two-leaf caret shorthand: "Λ" in UTF-8.
constexpr std::string_view kLambda = "Λ";

BinaryTree parse_tree_at(Cursor& c) {
  c.skip_ws();
  if (c.consume_word(kLambda))
    return BinaryTree::caret(BinaryTree::leaf(), BinaryTree::leaf());
  if (c.consume('L')) return BinaryTree::leaf();
  if (!c.consume('(')) fail_at(c.pos, "expected tree ('L', '(' or the caret shorthand)");
  BinaryTree lhs = parse_tree_at(c);
  if (!c.consume(',')) fail_at(c.pos, "expected ',' inside tree");
  BinaryTree rhs = parse_tree_at(c);
  if (!c.consume(')')) fail_at(c.pos, "expected ')' closing tree");
  return BinaryTree::caret(lhs, rhs);
}

const CloningSystem& infer_instance(std::string_view middle) {
  size_t i = 0;
  while (i < middle.size() && (middle[i] == ' ' || middle[i] == '\t')) ++i;
  if (i >= middle.size()) return f_system();
  switch (middle[i]) {
    case 'b': return bv_system();
    case '[': return v_system();
    case 'z': return find_instance("dirpow");
    case '1': return f_system();
    default:
      throw std::invalid_argument("cannot infer instance from middle element '" +
                                  std::string(middle) + "'; pass --instance");
  }
}

TreeDiagram parse_diagram_at(Cursor& c, const CloningSystem* sys) {
  if (!c.consume('{')) fail_at(c.pos, "expected '{' starting a diagram literal");
  BinaryTree left = parse_tree_at(c);
  if (!c.consume(';')) fail_at(c.pos, "expected ';' after the left tree");
  c.skip_ws();
  size_t middle_begin = c.pos;
  size_t middle_end = c.text.find(';', middle_begin);
  if (middle_end == std::string_view::npos) fail_at(c.pos, "expected ';' after the middle element");
  std::string_view middle_text = c.text.substr(middle_begin, middle_end - middle_begin);
  c.pos = middle_end + 1;
  BinaryTree right = parse_tree_at(c);
  if (!c.consume('}')) fail_at(c.pos, "expected '}' closing the diagram literal");
  const CloningSystem& system = sys ? *sys : infer_instance(middle_text);
  Element middle = system.parse(left.num_leaves(), middle_text);
  return TreeDiagram(system, std::move(left), std::move(middle), std::move(right));
}

TreeDiagram parse_factor(Cursor& c, const CloningSystem* sys);

TreeDiagram parse_expr(Cursor& c, const CloningSystem* sys) {
  TreeDiagram acc = parse_factor(c, sys);
  for (;;) {
    c.skip_ws();
    if (c.peek() == '*') {
      c.consume('*');
      acc = multiply(acc, parse_factor(c, sys));
    } else {
      break;
    }
  }
  return acc;
}

TreeDiagram parse_factor(Cursor& c, const CloningSystem* sys) {
  TreeDiagram base = [&] {
    if (c.peek() == '(') {
      c.consume('(');
      TreeDiagram inner = parse_expr(c, sys);
      if (!c.consume(')')) fail_at(c.pos, "expected ')'");
      return inner;
    }
    return parse_diagram_at(c, sys);
  }();
  while (c.consume_word("^-1")) base = invert(base);
  return base;
}

}  // namespace

TreeDiagram parse_diagram(std::string_view text, const CloningSystem* sys) {
  Cursor c{text};
  TreeDiagram d = parse_diagram_at(c, sys);
  if (!c.at_end()) fail_at(c.pos, "trailing characters after diagram");
  return d;
}

std::string eval_expression(std::string_view text, const CloningSystem* sys) {
  Cursor c{text};
  TreeDiagram lhs = parse_expr(c, sys);
  c.skip_ws();
  if (c.at_end()) return to_text(lhs);
  if (!c.consume_word("<=>")) fail_at(c.pos, "expected '*', '^-1', '<=>' or end of input");
  TreeDiagram rhs = parse_expr(c, sys);
  if (!c.at_end()) fail_at(c.pos, "trailing characters after comparison");
  if (&lhs.system() != &rhs.system())
    throw std::invalid_argument("comparison operands belong to different instances");
  if (lhs.system().order_kind() == OrderKind::none) {
    // Unordered instances still decide equality.
    return equals(lhs, rhs) ? "equal" : "unordered";
  }
  return std::string(to_string(compare(lhs, rhs)));
}

}  // namespace wzt
