#include "tangle/literal.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "tangle/error.hpp"

namespace tangle {

namespace {

bool is_token_char(char c) noexcept {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

class TreeParser {
 public:
  TreeParser(std::string_view text, std::size_t offset) : text_(text), pos_(offset) {}

  PlaneTree parse_until(char terminator) {
    nodes_.clear();
    const NodeId root = parse_node();
    skip_ws();
    if (terminator == '\0') {
      if (pos_ != text_.size()) fail("unexpected trailing input");
    } else if (peek() != terminator) {
      fail(std::string("expected '") + terminator + "'");
    }
    return PlaneTree(std::move(nodes_), root);
  }

  std::size_t position() const noexcept { return pos_; }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    if (pos_ >= text_.size()) throw ParseError(what + ", found end of input", pos_);
    throw ParseError(what + ", found '" + std::string(1, text_[pos_]) + "'", pos_);
  }

  char peek() const noexcept { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void expect(char c) {
    skip_ws();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  NodeId parse_node() {
    skip_ws();
    const auto id = static_cast<NodeId>(nodes_.size());
    nodes_.emplace_back();
    if (peek() == '(') {
      ++pos_;
      const NodeId up = parse_node();
      expect(',');
      const NodeId down = parse_node();
      expect(')');
      nodes_[id].up = up;
      nodes_[id].down = down;
      return id;
    }
    const std::size_t start = pos_;
    while (pos_ < text_.size() && is_token_char(text_[pos_])) ++pos_;
    if (start == pos_) fail("expected a leaf token or '('");
    nodes_[id].label = std::string(text_.substr(start, pos_ - start));
    return id;
  }

  std::string_view text_;
  std::size_t pos_;
  std::vector<Node> nodes_;
};

void emit(const PlaneTree& tree, NodeId v, std::string& out) {
  if (tree.is_leaf(v)) {
    out += tree.label(v);
    return;
  }
  out += '(';
  emit(tree, tree.up(v), out);
  out += ',';
  emit(tree, tree.down(v), out);
  out += ')';
}

}  // namespace

Tanglegram parse(std::string_view text) {
  TreeParser left_parser(text, 0);
  PlaneTree left = left_parser.parse_until('|');
  TreeParser right_parser(text, left_parser.position() + 1);
  PlaneTree right = right_parser.parse_until('\0');
  return Tanglegram(std::move(left), std::move(right));
}

PlaneTree parse_tree(std::string_view text) { return TreeParser(text, 0).parse_until('\0'); }

std::string serialize(const PlaneTree& tree) {
  std::string out;
  emit(tree, tree.root(), out);
  return out;
}

std::string serialize(const Tanglegram& t) { return serialize(t.left()) + " | " + serialize(t.right()); }

std::vector<Tanglegram> parse_tgl(std::string_view content) {
  std::vector<Tanglegram> out;
  std::size_t line_no = 0;
  while (!content.empty()) {
    const auto nl = content.find('\n');
    std::string_view line = content.substr(0, nl);
    content = nl == std::string_view::npos ? std::string_view{} : content.substr(nl + 1);
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos || line[first] == '#') continue;
    try {
      out.push_back(parse(line));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what(), e.position());
    } catch (const ValidationError& e) {
      throw ValidationError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

std::vector<Tanglegram> read_tgl_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_tgl(buffer.str());
}

void write_tgl_file(const std::filesystem::path& path, const std::vector<Tanglegram>& items,
                    std::string_view header) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  if (!header.empty()) out << "# " << header << '\n';
  for (const auto& t : items) out << serialize(t) << '\n';
}

}  // namespace tangle
